#include "flipcut/convex.hpp"

#include <algorithm>
#include <string>

namespace flipcut {
namespace convex {

namespace {

std::string chord_str(Chord c) {
  return std::to_string(c.i) + "-" + std::to_string(c.j);
}

ChordSet sorted_set(ChordSet chords) {
  std::sort(chords.begin(), chords.end());
  chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
  return chords;
}

bool member(const ChordSet& set, Chord c) {
  return std::binary_search(set.begin(), set.end(), c);
}

// A sub-polygon of the n-gon: surviving vertex ids in cyclic order.
class Ring {
 public:
  Ring(std::vector<int> verts, int universe) : verts_(std::move(verts)), pos_(universe, -1) {
    for (size_t t = 0; t < verts_.size(); ++t) pos_[verts_[t]] = static_cast<int>(t);
  }

  static Ring full(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) v[static_cast<size_t>(t)] = t;
    return Ring(std::move(v), n);
  }

  int size() const { return static_cast<int>(verts_.size()); }
  int universe() const { return static_cast<int>(pos_.size()); }
  int at(int t) const {
    int m = size();
    return verts_[static_cast<size_t>(((t % m) + m) % m)];
  }
  int pos(int id) const { return pos_[static_cast<size_t>(id)]; }
  bool has(int id) const { return id >= 0 && id < universe() && pos_[static_cast<size_t>(id)] >= 0; }
  int next(int id) const { return at(pos(id) + 1); }
  int prev(int id) const { return at(pos(id) - 1); }
  const std::vector<int>& verts() const { return verts_; }

  bool adjacent(int a, int b) const {
    int d = pos(a) - pos(b);
    if (d < 0) d = -d;
    return d == 1 || d == size() - 1;
  }
  bool chord(Chord c) const { return has(c.i) && has(c.j) && !adjacent(c.i, c.j); }

  bool cross(Chord a, Chord b) const {
    int lo = pos(a.i), hi = pos(a.j);
    if (lo > hi) std::swap(lo, hi);
    auto inside = [&](int id) {
      int p = pos(id);
      return lo < p && p < hi;
    };
    return inside(b.i) != inside(b.j) && a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
  }

  Ring without(int id) const {
    std::vector<int> v;
    v.reserve(verts_.size() - 1);
    for (int w : verts_)
      if (w != id) v.push_back(w);
    return Ring(std::move(v), universe());
  }

 private:
  std::vector<int> verts_;
  std::vector<int> pos_;
};

ChordSet induced(const Ring& ring, const ChordSet& chords) {
  ChordSet out;
  for (const Chord& c : chords)
    if (ring.has(c.i) && ring.has(c.j)) out.push_back(c);
  return out;
}

ChordSet erased(ChordSet set, Chord c) {
  set.erase(std::remove(set.begin(), set.end(), c), set.end());
  return set;
}

ChordSet inserted(ChordSet set, Chord c) {
  set.insert(std::lower_bound(set.begin(), set.end(), c), c);
  return set;
}

bool connection(const Ring& ring, const ChordSet& t, int a, int b) {
  return ring.adjacent(a, b) || member(t, Chord(a, b));
}

// Flanking apexes of a chord: exactly the vertices connected to both of its
// endpoints, one on each side.
std::pair<int, int> apexes(const Ring& ring, const ChordSet& t, Chord c) {
  int found[2] = {-1, -1};
  int count = 0;
  for (int w : ring.verts()) {
    if (w == c.i || w == c.j) continue;
    if (connection(ring, t, c.i, w) && connection(ring, t, c.j, w)) {
      if (count < 2) found[count] = w;
      ++count;
    }
  }
  if (count != 2) fail(Errc::internal, "chord " + chord_str(c) + " does not flank two faces");
  return {found[0], found[1]};
}

std::vector<int> x_degree(const Ring& ring, const ChordSet& x) {
  std::vector<int> deg(static_cast<size_t>(ring.universe()), 0);
  for (const Chord& c : x) {
    ++deg[static_cast<size_t>(c.i)];
    ++deg[static_cast<size_t>(c.j)];
  }
  return deg;
}

ChordSet star_in(const Ring& ring, int center) {
  ChordSet out;
  for (int w : ring.verts())
    if (w != center && !ring.adjacent(center, w)) out.push_back(Chord(center, w));
  return sorted_set(std::move(out));
}

// Ear-cut vertices of a triangulation: w whose ring neighbors are joined by a
// chord of t (or by the hull when the polygon is a triangle).
std::vector<int> ear_vertices(const Ring& ring, const ChordSet& t) {
  std::vector<int> out;
  for (int w : ring.verts()) {
    Chord around(ring.prev(w), ring.next(w));
    if (ring.chord(around) && member(t, around)) out.push_back(w);
  }
  return out;
}

std::vector<FlipMove> star_moves(const Ring& ring, ChordSet t, int center, const ChordSet& x) {
  std::vector<FlipMove> moves;
  const int want = ring.size() - 3;
  while (true) {
    // fan of center in cyclic order starting after it
    std::vector<int> fan;
    for (int w : ring.verts())
      if (w != center && connection(ring, t, center, w)) fan.push_back(w);
    std::sort(fan.begin(), fan.end(), [&](int a, int b) {
      int m = ring.size();
      return ((ring.pos(a) - ring.pos(center)) % m + m) % m <
             ((ring.pos(b) - ring.pos(center)) % m + m) % m;
    });
    int deg = static_cast<int>(fan.size()) - 2;
    if (deg >= want) break;
    bool flipped = false;
    for (size_t s = 0; s + 1 < fan.size() && !flipped; ++s) {
      Chord gate(fan[s], fan[s + 1]);
      if (!ring.chord(gate) || !member(t, gate)) continue;
      auto [w1, w2] = apexes(ring, t, gate);
      int far = (w1 == center) ? w2 : w1;
      Chord added(center, far);
      if (member(x, added)) fail(Errc::internal, "star route hit a forbidden chord");
      moves.push_back(FlipMove{gate, added});
      t = inserted(erased(std::move(t), gate), added);
      flipped = true;
    }
    if (!flipped) fail(Errc::internal, "no fan chord to flip toward the star");
  }
  return moves;
}

ChordSet avoiding_in(const Ring& ring, const ChordSet& x) {
  const int m = ring.size();
  if (m == 3) return {};
  if (static_cast<int>(x.size()) > m - 3)
    fail(Errc::bad_argument, "more than n-3 forbidden chords; no avoiding triangulation is guaranteed");
  std::vector<int> deg = x_degree(ring, x);
  for (int w : ring.verts())
    if (deg[static_cast<size_t>(w)] == 0) return star_in(ring, w);
  for (int t = 0; t < m; ++t) {
    int w = ring.at(t);
    Chord ear(ring.prev(w), ring.next(w));
    if (member(x, ear)) continue;
    Ring sub = ring.without(w);
    ChordSet rest = avoiding_in(sub, induced(sub, x));
    return inserted(std::move(rest), ear);
  }
  fail(Errc::internal, "every ear chord is forbidden");
}

std::vector<FlipMove> reversed_moves(const std::vector<FlipMove>& moves) {
  std::vector<FlipMove> out;
  out.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it)
    out.push_back(FlipMove{it->added, it->removed});
  return out;
}

std::vector<FlipMove> connect_in(const Ring& ring, const ChordSet& x, const ChordSet& from,
                                 const ChordSet& to) {
  if (from == to) return {};

  std::vector<int> deg = x_degree(ring, x);
  for (int w : ring.verts()) {
    if (deg[static_cast<size_t>(w)] != 0) continue;
    std::vector<FlipMove> head = star_moves(ring, from, w, x);
    std::vector<FlipMove> tail = star_moves(ring, to, w, x);
    std::vector<FlipMove> back = reversed_moves(tail);
    head.insert(head.end(), back.begin(), back.end());
    return head;
  }

  // every vertex is covered by a forbidden chord
  std::vector<int> ears_from = ear_vertices(ring, from);
  std::vector<int> ears_to = ear_vertices(ring, to);

  for (int q : ears_from) {
    Chord ear(ring.prev(q), ring.next(q));
    if (!member(to, ear)) continue;
    // shared ear: recurse on the polygon without its cut vertex
    Ring sub = ring.without(q);
    return connect_in(sub, induced(sub, x), erased(from, ear), erased(to, ear));
  }

  int q1 = -1, q2 = -1;
  for (int a : ears_from) {
    Chord e1(ring.prev(a), ring.next(a));
    for (int b : ears_to) {
      Chord e2(ring.prev(b), ring.next(b));
      if (!ring.cross(e1, e2)) {
        q1 = a;
        q2 = b;
        break;
      }
    }
    if (q1 >= 0) break;
  }
  if (q1 < 0) fail(Errc::internal, "no pair of non-crossing ears");

  Chord e1(ring.prev(q1), ring.next(q1));
  Chord e2(ring.prev(q2), ring.next(q2));

  Ring ring1 = ring.without(q1);
  ChordSet x1 = induced(ring1, x);
  ChordSet from1 = erased(from, e1);

  Ring ring2 = ring1.without(q2);
  ChordSet base = avoiding_in(ring2, induced(ring2, x1));
  ChordSet r1 = inserted(std::move(base), e2);

  std::vector<FlipMove> part1 = connect_in(ring1, x1, from1, r1);

  // lifted back to the full polygon, r1 + e1 shares the ear e2 with `to`
  ChordSet r_full = inserted(r1, e1);
  Ring sub2 = ring.without(q2);
  std::vector<FlipMove> part2 =
      connect_in(sub2, induced(sub2, x), erased(r_full, e2), erased(to, e2));

  part1.insert(part1.end(), part2.begin(), part2.end());
  return part1;
}

}  // namespace

bool is_chord(int n, Chord c) {
  if (c.i < 0 || c.j >= n) return false;
  int d = c.j - c.i;
  return d >= 2 && d <= n - 2;
}

bool chords_cross(int n, Chord a, Chord b) {
  return Ring::full(n).cross(a, b);
}

ChordSet star(int n, int center) {
  if (center < 0 || center >= n) fail(Errc::invalid_index, "star center out of range");
  return star_in(Ring::full(n), center);
}

ChordSet checked_triangulation(int n, ChordSet chords) {
  if (n < 3) fail(Errc::bad_argument, "polygon needs at least 3 vertices");
  chords = sorted_set(std::move(chords));
  for (const Chord& c : chords)
    if (!is_chord(n, c)) fail(Errc::bad_argument, "pair " + chord_str(c) + " is not a chord");
  if (static_cast<int>(chords.size()) != n - 3)
    fail(Errc::bad_argument, "a triangulation of the n-gon has exactly n-3 chords");
  Ring ring = Ring::full(n);
  for (size_t s = 0; s < chords.size(); ++s)
    for (size_t t = s + 1; t < chords.size(); ++t)
      if (ring.cross(chords[s], chords[t]))
        fail(Errc::crossing_pair,
             "chords " + chord_str(chords[s]) + " and " + chord_str(chords[t]) + " cross");
  return chords;
}

Chord flip_partner(int n, const ChordSet& t, Chord c) {
  if (!member(t, c)) fail(Errc::not_in_triangulation, "chord " + chord_str(c) + " not present");
  auto [w1, w2] = apexes(Ring::full(n), t, c);
  return Chord(w1, w2);
}

ChordSet apply_move(int n, const ChordSet& t, const FlipMove& move) {
  Chord partner = flip_partner(n, t, move.removed);
  if (partner != move.added)
    fail(Errc::illegal_flip,
         "chord " + chord_str(move.removed) + " flips to " + chord_str(partner) + ", not " +
             chord_str(move.added));
  return inserted(erased(t, move.removed), move.added);
}

ChordSet validate_path(int n, const FlipPath& path, const ChordSet& forbidden) {
  ChordSet x = sorted_set(forbidden);
  ChordSet cur = checked_triangulation(n, path.start);
  for (const Chord& c : cur)
    if (member(x, c)) fail(Errc::bad_argument, "start contains forbidden chord " + chord_str(c));
  if (static_cast<long>(path.moves.size()) > 4L * n * n)
    fail(Errc::internal, "flip path exceeds the quadratic move budget");
  for (const FlipMove& move : path.moves) {
    if (member(x, move.added))
      fail(Errc::illegal_flip, "move introduces forbidden chord " + chord_str(move.added));
    cur = apply_move(n, cur, move);
  }
  return cur;
}

CutSet zigzag_cut_set(int n) {
  if (n < 5) fail(Errc::bad_argument, "zigzag cut set needs n >= 5");

  auto chords_of_walk = [&](std::vector<int> walk) {
    ChordSet out;
    for (size_t t = 1; t < walk.size(); ++t) {
      Chord step(walk[t - 1], walk[t]);
      if (is_chord(n, step)) out.push_back(step);
    }
    return sorted_set(std::move(out));
  };
  std::vector<int> walk1{0};
  for (int hi = n - 2, lo = 1; hi >= lo;) {
    walk1.push_back(hi--);
    if (lo <= hi) walk1.push_back(lo++);
  }
  std::vector<int> walk2{0};
  for (int lo = 2, hi = n - 1; lo <= hi;) {
    walk2.push_back(lo++);
    if (lo <= hi) walk2.push_back(hi--);
  }

  CutSet out;
  out.n = n;
  out.frozen = checked_triangulation(n, chords_of_walk(std::move(walk1)));
  out.witness = checked_triangulation(n, chords_of_walk(std::move(walk2)));
  ChordSet partners;
  for (const Chord& c : out.frozen) partners.push_back(flip_partner(n, out.frozen, c));
  out.forbidden = sorted_set(std::move(partners));
  if (out.forbidden.size() != out.frozen.size())
    fail(Errc::internal, "zigzag flip partners are not distinct");
  return out;
}

FlipPath flip_to_star(int n, const ChordSet& t, int center, const ChordSet& forbidden) {
  ChordSet start = checked_triangulation(n, t);
  ChordSet x = sorted_set(forbidden);
  if (center < 0 || center >= n) fail(Errc::invalid_index, "star center out of range");
  for (const Chord& c : x)
    if (c.i == center || c.j == center)
      fail(Errc::bad_argument, "star center touches forbidden chord " + chord_str(c));
  for (const Chord& c : start)
    if (member(x, c)) fail(Errc::bad_argument, "triangulation contains forbidden chord " + chord_str(c));
  FlipPath path{start, star_moves(Ring::full(n), start, center, x)};
  return path;
}

ChordSet avoiding_triangulation(int n, const ChordSet& forbidden) {
  if (n < 3) fail(Errc::bad_argument, "polygon needs at least 3 vertices");
  ChordSet x = sorted_set(forbidden);
  for (const Chord& c : x)
    if (!is_chord(n, c)) fail(Errc::bad_argument, "forbidden pair " + chord_str(c) + " is not a chord");
  return avoiding_in(Ring::full(n), x);
}

FlipPath connect_avoiding(int n, const ChordSet& forbidden, const ChordSet& from,
                          const ChordSet& to) {
  ChordSet x = sorted_set(forbidden);
  for (const Chord& c : x)
    if (!is_chord(n, c)) fail(Errc::bad_argument, "forbidden pair " + chord_str(c) + " is not a chord");
  if (static_cast<int>(x.size()) > n - 4)
    fail(Errc::bad_argument, "more than n-4 forbidden chords; connectivity is not guaranteed");
  ChordSet s = checked_triangulation(n, from);
  ChordSet t = checked_triangulation(n, to);
  for (const Chord& c : s)
    if (member(x, c)) fail(Errc::bad_argument, "source contains forbidden chord " + chord_str(c));
  for (const Chord& c : t)
    if (member(x, c)) fail(Errc::bad_argument, "target contains forbidden chord " + chord_str(c));

  FlipPath path{s, connect_in(Ring::full(n), x, s, t)};
  if (validate_path(n, path, x) != t) fail(Errc::internal, "flip path does not reach the target");
  return path;
}

Triangulation to_triangulation(const PointSet& ps, const ChordSet& chords) {
  const int n = ps.size();
  std::vector<Edge> edges(chords.begin(), chords.end());
  for (int i = 0; i < n; ++i) edges.push_back(Edge(i, (i + 1) % n));
  return validate(ps, std::move(edges));
}

}  // namespace convex
}  // namespace flipcut
