#pragma once

#include <vector>

#include "flipcut/triangulation.hpp"

namespace flipcut {
namespace convex {

/// A chord of the convex n-gon: an Edge between cyclically non-adjacent
/// indices. Triangulations of the n-gon are given by their n-3 chords; hull
/// edges are implicit and can never be forbidden.
using Chord = Edge;
using ChordSet = std::vector<Chord>;

bool is_chord(int n, Chord c);
bool chords_cross(int n, Chord a, Chord b);

/// Chords of the fan centered at `center`.
ChordSet star(int n, int center);

/// Checks a chord list is a triangulation of the n-gon (n-3 pairwise
/// non-crossing chords) and returns it sorted.
ChordSet checked_triangulation(int n, ChordSet chords);

/// The chord a given chord of t exchanges with under a flip. Every chord of a
/// convex triangulation is flippable.
Chord flip_partner(int n, const ChordSet& t, Chord c);

ChordSet apply_move(int n, const ChordSet& t, const FlipMove& move);

struct FlipPath {
  ChordSet start;
  std::vector<FlipMove> moves;
};

/// Replays the path, checking each move is a legal flip avoiding `forbidden`,
/// and returns the final triangulation.
ChordSet validate_path(int n, const FlipPath& path, const ChordSet& forbidden);

/// The zigzag triangulation, the n-3 flip partners of its chords, and the
/// opposite zigzag. Forbidding the partners freezes the zigzag.
struct CutSet {
  int n = 0;
  ChordSet frozen;     // the zigzag triangulation
  ChordSet forbidden;  // its n-3 flip partners
  ChordSet witness;    // the opposite zigzag
};

CutSet zigzag_cut_set(int n);

/// Flip path from t to the star at center, never introducing a forbidden
/// chord. Requires center to have no incident forbidden chord.
FlipPath flip_to_star(int n, const ChordSet& t, int center, const ChordSet& forbidden);

/// A triangulation avoiding the forbidden chords, which exists whenever
/// |forbidden| <= n-3: star at an uncovered point if any, else cut a
/// non-forbidden ear and recurse.
ChordSet avoiding_triangulation(int n, const ChordSet& forbidden);

/// Flip path from `from` to `to` through triangulations avoiding the
/// forbidden chords. Requires |forbidden| <= n-4.
FlipPath connect_avoiding(int n, const ChordSet& forbidden, const ChordSet& from,
                          const ChordSet& to);

/// Chords plus hull edges as a geometric triangulation of the standard
/// parabola realization (gen::convex).
Triangulation to_triangulation(const PointSet& ps, const ChordSet& chords);

}  // namespace convex
}  // namespace flipcut
