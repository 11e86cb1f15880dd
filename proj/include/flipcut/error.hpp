#pragma once

#include <stdexcept>
#include <string>

namespace flipcut {

enum class Errc {
  invalid_index,
  duplicate_point,
  coordinate_overflow,
  not_an_edge,
  edge_in_triangulation,
  not_in_triangulation,
  crossing_pair,
  not_maximal,
  illegal_flip,
  size_bound_exceeded,
  bad_argument,
  parse_error,
  generation_failed,
  internal,
};

const char* errc_name(Errc code) noexcept;

/// Domain error carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace flipcut
