#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace homshape {

enum class Errc {
  dimension,
  not_skew,
  not_rotation,
  not_on_manifold,
  invalid_tangent,
  degenerate_segment,
  degenerate_velocity,
  degenerate_intermediate,
  lift_failure,
  invalid_warp,
  invalid_arc,
  invalid_reductive_path,
  grid_mismatch,
  base_mismatch,
  domain,
  configuration,
  too_large,
  schema,
};

const char* to_string(Errc code) noexcept;

/// True for the numerical degeneracies (zero velocity, antipodal samples,
/// failed lifts) as opposed to malformed input.
bool is_numerical(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Error(Errc code, const std::string& what, std::size_t segment)
      : std::runtime_error(what + " (segment " + std::to_string(segment) + ")"),
        code_(code),
        segment_(segment) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> segment() const noexcept { return segment_; }

 private:
  Errc code_;
  std::optional<std::size_t> segment_;
};

}  // namespace homshape
