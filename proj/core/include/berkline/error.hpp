#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace berkline {

/// Error categories surfaced by the library. The CLI maps these onto exit
/// statuses: schema problems exit 2, domain problems exit 3, and the
/// "bug signal" codes exit 1.
enum class Errc {
  invalid_argument,
  schema,
  singular_matrix,
  singular_system,
  point_not_on_graph,
  zeta_in_support,
  zeta_in_set,
  not_probability,
  candidates_outside_set,
  type_i_atom,
  unsupported_point,
  verification_failed,
  fiber_multiplicity_mismatch,
  depth_guard,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace berkline
