#include "berkline/error.hpp"

namespace berkline {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "INVALID_ARGUMENT";
    case Errc::schema: return "SCHEMA";
    case Errc::singular_matrix: return "SINGULAR_MATRIX";
    case Errc::singular_system: return "SINGULAR_SYSTEM";
    case Errc::point_not_on_graph: return "POINT_NOT_ON_GRAPH";
    case Errc::zeta_in_support: return "ZETA_IN_SUPPORT";
    case Errc::zeta_in_set: return "ZETA_IN_SET";
    case Errc::not_probability: return "NOT_PROBABILITY";
    case Errc::candidates_outside_set: return "CANDIDATES_OUTSIDE_E";
    case Errc::type_i_atom: return "TYPE_I_ATOM";
    case Errc::unsupported_point: return "UNSUPPORTED_POINT";
    case Errc::verification_failed: return "VERIFICATION_FAILED";
    case Errc::fiber_multiplicity_mismatch: return "FIBER_MULTIPLICITY_MISMATCH";
    case Errc::depth_guard: return "DEPTH_GUARD";
  }
  return "UNKNOWN";
}

}  // namespace berkline
