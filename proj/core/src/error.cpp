#include "flatlab/error.hpp"

namespace flatlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::mixed_field: return "MixedFieldError";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::zero_input: return "ZeroInput";
    case Errc::gluing_mismatch: return "GluingMismatch";
    case Errc::nonconvex_polygon: return "NonConvexPolygon";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::float_mode_unsupported: return "FloatModeUnsupported";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::orientation_reversing: return "OrientationReversing";
    case Errc::not_unimodular: return "NotUnimodular";
    case Errc::bound_too_large: return "BoundTooLargeForMemory";
    case Errc::insufficient_saddle_connections: return "InsufficientSaddleConnections";
    case Errc::zero_direction: return "ZeroDirection";
    case Errc::not_decomposed: return "NotDecomposed";
    case Errc::nonpositive_factor: return "NonpositiveFactor";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::disconnected_surface: return "DisconnectedSurface";
    case Errc::io_error: return "IoError";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace flatlab
