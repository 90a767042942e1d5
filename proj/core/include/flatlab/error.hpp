#pragma once

#include <stdexcept>
#include <string>

namespace flatlab {

// Error identities used across the library.  CLI maps these to exit codes:
// resource caps -> 3, everything else here -> 2.
enum class Errc {
  mixed_field,
  division_by_zero,
  zero_input,
  gluing_mismatch,
  nonconvex_polygon,
  field_mismatch,
  float_mode_unsupported,
  singular_matrix,
  orientation_reversing,
  not_unimodular,
  bound_too_large,
  insufficient_saddle_connections,
  zero_direction,
  not_decomposed,
  nonpositive_factor,
  syntax_error,
  invariant_violation,
  disconnected_surface,
  io_error,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace flatlab
