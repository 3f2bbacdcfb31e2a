#pragma once

#include <stdexcept>
#include <string>

namespace panto {

// Typed failure with a stable code; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Error move_not_applicable(const std::string& w) { return Error("MoveNotApplicable", w); }
inline Error curve_not_internal(const std::string& w) { return Error("CurveNotInternal", w); }
inline Error unbalanced_end_behavior(const std::string& w) {
  return Error("UnbalancedEndBehavior", w);
}
inline Error zero_shift_end(const std::string& w) { return Error("ZeroShiftEnd", w); }
inline Error support_mismatch(const std::string& w) { return Error("SupportMismatch", w); }
inline Error curve_outside_window(const std::string& w) { return Error("CurveOutsideWindow", w); }
inline Error path_endpoint_mismatch(const std::string& w) {
  return Error("PathEndpointMismatch", w);
}
inline Error non_terminating_orbit(const std::string& w) { return Error("NonTerminatingOrbit", w); }
inline Error invalid_path(const std::string& w) { return Error("InvalidPath", w); }
inline Error empty_projection(const std::string& w) { return Error("EmptyProjection", w); }
inline Error convention_violation(const std::string& w) { return Error("ConventionViolation", w); }
inline Error orbit_escaped_window(const std::string& w) { return Error("OrbitEscapedWindow", w); }
inline Error parse_error(const std::string& w) { return Error("parse", w); }

}  // namespace panto
