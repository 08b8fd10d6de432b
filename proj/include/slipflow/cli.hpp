#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slipflow {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal string that round-trips to the same binary64.
std::string format_double(double v);

/// Length scale s = 1/sqrt(ab) taking an (a,b) ellipse to area pi.
struct Rescale {
  double aspect = 1.0;  // normalized semi-major axis, >= 1
  double s = 1.0;
  double flow_factor = 1.0;  // (ab)^2 = s^-4
};
Rescale rescale_ellipse(double a, double b);

}  // namespace slipflow
