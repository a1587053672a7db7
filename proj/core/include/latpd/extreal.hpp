#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

namespace latpd {

// Extended non-negative reals: finite doubles plus +inf.
// Conventions used everywhere: |inf - inf| = 0, |inf - finite| = inf,
// inf + x = inf. IEEE arithmetic already gives the last one; the first
// needs the explicit case (IEEE would produce NaN).

inline constexpr double ext_inf = std::numeric_limits<double>::infinity();

inline bool is_inf(double x) { return std::isinf(x); }

inline double ext_abs_diff(double a, double b) {
  if (is_inf(a) && is_inf(b)) return 0.0;
  if (is_inf(a) || is_inf(b)) return ext_inf;
  return std::abs(a - b);
}

inline double ext_add(double a, double b) {
  if (is_inf(a) || is_inf(b)) return ext_inf;
  return a + b;
}

// Tolerance for comparisons whose inputs went through non-exact float
// steps (crossing solves, midpoints). Dyadic inputs compare exactly.
inline constexpr double ext_tol = 1e-9;

inline bool ext_close(double a, double b, double tol = ext_tol) {
  if (is_inf(a) || is_inf(b)) return is_inf(a) && is_inf(b);
  return std::abs(a - b) <= tol;
}

// Shortest decimal representation that round-trips; "inf" for infinity.
inline std::string format_real(double x) {
  if (is_inf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

} // namespace latpd
