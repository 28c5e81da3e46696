#ifndef CAPFLOW_TESTS_SUPPORT_HPP
#define CAPFLOW_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <ostream>

#include "capflow/geometry.hpp"

namespace capflow {

// readable parameter values in test names
inline void PrintTo(ShapeKind kind, std::ostream* os) { *os << to_token(kind); }

}  // namespace capflow

namespace capflow::testing {

inline double rel_diff(double actual, double expected) {
  if (expected == 0.0) return std::abs(actual);
  return std::abs(actual - expected) / std::abs(expected);
}

// 50-digit mpmath quadrature, see tests/oracle/reference_values.py.
// All with r_min = 1e-3 m, r_max = 2e-3 m, L = 0.1 m, μ = 1e-3 Pa·s, Q = 1e-9 m³/s.
namespace reference {
inline constexpr double kConical = 0.074272306776217823359;
inline constexpr double kParabolic = 0.12085681246702828978;
inline constexpr double kHyperbolic = 0.10881102451032916909;
inline constexpr double kCosh = 0.12559146272842463876;
inline constexpr double kSinusoidal = 0.088624887371715128722;
inline constexpr double kStraight = 0.25464790894703253723;  // R = 1e-3
inline constexpr double kConicalIntegral = 29166666666.666666667;  // ∫dx/r⁴, m⁻³
inline constexpr double kSeriesResistance = 518156493.85371504972;
inline constexpr double kConicalEquivalentRadius = 0.0013607498666342403589;
inline constexpr double kHyperbolicRadiusAtQuarter = 0.0013228756555322952953;
}  // namespace reference

}  // namespace capflow::testing

#endif
