#ifndef CAPFLOW_ANALYTIC_HPP
#define CAPFLOW_ANALYTIC_HPP

/**
 * @file analytic.hpp
 * @brief Closed-form pressure drop / flow rate for laminar Newtonian flow.
 *
 * For a tube of slowly varying radius r(x) the flow rate is the same through
 * every cross section, so summing Hagen-Poiseuille drops over slices gives
 *
 *   P = (8 Q μ / π) ∫ dx / r(x)⁴  =  μ G Q,     G = (8/π) ∫ dx / r⁴  [m⁻³]
 *
 * G depends on geometry only. Each corrugated shape in geometry.hpp has a
 * closed form for G; they are written here in forms that stay finite and
 * accurate as R_max → R_min, where every one of them must reduce to the
 * straight-tube value 8L/(πR⁴).
 */

#include <algorithm>
#include <cmath>
#include <numbers>

#include "capflow/error.hpp"
#include "capflow/geometry.hpp"

namespace capflow {

class Fluid {
 public:
  /// Newtonian fluid with dynamic viscosity in Pa·s. Throws NonPositiveViscosity.
  explicit Fluid(double viscosity) : viscosity_(viscosity) {
    if (!(viscosity > 0.0) || !std::isfinite(viscosity)) {
      throw Error(ErrorCode::NonPositiveViscosity,
                  "viscosity must be positive and finite, got " + detail::brief(viscosity));
    }
  }

  double viscosity() const noexcept { return viscosity_; }

 private:
  double viscosity_;
};

/// Signed operating point; P and Q always share sign.
struct FlowState {
  double flow_rate = 0.0;
  double pressure_drop = 0.0;
};

struct HydraulicResistance {
  double resistance = 0.0;       // Pa·s/m³, equals viscosity · geometric_factor
  double geometric_factor = 0.0; // m⁻³
};

namespace detail {

inline constexpr double kSeriesSwitch = 1e-6;

// arctan(√u)/√u, → 1 as u → 0.
inline double atan_sqrt_ratio(double u) {
  if (u < kSeriesSwitch) return 1.0 - u / 3.0 + u * u / 5.0 - u * u * u / 7.0;
  const double s = std::sqrt(u);
  return std::atan(s) / s;
}

// tanh(x)(sech²(x) + 2)/x, → 3 as x → 0.
inline double cosh_bracket(double x) {
  if (x < kSeriesSwitch) return 3.0 - 2.0 * x * x + 1.4 * x * x * x * x;
  const double c = std::cosh(x);
  return std::tanh(x) * (1.0 / (c * c) + 2.0) / x;
}

inline double straight_factor(double radius, double length) {
  const double r2 = radius * radius;
  return 8.0 * length / (std::numbers::pi * r2 * r2);
}

}  // namespace detail

/// G = (8/π) ∫ dx/r⁴ over the tube, in closed form.
inline double geometric_factor(const RadiusProfile& profile) {
  using std::numbers::pi;
  const double L = profile.length();
  const double r = profile.r_min();
  const double R = profile.r_max();

  switch (profile.kind()) {
    case ShapeKind::Straight:
      return detail::straight_factor(r, L);

    case ShapeKind::Conical: {
      // (1/r³ - 1/R³)/(R - r) expanded so nothing cancels near R = r
      const double r3 = r * r * r;
      const double R3 = R * R * R;
      return 8.0 * L / (3.0 * pi) * (R * R + R * r + r * r) / (r3 * R3);
    }

    case ShapeKind::Parabolic: {
      const double u = (R - r) / r;
      const double r2 = r * r;
      const double bracket = 1.0 / (3.0 * r * R * R * R) + 5.0 / (12.0 * r2 * R * R) +
                             5.0 / (8.0 * r2 * r * R) +
                             5.0 / (8.0 * r2 * r2) * detail::atan_sqrt_ratio(u);
      return 4.0 * L / pi * bracket;
    }

    case ShapeKind::Hyperbolic: {
      const double r2 = r * r;
      const double v = (R - r) * (R + r) / r2;
      const double bracket = 1.0 / (r2 * R * R) + detail::atan_sqrt_ratio(v) / (r2 * r2);
      return 4.0 * L / pi * bracket;
    }

    case ShapeKind::HyperbolicCosine: {
      const double x = detail::arccosh_ratio(r, R);
      const double r2 = r * r;
      return 8.0 * L / (3.0 * pi * r2 * r2) * detail::cosh_bracket(x);
    }

    case ShapeKind::Sinusoidal: {
      const double sum = R + r;
      const double diff = R - r;
      const double numerator = 2.0 * sum * sum * sum + 3.0 * sum * diff * diff;
      return L * numerator / (2.0 * pi * std::pow(R * r, 3.5));
    }
  }
  return detail::straight_factor(r, L);
}

inline HydraulicResistance hydraulic_resistance(const RadiusProfile& profile,
                                                const Fluid& fluid) {
  const double g = geometric_factor(profile);
  return {fluid.viscosity() * g, g};
}

/// Straight-tube Hagen-Poiseuille drop 8QμL/(πr⁴). Sign follows Q.
inline double poiseuille_pressure_drop(double radius, double length, double flow_rate,
                                       const Fluid& fluid) {
  if (!(radius > 0.0)) {
    throw Error(ErrorCode::NonPositiveRadius,
                "radius must be positive, got " + detail::brief(radius));
  }
  if (!(length > 0.0)) {
    throw Error(ErrorCode::NonPositiveLength,
                "length must be positive, got " + detail::brief(length));
  }
  return fluid.viscosity() * detail::straight_factor(radius, length) * flow_rate;
}

inline double pressure_drop(const RadiusProfile& profile, double flow_rate,
                            const Fluid& fluid) {
  return hydraulic_resistance(profile, fluid).resistance * flow_rate;
}

inline double flow_rate(const RadiusProfile& profile, double pressure_drop,
                        const Fluid& fluid) {
  return pressure_drop / hydraulic_resistance(profile, fluid).resistance;
}

inline FlowState flow_state_for_flow(const RadiusProfile& profile, double flow_rate,
                                     const Fluid& fluid) {
  return {flow_rate, pressure_drop(profile, flow_rate, fluid)};
}

/// Radius of the straight tube with the same length and resistance.
inline double equivalent_radius(const RadiusProfile& profile) {
  const double g = geometric_factor(profile);
  const double r_eq = std::sqrt(std::sqrt(8.0 * profile.length() / (std::numbers::pi * g)));
  // rounding can push the degenerate case an ulp outside the bracket
  return std::clamp(r_eq, profile.r_min(), profile.r_max());
}

}  // namespace capflow

#endif
