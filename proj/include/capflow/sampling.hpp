#ifndef CAPFLOW_SAMPLING_HPP
#define CAPFLOW_SAMPLING_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "capflow/geometry.hpp"

namespace capflow {

/// Seeded generator of random tube geometries for verification sweeps.
/// Draws are built from raw mt19937_64 bits, so a seed gives the same
/// profiles on every platform.
///
///   r_min         log-uniform in [1e-6, 1e-2] m
///   r_max/r_min   log-uniform in (1, 100]
///   L             log-uniform in [1e-4, 10] m
class ProfileSampler {
 public:
  static constexpr double kMinRadius = 1e-6;
  static constexpr double kMaxRadius = 1e-2;
  static constexpr double kMaxRatio = 100.0;
  static constexpr double kMinLength = 1e-4;
  static constexpr double kMaxLength = 10.0;

  explicit ProfileSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1].
  double unit() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  double log_uniform(double lo, double hi) {
    return lo * std::exp(std::log(hi / lo) * unit());
  }

  double radius() { return log_uniform(kMinRadius, kMaxRadius); }
  double length() { return log_uniform(kMinLength, kMaxLength); }

  /// Profile with r_max strictly greater than r_min.
  RadiusProfile corrugated(ShapeKind kind) {
    const double r_min = radius();
    double r_max = r_min * std::exp(std::log(kMaxRatio) * unit());
    if (!(r_max > r_min)) r_max = std::nextafter(r_min, 1.0);
    return make_profile(kind, r_min, r_max, length());
  }

  /// Profile with r_min == r_max.
  RadiusProfile degenerate(ShapeKind kind) {
    const double r = radius();
    return make_profile(kind, r, r, length());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace capflow

#endif
