#ifndef CAPFLOW_GEOMETRY_HPP
#define CAPFLOW_GEOMETRY_HPP

/**
 * @file geometry.hpp
 * @brief Axisymmetric converging-diverging radius profiles r(x).
 *
 * Every profile lives on the axial domain x ∈ [-L/2, L/2], is narrowest at
 * x = 0 (r = R_min) and widest at both ends (r = R_max):
 *
 *   conical      r(x) = a + b|x|           a = R_min,   b = 2(R_max - R_min)/L
 *   parabolic    r(x) = a + b x²           a = R_min,   b = (2/L)²(R_max - R_min)
 *   hyperbolic   r(x) = √(a + b x²)        a = R_min²,  b = (2/L)²(R_max² - R_min²)
 *   cosh         r(x) = a cosh(b x)        a = R_min,   b = (2/L) arccosh(R_max/R_min)
 *   sinusoidal   r(x) = a - b cos(k x)     a = (R_max + R_min)/2, b = (R_max - R_min)/2,
 *                                          k = 2π/L (one full wavelength)
 *
 * A straight tube has R_min = R_max = R. R_max = R_min is accepted for every
 * shape; each formula then collapses to the constant R.
 */

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "capflow/error.hpp"

namespace capflow {

enum class ShapeKind {
  Straight,
  Conical,
  Parabolic,
  Hyperbolic,
  HyperbolicCosine,
  Sinusoidal,
};

inline constexpr ShapeKind kCorrugatedShapes[] = {
    ShapeKind::Conical, ShapeKind::Parabolic, ShapeKind::Hyperbolic,
    ShapeKind::HyperbolicCosine, ShapeKind::Sinusoidal};

/// Lowercase token used on the command line and in network files.
constexpr std::string_view to_token(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Straight: return "straight";
    case ShapeKind::Conical: return "conical";
    case ShapeKind::Parabolic: return "parabolic";
    case ShapeKind::Hyperbolic: return "hyperbolic";
    case ShapeKind::HyperbolicCosine: return "cosh";
    case ShapeKind::Sinusoidal: return "sinusoidal";
  }
  return "unknown";
}

constexpr std::optional<ShapeKind> shape_from_token(std::string_view token) {
  for (auto kind : {ShapeKind::Straight, ShapeKind::Conical, ShapeKind::Parabolic,
                    ShapeKind::Hyperbolic, ShapeKind::HyperbolicCosine,
                    ShapeKind::Sinusoidal}) {
    if (to_token(kind) == token) return kind;
  }
  return std::nullopt;
}

/// Coefficients of r(x). Units depend on the shape (see file comment);
/// wavenumber and A are only set for a sinusoidal profile, and A only when
/// R_max > R_min.
struct ShapeParameters {
  double a = 0.0;
  double b = 0.0;
  std::optional<double> wavenumber;
  std::optional<double> A;

  friend bool operator==(const ShapeParameters&, const ShapeParameters&) = default;
};

namespace detail {

// arccosh(R_max/R_min) written as log1p(w + √(w(w+2))), w = R_max/R_min - 1,
// so the near-degenerate case keeps full relative accuracy.
inline double arccosh_ratio(double r_min, double r_max) {
  const double w = (r_max - r_min) / r_min;
  return std::log1p(w + std::sqrt(w * (w + 2.0)));
}

}  // namespace detail

class RadiusProfile {
 public:
  /// Validates and builds a profile. Throws Error with NonPositiveRadius,
  /// RadiusOrder or NonPositiveLength.
  static RadiusProfile make(ShapeKind kind, double r_min, double r_max, double length) {
    if (!(r_min > 0.0) || !std::isfinite(r_min)) {
      throw Error(ErrorCode::NonPositiveRadius,
                  "r_min must be positive and finite, got " + detail::brief(r_min));
    }
    if (!(r_max >= r_min) || !std::isfinite(r_max)) {
      throw Error(ErrorCode::RadiusOrder, "r_max (" + detail::brief(r_max) +
                                              ") must be >= r_min (" +
                                              detail::brief(r_min) + ")");
    }
    if (!(length > 0.0) || !std::isfinite(length)) {
      throw Error(ErrorCode::NonPositiveLength,
                  "length must be positive and finite, got " + detail::brief(length));
    }
    if (kind == ShapeKind::Straight && r_max != r_min) {
      throw Error(ErrorCode::RadiusOrder, "straight tube needs r_max == r_min, got " +
                                              detail::brief(r_min) + " and " +
                                              detail::brief(r_max));
    }
    return RadiusProfile(kind, r_min, r_max, length);
  }

  static RadiusProfile straight(double radius, double length) {
    return make(ShapeKind::Straight, radius, radius, length);
  }

  ShapeKind kind() const noexcept { return kind_; }
  double r_min() const noexcept { return r_min_; }
  double r_max() const noexcept { return r_max_; }
  double length() const noexcept { return length_; }
  double half_length() const noexcept { return 0.5 * length_; }
  bool degenerate() const noexcept { return r_max_ == r_min_; }

  ShapeParameters parameters() const {
    const double two_over_l = 2.0 / length_;
    ShapeParameters p;
    switch (kind_) {
      case ShapeKind::Straight:
        p.a = r_min_;
        break;
      case ShapeKind::Conical:
        p.a = r_min_;
        p.b = two_over_l * (r_max_ - r_min_);
        break;
      case ShapeKind::Parabolic:
        p.a = r_min_;
        p.b = two_over_l * two_over_l * (r_max_ - r_min_);
        break;
      case ShapeKind::Hyperbolic:
        p.a = r_min_ * r_min_;
        p.b = two_over_l * two_over_l * (r_max_ - r_min_) * (r_max_ + r_min_);
        break;
      case ShapeKind::HyperbolicCosine:
        p.a = r_min_;
        p.b = two_over_l * detail::arccosh_ratio(r_min_, r_max_);
        break;
      case ShapeKind::Sinusoidal:
        p.a = 0.5 * (r_max_ + r_min_);
        p.b = 0.5 * (r_max_ - r_min_);
        p.wavenumber = 2.0 * std::numbers::pi / length_;
        if (r_max_ > r_min_) p.A = (r_max_ + r_min_) / (r_min_ - r_max_);
        break;
    }
    return p;
  }

  /// r(x). Throws OutOfDomain when |x| > L/2 by more than 1e-12·L; points
  /// inside that slack are clamped onto the endpoint.
  double radius_at(double x) const {
    const double h = half_length();
    if (!(std::abs(x) <= h + 1e-12 * length_)) {
      throw Error(ErrorCode::OutOfDomain, "x = " + detail::brief(x) + " outside [-" +
                                              detail::brief(h) + ", " +
                                              detail::brief(h) + "]");
    }
    if (x > h) x = h;
    if (x < -h) x = -h;
    return eval(x);
  }

  friend bool operator==(const RadiusProfile&, const RadiusProfile&) = default;

 private:
  RadiusProfile(ShapeKind kind, double r_min, double r_max, double length)
      : kind_(kind), r_min_(r_min), r_max_(r_max), length_(length), params_(parameters()) {}

  double eval(double x) const {
    const double a = params_.a;
    const double b = params_.b;
    switch (kind_) {
      case ShapeKind::Straight: return r_min_;
      case ShapeKind::Conical: return a + b * std::abs(x);
      case ShapeKind::Parabolic: return a + b * x * x;
      case ShapeKind::Hyperbolic: return std::sqrt(a + b * x * x);
      case ShapeKind::HyperbolicCosine: return a * std::cosh(b * x);
      case ShapeKind::Sinusoidal: return a - b * std::cos(*params_.wavenumber * x);
    }
    return r_min_;
  }

  ShapeKind kind_;
  double r_min_;
  double r_max_;
  double length_;
  ShapeParameters params_;
};

inline RadiusProfile make_profile(ShapeKind kind, double r_min, double r_max, double length) {
  return RadiusProfile::make(kind, r_min, r_max, length);
}

inline double radius_at(const RadiusProfile& profile, double x) {
  return profile.radius_at(x);
}

struct ProfileSample {
  double x;
  double r;
};

struct ProfileTable {
  std::vector<ProfileSample> rows;
};

/// n_samples points uniformly spaced over the closed interval [-L/2, L/2].
inline ProfileTable sample_profile(const RadiusProfile& profile, std::size_t n_samples) {
  if (n_samples < 2) {
    throw Error(ErrorCode::TooFewSamples,
                "need at least 2 samples, got " + std::to_string(n_samples));
  }
  const double h = profile.half_length();
  const double span = 2.0 * h;
  const double last = static_cast<double>(n_samples - 1);
  ProfileTable table;
  table.rows.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    // i == n-1 gives -h + 2h == h exactly
    const double x = -h + span * (static_cast<double>(i) / last);
    table.rows.push_back({x, profile.radius_at(x)});
  }
  return table;
}

}  // namespace capflow

#endif
