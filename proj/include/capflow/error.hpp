#ifndef CAPFLOW_ERROR_HPP
#define CAPFLOW_ERROR_HPP

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace capflow {

enum class ErrorCode {
  NonPositiveRadius,
  RadiusOrder,
  NonPositiveLength,
  NonPositiveViscosity,
  OutOfDomain,
  TooFewSamples,
  InvalidConfig,
  NotConverged,
  EmptyComposite,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::RadiusOrder: return "RadiusOrder";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::NonPositiveViscosity: return "NonPositiveViscosity";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::EmptyComposite: return "EmptyComposite";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Validation failure. what() is prefixed with the error code name, e.g.
/// "RadiusOrder: r_max (0.0005) < r_min (0.001)".
class Error : public std::invalid_argument {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::invalid_argument(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Short form for diagnostics; output records use full precision instead.
inline std::string brief(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

}  // namespace detail

}  // namespace capflow

#endif
