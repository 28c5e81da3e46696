#ifndef CAPFLOW_NETWORK_HPP
#define CAPFLOW_NETWORK_HPP

/**
 * @file network.hpp
 * @brief Series-parallel trees of tubes.
 *
 * Resistances compose linearly: in series the flow rate is shared and the
 * drops add, in parallel the drop is shared and the flows add. Only trees are
 * modelled, so no linear solve is ever needed.
 */

#include <optional>
#include <utility>
#include <vector>

#include "capflow/analytic.hpp"
#include "capflow/error.hpp"
#include "capflow/geometry.hpp"
#include "capflow/summation.hpp"

namespace capflow {

class NetworkElement {
 public:
  enum class Kind { Tube, Series, Parallel };

  static NetworkElement tube(RadiusProfile profile) {
    return NetworkElement(Kind::Tube, std::move(profile), {});
  }
  static NetworkElement series(std::vector<NetworkElement> elements) {
    return NetworkElement(Kind::Series, std::nullopt, std::move(elements));
  }
  static NetworkElement parallel(std::vector<NetworkElement> elements) {
    return NetworkElement(Kind::Parallel, std::nullopt, std::move(elements));
  }

  Kind kind() const noexcept { return kind_; }

  /// Only valid for Kind::Tube.
  const RadiusProfile& profile() const { return profile_.value(); }

  /// Children of a Series or Parallel node; empty for a tube.
  const std::vector<NetworkElement>& elements() const noexcept { return elements_; }

 private:
  NetworkElement(Kind kind, std::optional<RadiusProfile> profile,
                 std::vector<NetworkElement> elements)
      : kind_(kind), profile_(std::move(profile)), elements_(std::move(elements)) {}

  Kind kind_;
  std::optional<RadiusProfile> profile_;
  std::vector<NetworkElement> elements_;
};

/// Fluid-independent factor of the tree resistance, m⁻³. Throws
/// EmptyComposite for a Series/Parallel node without children.
inline double network_geometric_factor(const NetworkElement& element) {
  using Kind = NetworkElement::Kind;
  if (element.kind() == Kind::Tube) return geometric_factor(element.profile());

  if (element.elements().empty()) {
    throw Error(ErrorCode::EmptyComposite,
                element.kind() == Kind::Series ? "series node has no elements"
                                               : "parallel node has no elements");
  }
  detail::CompensatedSum sum;
  if (element.kind() == Kind::Series) {
    for (const auto& child : element.elements()) sum += network_geometric_factor(child);
    return sum.value();
  }
  for (const auto& child : element.elements()) sum += 1.0 / network_geometric_factor(child);
  return 1.0 / sum.value();
}

inline HydraulicResistance network_resistance(const NetworkElement& element,
                                              const Fluid& fluid) {
  const double g = network_geometric_factor(element);
  return {fluid.viscosity() * g, g};
}

inline double network_pressure_drop(const NetworkElement& element, double flow_rate,
                                    const Fluid& fluid) {
  return network_resistance(element, fluid).resistance * flow_rate;
}

inline double network_flow_rate(const NetworkElement& element, double pressure_drop,
                                const Fluid& fluid) {
  return pressure_drop / network_resistance(element, fluid).resistance;
}

}  // namespace capflow

#endif
