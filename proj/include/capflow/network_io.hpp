#ifndef CAPFLOW_NETWORK_IO_HPP
#define CAPFLOW_NETWORK_IO_HPP

/**
 * @file network_io.hpp
 * @brief JSON network description files.
 *
 *   {"type": "series", "elements": [
 *     {"type": "tube", "shape": "conical", "rmin": 1e-3, "rmax": 2e-3, "length": 0.1},
 *     {"type": "parallel", "elements": [ ... ]}
 *   ]}
 *
 * Shapes: straight, conical, parabolic, hyperbolic, cosh, sinusoidal. SI
 * units throughout. "rmax" may be omitted for a straight tube.
 *
 * Syntax errors report line:column; structural errors report the JSON
 * pointer of the offending node (e.g. "/elements/2/rmin").
 */

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "capflow/error.hpp"
#include "capflow/geometry.hpp"
#include "capflow/network.hpp"

namespace capflow {

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

inline std::string pointer_or_root(const std::string& pointer) {
  return pointer.empty() ? std::string("/") : pointer;
}

inline double number_field(const nlohmann::json& node, const std::string& key,
                           const std::string& pointer) {
  const auto it = node.find(key);
  if (it == node.end()) {
    throw Error(ErrorCode::ParseError,
                pointer_or_root(pointer) + ": missing field \"" + key + "\"");
  }
  if (!it->is_number()) {
    throw Error(ErrorCode::ParseError,
                pointer + "/" + key + ": expected a number, got " + it->type_name());
  }
  return it->get<double>();
}

inline NetworkElement parse_node(const nlohmann::json& node, const std::string& pointer) {
  const std::string where = pointer_or_root(pointer);
  if (!node.is_object()) {
    throw Error(ErrorCode::ParseError,
                where + ": expected an object, got " + node.type_name());
  }
  const auto type_it = node.find("type");
  if (type_it == node.end() || !type_it->is_string()) {
    throw Error(ErrorCode::ParseError, where + ": missing string field \"type\"");
  }
  const auto type = type_it->get<std::string>();

  if (type == "tube") {
    const auto shape_it = node.find("shape");
    if (shape_it == node.end() || !shape_it->is_string()) {
      throw Error(ErrorCode::ParseError, where + ": missing string field \"shape\"");
    }
    const auto shape = shape_from_token(shape_it->get<std::string>());
    if (!shape) {
      throw Error(ErrorCode::ParseError,
                  pointer + "/shape: unknown shape \"" + shape_it->get<std::string>() + "\"");
    }
    const double rmin = number_field(node, "rmin", pointer);
    const double rmax = (*shape == ShapeKind::Straight && !node.contains("rmax"))
                            ? rmin
                            : number_field(node, "rmax", pointer);
    const double length = number_field(node, "length", pointer);
    try {
      return NetworkElement::tube(make_profile(*shape, rmin, rmax, length));
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.detail());
    }
  }

  if (type == "series" || type == "parallel") {
    const auto elems_it = node.find("elements");
    if (elems_it == node.end() || !elems_it->is_array()) {
      throw Error(ErrorCode::ParseError, where + ": missing array field \"elements\"");
    }
    if (elems_it->empty()) {
      throw Error(ErrorCode::EmptyComposite, pointer + "/elements: " + type +
                                                 " node has no elements");
    }
    std::vector<NetworkElement> children;
    children.reserve(elems_it->size());
    for (std::size_t i = 0; i < elems_it->size(); ++i) {
      children.push_back(
          parse_node((*elems_it)[i], pointer + "/elements/" + std::to_string(i)));
    }
    return type == "series" ? NetworkElement::series(std::move(children))
                            : NetworkElement::parallel(std::move(children));
  }

  throw Error(ErrorCode::ParseError, pointer + "/type: unknown node type \"" + type + "\"");
}

}  // namespace detail

/// Parses a network description. Throws Error (ParseError, EmptyComposite or
/// a profile validation code) with location context.
inline NetworkElement parse_network(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0) + ": invalid JSON");
  }
  return detail::parse_node(doc, "");
}

inline NetworkElement load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open network file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

inline nlohmann::json to_json(const NetworkElement& element) {
  using Kind = NetworkElement::Kind;
  if (element.kind() == Kind::Tube) {
    const auto& p = element.profile();
    return {{"type", "tube"},
            {"shape", std::string(to_token(p.kind()))},
            {"rmin", p.r_min()},
            {"rmax", p.r_max()},
            {"length", p.length()}};
  }
  nlohmann::json children = nlohmann::json::array();
  for (const auto& child : element.elements()) children.push_back(to_json(child));
  return {{"type", element.kind() == Kind::Series ? "series" : "parallel"},
          {"elements", std::move(children)}};
}

}  // namespace capflow

#endif
