#ifndef HYPERALPHA_REPORT_JSON_HPP
#define HYPERALPHA_REPORT_JSON_HPP

#include <cmath>
#include <optional>

#include <json.hpp>

#include "hyperalpha/bounds.hpp"

namespace hyperalpha {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json number_or_null(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

inline Json one_based(std::span<const Vertex> vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(v + 1);
  return out;
}

}  // namespace detail

inline Json to_json(const Diameter& d) {
  if (!d) return "infinite";
  return *d;
}

inline Json to_json(const CutResult& c) {
  return Json{{"value", c.value.value()},
              {"numerator", c.value.num},
              {"denominator", c.value.den},
              {"witness", detail::one_based(c.witness_set)},
              {"boundary_size", c.boundary_size}};
}

inline Json to_json(const Check& c) {
  Json j{{"name", c.name}, {"status", std::string(to_string(c.status))}};
  if (c.status == CheckStatus::NotApplicable) {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["slack"] = nullptr;
    j["reason"] = c.reason;
  } else {
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["slack"] = c.slack;
    j["tolerance"] = c.tolerance;
  }
  return j;
}

/// Report layout (field order is fixed):
///   instance   { n, edges, m, s_min, max_degree, connected, uniform,
///                nested_edges, spanning_edge, edge_list }
///   quantities { alpha, alpha_estimate, alpha_source, oracle_alpha,
///                solver_converged, alpha_fixed_vertex, alpha_witness,
///                diameter, isoperimetric, lambda2_clique }
///   bounds     { diameter_lower, degree_upper, degree_upper_edge,
///                cheeger_lower, cheeger_upper }
///   checks     [ { name, status, lhs, rhs, slack, tolerance | reason } ]
///   notes      [ string ]
/// Vertex indices are 1-based; unavailable values are null.
inline Json to_json(const BoundsReport& r) {
  Json instance{{"n", r.instance.n},
                {"edges", r.instance.num_edges},
                {"m", r.instance.m},
                {"s_min", r.instance.s_min},
                {"max_degree", r.instance.max_degree},
                {"connected", r.instance.connected},
                {"uniform", r.instance.uniform},
                {"nested_edges", r.instance.nested_edges},
                {"spanning_edge", r.instance.spanning_edge}};
  Json edge_list = Json::array();
  for (const auto& e : r.edges) edge_list.push_back(detail::one_based(e));
  instance["edge_list"] = std::move(edge_list);

  Json quantities;
  quantities["alpha"] = detail::number_or_null(r.alpha);
  quantities["alpha_estimate"] = detail::number_or_null(r.alpha_estimate);
  quantities["alpha_source"] = !r.alpha ? "none" : r.certified ? "oracle-certified" : "solver";
  quantities["oracle_alpha"] = detail::number_or_null(r.oracle_alpha);
  quantities["solver_converged"] = r.solver_converged;
  quantities["alpha_fixed_vertex"] = r.alpha_fixed_vertex ? Json(*r.alpha_fixed_vertex + 1) : Json(nullptr);
  quantities["alpha_witness"] = r.alpha_witness ? Json(*r.alpha_witness) : Json(nullptr);
  quantities["diameter"] = to_json(r.diameter);
  quantities["isoperimetric"] = r.iso ? to_json(*r.iso) : Json(nullptr);
  quantities["lambda2_clique"] = detail::number_or_null(r.lambda2_clique);

  Json bounds{{"diameter_lower", detail::number_or_null(r.diameter_lower)},
              {"degree_upper", detail::number_or_null(r.degree_upper)},
              {"degree_upper_edge", r.degree_upper_edge ? Json(*r.degree_upper_edge + 1) : Json(nullptr)},
              {"cheeger_lower", detail::number_or_null(r.cheeger_lower)},
              {"cheeger_upper", detail::number_or_null(r.cheeger_upper)}};

  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));

  return Json{{"instance", std::move(instance)},
              {"quantities", std::move(quantities)},
              {"bounds", std::move(bounds)},
              {"checks", std::move(checks)},
              {"notes", r.notes}};
}

}  // namespace hyperalpha

#endif  // HYPERALPHA_REPORT_JSON_HPP
