#pragma once

// JSON forms of graphs, generating functions, survey cells and audits.
//
// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings.  Readers accept both.

#include <string>
#include <vector>

#include "json.hpp"
#include "revmult/audit.hpp"
#include "revmult/graphcore.hpp"
#include "revmult/polynomial.hpp"

namespace revmult {

using Json = nlohmann::ordered_json;

inline Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

inline Json poly_to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(bigint_to_json(c));
  return a;
}

inline IntPolynomial poly_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(bigint_from_json(x));
  return IntPolynomial(std::move(c));
}

/// {"numerator": [c0, c1, ...], "denominator": [...], "text": "..."}.
inline Json gf_to_json(const RationalGF& f) {
  return Json{{"numerator", poly_to_json(f.numerator())},
              {"denominator", poly_to_json(f.denominator())},
              {"text", to_string(f)}};
}

inline RationalGF gf_from_json(const Json& j) {
  return RationalGF(poly_from_json(j.at("numerator")), poly_from_json(j.at("denominator")));
}

inline Json graph_to_json(const YoungGraph& young, bool include_start) {
  const CarryGraph& gr = young.graph;
  Json nodes = Json::array(), edges = Json::array();
  for (std::size_t v = include_start ? 0 : 1; v < gr.nodes.size(); ++v) nodes.push_back(to_string(gr.nodes[v]));
  for (const Edge& e : gr.edges) {
    if (!include_start && e.from == 0) continue;
    edges.push_back({{"from", to_string(gr.nodes[e.from])},
                     {"to", to_string(gr.nodes[e.to])},
                     {"label", {e.label_left, e.label_right}}});
  }
  Json even = Json::array(), odd = Json::array();
  for (auto v : young.pivots.even) even.push_back(to_string(gr.nodes[v]));
  for (auto v : young.pivots.odd) odd.push_back(to_string(gr.nodes[v]));
  return Json{{"g", gr.g},
              {"k", gr.k},
              {"include_start", include_start},
              {"node_count", nodes.size()},
              {"edge_count", edges.size()},
              {"pruned_nodes", young.pruned_nodes},
              {"pruned_edges", young.pruned_edges},
              {"nodes", nodes},
              {"edges", edges},
              {"pivots", {{"even", even}, {"odd", odd}}}};
}

/// Per-(g,k) record {g, k, exists, nodes, edges, family, pivots, gf, gamma, flags}.
inline Json to_json(const CellRecord& c) {
  Json j{{"g", c.g}, {"k", c.k}, {"exists", c.exists}};
  if (!c.exists) {
    j["nodes"] = nullptr;
    j["edges"] = nullptr;
    j["family"] = nullptr;
    j["pivots"] = nullptr;
    j["gf"] = nullptr;
    j["gamma"] = nullptr;
    j["flags"] = Json::array();
    return j;
  }
  j["nodes"] = c.nodes;
  j["edges"] = c.edges;
  Json fam{{"name", c.family->name()}};
  if (auto l = c.family->table_letter()) fam["letter"] = std::string(1, *l);
  j["family"] = fam;
  j["pivots"] = {{"even", c.even_pivots}, {"odd", c.odd_pivots}};
  j["gf"] = c.gf ? gf_to_json(*c.gf) : Json(nullptr);
  Json gamma{{"status", c.gamma_status}};
  if (c.gamma) {
    gamma["digits"] = c.gamma->digits();
    gamma["value"] = bigint_to_json(to_bigint(*c.gamma));
    gamma["beta_rules"] = c.beta_rules;
  }
  j["gamma"] = gamma;
  j["flags"] = c.flags;
  return j;
}

inline Json to_json(const AuditReport& r) {
  Json tallies = Json::object();
  for (const auto& [tag, t] : r.tallies) tallies[tag] = {{"examined", t.examined}, {"counterexamples", t.counterexamples}};
  Json findings = Json::array();
  for (const auto& f : r.findings) findings.push_back({{"check", f.check}, {"g", f.g}, {"k", f.k}, {"detail", f.detail}});
  auto firsts = [](const std::map<unsigned, std::pair<Digit, Digit>>& m) {
    Json o = Json::object();
    for (const auto& [key, p] : m) o[std::to_string(key)] = {p.first, p.second};
    return o;
  };
  Json pairs = Json::array();
  for (const auto& [a, b] : r.plain_only_isomorphic) pairs.push_back({{a.first, a.second}, {b.first, b.second}});
  return Json{{"g_max", r.g_max},
              {"pairs", r.pairs},
              {"young_graphs", r.young_graphs},
              {"checks", tallies},
              {"first_complete", firsts(r.first_complete)},
              {"first_cyclic", firsts(r.first_cyclic)},
              {"plain_only_isomorphic", pairs},
              {"over_isomorphism_cap", r.too_large},
              {"counterexamples", findings}};
}

}  // namespace revmult
