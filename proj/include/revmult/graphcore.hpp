#pragma once

// Carry graphs H(g,k) and Young graphs.
//
// A node [r', r] pairs the carries r_{n-1-i} (left) and r_{i-1} (right) that
// are known before step i of the paired carry equations.  An edge labeled
// (a_{n-1-i}, a_i) leads to [r_{n-2-i}, r_i].  Node 0 of every graph is the
// start node [[0,0]].

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "revmult/numeral.hpp"

namespace revmult {

struct NodeId {
  Digit left = 0;
  Digit right = 0;
  bool is_start = false;

  bool is_diagonal() const { return left == right; }
  NodeId swapped() const { return {right, left, false}; }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

inline std::string to_string(const NodeId& n) {
  std::ostringstream os;
  if (n.is_start) os << '[';
  os << '[' << n.left << ',' << n.right << ']';
  if (n.is_start) os << ']';
  return os.str();
}

/// Edge between node indices of the owning graph.
struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  Digit label_left = 0;   // a_{n-1-i}
  Digit label_right = 0;  // a_i

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Transition {
  Digit label_left;
  Digit label_right;
  NodeId to;

  friend bool operator==(const Transition&, const Transition&) = default;
};

inline void check_parameters(Digit g, Digit k) {
  if (g < 3) throw std::invalid_argument("base g must be at least 3");
  if (k < 2 || k >= g) throw std::invalid_argument("multiplier k must satisfy 2 <= k < g");
}

/// All digit pairs leaving `node`, sorted by label.  For each a_i there is at
/// most one a_{n-1-i} satisfying the congruence, so the scan is over a_i only.
/// The successor carries are then automatically in [0,k).  At the start node
/// both digits must be nonzero, since N neither begins nor ends with 0.
inline std::vector<Transition> solve_pair(Digit g, Digit k, const NodeId& node) {
  check_parameters(g, k);
  if (node.left >= k || node.right >= k) throw std::invalid_argument("solve_pair: carry out of range");
  const std::int64_t G = g, K = k, rl = node.left, rr = node.right;
  std::vector<Transition> out;
  for (std::int64_t ai = 0; ai < G; ++ai) {
    const std::int64_t aj = (K * ai + rr) % G;  // a_{n-1-i}
    const std::int64_t lower = ai + rl * G - K * aj;
    if (lower < 0 || lower >= K) continue;
    if (node.is_start && (ai == 0 || aj == 0)) continue;
    const std::int64_t ri = (K * ai + rr - aj) / G;
    out.push_back({static_cast<Digit>(aj), static_cast<Digit>(ai),
                   NodeId{static_cast<Digit>(lower), static_cast<Digit>(ri), false}});
  }
  std::sort(out.begin(), out.end(), [](const Transition& a, const Transition& b) {
    return std::tie(a.label_left, a.label_right) < std::tie(b.label_left, b.label_right);
  });
  return out;
}

/// Directed graph on carry pairs.  nodes[0] is the start node; the rest are in
/// discovery order.  Edges are sorted by (from, label_left, label_right).
struct CarryGraph {
  Digit g = 0;
  Digit k = 0;
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;

  std::size_t internal_node_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  std::size_t start_out_degree() const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return e.from == 0; }));
  }
  std::size_t internal_edge_count() const { return edges.size() - start_out_degree(); }

  std::optional<std::size_t> find(const NodeId& id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == id) return i;
    return std::nullopt;
  }

  /// Internal node [0,0], if present.
  std::optional<std::size_t> zero_node() const { return find(NodeId{0, 0, false}); }

  std::vector<std::vector<std::size_t>> out_edges() const {
    std::vector<std::vector<std::size_t>> out(nodes.size());
    for (std::size_t e = 0; e < edges.size(); ++e) out[edges[e].from].push_back(e);
    return out;
  }

  std::optional<std::size_t> edge_between(std::size_t from, std::size_t to) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].from == from && edges[e].to == to) return e;
    return std::nullopt;
  }
};

/// Breadth-first closure of the start node under solve_pair.
inline CarryGraph build_h_graph(Digit g, Digit k) {
  check_parameters(g, k);
  CarryGraph h{g, k, {NodeId{0, 0, true}}, {}};
  std::map<NodeId, std::size_t> index{{h.nodes[0], 0}};
  for (std::size_t cur = 0; cur < h.nodes.size(); ++cur) {
    for (const Transition& t : solve_pair(g, k, h.nodes[cur])) {
      auto [it, inserted] = index.try_emplace(t.to, h.nodes.size());
      if (inserted) h.nodes.push_back(t.to);
      h.edges.push_back({cur, it->second, t.label_left, t.label_right});
    }
  }
  return h;
}

struct PivotSets {
  std::vector<std::size_t> even;  // node indices, ascending
  std::vector<std::size_t> odd;

  bool is_even(std::size_t v) const { return std::binary_search(even.begin(), even.end(), v); }
  bool is_odd(std::size_t v) const { return std::binary_search(odd.begin(), odd.end(), v); }

  friend bool operator==(const PivotSets&, const PivotSets&) = default;
};

/// Even pivots: internal [r,r].  Odd pivots: internal [r,r] with a loop, and
/// [r',r] (r' != r) with an edge to [r,r'].
inline PivotSets find_pivots(const CarryGraph& graph) {
  PivotSets p;
  std::vector<bool> odd(graph.nodes.size(), false);
  for (std::size_t v = 1; v < graph.nodes.size(); ++v)
    if (graph.nodes[v].is_diagonal()) p.even.push_back(v);
  for (const Edge& e : graph.edges) {
    if (e.from == 0) continue;
    const NodeId& a = graph.nodes[e.from];
    const NodeId& b = graph.nodes[e.to];
    if (e.from == e.to && a.is_diagonal()) odd[e.from] = true;
    if (!a.is_diagonal() && b == a.swapped()) odd[e.from] = true;
  }
  for (std::size_t v = 1; v < odd.size(); ++v)
    if (odd[v]) p.odd.push_back(v);
  return p;
}

/// Existence test on H(g,k): a node [r,r] with r != 0, or an edge
/// [r',r] -> [r,r'] with r' != r.
inline bool exists(const CarryGraph& graph) {
  for (std::size_t v = 1; v < graph.nodes.size(); ++v)
    if (graph.nodes[v].is_diagonal() && graph.nodes[v].left != 0) return true;
  for (const Edge& e : graph.edges) {
    if (e.from == 0) continue;
    const NodeId& a = graph.nodes[e.from];
    if (!a.is_diagonal() && graph.nodes[e.to] == a.swapped()) return true;
  }
  return false;
}

struct YoungGraph {
  CarryGraph graph;
  PivotSets pivots;
  std::size_t pruned_nodes = 0;  // internal nodes removed from H(g,k)
  std::size_t pruned_edges = 0;  // edges removed from H(g,k), start edges included

  Digit g() const { return graph.g; }
  Digit k() const { return graph.k; }
  std::size_t internal_node_count() const { return graph.internal_node_count(); }
  std::size_t internal_edge_count() const { return graph.internal_edge_count(); }
};

namespace detail {

/// Nodes from which some node in `targets` is reachable (targets included).
inline std::vector<bool> reaches(const CarryGraph& graph, const std::vector<std::size_t>& targets) {
  std::vector<std::vector<std::size_t>> in(graph.nodes.size());
  for (const Edge& e : graph.edges) in[e.to].push_back(e.from);
  std::vector<bool> seen(graph.nodes.size(), false);
  std::vector<std::size_t> stack(targets.begin(), targets.end());
  for (std::size_t t : targets) seen[t] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : in[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  return seen;
}

inline std::vector<bool> reachable_from_start(const CarryGraph& graph) {
  auto out = graph.out_edges();
  std::vector<bool> seen(graph.nodes.size(), false);
  if (graph.nodes.empty()) return seen;
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : out[v]) {
      std::size_t w = graph.edges[e].to;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

inline std::vector<std::size_t> all_pivots(const PivotSets& p) {
  std::vector<std::size_t> v;
  std::set_union(p.even.begin(), p.even.end(), p.odd.begin(), p.odd.end(), std::back_inserter(v));
  return v;
}

/// Keeps nodes with keep[v] (start is always kept) and the edges among them.
inline CarryGraph restrict_to(const CarryGraph& graph, const std::vector<bool>& keep) {
  CarryGraph out{graph.g, graph.k, {}, {}};
  std::vector<std::size_t> remap(graph.nodes.size(), SIZE_MAX);
  for (std::size_t v = 0; v < graph.nodes.size(); ++v)
    if (v == 0 || keep[v]) {
      remap[v] = out.nodes.size();
      out.nodes.push_back(graph.nodes[v]);
    }
  for (const Edge& e : graph.edges)
    if (remap[e.from] != SIZE_MAX && remap[e.to] != SIZE_MAX)
      out.edges.push_back({remap[e.from], remap[e.to], e.label_left, e.label_right});
  return out;
}

}  // namespace detail

/// Removes dead ends until a fixed point.  Pivot sets are recomputed after
/// every round because losing an edge can demote a pair-form odd pivot.
inline std::optional<YoungGraph> prune(const CarryGraph& h) {
  if (!exists(h)) return std::nullopt;
  CarryGraph cur = h;
  for (std::size_t round = 0; round <= h.nodes.size(); ++round) {
    PivotSets p = find_pivots(cur);
    std::vector<bool> alive = detail::reaches(cur, detail::all_pivots(p));
    if (!alive[0]) return std::nullopt;
    if (std::all_of(alive.begin(), alive.end(), [](bool b) { return b; })) {
      YoungGraph y{cur, p, h.nodes.size() - cur.nodes.size(), h.edges.size() - cur.edges.size()};
      return y;
    }
    cur = detail::restrict_to(cur, alive);
  }
  throw std::logic_error("prune: no fixed point");
}

inline std::optional<YoungGraph> young_graph(Digit g, Digit k) { return prune(build_h_graph(g, k)); }

// ---------------------------------------------------------------------------
// Structural validation.

/// a_i and a_{n-1-i} recomputed from the four endpoint carries, or nullopt
/// when the division by k^2-1 is inexact or the digit is out of range.
inline std::optional<std::pair<Digit, Digit>> label_from_carries(Digit g, Digit k, const NodeId& from,
                                                                 const NodeId& to) {
  const std::int64_t G = g, K = k;
  const std::int64_t r_hi = from.left;  // r_{n-1-i}
  const std::int64_t r_lo = from.right; // r_{i-1}
  const std::int64_t s_hi = to.left;    // r_{n-2-i}
  const std::int64_t s_lo = to.right;   // r_i
  const std::int64_t den = K * K - 1;
  const std::int64_t num_lo = K * s_lo * G - K * r_lo + r_hi * G - s_hi;
  const std::int64_t num_hi = K * r_hi * G - K * s_hi + s_lo * G - r_lo;
  if (num_lo % den != 0 || num_hi % den != 0) return std::nullopt;
  const std::int64_t a_lo = num_lo / den, a_hi = num_hi / den;
  if (a_lo < 0 || a_lo >= G || a_hi < 0 || a_hi >= G) return std::nullopt;
  return std::pair<Digit, Digit>{static_cast<Digit>(a_hi), static_cast<Digit>(a_lo)};
}

struct ValidationReport {
  std::vector<std::string> violations;  // "P<n>: detail" or "<tag>: detail"

  bool ok() const { return violations.empty(); }
  /// Tag of the first violation ("P1", "P3", "reach", ...), empty when ok.
  std::string first_property() const {
    if (violations.empty()) return {};
    return violations.front().substr(0, violations.front().find(':'));
  }
};

inline ValidationReport validate(const YoungGraph& young) {
  ValidationReport rep;
  const CarryGraph& gr = young.graph;
  auto fail = [&](const std::string& tag, const std::string& msg) { rep.violations.push_back(tag + ": " + msg); };
  auto edge_str = [&](const Edge& e) {
    return to_string(gr.nodes[e.from]) + "->" + to_string(gr.nodes[e.to]) + " (" +
           std::to_string(e.label_left) + "," + std::to_string(e.label_right) + ")";
  };

  if (gr.nodes.empty() || !gr.nodes[0].is_start || gr.nodes[0].left != 0 || gr.nodes[0].right != 0) {
    fail("start", "node 0 is not [[0,0]]");
    return rep;
  }

  // P1: labels follow from the end-node carries.
  for (const Edge& e : gr.edges) {
    auto lab = label_from_carries(gr.g, gr.k, gr.nodes[e.from], gr.nodes[e.to]);
    if (!lab || lab->first != e.label_left || lab->second != e.label_right)
      fail("P1", "label does not match carries on " + edge_str(e));
  }

  // P2: at most one edge per ordered pair.
  {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Edge& e : gr.edges)
      if (!seen.insert({e.from, e.to}).second) fail("P2", "parallel edge " + edge_str(e));
  }

  // P3: mirror closure.  The start node mirrors onto internal [0,0].
  auto zero = gr.zero_node();
  {
    std::set<std::tuple<NodeId, NodeId, Digit, Digit>> present;
    auto as_internal = [](NodeId n) { return NodeId{n.left, n.right, false}; };
    for (const Edge& e : gr.edges)
      present.insert({as_internal(gr.nodes[e.from]), gr.nodes[e.to], e.label_left, e.label_right});
    for (const Edge& e : gr.edges) {
      NodeId from = as_internal(gr.nodes[e.from]);
      NodeId to = gr.nodes[e.to];
      if (!present.count({to.swapped(), from.swapped(), e.label_right, e.label_left}))
        fail("P3", "no mirror of " + edge_str(e));
    }
  }

  // P4.
  if (!zero) fail("P4", "no internal node [0,0]");

  // P5: loops and swap pairs carry equal label components.
  for (const Edge& e : gr.edges) {
    if (e.from == 0) continue;
    const NodeId& a = gr.nodes[e.from];
    const NodeId& b = gr.nodes[e.to];
    bool loop = e.from == e.to;
    bool swap = !a.is_diagonal() && b == a.swapped();
    if ((loop || swap) && e.label_left != e.label_right) fail("P5", "unequal label on " + edge_str(e));
  }

  // P6: distinct node labels, distinct internal edge labels.
  {
    std::set<NodeId> ids(gr.nodes.begin(), gr.nodes.end());
    if (ids.size() != gr.nodes.size()) fail("P6", "duplicate node label");
    std::set<std::pair<Digit, Digit>> labels;
    for (const Edge& e : gr.edges)
      if (e.from != 0 && !labels.insert({e.label_left, e.label_right}).second)
        fail("P6", "duplicate edge label on " + edge_str(e));
  }

  // Start node: no incoming edges, out-labels free of zeros.
  for (const Edge& e : gr.edges) {
    if (e.to == 0) fail("start", "edge into start node " + edge_str(e));
    if (e.from == 0 && (e.label_left == 0 || e.label_right == 0))
      fail("start", "zero digit on start edge " + edge_str(e));
  }

  // Reachability both ways.
  auto from_start = detail::reachable_from_start(gr);
  for (std::size_t v = 0; v < gr.nodes.size(); ++v)
    if (!from_start[v]) fail("reach", "unreachable node " + to_string(gr.nodes[v]));
  PivotSets recomputed = find_pivots(gr);
  if (!(recomputed == young.pivots)) fail("pivots", "stored pivot sets differ from recomputed ones");
  auto to_pivot = detail::reaches(gr, detail::all_pivots(recomputed));
  for (std::size_t v = 0; v < gr.nodes.size(); ++v)
    if (!to_pivot[v]) fail("reach", "dead end " + to_string(gr.nodes[v]));
  return rep;
}

// ---------------------------------------------------------------------------
// The involution [r,s] -> [s,r] with edge reversal and label swap.

/// Internal edges as (from, to, label) triples over node labels.
using LabeledEdgeSet = std::set<std::tuple<NodeId, NodeId, Digit, Digit>>;

inline LabeledEdgeSet internal_edge_set(const CarryGraph& gr) {
  LabeledEdgeSet s;
  for (const Edge& e : gr.edges)
    if (e.from != 0) s.insert({gr.nodes[e.from], gr.nodes[e.to], e.label_left, e.label_right});
  return s;
}

inline LabeledEdgeSet phi_image(const LabeledEdgeSet& edges) {
  LabeledEdgeSet s;
  for (const auto& [from, to, a, b] : edges) s.insert({to.swapped(), from.swapped(), b, a});
  return s;
}

/// The involution maps the internal graph onto itself.
inline bool phi_is_automorphism(const YoungGraph& young) {
  auto edges = internal_edge_set(young.graph);
  return phi_image(edges) == edges && phi_image(phi_image(edges)) == edges;
}

/// Every node is fixed, i.e. every internal label has the form [r,r].
inline bool phi_fixes_nodes(const YoungGraph& young) {
  for (std::size_t v = 1; v < young.graph.nodes.size(); ++v)
    if (!young.graph.nodes[v].is_diagonal()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// DOT export.

inline std::string to_dot(const CarryGraph& gr, const PivotSets& pivots) {
  std::ostringstream os;
  os << "digraph young_" << gr.g << "_" << gr.k << " {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < gr.nodes.size(); ++v) {
    os << "  n" << v << " [label=\"" << to_string(gr.nodes[v]) << "\"";
    if (v == 0) {
      os << ", shape=circle, style=\"filled,bold\", fillcolor=black, fontcolor=white";
    } else {
      if (pivots.is_even(v)) os << ", shape=doublecircle";
      if (pivots.is_odd(v)) os << ", style=filled, fillcolor=lightgray";
    }
    os << "];\n";
  }
  for (const Edge& e : gr.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"(" << e.label_left << "," << e.label_right << ")\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace revmult
