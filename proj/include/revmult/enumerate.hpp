#pragma once

// Reverse multiples from paths in a Young graph.
//
// A path of t edges from the start node to a pivot spells a 2t-digit
// multiple (even pivot) or a (2t+1)-digit one (odd pivot, closed by a loop
// or by the edge [r',r] -> [r,r']).  Edge j carries (a_{n-1-j}, a_j).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "revmult/graphcore.hpp"
#include "revmult/numeral.hpp"

namespace revmult {

enum class Parity { even, odd_pair, odd_loop };

struct PivotPath {
  std::vector<std::size_t> edges;       // indices into YoungGraph::graph.edges
  Parity parity = Parity::even;
  std::optional<std::size_t> closing;   // loop or swap edge for odd parities
};

/// Throws std::invalid_argument naming the first defect.
inline void check_path(const YoungGraph& young, const PivotPath& path) {
  const CarryGraph& gr = young.graph;
  if (path.edges.empty()) throw std::invalid_argument("path: no edges");
  std::size_t at = 0;
  for (std::size_t e : path.edges) {
    if (e >= gr.edges.size()) throw std::invalid_argument("path: edge index out of range");
    if (gr.edges[e].from != at) throw std::invalid_argument("path: edges do not chain from the start node");
    at = gr.edges[e].to;
  }
  const NodeId& end = gr.nodes[at];
  switch (path.parity) {
    case Parity::even:
      if (!end.is_diagonal()) throw std::invalid_argument("path: even path must end at [r,r]");
      if (path.closing) throw std::invalid_argument("path: even path takes no closing edge");
      break;
    case Parity::odd_loop: {
      if (!path.closing || *path.closing >= gr.edges.size()) throw std::invalid_argument("path: missing loop edge");
      const Edge& c = gr.edges[*path.closing];
      if (!end.is_diagonal() || c.from != at || c.to != at) throw std::invalid_argument("path: closing edge is not a loop at a node [r,r]");
      break;
    }
    case Parity::odd_pair: {
      if (!path.closing || *path.closing >= gr.edges.size()) throw std::invalid_argument("path: missing closing edge");
      const Edge& c = gr.edges[*path.closing];
      if (end.is_diagonal() || c.from != at || gr.nodes[c.to] != end.swapped())
        throw std::invalid_argument("path: closing edge is not [r',r] -> [r,r']");
      break;
    }
  }
}

inline std::size_t digit_count(const PivotPath& path) {
  return 2 * path.edges.size() + (path.parity == Parity::even ? 0 : 1);
}

inline DigitVector decode(const YoungGraph& young, const PivotPath& path) {
  check_path(young, path);
  const auto& edges = young.graph.edges;
  const std::size_t t = path.edges.size();
  const std::size_t n = digit_count(path);
  std::vector<Digit> msb(n);  // msb[n-1-i] = a_i
  for (std::size_t j = 0; j < t; ++j) {
    const Edge& e = edges[path.edges[j]];
    msb[n - 1 - j] = e.label_right;  // a_j
    msb[j] = e.label_left;           // a_{n-1-j}
  }
  if (path.parity != Parity::even) msb[t] = edges[*path.closing].label_right;  // a_t, taken once
  return DigitVector(young.g(), std::move(msb));
}

/// Carries read from the node labels along the path.  Node j on the path is
/// [r_{n-1-j}, r_{j-1}]; for odd_pair the closing edge's head is not read.
inline CarrySequence carries_of(const YoungGraph& young, const PivotPath& path) {
  check_path(young, path);
  const CarryGraph& gr = young.graph;
  const std::size_t t = path.edges.size();
  const std::size_t n = digit_count(path);
  std::vector<Digit> r(n + 1, 0);  // r[i+1] = r_i
  std::size_t at = 0;
  for (std::size_t j = 0; j <= t; ++j) {
    if (j > 0) at = gr.edges[path.edges[j - 1]].to;
    const NodeId& node = gr.nodes[at];
    r[j] = node.right;          // r_{j-1}
    r[n - j] = node.left;       // r_{n-1-j}
  }
  return CarrySequence(std::move(r));
}

/// Builds a path from node labels, start first.  For odd parities the
/// closing edge is looked up from the final node.
inline PivotPath path_through(const YoungGraph& young, const std::vector<NodeId>& nodes, Parity parity) {
  const CarryGraph& gr = young.graph;
  if (nodes.size() < 2 || !nodes.front().is_start) throw std::invalid_argument("path_through: must start at [[0,0]]");
  PivotPath p;
  p.parity = parity;
  std::optional<std::size_t> prev = 0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    auto v = gr.find(nodes[i]);
    if (!v) throw std::invalid_argument("path_through: node " + to_string(nodes[i]) + " not in graph");
    auto e = gr.edge_between(*prev, *v);
    if (!e) throw std::invalid_argument("path_through: no edge into " + to_string(nodes[i]));
    p.edges.push_back(*e);
    prev = v;
  }
  if (parity == Parity::odd_loop) p.closing = gr.edge_between(*prev, *prev);
  if (parity == Parity::odd_pair) {
    if (auto w = gr.find(gr.nodes[*prev].swapped())) p.closing = gr.edge_between(*prev, *w);
  }
  check_path(young, p);
  return p;
}

struct EnumerationLimit {
  std::optional<std::size_t> count;       // first `count` multiples
  std::optional<std::size_t> max_digits;  // all multiples with at most this many digits
  std::size_t path_cap = 1'000'000;       // partial paths kept per length

  static EnumerationLimit first(std::size_t n) { return {n, std::nullopt}; }
  static EnumerationLimit up_to_digits(std::size_t d) { return {std::nullopt, d}; }
};

/// Multiples in length-major, then digit-lexicographic order.  Paths are
/// grown one edge at a time; every path of t edges is tried as an even
/// (2t digits) and an odd (2t+1 digits) candidate.  A repeated number means
/// the path correspondence is broken and raises std::logic_error.
inline std::vector<DigitVector> enumerate_multiples(const YoungGraph& young, const EnumerationLimit& limit) {
  if (limit.count && limit.max_digits) throw std::invalid_argument("enumerate: give a count or a digit bound, not both");
  if (!limit.count && !limit.max_digits) throw std::invalid_argument("enumerate: no limit given");
  std::vector<DigitVector> out;
  if ((limit.count && *limit.count == 0) || (limit.max_digits && *limit.max_digits < 2)) return out;

  const CarryGraph& gr = young.graph;
  const auto adj = gr.out_edges();
  std::vector<std::optional<std::size_t>> closing(gr.nodes.size());
  for (std::size_t e = 0; e < gr.edges.size(); ++e) {
    const Edge& ed = gr.edges[e];
    if (ed.from == 0 || !young.pivots.is_odd(ed.from)) continue;
    const NodeId& a = gr.nodes[ed.from];
    if ((ed.from == ed.to && a.is_diagonal()) || (!a.is_diagonal() && gr.nodes[ed.to] == a.swapped()))
      closing[ed.from] = e;
  }

  std::vector<std::vector<std::size_t>> frontier{{}};  // edge sequences, all from start
  auto done = [&] { return limit.count && out.size() >= *limit.count; };
  for (std::size_t t = 1; !done(); ++t) {
    if (limit.max_digits && 2 * t > *limit.max_digits) break;
    std::vector<std::vector<std::size_t>> next;
    for (const auto& seq : frontier) {
      std::size_t at = seq.empty() ? 0 : gr.edges[seq.back()].to;
      for (std::size_t e : adj[at]) {
        if (next.size() >= limit.path_cap)
          throw BudgetExceeded("enumerate: more than " + std::to_string(limit.path_cap) + " paths of length " +
                               std::to_string(t));
        next.push_back(seq);
        next.back().push_back(e);
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;

    std::vector<DigitVector> even_batch, odd_batch;
    const bool want_odd = !limit.max_digits || 2 * t + 1 <= *limit.max_digits;
    for (const auto& seq : frontier) {
      std::size_t at = gr.edges[seq.back()].to;
      if (young.pivots.is_even(at)) even_batch.push_back(decode(young, {seq, Parity::even, std::nullopt}));
      if (want_odd && closing[at]) {
        Parity p = gr.nodes[at].is_diagonal() ? Parity::odd_loop : Parity::odd_pair;
        odd_batch.push_back(decode(young, {seq, p, closing[at]}));
      }
    }
    for (auto* batch : {&even_batch, &odd_batch}) {
      std::sort(batch->begin(), batch->end());
      if (std::adjacent_find(batch->begin(), batch->end()) != batch->end())
        throw std::logic_error("enumerate: two paths decode to the same number");
      for (auto& d : *batch) {
        if (done()) break;
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

/// OEIS b-file lines "index value", 1-based, decimal values.
inline std::string to_bfile(const std::vector<DigitVector>& values, std::size_t first_index = 1) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (first_index + i) << ' ' << to_bigint(values[i]) << '\n';
  return os.str();
}

}  // namespace revmult
