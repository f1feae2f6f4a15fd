#pragma once

// Young-graph isomorphism and family recognition.
//
// Two Young graphs are isomorphic when a bijection of internal nodes keeps
// edges, the start node's out-neighbourhood and both pivot classes.  The
// start node is kept in the digraph as a node with its own colour, which
// covers the out-neighbourhood condition.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "revmult/graphcore.hpp"

namespace revmult {

enum class ColorMode {
  pivots,  // start / even / odd membership
  plain,   // start only; pivots ignored
};

/// Unlabelled digraph with initial vertex colours.  Vertex 0 is the start node.
struct ColoredDigraph {
  std::size_t n = 0;
  std::vector<std::vector<std::uint8_t>> adj;  // adj[u][v] = 1 iff u -> v
  std::vector<std::uint32_t> color;
};

inline ColoredDigraph colored_digraph(const YoungGraph& young, ColorMode mode) {
  const CarryGraph& gr = young.graph;
  ColoredDigraph d;
  d.n = gr.nodes.size();
  d.adj.assign(d.n, std::vector<std::uint8_t>(d.n, 0));
  d.color.assign(d.n, 0);
  for (const Edge& e : gr.edges) d.adj[e.from][e.to] = 1;
  d.color[0] = 4;
  if (mode == ColorMode::pivots)
    for (std::size_t v = 1; v < d.n; ++v)
      d.color[v] = (young.pivots.is_even(v) ? 1u : 0u) | (young.pivots.is_odd(v) ? 2u : 0u);
  return d;
}

namespace detail {

/// Colour refinement run jointly over several graphs so that colour ids are
/// comparable between them.  New ids are ranks of sorted signatures, hence
/// invariant under relabelling.
inline std::vector<std::vector<std::uint32_t>> refine(const std::vector<const ColoredDigraph*>& gs) {
  std::vector<std::vector<std::uint32_t>> col;
  for (auto* g : gs) col.push_back(g->color);
  std::size_t classes = 0;
  for (;;) {
    using Sig = std::vector<std::uint32_t>;
    std::vector<std::vector<Sig>> sigs(gs.size());
    std::map<Sig, std::uint32_t> ids;
    for (std::size_t t = 0; t < gs.size(); ++t) {
      const ColoredDigraph& g = *gs[t];
      sigs[t].resize(g.n);
      for (std::size_t v = 0; v < g.n; ++v) {
        std::vector<std::uint32_t> out, in;
        for (std::size_t w = 0; w < g.n; ++w) {
          if (g.adj[v][w]) out.push_back(col[t][w]);
          if (g.adj[w][v]) in.push_back(col[t][w]);
        }
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        Sig s{col[t][v], g.adj[v][v], static_cast<std::uint32_t>(out.size())};
        s.insert(s.end(), out.begin(), out.end());
        s.push_back(UINT32_MAX);
        s.insert(s.end(), in.begin(), in.end());
        sigs[t][v] = std::move(s);
        ids.emplace(sigs[t][v], 0);
      }
    }
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t t = 0; t < gs.size(); ++t)
      for (std::size_t v = 0; v < gs[t]->n; ++v) col[t][v] = ids[sigs[t][v]];
    if (ids.size() == classes) return col;
    classes = ids.size();
  }
}

inline bool extend(const ColoredDigraph& a, const ColoredDigraph& b, const std::vector<std::uint32_t>& ca,
                   const std::vector<std::uint32_t>& cb, const std::vector<std::size_t>& order, std::size_t depth,
                   std::vector<std::size_t>& map, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  const std::size_t u = order[depth];
  for (std::size_t w = 0; w < b.n; ++w) {
    if (used[w] || cb[w] != ca[u]) continue;
    bool ok = a.adj[u][u] == b.adj[w][w];
    for (std::size_t i = 0; ok && i < depth; ++i) {
      const std::size_t x = order[i];
      ok = a.adj[u][x] == b.adj[w][map[x]] && a.adj[x][u] == b.adj[map[x]][w];
    }
    if (!ok) continue;
    map[u] = w;
    used[w] = true;
    if (extend(a, b, ca, cb, order, depth + 1, map, used)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace detail

enum class IsoResult { isomorphic, not_isomorphic, too_large };

inline std::string to_string(IsoResult r) {
  switch (r) {
    case IsoResult::isomorphic: return "isomorphic";
    case IsoResult::not_isomorphic: return "not isomorphic";
    case IsoResult::too_large: return "too large";
  }
  return {};
}

/// Backtracking over refined colour classes, smallest classes first.
inline IsoResult isomorphic(const ColoredDigraph& a, const ColoredDigraph& b, std::size_t node_cap = 64) {
  if (a.n > node_cap + 1 || b.n > node_cap + 1) return IsoResult::too_large;
  if (a.n != b.n) return IsoResult::not_isomorphic;
  auto col = detail::refine({&a, &b});
  std::map<std::uint32_t, std::size_t> x, y;
  for (auto c : col[0]) ++x[c];
  for (auto c : col[1]) ++y[c];
  if (x != y) return IsoResult::not_isomorphic;
  std::vector<std::size_t> order(a.n);
  for (std::size_t v = 0; v < a.n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t p, std::size_t q) { return x[col[0][p]] < x[col[0][q]]; });
  std::vector<std::size_t> map(a.n);
  std::vector<bool> used(b.n, false);
  return detail::extend(a, b, col[0], col[1], order, 0, map, used) ? IsoResult::isomorphic
                                                                   : IsoResult::not_isomorphic;
}

inline IsoResult isomorphic(const YoungGraph& a, const YoungGraph& b, std::size_t node_cap = 64,
                            ColorMode mode = ColorMode::pivots) {
  return isomorphic(colored_digraph(a, mode), colored_digraph(b, mode), node_cap);
}

/// Stable isomorphism invariant: node and edge counts plus a hash of the
/// refined colour classes and the edge counts between them.
inline std::string certificate(const YoungGraph& young, ColorMode mode = ColorMode::pivots) {
  ColoredDigraph d = colored_digraph(young, mode);
  auto col = detail::refine({&d})[0];
  std::map<std::uint32_t, std::uint64_t> sizes;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> between;
  for (std::size_t v = 0; v < d.n; ++v) {
    ++sizes[col[v]];
    for (std::size_t w = 0; w < d.n; ++w)
      if (d.adj[v][w]) ++between[{col[v], col[w]}];
  }
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (auto& [c, s] : sizes) mix(c), mix(s);
  for (auto& [p, s] : between) mix(p.first), mix(p.second), mix(s);
  std::ostringstream os;
  os << "n" << young.internal_node_count() << "e" << young.internal_edge_count() << "-" << std::hex
     << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// ---------------------------------------------------------------------------
// Reference family members.

namespace detail {

inline YoungGraph finish(CarryGraph gr) {
  std::sort(gr.edges.begin(), gr.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.label_left, a.label_right, a.to) < std::tie(b.from, b.label_left, b.label_right, b.to);
  });
  PivotSets p = find_pivots(gr);
  return YoungGraph{std::move(gr), std::move(p), 0, 0};
}

}  // namespace detail

/// The 1089 graph for (g,k) with (k+1) | g, b = g/(k+1).  Nodes [0,k-1],
/// [k-1,k-1], [k-1,0], [0,0]; edge labels (b,kb), (b-1,kb-1), (kb-1,b-1),
/// (g-1,g-1), (kb,b) and (0,0).
inline YoungGraph reference_1089(Digit g, Digit k) {
  check_parameters(g, k);
  if (g % (k + 1) != 0) throw std::invalid_argument("reference_1089: k+1 must divide g");
  const Digit b = g / (k + 1);
  CarryGraph gr{g, k, {{0, 0, true}, {0, k - 1}, {k - 1, k - 1}, {k - 1, 0}, {0, 0}}, {}};
  gr.edges = {
      {0, 1, b, k * b},          {1, 2, b - 1, k * b - 1}, {2, 2, g - 1, g - 1}, {2, 3, k * b - 1, b - 1},
      {3, 4, k * b, b},          {4, 4, 0, 0},             {4, 1, b, k * b},
  };
  return detail::finish(std::move(gr));
}

/// K_m at (g,k) = (m^2+m-1, m), r_0 = 1: nodes [i,i] for 0 <= i < m, every
/// ordered pair joined, start joined to all but [0,0].  Labels from carries.
inline YoungGraph reference_complete(unsigned m) {
  if (m < 2) throw std::invalid_argument("reference_complete: m must be at least 2");
  const Digit k = m, g = m * m + m - 1;
  CarryGraph gr{g, k, {{0, 0, true}}, {}};
  for (Digit i = 0; i < m; ++i) gr.nodes.push_back({i, i, false});
  auto add = [&](std::size_t from, std::size_t to) {
    auto lab = label_from_carries(g, k, gr.nodes[from], gr.nodes[to]);
    if (!lab) throw std::logic_error("reference_complete: no label");
    gr.edges.push_back({from, to, lab->first, lab->second});
  };
  for (std::size_t j = 2; j <= m; ++j) add(0, j);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) add(i, j);
  return detail::finish(std::move(gr));
}

/// Z_m (m >= 2): a directed cycle v_0 -> ... -> v_{m-1} -> v_0 whose closing
/// edge is paralleled by v_{m-1} -> [0,0] -> v_0, with a loop at [0,0]; the
/// start node leads to v_0.  Node labels are symbolic, v_j = [j+1, m-j], so
/// that the swap map reverses the cycle; edge labels are left at zero.
inline YoungGraph reference_cyclic(unsigned m) {
  if (m < 2) throw std::invalid_argument("reference_cyclic: m must be at least 2");
  CarryGraph gr{0, 0, {{0, 0, true}}, {}};
  for (Digit j = 0; j < m; ++j) gr.nodes.push_back({j + 1, m - j, false});
  gr.nodes.push_back({0, 0, false});
  const std::size_t zero = m + 1;
  gr.edges.push_back({0, 1, 0, 0});
  for (std::size_t j = 1; j <= m; ++j) gr.edges.push_back({j, j == m ? 1 : j + 1, 0, 0});
  gr.edges.push_back({m, zero, 0, 0});
  gr.edges.push_back({zero, zero, 0, 0});
  gr.edges.push_back({zero, 1, 0, 0});
  return detail::finish(std::move(gr));
}

struct LetterGraph {
  char letter;
  Digit g;
  Digit k;
  YoungGraph young;
};

/// The four named graphs with no family, taken from their first bases.
inline const std::vector<LetterGraph>& letter_graphs() {
  static const std::vector<LetterGraph> refs = [] {
    std::vector<LetterGraph> v;
    for (auto [c, g, k] : {std::tuple<char, Digit, Digit>{'h', 8, 5}, {'i', 11, 7}, {'j', 14, 3}, {'m', 19, 14}})
      v.push_back({c, g, k, *young_graph(g, k)});
    return v;
  }();
  return refs;
}

// ---------------------------------------------------------------------------
// Classification.

struct FamilyLabel {
  enum class Kind { graph1089, complete, cyclic, letter, other };
  Kind kind = Kind::other;
  unsigned m = 0;          // complete / cyclic
  char letter = 0;         // letter
  std::string signature;   // other

  /// "1089", "K3", "Z5", "h", or "other:<certificate>".
  std::string name() const {
    switch (kind) {
      case Kind::graph1089: return "1089";
      case Kind::complete: return "K" + std::to_string(m);
      case Kind::cyclic: return "Z" + std::to_string(m);
      case Kind::letter: return std::string(1, letter);
      case Kind::other: return "other:" + signature;
    }
    return {};
  }

  /// Letter used in the survey table: a = 1089, b/c/d = K2/K3/K4, e/f =
  /// Z3/Z5, and h, i, j, m.
  std::optional<char> table_letter() const {
    switch (kind) {
      case Kind::graph1089: return 'a';
      case Kind::complete:
        if (m >= 2 && m <= 4) return static_cast<char>('b' + (m - 2));
        return std::nullopt;
      case Kind::cyclic:
        if (m == 3) return 'e';
        if (m == 5) return 'f';
        return std::nullopt;
      case Kind::letter: return letter;
      case Kind::other: return std::nullopt;
    }
    return std::nullopt;
  }

  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
};

inline FamilyLabel classify(const YoungGraph& young, std::size_t node_cap = 64) {
  using K = FamilyLabel::Kind;
  const std::size_t n = young.internal_node_count();
  const std::size_t e = young.internal_edge_count();
  auto iso = [&](const YoungGraph& ref) {
    return ref.internal_node_count() == n && ref.internal_edge_count() == e &&
           isomorphic(young, ref, node_cap) == IsoResult::isomorphic;
  };
  if (n == 4 && e == 6) {
    static const YoungGraph ref = reference_1089(10, 4);
    if (iso(ref)) return {K::graph1089, 0, 0, {}};
  }
  if (n >= 2 && e == n * n && n <= node_cap && iso(reference_complete(static_cast<unsigned>(n))))
    return {K::complete, static_cast<unsigned>(n), 0, {}};
  if (n >= 3 && e == n + 2 && n <= node_cap && iso(reference_cyclic(static_cast<unsigned>(n - 1))))
    return {K::cyclic, static_cast<unsigned>(n - 1), 0, {}};
  for (const LetterGraph& l : letter_graphs())
    if (iso(l.young)) return {K::letter, 0, l.letter, {}};
  return {K::other, 0, 0, certificate(young)};
}

/// The r >= 1 with a = r(kg-1)/(k^2-1) < g and b = r(g-k)/(k^2-1)
/// positive integers, in increasing order.
inline std::vector<Digit> complete_graph_carries(Digit g, Digit k) {
  const std::uint64_t G = g, K = k, den = K * K - 1;
  std::vector<Digit> rs;
  for (std::uint64_t r = 1; r * (K * G - 1) < den * G; ++r) {
    const std::uint64_t na = r * (K * G - 1);
    const std::uint64_t nb = r * (G - K);
    if (na % den == 0 && nb % den == 0 && nb / den > 0) rs.push_back(static_cast<Digit>(r));
  }
  return rs;
}

}  // namespace revmult
