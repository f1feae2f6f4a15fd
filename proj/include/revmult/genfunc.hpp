#pragma once

// Generating functions for the number of reverse multiples by digit length,
// by the transfer-matrix method.
//
// With A the adjacency matrix over x^2 (start node first), row 0 of
// B = A + A^2 + ... = A(I - A)^{-1} counts paths from the start node by
// length.  Summing row 0 over even pivots gives P(x); x times the sum over odd
// pivots gives Q(x); C = P + Q.
//
// All entries of A are 0 or x^2, so the solve runs over y = x^2 and the
// result is spread back to x at the end.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "revmult/graphcore.hpp"
#include "revmult/polynomial.hpp"

namespace revmult {

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

struct Adjacency {
  std::vector<std::size_t> order;  // graph node index of V_0, V_1, ...
  PolyMatrix matrix;               // matrix[i][j] = x^2 iff V_i -> V_j
};

/// V_0 is the start node, V_1 the internal [0,0], then discovery order.
inline std::vector<std::size_t> transfer_order(const CarryGraph& gr) {
  std::vector<std::size_t> order{0};
  auto zero = gr.zero_node();
  if (zero) order.push_back(*zero);
  for (std::size_t v = 1; v < gr.nodes.size(); ++v)
    if (!zero || v != *zero) order.push_back(v);
  return order;
}

inline Adjacency adjacency(const YoungGraph& young) {
  const CarryGraph& gr = young.graph;
  Adjacency a{transfer_order(gr), {}};
  std::vector<std::size_t> pos(gr.nodes.size());
  for (std::size_t i = 0; i < a.order.size(); ++i) pos[a.order[i]] = i;
  a.matrix.assign(a.order.size(), std::vector<IntPolynomial>(a.order.size()));
  for (const Edge& e : gr.edges) a.matrix[pos[e.from]][pos[e.to]] = IntPolynomial{0, 0, 1};
  return a;
}

struct SolveBudget {
  std::size_t max_nodes = 2000;
  std::chrono::milliseconds time_limit{120'000};
};

namespace detail {

/// Cramer numerators over a common denominator: z_j = numerators[j] / det.
struct ScaledSolution {
  std::vector<IntPolynomial> numerators;
  IntPolynomial det;
};

/// Solves X z = b exactly with fraction-free (Bareiss) elimination, where X
/// is square with every leading principal minor nonzero under any symmetric
/// permutation (true for I - yM: each such minor has constant term 1).  The
/// pivot at each step is the remaining diagonal entry with the smallest
/// Markowitz count, which keeps fill-in down on sparse graphs.
inline ScaledSolution bareiss_solve(PolyMatrix x, std::vector<IntPolynomial> b, const SolveBudget& budget) {
  const std::size_t m = x.size();
  const auto t0 = std::chrono::steady_clock::now();
  auto check_time = [&] {
    if (std::chrono::steady_clock::now() - t0 > budget.time_limit)
      throw BudgetExceeded("genfunc: elimination exceeded time budget");
  };
  if (m == 0) return {{}, IntPolynomial{1}};

  std::vector<std::size_t> var(m);  // column k holds unknown var[k]
  for (std::size_t i = 0; i < m; ++i) var[i] = i;

  IntPolynomial prev{1};
  for (std::size_t k = 0; k < m; ++k) {
    check_time();
    // Markowitz choice among remaining diagonal positions.
    std::size_t best = k;
    std::size_t best_cost = SIZE_MAX;
    for (std::size_t p = k; p < m; ++p) {
      if (x[p][p].is_zero()) continue;
      std::size_t r = 0, c = 0;
      for (std::size_t j = k; j < m; ++j) r += !x[p][j].is_zero();
      for (std::size_t i = k; i < m; ++i) c += !x[i][p].is_zero();
      std::size_t cost = (r - 1) * (c - 1);
      if (cost < best_cost) {
        best_cost = cost;
        best = p;
        if (cost == 0) break;
      }
    }
    if (x[best][best].is_zero()) throw std::logic_error("genfunc: singular leading minor (construction bug)");
    if (best != k) {
      std::swap(x[k], x[best]);
      std::swap(b[k], b[best]);
      for (auto& row : x) std::swap(row[k], row[best]);
      std::swap(var[k], var[best]);
    }

    const IntPolynomial& piv = x[k][k];
    for (std::size_t i = k + 1; i < m; ++i) {
      const IntPolynomial lead = x[i][k];
      for (std::size_t j = k + 1; j < m; ++j) {
        if (lead.is_zero() && x[i][j].is_zero()) continue;
        IntPolynomial v = piv * x[i][j];
        if (!lead.is_zero() && !x[k][j].is_zero()) v -= lead * x[k][j];
        x[i][j] = exact_divide(v, prev);
      }
      if (!lead.is_zero() || !b[i].is_zero()) {
        IntPolynomial v = piv * b[i];
        if (!lead.is_zero() && !b[k].is_zero()) v -= lead * b[k];
        b[i] = exact_divide(v, prev);
      }
      x[i][k] = IntPolynomial{};
    }
    prev = piv;
  }

  // x is upper triangular with x[m-1][m-1] = det.  Back substitution keeps
  // every value as det * z_i, which is a polynomial by Cramer's rule.
  const IntPolynomial det = x[m - 1][m - 1];
  std::vector<IntPolynomial> scaled(m);
  for (std::size_t i = m; i-- > 0;) {
    check_time();
    IntPolynomial v = det * b[i];
    for (std::size_t j = i + 1; j < m; ++j)
      if (!x[i][j].is_zero() && !scaled[j].is_zero()) v -= x[i][j] * scaled[j];
    scaled[i] = exact_divide(v, x[i][i]);
  }
  ScaledSolution out{std::vector<IntPolynomial>(m), det};
  for (std::size_t k = 0; k < m; ++k) out.numerators[var[k]] = std::move(scaled[k]);
  return out;
}

/// Row 0 of B in the variable y = x^2, as numerators over a shared
/// denominator, indexed like Adjacency::order.  Entry 0 (the start node) is
/// zero since no edge enters the start node.
inline ScaledSolution start_row_scaled(const YoungGraph& young, const SolveBudget& budget) {
  const CarryGraph& gr = young.graph;
  if (gr.nodes.size() > budget.max_nodes + 1)
    throw BudgetExceeded("genfunc: " + std::to_string(gr.nodes.size() - 1) + " nodes exceed solve budget");
  const auto order = transfer_order(gr);
  const std::size_t v = order.size();
  std::vector<std::size_t> pos(gr.nodes.size());
  for (std::size_t i = 0; i < v; ++i) pos[order[i]] = i;

  // Internal nodes V_1..V_{v-1} become unknowns 0..v-2.  With M the internal
  // 0/1 adjacency and m0 the start row, z^T (I - yM) = y m0^T; solve the
  // transpose (I - yM^T) z = y m0.
  const std::size_t m = v - 1;
  PolyMatrix x(m, std::vector<IntPolynomial>(m));
  std::vector<IntPolynomial> rhs(m);
  for (std::size_t i = 0; i < m; ++i) x[i][i] = IntPolynomial{1};
  const IntPolynomial y{0, 1};
  for (const Edge& e : gr.edges) {
    const std::size_t to = pos[e.to] - 1;
    if (e.from == 0) {
      rhs[to] = y;
    } else {
      const std::size_t from = pos[e.from] - 1;
      x[to][from] -= y;
    }
  }
  ScaledSolution inner = bareiss_solve(std::move(x), std::move(rhs), budget);
  ScaledSolution out{{IntPolynomial{}}, inner.det};
  for (auto& p : inner.numerators) out.numerators.push_back(std::move(p));
  return out;
}

}  // namespace detail

/// Row 0 of A(I-A)^{-1}, each entry reduced, in Adjacency::order.
inline std::vector<RationalGF> start_row_of_B(const YoungGraph& young, const SolveBudget& budget = {}) {
  auto s = detail::start_row_scaled(young, budget);
  const IntPolynomial den = s.det.spread(2);
  std::vector<RationalGF> row;
  row.reserve(s.numerators.size());
  for (const auto& n : s.numerators) row.emplace_back(n.spread(2), den);
  return row;
}

struct GeneratingFunctions {
  RationalGF even;   // P(x)
  RationalGF odd;    // Q(x)
  RationalGF total;  // C(x)
};

/// Throws BudgetExceeded when the solve would exceed `budget`.
inline GeneratingFunctions generating_functions(const YoungGraph& young, const SolveBudget& budget = {}) {
  auto s = detail::start_row_scaled(young, budget);
  const auto order = transfer_order(young.graph);
  IntPolynomial even_num, odd_num;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (young.pivots.is_even(order[i])) even_num += s.numerators[i];
    if (young.pivots.is_odd(order[i])) odd_num += s.numerators[i];
  }
  const IntPolynomial den = s.det.spread(2);
  GeneratingFunctions f{RationalGF(even_num.spread(2), den), RationalGF(odd_num.spread(2).shifted(1), den), {}};
  f.total = RationalGF(even_num.spread(2) + odd_num.spread(2).shifted(1), den);
  return f;
}

/// c_0..c_{t_max}: the number of t-digit multiples, by walking the 0/1
/// adjacency matrix one step at a time.  Paths of s edges count toward
/// c_{2s} at even pivots and c_{2s+1} at odd pivots.
inline std::vector<BigInt> path_counts(const YoungGraph& young, std::size_t t_max) {
  const CarryGraph& gr = young.graph;
  std::vector<BigInt> c(t_max + 1);
  std::vector<BigInt> w(gr.nodes.size());
  w[0] = 1;
  for (std::size_t s = 1; 2 * s <= t_max; ++s) {
    std::vector<BigInt> next(gr.nodes.size());
    for (const Edge& e : gr.edges)
      if (w[e.from] != 0) next[e.to] += w[e.from];
    w = std::move(next);
    for (std::size_t v = 1; v < w.size(); ++v) {
      if (young.pivots.is_even(v)) c[2 * s] += w[v];
      if (2 * s + 1 <= t_max && young.pivots.is_odd(v)) c[2 * s + 1] += w[v];
    }
  }
  return c;
}

struct PathCountCheck {
  bool match = false;
  std::vector<BigInt> from_paths;
  std::vector<BigInt> from_series;
};

inline PathCountCheck path_count_check(const YoungGraph& young, const RationalGF& total, std::size_t t_max) {
  PathCountCheck r{false, path_counts(young, t_max), series(total, t_max + 1)};
  r.match = r.from_paths == r.from_series;
  return r;
}

inline PathCountCheck path_count_check(const YoungGraph& young, std::size_t t_max) {
  return path_count_check(young, generating_functions(young).total, t_max);
}

/// Closed form when the solve fits the budget, else series coefficients only.
struct GfOutcome {
  std::optional<GeneratingFunctions> closed;
  std::vector<BigInt> coefficients;  // c_0..c_{terms-1}
  bool series_only() const { return !closed.has_value(); }
};

inline GfOutcome generating_functions_or_series(const YoungGraph& young, std::size_t terms,
                                                const SolveBudget& budget = {}) {
  GfOutcome out;
  try {
    out.closed = generating_functions(young, budget);
    out.coefficients = series(out.closed->total, terms);
  } catch (const BudgetExceeded&) {
    out.closed.reset();
    out.coefficients = path_counts(young, terms == 0 ? 0 : terms - 1);
    out.coefficients.resize(terms);
  }
  return out;
}

}  // namespace revmult
