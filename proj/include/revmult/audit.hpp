#pragma once

// Per-(g,k) analysis, the Table-style survey, and the conjecture audit.
//
// Cells are independent; they are computed on worker threads and reduced in
// (g,k) order, so the result does not depend on scheduling.

#include <atomic>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "revmult/classify.hpp"
#include "revmult/enumerate.hpp"
#include "revmult/factorization.hpp"
#include "revmult/genfunc.hpp"
#include "revmult/graphcore.hpp"

namespace revmult {

/// results[i] = f(i) for i < n, on up to `jobs` threads.
template <class F>
auto parallel_map(std::size_t n, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> results(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = f(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        results[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

inline std::vector<std::pair<Digit, Digit>> parameter_pairs(Digit g_min, Digit g_max) {
  std::vector<std::pair<Digit, Digit>> v;
  for (Digit g = std::max<Digit>(g_min, 3); g <= g_max; ++g)
    for (Digit k = 2; k < g; ++k) v.push_back({g, k});
  return v;
}

// ---------------------------------------------------------------------------
// One (g,k) cell.

struct CellOptions {
  bool gf = true;
  bool factor = true;
  SolveBudget budget{};
};

struct CellRecord {
  Digit g = 0;
  Digit k = 0;
  bool exists = false;
  std::size_t h_nodes = 0, h_edges = 0;  // internal, before pruning
  std::size_t nodes = 0, edges = 0;      // internal, Young graph
  std::size_t start_edges = 0;
  std::optional<FamilyLabel> family;
  std::vector<std::string> even_pivots, odd_pivots;
  std::optional<RationalGF> gf;
  std::optional<DigitVector> gamma;
  std::string gamma_status = "skipped";  // found | none | divisor-overflow | skipped
  std::string beta_rules;
  std::vector<std::string> flags;
};

inline CellRecord analyze_cell(Digit g, Digit k, const CellOptions& opt = {}) {
  CellRecord r;
  r.g = g;
  r.k = k;
  const CarryGraph h = build_h_graph(g, k);
  r.h_nodes = h.internal_node_count();
  r.h_edges = h.internal_edge_count();
  auto young = prune(h);
  if (!young) return r;
  r.exists = true;
  r.nodes = young->internal_node_count();
  r.edges = young->internal_edge_count();
  r.start_edges = young->graph.start_out_degree();
  r.family = classify(*young);
  for (auto v : young->pivots.even) r.even_pivots.push_back(to_string(young->graph.nodes[v]));
  for (auto v : young->pivots.odd) r.odd_pivots.push_back(to_string(young->graph.nodes[v]));
  if (young->pruned_nodes) r.flags.push_back("pruned");
  if (phi_fixes_nodes(*young)) r.flags.push_back("phi-fixed");
  if (opt.gf) {
    try {
      r.gf = generating_functions(*young, opt.budget).total;
    } catch (const BudgetExceeded&) {
      r.flags.push_back("gf-budget-exceeded");
    }
  }
  if (opt.factor) {
    try {
      auto s = palindromic_factorization(*young);
      switch (s.status) {
        case FactorizationSearch::Status::found:
          r.gamma = s.factorization->gamma;
          r.gamma_status = "found";
          r.beta_rules = s.factorization->rules.describe();
          r.flags.push_back(s.factorization->regenerated ? "palindromic" : "palindromic-unverified");
          break;
        case FactorizationSearch::Status::none: r.gamma_status = "none"; break;
        case FactorizationSearch::Status::divisor_overflow: r.gamma_status = "divisor-overflow"; break;
      }
    } catch (const BudgetExceeded&) {
      r.gamma_status = "skipped";
      r.flags.push_back("factor-budget-exceeded");
    }
  }
  return r;
}

inline std::vector<CellRecord> survey(Digit max_g, unsigned jobs = 1, const CellOptions& opt = {}) {
  auto pairs = parameter_pairs(3, max_g);
  return parallel_map(pairs.size(), jobs, [&](std::size_t i) { return analyze_cell(pairs[i].first, pairs[i].second, opt); });
}

/// Survey superscript: the table letter, else the family name.
inline std::string survey_tag(const FamilyLabel& f) {
  if (auto c = f.table_letter()) return std::string(1, *c);
  if (f.kind == FamilyLabel::Kind::other) return "?";
  return f.name();
}

/// One line per base with at least one multiplier: "17: 2^b, 4^i, ...".
inline std::string survey_table(const std::vector<CellRecord>& cells) {
  std::map<Digit, std::vector<std::string>> rows;
  for (const auto& c : cells) {
    rows[c.g];
    if (c.exists) rows[c.g].push_back(std::to_string(c.k) + "^" + survey_tag(*c.family));
  }
  std::ostringstream os;
  for (const auto& [g, ks] : rows) {
    os << g << ":";
    for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? ", " : " ") << ks[i];
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Conjecture audit.

/// Z_m: x^{m+1}(1+x)(1-x+x^m) / (1-x^2-x^{2m}).
inline RationalGF cyclic_family_gf(unsigned m) {
  IntPolynomial num = (IntPolynomial{1, 1} * (IntPolynomial{1, -1} + IntPolynomial::monomial(1, m))).shifted(m + 1);
  IntPolynomial den = IntPolynomial{1, 0, -1} - IntPolynomial::monomial(1, 2 * m);
  return RationalGF(num, den);
}

/// (m-1) x^2 (1+x) / (1 - m x^2).
inline RationalGF complete_family_gf(unsigned m) {
  IntPolynomial num = BigInt(m - 1) * IntPolynomial{0, 0, 1, 1};
  IntPolynomial den{1, 0, -static_cast<long long>(m)};
  return RationalGF(num, den);
}

/// x^4 (1+x) / (1 - x^2 - x^4).
inline RationalGF graph1089_gf() { return RationalGF(IntPolynomial{0, 0, 0, 0, 1, 1}, IntPolynomial{1, 0, -1, 0, -1}); }

/// Some k in [2, g-1] has a two-digit (g,k)-reverse multiple; direct search.
inline bool two_digit_multiple_exists(Digit g) {
  for (std::uint64_t a1 = 1; a1 < g; ++a1)
    for (std::uint64_t a0 = 0; a0 < g; ++a0) {
      const std::uint64_t n = a1 * g + a0, rev = a0 * g + a1;
      if (rev % n == 0 && rev / n >= 2 && rev / n < g) return true;
    }
  return false;
}

inline bool is_composite(std::uint64_t n) {
  if (n < 4) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return true;
  return false;
}

struct Finding {
  std::string check;
  Digit g = 0;
  Digit k = 0;
  std::string detail;
};

struct CheckTally {
  std::size_t examined = 0;
  std::size_t counterexamples = 0;
};

struct AuditOptions {
  Digit g_max = 40;
  unsigned jobs = 1;
  std::size_t enumerate_count = 50;  // multiples per cell for the digit checks
  std::size_t node_cap = 64;
  SolveBudget budget{};
};

/// Checks, by tag:
///   C1  1089 graph iff (k+1) | g
///   C2  K_m iff exactly m-1 admissible r, labels [i r0, i r0]
///   C3  some [r,r] with r != 0 implies complete
///   C3S some [r,r] (r != 0) joined to the start node implies complete
///   C4  Z_m has the cyclic-family generating function
///   GF-1089, GF-K  family generating functions
///   E1  m >= 3 nodes implies >= m+2 edges
///   P7  two-digit multiple for some k iff g+1 composite (g >= 4)
///   T4  a_0 + a_{n-1} <= g, with equality only if (k+1) | g
///   PHI every node label [r,r] iff complete
struct AuditReport {
  Digit g_max = 0;
  std::size_t pairs = 0;
  std::size_t young_graphs = 0;
  std::map<std::string, CheckTally> tallies;
  std::vector<Finding> findings;
  std::map<unsigned, std::pair<Digit, Digit>> first_complete;
  std::map<unsigned, std::pair<Digit, Digit>> first_cyclic;
  std::vector<std::pair<std::pair<Digit, Digit>, std::pair<Digit, Digit>>> plain_only_isomorphic;
  std::size_t too_large = 0;  // graphs left out of the pairwise comparison

  /// No counterexample to `check` among bases g <= g_limit.
  bool holds(const std::string& check, Digit g_limit) const {
    for (const auto& f : findings)
      if (f.check == check && f.g <= g_limit) return false;
    return true;
  }
};

namespace detail {

struct AuditCell {
  Digit g = 0, k = 0;
  bool exists = false;
  std::optional<YoungGraph> young;
  std::optional<FamilyLabel> family;
  std::string plain_cert;
  std::vector<Finding> findings;
  std::vector<std::string> examined;
};

inline AuditCell audit_cell(Digit g, Digit k, const AuditOptions& opt) {
  AuditCell c;
  c.g = g;
  c.k = k;
  auto fail = [&](const std::string& tag, const std::string& msg) { c.findings.push_back({tag, g, k, msg}); };
  auto young = young_graph(g, k);
  const bool divides = g % (k + 1) == 0;
  const auto rs = complete_graph_carries(g, k);
  c.examined.push_back("C1");
  if (!young) {
    if (divides) fail("C1", "k+1 divides g but there is no Young graph");
    c.examined.push_back("C2");
    if (!rs.empty()) fail("C2", std::to_string(rs.size()) + " admissible r but no Young graph");
    return c;
  }
  c.exists = true;
  const YoungGraph& y = *young;
  const CarryGraph& gr = y.graph;
  const std::size_t n = y.internal_node_count(), e = y.internal_edge_count();
  c.family = classify(y, opt.node_cap);
  const auto kind = c.family->kind;
  if (n <= opt.node_cap) c.plain_cert = certificate(y, ColorMode::plain);

  if ((kind == FamilyLabel::Kind::graph1089) != divides)
    fail("C1", divides ? "k+1 divides g but the graph is " + c.family->name() : "1089 graph but k+1 does not divide g");

  c.examined.push_back("C2");
  if (kind == FamilyLabel::Kind::complete) {
    const unsigned m = c.family->m;
    if (rs.size() != m - 1) {
      fail("C2", "K" + std::to_string(m) + " with " + std::to_string(rs.size()) + " admissible r");
    } else {
      std::set<NodeId> want, have;
      for (Digit i = 0; i < m; ++i) want.insert({i * rs[0], i * rs[0], false});
      for (std::size_t v = 1; v < gr.nodes.size(); ++v) have.insert(gr.nodes[v]);
      if (want != have) fail("C2", "node labels are not [i*r0, i*r0]");
    }
  } else if (!rs.empty()) {
    fail("C2", std::to_string(rs.size()) + " admissible r but the graph is " + c.family->name());
  }

  c.examined.push_back("C3");
  bool nonzero_diag = false;
  for (std::size_t v = 1; v < gr.nodes.size(); ++v)
    nonzero_diag |= gr.nodes[v].is_diagonal() && gr.nodes[v].left != 0;
  if (nonzero_diag && kind != FamilyLabel::Kind::complete)
    fail("C3", "node [r,r] with r != 0 in a " + c.family->name() + " graph");
  c.examined.push_back("C3S");
  bool start_diag = false;
  for (const Edge& ed : gr.edges)
    start_diag |= ed.from == 0 && gr.nodes[ed.to].is_diagonal();
  if (start_diag && kind != FamilyLabel::Kind::complete)
    fail("C3S", "start node leads to a node [r,r] in a " + c.family->name() + " graph");

  c.examined.push_back("PHI");
  if (phi_fixes_nodes(y) != (kind == FamilyLabel::Kind::complete))
    fail("PHI", phi_fixes_nodes(y) ? "all labels [r,r] but not complete" : "complete but some label [r',r]");

  auto gf_check = [&](const std::string& tag, const RationalGF& want) {
    c.examined.push_back(tag);
    try {
      RationalGF got = generating_functions(y, opt.budget).total;
      if (!(got == want)) fail(tag, "C(x) = " + to_string(got) + ", expected " + to_string(want));
    } catch (const BudgetExceeded&) {
      fail(tag, "generating function over budget");
    }
  };
  if (kind == FamilyLabel::Kind::cyclic) gf_check("C4", cyclic_family_gf(c.family->m));
  if (kind == FamilyLabel::Kind::complete) gf_check("GF-K", complete_family_gf(c.family->m));
  if (kind == FamilyLabel::Kind::graph1089) gf_check("GF-1089", graph1089_gf());

  if (n >= 3) {
    c.examined.push_back("E1");
    if (e < n + 2) fail("E1", std::to_string(n) + " nodes, " + std::to_string(e) + " edges");
  }

  c.examined.push_back("T4");
  try {
    for (const auto& m : enumerate_multiples(y, EnumerationLimit::first(opt.enumerate_count))) {
      const Digit s = m.leading() + m.trailing();
      if (s > g) fail("T4", to_tuple(m) + ": a_0 + a_{n-1} = " + std::to_string(s) + " > g");
      if (s == g && !divides) fail("T4", to_tuple(m) + ": a_0 + a_{n-1} = g but k+1 does not divide g");
    }
  } catch (const BudgetExceeded& ex) {
    fail("T4", ex.what());
  }
  c.young = std::move(young);
  return c;
}

}  // namespace detail

inline AuditReport audit_conjectures(const AuditOptions& opt = {}) {
  if (opt.g_max < 3 || opt.g_max > 100) throw std::invalid_argument("audit: g_max must be in [3, 100]");
  auto pairs = parameter_pairs(3, opt.g_max);
  auto cells = parallel_map(pairs.size(), opt.jobs,
                            [&](std::size_t i) { return detail::audit_cell(pairs[i].first, pairs[i].second, opt); });

  AuditReport rep;
  rep.g_max = opt.g_max;
  rep.pairs = cells.size();
  std::map<std::string, std::vector<std::size_t>> buckets;  // plain certificate -> cells
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& c = cells[i];
    for (const auto& t : c.examined) ++rep.tallies[t].examined;
    for (const auto& f : c.findings) {
      ++rep.tallies[f.check].counterexamples;
      rep.findings.push_back(f);
    }
    if (!c.exists) continue;
    ++rep.young_graphs;
    if (c.family->kind == FamilyLabel::Kind::complete) {
      rep.first_complete.try_emplace(c.family->m, c.g, c.k);
      if (c.family->m == 2) rep.first_cyclic.try_emplace(1, c.g, c.k);  // Z_1 is K_2
    }
    if (c.family->kind == FamilyLabel::Kind::cyclic) rep.first_cyclic.try_emplace(c.family->m, c.g, c.k);
    if (c.plain_cert.empty())
      ++rep.too_large;
    else
      buckets[c.plain_cert].push_back(i);
  }

  for (Digit g = 4; g <= opt.g_max; ++g) {
    ++rep.tallies["P7"].examined;
    const bool two = two_digit_multiple_exists(g), comp = is_composite(g + 1);
    if (two != comp) {
      ++rep.tallies["P7"].counterexamples;
      rep.findings.push_back({"P7", g, 0, two ? "two-digit multiple but g+1 prime" : "g+1 composite but no two-digit multiple"});
    }
  }

  // Graphs equal as plain digraphs but not once pivots are coloured.
  std::vector<std::pair<std::pair<Digit, Digit>, std::pair<Digit, Digit>>> hits;
  for (const auto& [cert, members] : buckets) {
    std::vector<std::size_t> reps;
    for (std::size_t i : members) {
      bool seen = false;
      for (std::size_t j : reps)
        if (isomorphic(*cells[i].young, *cells[j].young, opt.node_cap) == IsoResult::isomorphic) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(i);
    }
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) {
        const auto& x = cells[reps[a]];
        const auto& y = cells[reps[b]];
        if (isomorphic(*x.young, *y.young, opt.node_cap, ColorMode::plain) == IsoResult::isomorphic)
          hits.push_back({{x.g, x.k}, {y.g, y.k}});
      }
  }
  std::sort(hits.begin(), hits.end());
  rep.plain_only_isomorphic = std::move(hits);

  std::stable_sort(rep.findings.begin(), rep.findings.end(), [](const Finding& a, const Finding& b) {
    return std::tie(a.g, a.k) < std::tie(b.g, b.k);
  });
  return rep;
}

/// Counterexamples are listed up to `per_check` per tag.
inline std::string to_text(const AuditReport& r, std::size_t per_check = 10) {
  std::ostringstream os;
  os << "audit g <= " << r.g_max << ": " << r.pairs << " pairs, " << r.young_graphs << " Young graphs\n";
  for (const auto& [tag, t] : r.tallies)
    os << "  " << tag << ": " << t.examined << " examined, " << t.counterexamples << " counterexamples\n";
  os << "first K_m:";
  for (const auto& [m, p] : r.first_complete) os << " K" << m << "=(" << p.first << "," << p.second << ")";
  os << "\nfirst Z_m:";
  for (const auto& [m, p] : r.first_cyclic) os << " Z" << m << "=(" << p.first << "," << p.second << ")";
  os << "\nplain-isomorphic but pivot-distinct pairs: " << r.plain_only_isomorphic.size();
  for (const auto& [a, b] : r.plain_only_isomorphic)
    os << " (" << a.first << "," << a.second << ")~(" << b.first << "," << b.second << ")";
  os << "\ngraphs over the isomorphism cap: " << r.too_large << '\n';
  std::map<std::string, std::size_t> shown;
  for (const auto& f : r.findings) {
    if (shown[f.check]++ >= per_check) continue;
    os << "counterexample " << f.check << " (" << f.g;
    if (f.k) os << "," << f.k;
    os << "): " << f.detail << '\n';
  }
  for (const auto& [tag, n] : shown)
    if (n > per_check) os << "... " << (n - per_check) << " more " << tag << " counterexamples\n";
  return os.str();
}

}  // namespace revmult
