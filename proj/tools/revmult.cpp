// revmult: Young graphs, reverse multiples and their generating functions.
//
// Exit status: 0 success, 1 usage or internal error, 2 no Young graph,
// 3 budget exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "revmult/audit.hpp"
#include "revmult/classify.hpp"
#include "revmult/enumerate.hpp"
#include "revmult/genfunc.hpp"
#include "revmult/graphcore.hpp"
#include "revmult/numeral.hpp"
#include "revmult/report.hpp"

using namespace revmult;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNoGraph = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned g = 0;
  unsigned k = 0;
  std::string format = "text";
  std::string out;
  std::size_t max_digits = 0;
  std::size_t count = 0;
  std::size_t terms = 20;
  unsigned max_g = 0;
  bool include_start = false;
  std::size_t budget = 0;
  unsigned jobs = 1;
  std::string number;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format must be one of: " + list);
}

void check_gk(const Options& o) {
  if (o.g < 3) throw UsageError("--g must be at least 3");
  if (o.k < 2 || o.k >= o.g) throw UsageError("--k must satisfy 2 <= k < g");
}

YoungGraph need_young(Digit g, Digit k) {
  auto y = young_graph(g, k);
  if (!y) throw NoGraph("no Young graph for (g,k) = (" + std::to_string(g) + "," + std::to_string(k) + ")");
  return *y;
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string run_graph(const Options& o) {
  require_format(o, {"text", "json", "dot"});
  check_gk(o);
  const CarryGraph h = build_h_graph(o.g, o.k);
  auto young = prune(h);
  if (!young) throw NoGraph("no Young graph for (g,k) = (" + std::to_string(o.g) + "," + std::to_string(o.k) + ")");
  if (o.format == "dot") return to_dot(young->graph, young->pivots);
  if (o.format == "json") {
    Json j = graph_to_json(*young, o.include_start);
    j["family"] = classify(*young).name();
    j["h_nodes"] = o.include_start ? h.nodes.size() : h.internal_node_count();
    j["h_edges"] = o.include_start ? h.edges.size() : h.internal_edge_count();
    return j.dump(2) + "\n";
  }
  const CarryGraph& gr = young->graph;
  auto count = [&](const CarryGraph& c) {
    return o.include_start ? std::pair{c.nodes.size(), c.edges.size()}
                           : std::pair{c.internal_node_count(), c.internal_edge_count()};
  };
  auto [hn, he] = count(h);
  auto [yn, ye] = count(gr);
  std::ostringstream os;
  os << "(g,k) = (" << o.g << "," << o.k << ")" << (o.include_start ? ", counts include the start node" : "") << "\n";
  os << "H(g,k): " << hn << " nodes, " << he << " edges\n";
  os << "Young graph: " << yn << " nodes, " << ye << " edges\n";
  os << "pruned " << young->pruned_nodes << " nodes, " << young->pruned_edges << " edges\n";
  os << "family: " << classify(*young).name() << "\n";
  std::vector<std::string> even, odd;
  for (auto v : young->pivots.even) even.push_back(to_string(gr.nodes[v]));
  for (auto v : young->pivots.odd) odd.push_back(to_string(gr.nodes[v]));
  os << "even pivots: " << join(even) << "\n";
  os << "odd pivots: " << join(odd) << "\n";
  os << "edges:\n";
  for (const Edge& e : gr.edges)
    os << "  " << to_string(gr.nodes[e.from]) << " -> " << to_string(gr.nodes[e.to]) << " (" << e.label_left << ","
       << e.label_right << ")\n";
  return os.str();
}

std::string run_enumerate(const Options& o) {
  require_format(o, {"text", "json", "bfile"});
  check_gk(o);
  YoungGraph y = need_young(o.g, o.k);
  EnumerationLimit lim = o.max_digits ? EnumerationLimit::up_to_digits(o.max_digits)
                                      : EnumerationLimit::first(o.count ? o.count : 20);
  if (o.budget) lim.path_cap = o.budget;
  auto values = enumerate_multiples(y, lim);
  if (o.format == "bfile") return to_bfile(values);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& v : values)
      arr.push_back({{"digits", v.digits()}, {"value", bigint_to_json(to_bigint(v))}});
    return Json{{"g", o.g}, {"k", o.k}, {"multiples", arr}}.dump(2) + "\n";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i)
    os << (i + 1) << " " << to_bigint(values[i]) << " " << to_tuple(values[i]) << "\n";
  return os.str();
}

std::string run_gf(const Options& o, int& status) {
  require_format(o, {"text", "json"});
  check_gk(o);
  YoungGraph y = need_young(o.g, o.k);
  SolveBudget budget;
  if (o.budget) budget.max_nodes = o.budget;
  GfOutcome out = generating_functions_or_series(y, o.terms, budget);
  if (out.series_only()) status = kExitBudget;
  if (o.format == "json") {
    Json j{{"g", o.g}, {"k", o.k}};
    if (out.closed) {
      j["P"] = gf_to_json(out.closed->even);
      j["Q"] = gf_to_json(out.closed->odd);
      j["C"] = gf_to_json(out.closed->total);
    } else {
      j["C"] = nullptr;
      j["budget_exceeded"] = true;
    }
    Json s = Json::array();
    for (const auto& c : out.coefficients) s.push_back(bigint_to_json(c));
    j["series"] = s;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (out.closed) {
    os << "P(x) = " << to_string(out.closed->even) << "\n";
    os << "Q(x) = " << to_string(out.closed->odd) << "\n";
    os << "C(x) = " << to_string(out.closed->total) << "\n";
  } else {
    os << "budget exceeded: closed form not computed; series from path counts\n";
  }
  os << "c_0..c_" << (o.terms ? o.terms - 1 : 0) << ":";
  for (const auto& c : out.coefficients) os << " " << c;
  os << "\n";
  return os.str();
}

/// The multiplication laid out as N, k*N and the carries r_{n-1}..r_{-1}.
std::string tableau(const DigitVector& n, Digit k, const Product& p) {
  const std::size_t cols = n.size() + 1;
  std::size_t w = 1;
  for (Digit d : p.carries.values()) w = std::max(w, std::to_string(d).size());
  for (Digit d : n.digits()) w = std::max(w, std::to_string(d).size());
  for (Digit d : p.digits.digits()) w = std::max(w, std::to_string(d).size());
  auto row = [&](const std::string& head, const std::vector<std::string>& cells) {
    std::ostringstream r;
    r << std::left << std::setw(10) << head << std::right;
    for (std::size_t i = 0; i < cols - cells.size(); ++i) r << ' ' << std::string(w, ' ');
    for (const auto& c : cells) r << ' ' << std::setw(static_cast<int>(w)) << c;
    std::string s = r.str();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  auto cells = [](const std::vector<Digit>& d) {
    std::vector<std::string> v;
    for (Digit x : d) v.push_back(std::to_string(x));
    return v;
  };
  std::vector<Digit> carries(p.carries.values().rbegin(), p.carries.values().rend());
  const std::string rule(10 + cols * (w + 1), '-');
  std::ostringstream os;
  os << row("N =", cells(n.digits()));
  os << row("", {"x", std::to_string(k)});
  os << rule << "\n";
  os << row(std::to_string(k) + "N =", cells(p.digits.digits()));
  os << rule << "\n";
  os << row("carries =", cells(carries));
  return os.str();
}

std::string run_verify(const Options& o) {
  require_format(o, {"text", "json"});
  std::optional<Digit> base;
  if (o.g) base = o.g;
  DigitVector n;
  try {
    n = parse_number(o.number, base);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Options gk = o;
  gk.g = n.base();
  check_gk(gk);
  if (!n.is_canonical() || n.is_zero()) throw UsageError("number must be positive without leading zeros");
  Product p = mul_small(n, o.k);
  const bool yes = is_reverse_multiple(n, o.k).has_value();
  if (o.format == "json") {
    std::vector<Digit> carries(p.carries.values().rbegin(), p.carries.values().rend());
    return Json{{"g", n.base()},
                {"k", o.k},
                {"digits", n.digits()},
                {"product", p.digits.digits()},
                {"carries", carries},
                {"reverse_multiple", yes}}
               .dump(2) +
           "\n";
  }
  std::ostringstream os;
  os << tableau(n, o.k, p);
  os << (yes ? "yes: " : "no: ") << to_tuple(n) << (yes ? " is" : " is not") << " a (" << n.base() << "," << o.k
     << ")-reverse multiple\n";
  return os.str();
}

std::string run_survey(const Options& o) {
  require_format(o, {"text", "json"});
  const unsigned max_g = o.max_g ? o.max_g : 20;
  if (max_g < 3 || max_g > 100) throw UsageError("--max-g must be in [3, 100]");
  CellOptions opt;
  if (o.budget) opt.budget.max_nodes = o.budget;
  auto cells = survey(max_g, o.jobs, opt);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& c : cells) arr.push_back(to_json(c));
    return Json{{"max_g", max_g}, {"cells", arr}}.dump(2) + "\n";
  }
  return survey_table(cells);
}

std::string run_audit(const Options& o) {
  require_format(o, {"text", "json"});
  AuditOptions opt;
  opt.g_max = o.max_g ? o.max_g : 40;
  if (opt.g_max < 3 || opt.g_max > 100) throw UsageError("--max-g must be in [3, 100]");
  opt.jobs = o.jobs;
  if (o.budget) opt.budget.max_nodes = o.budget;
  AuditReport r = audit_conjectures(opt);
  if (o.format == "json") return to_json(r).dump(2) + "\n";
  return to_text(r);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Young graphs and (g,k)-reverse multiples"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_gk = [&](CLI::App* s) {
    s->add_option("--g", o.g, "base g >= 3")->required();
    s->add_option("--k", o.k, "multiplier 2 <= k < g")->required();
  };
  auto add_common = [&](CLI::App* s, const char* formats) {
    s->add_option("--format", o.format, std::string("output format: ") + formats);
    s->add_option("--out", o.out, "write output to PATH");
  };

  auto* graph = app.add_subcommand("graph", "Young graph of (g,k)");
  add_gk(graph);
  add_common(graph, "text|json|dot");
  graph->add_flag("--include-start", o.include_start, "count the start node and its edges");

  auto* en = app.add_subcommand("enumerate", "reverse multiples in increasing order");
  add_gk(en);
  add_common(en, "text|json|bfile");
  auto* count = en->add_option("--count", o.count, "first N multiples (default 20)");
  auto* digits = en->add_option("--max-digits", o.max_digits, "all multiples with at most D digits");
  count->excludes(digits);
  digits->excludes(count);
  en->add_option("--budget", o.budget, "maximum partial paths per length");

  auto* gf = app.add_subcommand("gf", "generating functions P, Q, C and series");
  add_gk(gf);
  add_common(gf, "text|json");
  gf->add_option("--terms", o.terms, "series coefficients c_0.. (default 20)");
  gf->add_option("--budget", o.budget, "maximum internal nodes for the exact solve");

  auto* verify = app.add_subcommand("verify", "check one number and show the carry tableau");
  verify->add_option("number", o.number, "decimal value in base g, or (d1,...,dn)_g")->required();
  verify->add_option("--g", o.g, "base (optional when the tuple names it)");
  verify->add_option("--k", o.k, "multiplier")->required();
  add_common(verify, "text|json");

  auto* sv = app.add_subcommand("survey", "multipliers and graph families for each base");
  sv->add_option("--max-g", o.max_g, "largest base (default 20)");
  sv->add_option("--jobs", o.jobs, "worker threads");
  sv->add_option("--budget", o.budget, "maximum internal nodes for exact solves");
  add_common(sv, "text|json");

  auto* au = app.add_subcommand("audit", "check the conjectures for all bases up to --max-g");
  au->add_option("--max-g", o.max_g, "largest base (default 40)");
  au->add_option("--jobs", o.jobs, "worker threads");
  au->add_option("--budget", o.budget, "maximum internal nodes for exact solves");
  add_common(au, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  int status = 0;
  try {
    std::string text;
    if (*graph) text = run_graph(o);
    else if (*en) text = run_enumerate(o);
    else if (*gf) text = run_gf(o, status);
    else if (*verify) text = run_verify(o);
    else if (*sv) text = run_survey(o);
    else if (*au) text = run_audit(o);
    emit(o, text);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.get_subcommands().front()->help();
    return kExitUsage;
  } catch (const NoGraph& e) {
    std::cout << e.what() << "\n";
    return kExitNoGraph;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}
