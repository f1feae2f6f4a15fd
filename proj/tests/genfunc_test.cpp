#include <gtest/gtest.h>

#include <set>

#include "revmult/audit.hpp"
#include "revmult/enumerate.hpp"
#include "revmult/genfunc.hpp"
#include "support.hpp"

using namespace revmult;

namespace {

RationalGF rf(IntPolynomial n, IntPolynomial d) { return RationalGF(std::move(n), std::move(d)); }
const IntPolynomial kOnePlusX{1, 1};
IntPolynomial x(std::size_t n) { return IntPolynomial::monomial(1, n); }

RationalGF total(Digit g, Digit k) { return generating_functions(*young_graph(g, k)).total; }

}  // namespace

TEST(GenFunc, BaseTenMultiplierNine) {
  auto f = generating_functions(*young_graph(10, 9));
  const IntPolynomial den{1, 0, -1, 0, -1};
  EXPECT_EQ(f.even, rf(x(4), den));
  EXPECT_EQ(f.odd, rf(x(5), den));
  EXPECT_EQ(f.total, rf(x(4) * kOnePlusX, den));
  auto row = start_row_of_B(*young_graph(10, 9));
  std::set<std::string> entries;
  for (const auto& e : row) entries.insert(to_string(e));
  const IntPolynomial d4{1, 0, -2, 0, 1, 0, 0, 0, -1};
  EXPECT_TRUE(entries.count(to_string(rf(x(4) * IntPolynomial{1, 0, -1}, d4))));
  EXPECT_TRUE(entries.count(to_string(rf(x(8), d4))));
}

TEST(GenFunc, CompleteGraphOnTwoNodes) {
  auto f = generating_functions(*young_graph(5, 2));
  EXPECT_EQ(f.even, rf(x(2), IntPolynomial{1, 0, -2}));
  EXPECT_EQ(f.total, rf(x(2) * kOnePlusX, IntPolynomial{1, 0, -2}));
  auto row = start_row_of_B(*young_graph(5, 2));
  std::set<std::string> entries;
  for (const auto& e : row) entries.insert(to_string(e));
  EXPECT_TRUE(entries.count(to_string(rf(x(4), IntPolynomial{1, 0, -2}))));
  EXPECT_TRUE(entries.count(to_string(rf(x(2) * IntPolynomial{1, 0, -1}, IntPolynomial{1, 0, -2}))));
}

TEST(GenFunc, TableGraphs) {
  const RationalGF h = rf(x(4) * kOnePlusX, IntPolynomial{1, 0, -2});
  EXPECT_EQ(total(8, 5), h);
  EXPECT_EQ(total(15, 11), h);
  EXPECT_EQ(total(11, 7), rf(x(3) * kOnePlusX, IntPolynomial{1, 0, -2}));
  EXPECT_EQ(total(14, 3), rf(x(5) * kOnePlusX, IntPolynomial{1, 0, -1, 0, -1}));
  EXPECT_EQ(total(19, 14), rf(x(6) * kOnePlusX * IntPolynomial{1, -1, 0, 0, 1}, IntPolynomial{1, 0, -1} - x(8)));
}

TEST(GenFunc, LargerBases) {
  EXPECT_EQ(total(24, 13), rf(x(9) * kOnePlusX, IntPolynomial{1, 0, -1} - x(6)));
  EXPECT_EQ(total(40, 13), rf(x(5) * kOnePlusX * IntPolynomial{1, 0, -1, 0, 1, 0, 2},
                              IntPolynomial{1, 0, -1} - x(8) - BigInt(2) * x(10)));
  EXPECT_EQ(total(24, 17), rf(x(12) * kOnePlusX, IntPolynomial{1, 0, -1} - x(10) - x(14) + x(16)));
}

// Counts from enumerating and re-verifying each multiple.
TEST(GenFunc, Base24Multiplier17AgainstVerifiedEnumeration) {
  auto y = *young_graph(24, 17);
  auto c = series(generating_functions(y).total, 31);
  std::vector<BigInt> counted(31);
  for (const auto& m : enumerate_multiples(y, EnumerationLimit::up_to_digits(30))) {
    ASSERT_TRUE(is_reverse_multiple(m, 17));
    ++counted[m.size()];
  }
  EXPECT_EQ(c, counted);
  EXPECT_EQ(counted[28], 6);
  EXPECT_EQ(counted[30], 7);
}

TEST(GenFunc, CompleteFamily) {
  for (unsigned m = 2; m <= 7; ++m) {
    auto f = total(m * m + m - 1, m);
    EXPECT_EQ(f, rf(BigInt(m - 1) * x(2) * kOnePlusX, IntPolynomial{1, 0, -static_cast<long long>(m)})) << m;
    EXPECT_EQ(f, complete_family_gf(m));
  }
}

TEST(GenFunc, CyclicFamilyOnFiveNodes) {
  const unsigned m = 5;
  auto expected = rf(x(m + 1) * kOnePlusX * (IntPolynomial{1, -1} + x(m)), IntPolynomial{1, 0, -1} - x(2 * m));
  EXPECT_EQ(total(18, 7), expected);
  EXPECT_EQ(cyclic_family_gf(m), expected);
}

TEST(GenFunc, SumOverDecimalMultipliers) {
  RationalGF sum;
  for (Digit k = 2; k < 10; ++k)
    if (auto y = young_graph(10, k)) sum = sum + generating_functions(*y).total;
  EXPECT_EQ(sum, rf(BigInt(2) * x(4) * kOnePlusX, IntPolynomial{1, 0, -1, 0, -1}));
  EXPECT_EQ(series(sum, 14), testing_support::big({0, 0, 0, 0, 2, 2, 2, 2, 4, 4, 6, 6, 10, 10}));
}

TEST(Series, FibonacciRepeats) {
  auto c = series(total(10, 9), 60);
  std::vector<BigInt> fib{0, 1};
  while (fib.size() < 40) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  EXPECT_EQ(std::vector<BigInt>(c.begin() + 4, c.begin() + 14), testing_support::big({1, 1, 1, 1, 2, 2, 3, 3, 5, 5}));
  for (std::size_t t = 4; t < 60; ++t) EXPECT_EQ(c[t], fib[t / 2 - 1]) << t;
}

TEST(Series, RecurrenceForBase19) {
  auto c = series(total(19, 14), 80);
  for (std::size_t t = 12; t < 80; ++t) EXPECT_EQ(c[t], c[t - 2] + c[t - 8]) << t;
}

TEST(PathCounts, MatchEnumeration) {
  auto y = *young_graph(24, 13);
  auto p = path_counts(y, 24);
  std::vector<BigInt> counted(25);
  for (const auto& m : enumerate_multiples(y, EnumerationLimit::up_to_digits(24))) ++counted[m.size()];
  EXPECT_EQ(p, counted);
}

TEST(PathCountsProperty, AgreeWithSeriesUpToBaseTwenty) {
  for (Digit g = 3; g <= 20; ++g)
    for (Digit k = 2; k < g; ++k)
      if (auto y = young_graph(g, k)) {
        auto chk = path_count_check(*y, 16);
        EXPECT_TRUE(chk.match) << g << "," << k;
      }
}

TEST(PathCountsProperty, AgreeWithSeriesUpToBaseForty) {
  for (Digit g = 21; g <= 40; ++g)
    for (Digit k = 2; k < g; ++k)
      if (auto y = young_graph(g, k)) EXPECT_TRUE(path_count_check(*y, 40).match) << g << "," << k;
}

TEST(GenFunc, BudgetFallsBackToSeries) {
  auto y = *young_graph(24, 17);
  SolveBudget tiny;
  tiny.max_nodes = 5;
  EXPECT_THROW(generating_functions(y, tiny), BudgetExceeded);
  auto out = generating_functions_or_series(y, 20, tiny);
  EXPECT_TRUE(out.series_only());
  EXPECT_EQ(out.coefficients, std::vector<BigInt>(path_counts(y, 19)));
  auto full = generating_functions_or_series(y, 20);
  EXPECT_FALSE(full.series_only());
  EXPECT_EQ(full.coefficients, out.coefficients);
}

TEST(Adjacency, OrderStartsWithStartAndZero) {
  auto y = *young_graph(10, 9);
  auto a = adjacency(y);
  ASSERT_GE(a.order.size(), 2u);
  EXPECT_EQ(a.order[0], 0u);
  EXPECT_EQ(y.graph.nodes[a.order[1]], (NodeId{0, 0, false}));
  std::size_t entries = 0;
  for (const auto& row : a.matrix)
    for (const auto& p : row) entries += !p.is_zero();
  EXPECT_EQ(entries, y.graph.edges.size());
}
