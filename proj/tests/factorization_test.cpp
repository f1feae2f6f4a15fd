#include <gtest/gtest.h>

#include "revmult/factorization.hpp"
#include "support.hpp"

using namespace revmult;
using testing_support::num;

namespace {

FactorizationSearch search(Digit g, Digit k) { return palindromic_factorization(*young_graph(g, k)); }

DigitVector gamma_of(Digit g, Digit k) {
  auto s = search(g, k);
  EXPECT_EQ(s.status, FactorizationSearch::Status::found) << g << "," << k;
  return s.factorization->gamma;
}

}  // namespace

TEST(Factorization, DecimalGammas) {
  EXPECT_EQ(to_bigint(gamma_of(10, 9)), 99);
  EXPECT_EQ(to_bigint(gamma_of(10, 4)), 198);
}

TEST(Factorization, DecimalBetaLanguage) {
  auto s = search(10, 4);
  ASSERT_TRUE(s.factorization);
  const auto& f = *s.factorization;
  EXPECT_EQ(f.rules.describe(), "alphabet {0,1}; runs of 0 >= 2; runs of 1 >= 2");
  EXPECT_TRUE(f.regenerated);
  std::vector<std::uint64_t> first;
  for (std::size_t i = 0; i < 5; ++i) first.push_back(*to_u64(f.betas[i]));
  EXPECT_EQ(first, (std::vector<std::uint64_t>{11, 111, 1111, 11111, 110011}));
}

TEST(Factorization, NamedGammas) {
  EXPECT_EQ(gamma_of(18, 7), num(18, {1, 17, 3, 5, 12, 13}));
  EXPECT_EQ(gamma_of(24, 13), num(24, {23, 9, 8, 0, 16, 13}));
  EXPECT_EQ(gamma_of(19, 14), num(19, {1, 2, 11, 8, 17, 15}));
  EXPECT_EQ(gamma_of(14, 3), num(14, {1, 8, 12, 5}));
  EXPECT_EQ(gamma_of(8, 5), num(8, {1, 0, 1, 5}));
  EXPECT_EQ(gamma_of(15, 11), num(15, {1, 0, 2, 11}));
  EXPECT_EQ(gamma_of(11, 7), num(11, {1, 1, 8}));
  EXPECT_EQ(gamma_of(17, 4), num(17, {2, 5, 9}));
}

TEST(Factorization, NonPalindromicGraphs) {
  EXPECT_EQ(search(24, 17).status, FactorizationSearch::Status::none);
  EXPECT_EQ(search(40, 13).status, FactorizationSearch::Status::none);
}

TEST(Factorization, RulesForCyclicAndNamedGraphs) {
  auto z5 = search(18, 7);
  EXPECT_EQ(z5.factorization->rules.describe(), "alphabet {0,1}; runs of 0 >= 4; no 11");
  EXPECT_TRUE(z5.factorization->regenerated);
  auto m = search(19, 14);
  EXPECT_EQ(m.factorization->rules.describe(), "alphabet {0,1}; runs of 0 >= 3; no 11");
  auto n = search(24, 13);
  EXPECT_EQ(n.factorization->rules.describe(), "alphabet {0,1}; runs of 0 >= 3; runs of 1 >= 3");
  EXPECT_TRUE(n.factorization->regenerated);
}

// A zero run of three is too short for Z5: gamma * 10001 is not a multiple.
TEST(Factorization, ShortZeroRunIsNotAMultiple) {
  const BigInt gamma = to_bigint(num(18, {1, 17, 3, 5, 12, 13}));
  const DigitVector n = from_bigint(gamma * to_bigint(num(18, {1, 0, 0, 0, 1})), 18);
  EXPECT_FALSE(is_reverse_multiple(n, 7));
  const DigitVector ok = from_bigint(gamma * to_bigint(num(18, {1, 0, 0, 0, 0, 1})), 18);
  EXPECT_TRUE(is_reverse_multiple(ok, 7));
}

TEST(FactorizationProperty, PalindromicCellsRegenerateUpToBaseThirty) {
  for (Digit g = 3; g <= 30; ++g)
    for (Digit k = 2; k < g; ++k) {
      auto y = young_graph(g, k);
      if (!y) continue;
      auto s = palindromic_factorization(*y);
      if (s.status != FactorizationSearch::Status::found) continue;
      const auto& f = *s.factorization;
      EXPECT_TRUE(f.regenerated) << g << "," << k;
      EXPECT_LE(f.rules.alphabet.size(), alphabet_bound(*y));
      for (const auto& b : f.betas) EXPECT_TRUE(f.rules.admits(b));
    }
}

TEST(BetaRules, Admits) {
  BetaRules r{{0, 1}, 2, 2, {}};
  EXPECT_TRUE(r.admits(num(10, {1, 1, 0, 0, 1, 1})));
  EXPECT_FALSE(r.admits(num(10, {1, 1, 0, 1, 1})));
  EXPECT_FALSE(r.admits(num(10, {1, 0, 0, 1})));
  EXPECT_FALSE(r.admits(num(10, {1, 1, 0})));
  EXPECT_FALSE(r.admits(num(10, {2, 2})));
  BetaRules no11{{0, 1}, 3, std::nullopt, {"11"}};
  EXPECT_TRUE(no11.admits(num(10, {1, 0, 0, 0, 1})));
  EXPECT_FALSE(no11.admits(num(10, {1, 1})));
}

TEST(BetaRules, Generation) {
  BetaRules r{{0, 1}, 2, 2, {}};
  auto six = betas_of_length(10, r, 6);
  std::vector<std::uint64_t> v;
  for (const auto& b : six) v.push_back(*to_u64(b));
  EXPECT_EQ(v, (std::vector<std::uint64_t>{110011, 111111}));
  EXPECT_TRUE(betas_of_length(10, r, 1).empty());
  EXPECT_EQ(betas_of_length(10, BetaRules{{0, 1, 2}, std::nullopt, std::nullopt, {}}, 3).size(), 6u);
}

TEST(Factorization, Divisors) {
  auto d = detail::divisors_desc(BigInt(198), 100);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->size(), 12u);
  EXPECT_EQ(d->front(), 198);
  EXPECT_EQ(d->back(), 1);
  EXPECT_FALSE(detail::divisors_desc(BigInt(720720), 10));
  std::map<BigInt, unsigned> f;
  const BigInt p("1000000007"), q("998244353");
  detail::factor_into(p * q * 4, f);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f[2], 2u);
  EXPECT_EQ(f[p], 1u);
  EXPECT_EQ(f[q], 1u);
}

TEST(Factorization, NeedsEightMultiples) {
  std::vector<DigitVector> few{num(10, {1, 0, 8, 9})};
  EXPECT_THROW(palindromic_factorization(10, few, 2), std::invalid_argument);
}

TEST(Factorization, AlphabetBound) {
  EXPECT_EQ(alphabet_bound(*young_graph(10, 9)), 4u);
  EXPECT_EQ(alphabet_bound(*young_graph(5, 2)), 2u);
  EXPECT_EQ(alphabet_bound(*young_graph(19, 4)), 4u);
}
