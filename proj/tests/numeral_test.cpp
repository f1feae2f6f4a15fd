#include <gtest/gtest.h>

#include "revmult/numeral.hpp"
#include "support.hpp"

using namespace revmult;
using testing_support::num;

TEST(Numeral, SmallestDecimalReverseMultiples) {
  auto c = is_reverse_multiple(num(10, {2, 1, 7, 8}), 4);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->values(), (std::vector<Digit>{0, 3, 3, 0, 0}));
  EXPECT_TRUE(is_reverse_multiple(num(10, {1, 0, 8, 9}), 9));
  EXPECT_FALSE(is_reverse_multiple(num(10, {1, 0, 8, 9}), 4));
  EXPECT_FALSE(is_reverse_multiple(num(10, {1, 2, 3, 4}), 2));
}

TEST(Numeral, OverflowingProductIsRejected) {
  // 5 * 25 = 125 has more digits than 25.
  EXPECT_FALSE(is_reverse_multiple(num(10, {2, 5}), 5));
  Product p = mul_small(num(10, {2, 5}), 5);
  EXPECT_EQ(p.digits, num(10, {1, 2, 5}));
  EXPECT_EQ(p.carries.r(1), 1u);
}

TEST(Numeral, CarrySequenceOfWorkedTableau) {
  auto c = is_reverse_multiple(num(8, {1, 1, 2, 7, 6, 6, 5}), 5);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->values(), (std::vector<Digit>{0, 3, 4, 4, 4, 1, 0, 0}));
  EXPECT_EQ(c->r(-1), 0u);
  EXPECT_EQ(c->r(0), 3u);
  EXPECT_EQ(c->length(), 7u);
  EXPECT_EQ(c->interior(), (std::vector<Digit>{3, 4, 4, 4, 1, 0}));
}

TEST(Numeral, MulSmallRejectsBadMultiplier) {
  EXPECT_THROW(mul_small(num(10, {1}), 1), std::invalid_argument);
  EXPECT_THROW(mul_small(num(10, {1}), 10), std::invalid_argument);
}

TEST(Numeral, DigitVectorValidation) {
  EXPECT_THROW(num(8, {8}), std::invalid_argument);
  EXPECT_THROW(num(1, {0}), std::invalid_argument);
  EXPECT_THROW(num(10, {}), std::invalid_argument);
  EXPECT_FALSE(num(10, {0, 1}).is_canonical());
  EXPECT_TRUE(num(10, {0}).is_canonical());
}

TEST(Numeral, ParseForms) {
  EXPECT_EQ(parse_number("(1,0,2,5,1,5)_8", std::nullopt), num(8, {1, 0, 2, 5, 1, 5}));
  EXPECT_EQ(parse_number(" ( 1, 0 ,2)_8 ", 8), num(8, {1, 0, 2}));
  EXPECT_EQ(parse_number("(1,17,3)", 18), num(18, {1, 17, 3}));
  EXPECT_EQ(parse_number("2178", 10), num(10, {2, 1, 7, 8}));
  EXPECT_EQ(parse_number("64", 8), num(8, {1, 0, 0}));
  EXPECT_THROW(parse_number("(1,8)_8", std::nullopt), std::invalid_argument);
  EXPECT_THROW(parse_number("(1,2)_8", 10), std::invalid_argument);
  EXPECT_THROW(parse_number("(1,2", 10), std::invalid_argument);
  EXPECT_THROW(parse_number("12a", 10), std::invalid_argument);
  EXPECT_THROW(parse_number("12", std::nullopt), std::invalid_argument);
  EXPECT_THROW(parse_number("(1,,2)_8", std::nullopt), std::invalid_argument);
}

TEST(Numeral, TextForms) {
  const DigitVector n = num(24, {1, 0, 9, 16, 18, 1, 6, 5, 13});
  EXPECT_EQ(to_tuple(n), "(1,0,9,16,18,1,6,5,13)_24");
  EXPECT_EQ(to_display(num(10, {2, 1, 7, 8})), "2178");
  EXPECT_EQ(to_display(num(8, {1, 0, 0})), "64");
  DigitVector huge(2, std::vector<Digit>(70, 1));
  EXPECT_FALSE(to_u64(huge));
  EXPECT_EQ(to_display(huge), to_tuple(huge));
}

TEST(Numeral, BruteForceFindsDecimalMultiples) {
  auto four = brute_force_search(10, 4, 6);
  EXPECT_EQ(testing_support::values(four), (std::vector<std::uint64_t>{2178, 21978, 219978}));
  auto nine = brute_force_search(10, 9, 6);
  EXPECT_EQ(testing_support::values(nine), (std::vector<std::uint64_t>{1089, 10989, 109989}));
  EXPECT_TRUE(brute_force_search(12, 7, 5).empty());
}

TEST(Numeral, BruteForceBudget) {
  EXPECT_THROW(brute_force_search(10, 4, 8, 1000), BudgetExceeded);
  EXPECT_NO_THROW(brute_force_search(10, 4, 3, 1000));
}

TEST(NumeralProperty, ReverseIsAnInvolution) {
  for (int trial = 0; trial < 500; ++trial) {
    const Digit g = 3 + trial % 60;
    DigitVector n = testing_support::random_number(g, 1 + trial % 17);
    EXPECT_EQ(reverse(reverse(n)), n);
    EXPECT_EQ(reverse(n).digit_sum(), n.digit_sum());
  }
}

TEST(NumeralProperty, BigIntRoundTrip) {
  for (int trial = 0; trial < 500; ++trial) {
    const Digit g = 2 + trial % 90;
    DigitVector n = testing_support::random_number(g == 2 ? 3 : g, 1 + trial % 40);
    EXPECT_EQ(from_bigint(to_bigint(n), n.base()), n);
    EXPECT_EQ(parse_number(to_tuple(n), std::nullopt), n);
    EXPECT_EQ(parse_number(to_bigint(n).str(), n.base()), n);
  }
}

TEST(NumeralProperty, MulSmallAgreesWithBigInt) {
  for (int trial = 0; trial < 500; ++trial) {
    const Digit g = 3 + trial % 50;
    const Digit k = 2 + trial % (g - 2);
    DigitVector n = testing_support::random_number(g, 1 + trial % 25);
    Product p = mul_small(n, k);
    EXPECT_EQ(to_bigint(p.digits), to_bigint(n) * k);
    for (Digit c : p.carries.values()) EXPECT_LT(c, k);
  }
}

// (k-1) * digitsum(N) is a multiple of g-1: reduce k*N = reverse(N) mod g-1.
TEST(NumeralProperty, DigitSumCongruence) {
  for (Digit g = 3; g <= 11; ++g)
    for (Digit k = 2; k < g; ++k)
      for (const auto& m : brute_force_search(g, k, 5, 200'000))
        EXPECT_EQ((k - 1) * m.digit_sum() % (g - 1), 0u) << to_tuple(m) << " k=" << k;
}
