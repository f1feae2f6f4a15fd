#pragma once

// Shared helpers and independent oracles for the unit tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "revmult/graphcore.hpp"
#include "revmult/numeral.hpp"
#include "revmult/polynomial.hpp"

namespace testing_support {

using namespace revmult;

inline DigitVector num(Digit g, std::vector<Digit> d) { return DigitVector(g, std::move(d)); }

/// Decimal values of base-10 digit vectors.
inline std::vector<std::uint64_t> values(const std::vector<DigitVector>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& d : v) out.push_back(*to_u64(d));
  return out;
}

/// Direct O(g^2) search of the paired digit equations at one node.
inline std::vector<Transition> pair_oracle(Digit g, Digit k, const NodeId& node) {
  std::vector<Transition> out;
  const std::int64_t G = g, K = k;
  for (std::int64_t aj = 0; aj < G; ++aj)
    for (std::int64_t ai = 0; ai < G; ++ai) {
      if (node.is_start && (ai == 0 || aj == 0)) continue;
      if ((K * ai + node.right - aj) % G != 0) continue;
      const std::int64_t low = ai + std::int64_t{node.left} * G - K * aj;
      if (low < 0 || low >= K) continue;
      const std::int64_t ri = (K * ai + node.right - aj) / G;
      out.push_back({static_cast<Digit>(aj), static_cast<Digit>(ai),
                     NodeId{static_cast<Digit>(low), static_cast<Digit>(ri), false}});
    }
  return out;
}

/// Coefficients of a rational function by long division of power series,
/// without using the denominator recurrence.
inline std::vector<BigInt> long_division(const std::vector<BigInt>& num, const std::vector<BigInt>& den,
                                         std::size_t terms) {
  std::vector<BigInt> rem(terms, 0), out(terms, 0);
  for (std::size_t i = 0; i < num.size() && i < terms; ++i) rem[i] = num[i];
  for (std::size_t i = 0; i < terms; ++i) {
    out[i] = rem[i] / den[0];
    for (std::size_t j = 0; j < den.size() && i + j < terms; ++j) rem[i + j] -= out[i] * den[j];
  }
  return out;
}

inline std::vector<BigInt> big(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

inline std::mt19937& rng() {
  static std::mt19937 r(20130317);
  return r;
}

inline DigitVector random_number(Digit g, std::size_t len) {
  std::uniform_int_distribution<Digit> d(0, g - 1), lead(1, g - 1);
  std::vector<Digit> v(len);
  for (auto& x : v) x = d(rng());
  v[0] = lead(rng());
  return DigitVector(g, v);
}

}  // namespace testing_support
