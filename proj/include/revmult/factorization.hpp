#pragma once

// Palindromic factorizations N = gamma * beta.
//
// gamma is the largest divisor of the gcd of a sample of multiples for
// which every quotient is a base-g palindrome over a small digit alphabet.
// The rules on beta (alphabet, shortest runs, forbidden factors) are read
// off the observed quotients, then checked by regenerating every beta the
// rules allow and comparing gamma * beta with the enumerated multiples.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

#include "revmult/enumerate.hpp"
#include "revmult/genfunc.hpp"
#include "revmult/graphcore.hpp"
#include "revmult/numeral.hpp"

namespace revmult {

struct BetaRules {
  std::vector<Digit> alphabet;               // ascending
  std::optional<std::size_t> min_zero_run;   // shortest run of 0s seen; none if no 0 was seen
  std::optional<std::size_t> min_one_run;    // binary alphabets only
  std::vector<std::string> forbidden;        // e.g. "11"

  bool admits(const DigitVector& beta) const {
    if (!beta.is_palindrome() || beta.leading() == 0) return false;
    for (Digit d : beta.digits())
      if (!std::binary_search(alphabet.begin(), alphabet.end(), d)) return false;
    const auto& a = beta.digits();
    for (std::size_t i = 0; i < a.size();) {
      std::size_t j = i;
      while (j < a.size() && a[j] == a[i]) ++j;
      if (a[i] == 0 && min_zero_run && j - i < *min_zero_run) return false;
      if (a[i] == 1 && min_one_run && j - i < *min_one_run) return false;
      i = j;
    }
    for (const std::string& f : forbidden) {
      std::vector<Digit> pat;
      for (char c : f) pat.push_back(static_cast<Digit>(c - '0'));
      if (std::search(a.begin(), a.end(), pat.begin(), pat.end()) != a.end()) return false;
    }
    return true;
  }

  /// e.g. "alphabet {0,1}; runs of 0 >= 2; runs of 1 >= 2".
  std::string describe() const {
    std::string s = "alphabet {";
    for (std::size_t i = 0; i < alphabet.size(); ++i) s += (i ? "," : "") + std::to_string(alphabet[i]);
    s += "}";
    if (min_zero_run && *min_zero_run > 1) s += "; runs of 0 >= " + std::to_string(*min_zero_run);
    if (min_one_run && *min_one_run > 1) s += "; runs of 1 >= " + std::to_string(*min_one_run);
    for (const auto& f : forbidden) s += "; no " + f;
    return s;
  }
};

struct Factorization {
  DigitVector gamma;
  BetaRules rules;
  std::vector<DigitVector> betas;     // quotients of the supplied multiples
  std::size_t verified_horizon = 0;   // multiples covered by the regeneration check
  bool regenerated = false;           // rules reproduce exactly the multiples up to the horizon
};

struct FactorizationSearch {
  enum class Status { found, none, divisor_overflow };
  Status status = Status::none;
  std::optional<Factorization> factorization;
  std::size_t divisors_tried = 0;
};

namespace detail {

inline BigInt pollard_rho(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (unsigned c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = boost::multiprecision::gcd(x > y ? BigInt(x - y) : BigInt(y - x), n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(BigInt n, std::map<BigInt, unsigned>& out) {
  static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (unsigned p : small)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n == 1) return;
  boost::random::mt19937 rng(2024);
  if (boost::multiprecision::miller_rabin_test(n, 25, rng)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

/// All positive divisors in decreasing order, or nullopt beyond `cap`.
inline std::optional<std::vector<BigInt>> divisors_desc(const BigInt& n, std::size_t cap) {
  std::map<BigInt, unsigned> f;
  factor_into(n, f);
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = divs.size();
    if (base * (e + 1) > cap) return std::nullopt;
    BigInt pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end(), std::greater<>());
  return divs;
}

inline std::size_t shortest_run(const std::vector<DigitVector>& betas, Digit digit, bool& seen) {
  std::size_t best = SIZE_MAX;
  for (const auto& b : betas) {
    const auto& a = b.digits();
    for (std::size_t i = 0; i < a.size();) {
      std::size_t j = i;
      while (j < a.size() && a[j] == a[i]) ++j;
      if (a[i] == digit) best = std::min(best, j - i);
      i = j;
    }
  }
  seen = best != SIZE_MAX;
  return best;
}

inline BetaRules infer_rules(const std::vector<DigitVector>& betas) {
  BetaRules r;
  std::set<Digit> alpha;
  for (const auto& b : betas) alpha.insert(b.digits().begin(), b.digits().end());
  r.alphabet.assign(alpha.begin(), alpha.end());
  bool seen = false;
  std::size_t z = shortest_run(betas, 0, seen);
  if (seen) r.min_zero_run = z;
  const bool binary = std::all_of(r.alphabet.begin(), r.alphabet.end(), [](Digit d) { return d <= 1; });
  if (binary) {
    std::size_t o = shortest_run(betas, 1, seen);
    if (seen) r.min_one_run = o;
    bool has_11 = std::any_of(betas.begin(), betas.end(), [](const DigitVector& b) {
      const auto& a = b.digits();
      return std::adjacent_find(a.begin(), a.end(), [](Digit x, Digit y) { return x == 1 && y == 1; }) != a.end();
    });
    if (!has_11) r.forbidden.push_back("11");
  }
  return r;
}

}  // namespace detail

/// Digit alphabet bound for quotients: max(2, m-1), m counting the start node.
inline std::size_t alphabet_bound(const YoungGraph& young) {
  return std::max<std::size_t>(2, young.graph.nodes.size() - 1);
}

/// Tries the divisors of gcd(multiples) from the largest down.  Needs at
/// least 8 multiples.
inline FactorizationSearch palindromic_factorization(Digit g, const std::vector<DigitVector>& multiples,
                                                     std::size_t max_alphabet, std::size_t divisor_cap = 10'000) {
  if (multiples.size() < 8) throw std::invalid_argument("palindromic_factorization: need at least 8 multiples");
  std::vector<BigInt> values;
  BigInt gc = 0;
  for (const auto& m : multiples) {
    if (m.base() != g) throw std::invalid_argument("palindromic_factorization: mixed bases");
    values.push_back(to_bigint(m));
    gc = boost::multiprecision::gcd(gc, values.back());
  }
  FactorizationSearch out;
  if (gc == 0) return out;
  auto divs = detail::divisors_desc(gc, divisor_cap);
  if (!divs) {
    out.status = FactorizationSearch::Status::divisor_overflow;
    return out;
  }
  for (const BigInt& gamma : *divs) {
    ++out.divisors_tried;
    std::vector<DigitVector> betas;
    std::set<Digit> alpha;
    bool ok = true;
    for (const BigInt& v : values) {
      DigitVector q = from_bigint(v / gamma, g);
      if (!q.is_palindrome()) {
        ok = false;
        break;
      }
      alpha.insert(q.digits().begin(), q.digits().end());
      if (alpha.size() > max_alphabet) {
        ok = false;
        break;
      }
      betas.push_back(std::move(q));
    }
    if (!ok) continue;
    out.status = FactorizationSearch::Status::found;
    out.factorization = Factorization{from_bigint(gamma, g), detail::infer_rules(betas), std::move(betas), 0, false};
    return out;
  }
  return out;
}

/// Every beta of length `len` the rules admit, ascending.
inline std::vector<DigitVector> betas_of_length(Digit g, const BetaRules& rules, std::size_t len) {
  std::vector<DigitVector> out;
  if (len == 0 || rules.alphabet.empty()) return out;
  const std::size_t half = (len + 1) / 2;
  std::vector<std::size_t> idx(half, 0);
  for (;;) {
    std::vector<Digit> d(len);
    for (std::size_t i = 0; i < half; ++i) d[i] = d[len - 1 - i] = rules.alphabet[idx[i]];
    DigitVector b(g, d);
    if (rules.admits(b)) out.push_back(std::move(b));
    std::size_t p = half;
    while (p > 0 && ++idx[p - 1] == rules.alphabet.size()) idx[--p] = 0;
    if (p == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Regenerates gamma * beta for all admitted beta and compares with every
/// multiple of at most `max_digits` digits.  Sets verified_horizon and
/// regenerated.
inline bool cross_validate(const YoungGraph& young, Factorization& f, std::size_t max_digits) {
  const auto multiples = enumerate_multiples(young, EnumerationLimit::up_to_digits(max_digits));
  std::set<BigInt> expected;
  for (const auto& m : multiples) expected.insert(to_bigint(m));
  std::set<BigInt> produced;
  const BigInt gamma = to_bigint(f.gamma);
  BigInt limit = 1;
  for (std::size_t i = 0; i < max_digits; ++i) limit *= young.g();
  for (std::size_t len = 1; len + f.gamma.size() <= max_digits + 1; ++len)
    for (const auto& b : betas_of_length(young.g(), f.rules, len)) {
      BigInt v = gamma * to_bigint(b);
      if (v < limit) produced.insert(v);
    }
  f.verified_horizon = expected.size();
  f.regenerated = produced == expected;
  return f.regenerated;
}

/// A digit bound covering complete length classes: the largest D with at
/// most `max_count` multiples of <= D digits, but at least enough for 8.
inline std::size_t sample_digits(const YoungGraph& young, std::size_t max_count = 300, std::size_t max_len = 40) {
  const auto c = path_counts(young, max_len);
  BigInt total = 0;
  std::size_t best = 0;
  for (std::size_t t = 0; t <= max_len; ++t) {
    if (total + c[t] > max_count && total >= 8) break;
    total += c[t];
    best = t;
  }
  return best;
}

/// Factorization of the (g,k) multiples from a sample of complete length
/// classes, cross-validated against enumeration.
inline FactorizationSearch palindromic_factorization(const YoungGraph& young, std::size_t max_count = 300) {
  const std::size_t d = sample_digits(young, max_count);
  auto multiples = enumerate_multiples(young, EnumerationLimit::up_to_digits(d));
  if (multiples.size() < 8) multiples = enumerate_multiples(young, EnumerationLimit::first(8));
  FactorizationSearch s = palindromic_factorization(young.g(), multiples, alphabet_bound(young));
  if (s.factorization) cross_validate(young, *s.factorization, multiples.back().size());
  return s;
}

}  // namespace revmult
