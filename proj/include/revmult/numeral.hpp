#pragma once

// Base-g digit arithmetic for reverse multiples.
//
// A number is held as a DigitVector: the base plus its digits, most
// significant first.  Nothing here converts to machine integers for
// correctness; the decimal rendering is a convenience for small values.

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace revmult {

using Digit = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a search or enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DigitVector {
 public:
  DigitVector() = default;

  /// `digits` is most-significant first.  Every digit must be below `base`.
  DigitVector(Digit base, std::vector<Digit> digits) : base_(base), digits_(std::move(digits)) {
    if (base_ < 2) throw std::invalid_argument("DigitVector: base must be at least 2");
    if (digits_.empty()) throw std::invalid_argument("DigitVector: needs at least one digit");
    for (Digit d : digits_)
      if (d >= base_) throw std::invalid_argument("DigitVector: digit out of range for base");
  }

  Digit base() const { return base_; }
  std::size_t size() const { return digits_.size(); }
  const std::vector<Digit>& digits() const { return digits_; }

  /// Digit a_i, i.e. the coefficient of g^i (a_0 is the last element).
  Digit coeff(std::size_t i) const { return digits_[digits_.size() - 1 - i]; }
  Digit leading() const { return digits_.front(); }
  Digit trailing() const { return digits_.back(); }

  bool is_zero() const {
    for (Digit d : digits_)
      if (d != 0) return false;
    return true;
  }

  bool is_canonical() const { return digits_.size() == 1 || digits_.front() != 0; }

  bool is_palindrome() const {
    for (std::size_t i = 0, j = digits_.size() - 1; i < j; ++i, --j)
      if (digits_[i] != digits_[j]) return false;
    return true;
  }

  std::uint64_t digit_sum() const {
    std::uint64_t s = 0;
    for (Digit d : digits_) s += d;
    return s;
  }

  friend bool operator==(const DigitVector&, const DigitVector&) = default;

  /// Length-major, then digit-lexicographic.  Equals numeric order on
  /// canonical values of the same base.
  friend bool operator<(const DigitVector& a, const DigitVector& b) {
    if (a.base_ != b.base_) return a.base_ < b.base_;
    if (a.digits_.size() != b.digits_.size()) return a.digits_.size() < b.digits_.size();
    return a.digits_ < b.digits_;
  }

 private:
  Digit base_ = 10;
  std::vector<Digit> digits_{0};
};

/// Carries r_{-1}, r_0, ..., r_{n-1} of the multiplication k*N, stored with
/// r_{-1} at index 0.
class CarrySequence {
 public:
  CarrySequence() = default;
  explicit CarrySequence(std::vector<Digit> values) : values_(std::move(values)) {}

  /// r_i for -1 <= i <= n-1.
  Digit r(long i) const { return values_.at(static_cast<std::size_t>(i + 1)); }

  /// Number of digits n of the multiplicand.
  std::size_t length() const { return values_.empty() ? 0 : values_.size() - 1; }

  /// r_{-1} .. r_{n-1}, i.e. right to left in a multiplication tableau.
  const std::vector<Digit>& values() const { return values_; }

  /// r_0 .. r_{n-2}.
  std::vector<Digit> interior() const {
    if (values_.size() <= 2) return {};
    return {values_.begin() + 1, values_.end() - 1};
  }

  friend bool operator==(const CarrySequence&, const CarrySequence&) = default;

 private:
  std::vector<Digit> values_;
};

inline DigitVector reverse(const DigitVector& d) {
  std::vector<Digit> out(d.digits().rbegin(), d.digits().rend());
  return DigitVector(d.base(), std::move(out));
}

struct Product {
  DigitVector digits;
  CarrySequence carries;
};

/// Schoolbook k*N.  The product may be one digit longer than N; in that
/// case r_{n-1} is nonzero and becomes its leading digit.
inline Product mul_small(const DigitVector& d, Digit k) {
  const Digit g = d.base();
  if (k < 2 || k >= g) throw std::invalid_argument("mul_small: multiplier must satisfy 2 <= k < g");
  const std::size_t n = d.size();
  std::vector<Digit> carries(n + 1, 0);
  std::vector<Digit> low_first(n);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t p = std::uint64_t{k} * d.coeff(i) + carry;
    low_first[i] = static_cast<Digit>(p % g);
    carry = p / g;
    carries[i + 1] = static_cast<Digit>(carry);
  }
  if (carry != 0) low_first.push_back(static_cast<Digit>(carry));
  std::vector<Digit> msb(low_first.rbegin(), low_first.rend());
  return {DigitVector(g, std::move(msb)), CarrySequence(std::move(carries))};
}

/// Returns the witnessing carries when k*N is the digit reversal of N.
inline std::optional<CarrySequence> is_reverse_multiple(const DigitVector& d, Digit k) {
  Product p = mul_small(d, k);
  if (p.digits.size() != d.size()) return std::nullopt;
  if (p.digits != reverse(d)) return std::nullopt;
  return p.carries;
}

/// Every (g,k)-reverse multiple with at most `max_digits` digits, by
/// exhaustive scan.  Output is ascending because the scan runs by length and
/// then in lexicographic digit order.  Refuses (BudgetExceeded) when the
/// candidate count g^max_digits - 1 would exceed `budget`.
inline std::vector<DigitVector> brute_force_search(Digit g, Digit k, std::size_t max_digits,
                                                   std::uint64_t budget = 10'000'000) {
  if (g < 3) throw std::invalid_argument("brute_force_search: base must be at least 3");
  if (k < 2 || k >= g) throw std::invalid_argument("brute_force_search: need 2 <= k < g");
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < max_digits; ++i) {
    candidates *= g;
    if (candidates - 1 > budget)
      throw BudgetExceeded("brute_force_search: " + std::to_string(g) + "^" +
                           std::to_string(max_digits) + " candidates exceed budget " +
                           std::to_string(budget));
  }

  std::vector<DigitVector> found;
  for (std::size_t n = 1; n <= max_digits; ++n) {
    std::vector<Digit> a(n, 0);  // most significant first
    a[0] = 1;
    for (;;) {
      // k*N, checked against the reversal from the low end; bail on first mismatch.
      std::uint64_t carry = 0;
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = std::uint64_t{k} * a[n - 1 - i] + carry;
        if (p % g != a[i]) {
          ok = false;
          break;
        }
        carry = p / g;
      }
      if (ok && carry == 0) found.emplace_back(g, a);

      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++a[pos] < g) break;
        a[pos] = 0;
        if (pos == 0) break;
      }
      if (pos == 0 && a[0] == 0) break;
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Conversions and text.

inline BigInt to_bigint(const DigitVector& d) {
  BigInt v = 0;
  for (Digit x : d.digits()) v = v * d.base() + x;
  return v;
}

inline DigitVector from_bigint(BigInt v, Digit base) {
  if (v < 0) throw std::invalid_argument("from_bigint: negative value");
  if (v == 0) return DigitVector(base, {0});
  std::vector<Digit> low_first;
  while (v > 0) {
    low_first.push_back(static_cast<Digit>(static_cast<unsigned>(v % base)));
    v /= base;
  }
  return DigitVector(base, std::vector<Digit>(low_first.rbegin(), low_first.rend()));
}

/// The value as an unsigned 64-bit word, when it fits.
inline std::optional<std::uint64_t> to_u64(const DigitVector& d) {
  std::uint64_t v = 0;
  for (Digit x : d.digits()) {
    if (v > (UINT64_MAX - x) / d.base()) return std::nullopt;
    v = v * d.base() + x;
  }
  return v;
}

/// "(a_{n-1},...,a_0)_g".
inline std::string to_tuple(const DigitVector& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d.digits()[i];
  }
  os << ")_" << d.base();
  return os.str();
}

/// Decimal when the value fits 64 bits, tuple notation otherwise.
inline std::string to_display(const DigitVector& d) {
  if (auto v = to_u64(d)) return std::to_string(*v);
  return to_tuple(d);
}

inline std::ostream& operator<<(std::ostream& os, const DigitVector& d) { return os << to_tuple(d); }

/// Parses "(1,0,2,5,1,5)_8", "(1,0,2,5,1,5)" (base from `base`), or a plain
/// decimal integer whose base-`base` expansion is taken.  Parentheses select
/// tuple notation.  A tuple's explicit base must agree with `base` when both
/// are given.
inline DigitVector parse_number(std::string_view text, std::optional<Digit> base) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_uint = [](std::string_view s) -> std::uint64_t {
    if (s.empty()) throw std::invalid_argument("parse_number: empty field");
    std::uint64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("parse_number: bad digit '" + std::string(1, c) + "'");
      if (v > (UINT64_MAX - 9) / 10) throw std::invalid_argument("parse_number: field too large");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };

  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    auto close = text.find(')');
    if (close == std::string_view::npos) throw std::invalid_argument("parse_number: missing ')'");
    std::optional<Digit> tuple_base;
    std::string_view rest = trim(text.substr(close + 1));
    if (!rest.empty()) {
      if (rest.front() != '_') throw std::invalid_argument("parse_number: expected '_base' after tuple");
      tuple_base = static_cast<Digit>(parse_uint(trim(rest.substr(1))));
    }
    if (tuple_base && base && *tuple_base != *base)
      throw std::invalid_argument("parse_number: tuple base disagrees with --g");
    Digit b = tuple_base ? *tuple_base : base ? *base : 0;
    if (b == 0) throw std::invalid_argument("parse_number: base not given");
    std::vector<Digit> digits;
    std::string_view body = text.substr(1, close - 1);
    while (true) {
      auto comma = body.find(',');
      std::uint64_t v = parse_uint(trim(body.substr(0, comma)));
      if (v >= b) throw std::invalid_argument("parse_number: digit " + std::to_string(v) + " not below base");
      digits.push_back(static_cast<Digit>(v));
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    return DigitVector(b, std::move(digits));
  }

  if (!base) throw std::invalid_argument("parse_number: base not given");
  if (text.empty()) throw std::invalid_argument("parse_number: empty input");
  BigInt v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("parse_number: bad decimal digit '" + std::string(1, c) + "'");
    v = v * 10 + (c - '0');
  }
  return from_bigint(v, *base);
}

}  // namespace revmult
