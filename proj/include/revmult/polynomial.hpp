#pragma once

// Exact univariate polynomials over the integers and reduced ratios of them.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace revmult {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients in ascending degree, no trailing zeros.  The zero polynomial
/// has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial constant(const BigInt& v) { return IntPolynomial(std::vector<BigInt>{v}); }
  static IntPolynomial monomial(const BigInt& coef, std::size_t degree) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = coef;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  /// Lowest degree with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < c_.size() && c_[v] == 0) ++v;
    return v < c_.size() ? v : 0;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial operator-() const {
    IntPolynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  friend IntPolynomial operator*(const BigInt& s, IntPolynomial p) {
    if (s == 0) return {};
    for (auto& v : p.c_) v *= s;
    return p;
  }

  /// Multiplies by x^n.
  IntPolynomial shifted(std::size_t n) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(n);
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(r));
  }

  /// p(x^m).
  IntPolynomial spread(std::size_t m) const {
    if (is_zero()) return {};
    std::vector<BigInt> r((c_.size() - 1) * m + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * m] = c_[i];
    return IntPolynomial(std::move(r));
  }

  /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) {
      g = boost::multiprecision::gcd(g, v);
      if (g == 1) break;
    }
    return g;
  }

  /// Divides every coefficient by `d`; the division must be exact.
  IntPolynomial divided_by(const BigInt& d) const {
    if (d == 0) throw std::domain_error("IntPolynomial: division by zero scalar");
    IntPolynomial r = *this;
    for (auto& v : r.c_) {
      BigInt q, rem;
      boost::multiprecision::divide_qr(v, d, q, rem);
      if (rem != 0) throw std::domain_error("IntPolynomial: inexact scalar division");
      v = std::move(q);
    }
    return r;
  }

  /// Content removed, leading coefficient positive.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    IntPolynomial r = divided_by(content());
    if (r.leading() < 0) r = -r;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/// Exact quotient a/b in Z[x]; throws std::domain_error when b does not
/// divide a.
inline IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_divide: not divisible");
  std::vector<BigInt> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> q(rem.size() - db);
  const BigInt& lb = b.leading();
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt& top = rem[i + db];
    if (top == 0) continue;
    BigInt qi, r;
    boost::multiprecision::divide_qr(top, lb, qi, r);
    if (r != 0) throw std::domain_error("exact_divide: not divisible");
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= qi * b.coeffs()[j];
    q[i] = std::move(qi);
  }
  for (const auto& v : rem)
    if (v != 0) throw std::domain_error("exact_divide: not divisible");
  return IntPolynomial(std::move(q));
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const BigInt& lb = b.leading();
  for (std::size_t top = r.size(); top-- > db;) {
    BigInt lead = r[top];
    for (auto& v : r) v *= lb;
    if (lead != 0)
      for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= lead * b.coeffs()[j];
  }
  return IntPolynomial(std::move(r));
}

/// Subresultant PRS.  The result is content-gcd times the primitive gcd,
/// with positive leading coefficient; gcd(p, 0) is p normalized.
inline IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (a.degree() < b.degree()) std::swap(a, b);
  const BigInt d = boost::multiprecision::gcd(a.content(), b.content());
  a = a.primitive_part();
  b = b.primitive_part();
  BigInt g = 1, h = 1;
  for (;;) {
    const long delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = IntPolynomial{1};
      break;
    }
    BigInt hd = 1;
    for (long i = 0; i < delta; ++i) hd *= h;
    a = std::move(b);
    b = r.divided_by(g * hd);
    g = a.leading();
    // h <- g^delta / h^(delta-1); unchanged when delta == 0
    if (delta > 0) {
      BigInt gd = 1, hdm1 = 1;
      for (long i = 0; i < delta; ++i) gd *= g;
      for (long i = 0; i + 1 < delta; ++i) hdm1 *= h;
      h = gd / hdm1;
    }
  }
  return d * b.primitive_part();
}

inline std::string to_string(const IntPolynomial& p, const char* var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

/// numerator / denominator in lowest terms with denominator(0) == 1, i.e. a
/// formal power series with integer coefficients.
class RationalGF {
 public:
  RationalGF() : num_(), den_{1} {}
  RationalGF(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RationalGF&, const RationalGF&) = default;

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  RationalGF shifted(std::size_t n) const { return {num_.shifted(n), den_}; }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("RationalGF: zero denominator");
    if (num_.is_zero()) {
      den_ = IntPolynomial{1};
      return;
    }
    IntPolynomial g = gcd(num_, den_);
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
    const BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (c != 1) {
      num_ = num_.divided_by(c);
      den_ = den_.divided_by(c);
    }
    const BigInt d0 = den_.coeff(0);
    if (d0 == 0) throw std::domain_error("RationalGF: not a power series (denominator vanishes at 0)");
    if (d0 < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_.coeff(0) != 1) throw std::domain_error("RationalGF: series would not have integer coefficients");
  }

  IntPolynomial num_;
  IntPolynomial den_;
};

/// "x^4*(1 + x) / (1 - x^2 - x^4)": any power of x is factored out of the
/// numerator; remaining polynomials are in ascending powers.
inline std::string to_string(const RationalGF& f) {
  if (f.is_zero()) return "0";
  const std::size_t v = f.numerator().valuation();
  std::vector<BigInt> rest(f.numerator().coeffs().begin() + static_cast<long>(v), f.numerator().coeffs().end());
  IntPolynomial r(std::move(rest));
  std::string num;
  std::string xv = v == 0 ? "" : v == 1 ? "x" : "x^" + std::to_string(v);
  if (r == IntPolynomial{1})
    num = v == 0 ? "1" : xv;
  else if (v == 0)
    num = r.degree() == 0 ? to_string(r) : "(" + to_string(r) + ")";
  else
    num = xv + "*(" + to_string(r) + ")";
  if (f.denominator() == IntPolynomial{1}) return num;
  return num + " / (" + to_string(f.denominator()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RationalGF& f) { return os << to_string(f); }

/// First `terms` Taylor coefficients, from the recurrence the denominator
/// imposes: den(0) = 1 so c_n = num_n - sum_{j>=1} den_j c_{n-j}.
inline std::vector<BigInt> series(const RationalGF& f, std::size_t terms) {
  const auto& num = f.numerator();
  const auto& den = f.denominator();
  std::vector<BigInt> c(terms);
  for (std::size_t n = 0; n < terms; ++n) {
    BigInt v = num.coeff(n);
    const std::size_t top = std::min<std::size_t>(n, static_cast<std::size_t>(den.degree()));
    for (std::size_t j = 1; j <= top; ++j) v -= den.coeffs()[j] * c[n - j];
    c[n] = std::move(v);
  }
  return c;
}

}  // namespace revmult
