#pragma once

/**
 * @file exact_algebra.hpp
 * @brief Exact rationals and univariate polynomials in the Hilbert degree m.
 *
 * Everything here is exact. Integers are GMP-backed so weight polynomials can
 * be evaluated at large (g, m) without overflow. A GLinearPoly is a polynomial
 * in m whose coefficients are affine in the genus g, which is the shape of
 * every genus-parametric weight formula the engines produce.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hmstab {

using BigInt = mpz_class;

/// Rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : value_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Renders "p" for integers and "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  mpq_class value_;
};

/// Dense polynomial in one indeterminate; coefficients_[k] multiplies m^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// The polynomial m.
  static UniPoly identity() { return UniPoly({Rational(0), Rational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Rational coeff(int power) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& at) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  /// Human form in the variable `var`, e.g. "8m^2 - 2m + 1".
  std::string to_string(const std::string& var = "m") const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// base(m) + g * g_part(m).
struct GLinearPoly {
  UniPoly base;
  UniPoly g_part;

  Rational operator()(const Rational& g, const Rational& m) const { return base(m) + g * g_part(m); }
  /// Substitute g first; result is a polynomial in m.
  UniPoly at_genus(const Rational& g) const { return base + g * g_part; }
  /// Substitute m first; result is a polynomial in g (degree <= 1).
  UniPoly at_degree(const Rational& m) const { return UniPoly({base(m), g_part(m)}); }

  friend bool operator==(const GLinearPoly&, const GLinearPoly&) = default;

  /// Collects powers of m with affine-in-g coefficients: "(32g - 40)m^2 + ...".
  std::string to_string() const;
};

struct Sample {
  std::int64_t at;
  Rational value;
};

struct GMSample {
  std::int64_t g;
  std::int64_t m;
  Rational value;
};

/// Unique polynomial of degree <= degree_bound through the first
/// degree_bound + 1 samples; remaining samples are checked against it.
UniPoly poly_fit(std::span<const Sample> samples, int degree_bound);

Rational poly_eval(const UniPoly& p, std::int64_t at);

/// Fits base + g * g_part with each part of m-degree <= m_degree_bound and
/// verifies every sample against the result.
GLinearPoly glinear_fit(std::span<const GMSample> samples, int m_degree_bound);

}  // namespace hmstab
