#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lieosc/error.hpp"

namespace lieosc {

/// Arbitrary-precision rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a shared immutable GMP rational. The value is
/// always reduced with a positive denominator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  /// Parses "p", "-p" or "p/q" with decimal integers of any length.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  double to_double() const;
  mpq_class to_mpq() const;

  /// Decimal fraction "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  /// Numerator and denominator as decimal strings.
  std::string numerator_string() const;
  std::string denominator_string() const;

  /// The value as int64 when it is an integer that fits.
  bool fits_int64() const { return !big_ && den_ == 1; }
  std::int64_t as_int64() const;

 private:
  void assign(const mpq_class& q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

/// Exact element of the ring of finite sums  sum_d (re_d + i im_d) sqrt(d)
/// with rational re_d, im_d and squarefree positive radicands d.
///
/// Terms are kept sorted by radicand with no all-zero terms, so two values are
/// equal exactly when their term lists are equal.
class Surd {
 public:
  struct Term {
    std::uint64_t radicand;
    Rational re;
    Rational im;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Unnormalized input term; the radicand need not be squarefree.
  struct RawTerm {
    std::int64_t radicand;
    Rational re;
    Rational im;
  };

  Surd() = default;
  Surd(const Rational& q);  // NOLINT(google-explicit-constructor)
  Surd(std::int64_t n) : Surd(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rational& re, const Rational& im);

  /// Canonicalizes raw terms: extracts square factors, merges radicands and
  /// drops zero terms. Throws InvalidScalar on a non-positive radicand.
  static Surd normalize(const std::vector<RawTerm>& raw);

  /// sqrt(q) for a nonnegative rational q.
  static Surd sqrt(const Rational& q);
  static Surd i() { return Surd(Rational(0), Rational(1)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  /// True when the value is a plain rational (radicand 1, no imaginary part).
  bool is_rational() const;
  /// The rational value; throws InvalidScalar when !is_rational().
  Rational rational() const;

  Surd conj() const;
  Surd real_part() const;
  Surd imag_part() const;
  Surd times_i() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator*=(const Rational& q);
  /// Division by a nonzero rational; the only division the ring offers.
  Surd& operator/=(const Rational& q);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator*(Surd a, const Rational& q) { return a *= q; }
  friend Surd operator*(const Rational& q, Surd a) { return a *= q; }
  friend Surd operator/(Surd a, const Rational& q) { return a /= q; }
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  /// Modulus of to_complex(); used to rank residual entries.
  double magnitude() const { return std::abs(to_complex()); }

  /// Canonical text form, e.g. "1/2+sqrt(2)-3/4*i*sqrt(3)"; "0" for zero.
  std::string to_string() const;
  static Surd parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

/// Squarefree decomposition n = square^2 * core.
struct SquarefreeSplit {
  std::uint64_t square;
  std::uint64_t core;
};
SquarefreeSplit squarefree_split(std::uint64_t n);

}  // namespace lieosc
