#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <string>

#include "deformlab/error.hpp"

namespace deformlab {

/// Arbitrary-precision rational scalar, kept in canonical form
/// (gcd(num, den) == 1, den > 0). All operations are exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "p" or "p/q" (decimal-free, optional leading '-').
  static Rational parse(const std::string& text);

  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(Errc::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    Rational r = a;
    r /= b;
    return r;
  }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Integer power with exact arithmetic; pow(0, 0) == 1.
Rational pow(const Rational& base, long exp);

/// Nearest rational with denominator <= max_den (continued fractions);
/// used by the floating-point search heuristics, never by core arithmetic.
Rational reconstruct_rational(double x, long max_den);

/// Exact square root when the value is a perfect square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

}  // namespace deformlab

namespace Eigen {

template <>
struct NumTraits<deformlab::Rational> : GenericNumTraits<deformlab::Rational> {
  typedef deformlab::Rational Real;
  typedef deformlab::Rational NonInteger;
  typedef deformlab::Rational Nested;
  typedef deformlab::Rational Literal;

  static inline Real epsilon() { return deformlab::Rational(0); }
  static inline Real dummy_precision() { return deformlab::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 100,
    MulCost = 100,
  };
};

}  // namespace Eigen
