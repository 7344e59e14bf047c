#pragma once

#include <string>
#include <vector>

#include "deformlab/rational.hpp"

namespace deformlab {

/// Univariate polynomial in t over the rationals, kept with no trailing zero
/// coefficients (coeffs[k] multiplies t^k; the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  Poly(int c) : coeffs_{Rational(c)} { trim(); }
  Poly(const Rational& c) : coeffs_{c} { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly t(int power = 1) {
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
    c.back() = Rational(1);
    return Poly(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  /// Order of vanishing at t = 0; -1 for the zero polynomial.
  int valuation() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& x) const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder with deg(r) < deg(b).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Exact quotient; fails if b does not divide a.
Poly divexact(const Poly& a, const Poly& b);

/// Monic gcd (Euclid); gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// Rational function in t, reduced (gcd(num, den) = 1) with monic denominator.
class RationalFn {
 public:
  RationalFn() : num_(), den_(1) {}
  RationalFn(int c) : num_(c), den_(1) {}
  RationalFn(const Rational& c) : num_(c), den_(1) {}
  RationalFn(const Poly& p) : num_(p), den_(1) {}
  RationalFn(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Order at t = 0: valuation(num) - valuation(den); negative means a pole.
  int valuation_at_zero() const;
  Rational eval(const Rational& x) const;

  RationalFn& operator+=(const RationalFn& o) { *this = *this + o; return *this; }
  RationalFn& operator-=(const RationalFn& o) { *this = *this - o; return *this; }
  RationalFn& operator*=(const RationalFn& o) { *this = *this * o; return *this; }
  RationalFn& operator/=(const RationalFn& o) { *this = *this / o; return *this; }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  std::string str() const;

 private:
  Poly num_, den_;
};

}  // namespace deformlab

namespace Eigen {

template <>
struct NumTraits<deformlab::Poly> : GenericNumTraits<deformlab::Poly> {
  typedef deformlab::Poly Real;
  typedef deformlab::Poly NonInteger;
  typedef deformlab::Poly Nested;
  typedef deformlab::Poly Literal;
  static inline Real epsilon() { return deformlab::Poly(); }
  static inline Real dummy_precision() { return deformlab::Poly(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 16, AddCost = 200, MulCost = 400,
  };
};

template <>
struct NumTraits<deformlab::RationalFn> : GenericNumTraits<deformlab::RationalFn> {
  typedef deformlab::RationalFn Real;
  typedef deformlab::RationalFn NonInteger;
  typedef deformlab::RationalFn Nested;
  typedef deformlab::RationalFn Literal;
  static inline Real epsilon() { return deformlab::RationalFn(); }
  static inline Real dummy_precision() { return deformlab::RationalFn(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 32, AddCost = 800, MulCost = 1600,
  };
};

}  // namespace Eigen
