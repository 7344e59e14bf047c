#include "deformlab/polynomial.hpp"

#include <sstream>

namespace deformlab {

int Poly::valuation() const {
  if (is_zero()) return -1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

Rational Poly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  const Rational inv = Rational(1) / leading();
  return inv * *this;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator-(const Poly& a) {
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = -a.coeffs_[k];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rational& a, const Poly& b) {
  std::vector<Rational> c(b.coeffs_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a * b.coeffs_[k];
  return Poly(std::move(c));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Rational c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (k == 0)
      os << mag.str();
    else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  Poly r = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree()) + 1 : 0);
  const Rational lead_inv = Rational(1) / b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const Rational f = r.leading() * lead_inv;
    q[static_cast<std::size_t>(shift)] = f;
    std::vector<Rational> sub(static_cast<std::size_t>(shift) + 1);
    sub.back() = f;
    r -= Poly(std::move(sub)) * b;
  }
  return {Poly(std::move(q)), r};
}

Poly divexact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(Errc::InvalidArgument, "divexact: division is not exact");
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFn::RationalFn(Poly num, Poly den) {
  if (den.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  const Poly g = poly_gcd(num, den);
  num = divexact(num, g);
  den = divexact(den, g);
  const Rational lead_inv = Rational(1) / den.leading();
  num_ = lead_inv * num;
  den_ = lead_inv * den;
}

int RationalFn::valuation_at_zero() const {
  if (is_zero()) return 0;
  return num_.valuation() - den_.valuation();
}

Rational RationalFn::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) fail(Errc::DivisionByZero, "rational function has a pole at the evaluation point");
  return num_.eval(x) / d;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a) {
  RationalFn r = a;
  r.num_ = -r.num_;
  return r;
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "rational function division by zero");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFn::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace deformlab
