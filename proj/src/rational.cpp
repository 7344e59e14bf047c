#include "deformlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace deformlab {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    fail(Errc::ParseError, "invalid rational literal '" + text + "'");
  mpq_class v(mpz_class(num), mpz_class(den));
  if (v.get_den() == 0) fail(Errc::ParseError, "zero denominator in '" + text + "'");
  v.canonicalize();
  Rational r;
  r.v_ = std::move(v);
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base.is_zero()) fail(Errc::DivisionByZero, "0 raised to a negative power");
    return Rational(1) / pow(base, -exp);
  }
  Rational r(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const mpz_class num = x.numerator(), den = x.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational::parse(rn.get_str() + "/" + rd.get_str());
}

Rational reconstruct_rational(double x, long max_den) {
  // Continued-fraction convergents p/q with q <= max_den.
  if (!std::isfinite(x)) fail(Errc::InvalidArgument, "cannot reconstruct a non-finite value");
  const bool neg = x < 0;
  double y = neg ? -x : x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(y);
    if (fl > 1e15) break;
    const long a = static_cast<long>(fl);
    const long p2 = a * p1 + p0;
    const long q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double frac = y - fl;
    if (frac < 1e-12) break;
    y = 1.0 / frac;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  return neg ? -r : r;
}

}  // namespace deformlab
