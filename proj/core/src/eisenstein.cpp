#include "picard/eisenstein.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace picard {

namespace {

// Nearest integer to num/den (den > 0), ties rounded up.
Integer round_div(const Integer& num, const Integer& den) {
  Integer twice = 2 * num + den;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Integer(2 * den).get_mpz_t());
  return q;
}

}  // namespace

EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) {
  // (a + b z)(c + d z) = ac - bd + (ad + bc - bd) z
  Integer bd = b_ * o.b_;
  Integer na = a_ * o.a_ - bd;
  Integer nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::complex<double> EisensteinInt::to_complex() const {
  // zeta = -1/2 + i*sqrt(3)/2; b = 0 gives an imaginary part of +0.0.
  const double a = a_.get_d();
  const double b = b_.get_d();
  return {a - 0.5 * b, b * (std::sqrt(3.0) / 2.0)};
}

std::string EisensteinInt::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& w) {
  if (sgn(w.b()) == 0) return os << w.a();
  if (sgn(w.a()) != 0) os << w.a() << (sgn(w.b()) > 0 ? "+" : "-");
  else if (sgn(w.b()) < 0) os << "-";
  Integer mag = abs(w.b());
  if (mag != 1) os << mag;
  return os << "z";
}

bool divides(const EisensteinInt& d, const EisensteinInt& w) {
  if (d.is_zero()) throw std::domain_error("divides: zero divisor");
  const Integer n = d.norm();
  const EisensteinInt p = w * d.conj();
  return mpz_divisible_p(p.a().get_mpz_t(), n.get_mpz_t()) &&
         mpz_divisible_p(p.b().get_mpz_t(), n.get_mpz_t());
}

EisensteinInt div_exact(const EisensteinInt& d, const EisensteinInt& w) {
  if (!divides(d, w)) throw std::domain_error("div_exact: " + d.to_string() + " does not divide " + w.to_string());
  const Integer n = d.norm();
  const EisensteinInt p = w * d.conj();
  Integer qa, qb;
  mpz_divexact(qa.get_mpz_t(), p.a().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qb.get_mpz_t(), p.b().get_mpz_t(), n.get_mpz_t());
  return {qa, qb};
}

EisensteinDivMod divmod(const EisensteinInt& w, const EisensteinInt& d) {
  if (d.is_zero()) throw std::domain_error("divmod: zero divisor");
  const Integer n = d.norm();
  const EisensteinInt p = w * d.conj();
  EisensteinInt q(round_div(p.a(), n), round_div(p.b(), n));
  EisensteinInt r = w - q * d;
  return {std::move(q), std::move(r)};
}

EisensteinInt canonical_associate(const EisensteinInt& w) {
  if (w.is_zero()) return w;
  // arg(a + b z) in [0, pi/3)  <=>  b >= 0 and a > b.
  const EisensteinInt z = EisensteinInt::zeta();
  const std::array<EisensteinInt, 6> units{EisensteinInt(1), EisensteinInt(-1), z, -z, z * z, -(z * z)};
  for (const auto& u : units) {
    EisensteinInt c = u * w;
    if (sgn(c.b()) >= 0 && c.a() > c.b()) return c;
  }
  throw std::logic_error("canonical_associate: no associate in the fundamental sector");
}

EisensteinIdeal::EisensteinIdeal(const EisensteinInt& generator) : gen_(canonical_associate(generator)) {
  if (gen_.is_zero()) throw std::domain_error("EisensteinIdeal: zero ideal");
}

Twelfth Twelfth::from_rational(const Rational& r) {
  Rational s = 12 * r;
  s.canonicalize();
  if (s.get_den() != 1) throw std::domain_error("Twelfth: denominator of " + r.get_str() + " does not divide 12");
  return from_twelfths(s.get_num());
}

bool Twelfth::is_multiple_of(const Integer& n) const {
  Integer m = 12 * n;
  return mpz_divisible_p(num_.get_mpz_t(), m.get_mpz_t()) != 0;
}

std::string Twelfth::to_string() const {
  return to_rational().get_str();
}

std::ostream& operator<<(std::ostream& os, const Twelfth& t) { return os << t.to_string(); }

}  // namespace picard
