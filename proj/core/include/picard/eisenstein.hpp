#pragma once

#include <complex>
#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace picard {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element a + b*zeta of Z[zeta], zeta = exp(2*pi*i/3), zeta^2 = -1 - zeta.
class EisensteinInt {
 public:
  EisensteinInt() = default;
  EisensteinInt(long a) : a_(a) {}  // NOLINT: integers embed implicitly
  EisensteinInt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}
  EisensteinInt(long a, long b) : a_(a), b_(b) {}

  static EisensteinInt zeta() { return {0, 1}; }
  /// 1 + 2*zeta, the square root of -3 with positive imaginary part.
  static EisensteinInt sqrt_minus3() { return {1, 2}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  EisensteinInt conj() const { return {a_ - b_, -b_}; }
  Integer norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  Integer trace() const { return 2 * a_ - b_; }

  /// Tr(w / sqrt(-3)); equals the zeta-coefficient b.
  Integer tr_over_sqrt_minus3() const { return b_; }

  std::complex<double> to_complex() const;

  EisensteinInt operator-() const { return {-a_, -b_}; }
  EisensteinInt& operator+=(const EisensteinInt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  EisensteinInt& operator-=(const EisensteinInt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  EisensteinInt& operator*=(const EisensteinInt& o);

  friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  friend EisensteinInt operator*(EisensteinInt x, const EisensteinInt& y) { return x *= y; }

  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  Integer a_{0};
  Integer b_{0};
};

std::ostream& operator<<(std::ostream& os, const EisensteinInt& w);

/// True iff w / d lies in Z[zeta]. Throws std::domain_error for d = 0.
bool divides(const EisensteinInt& d, const EisensteinInt& w);

/// Returns w / d; throws std::domain_error when d = 0 or d does not divide w.
EisensteinInt div_exact(const EisensteinInt& d, const EisensteinInt& w);

/// Euclidean division with coordinate rounding: w = q*d + r, norm(r) < norm(d).
struct EisensteinDivMod {
  EisensteinInt quotient;
  EisensteinInt remainder;
};
EisensteinDivMod divmod(const EisensteinInt& w, const EisensteinInt& d);

/// The associate u*w (u a unit) whose argument lies in [0, pi/3).
EisensteinInt canonical_associate(const EisensteinInt& w);

/// Principal ideal of Z[zeta], stored by its canonical generator.
class EisensteinIdeal {
 public:
  explicit EisensteinIdeal(const EisensteinInt& generator);

  static EisensteinIdeal unit() { return EisensteinIdeal(EisensteinInt(1)); }

  const EisensteinInt& gen() const { return gen_; }
  Integer norm() const { return gen_.norm(); }
  bool contains(const EisensteinInt& w) const { return divides(gen_, w); }

  /// The ideal (c) * I.
  EisensteinIdeal scaled(const EisensteinInt& c) const { return EisensteinIdeal(c * gen_); }

  friend bool operator==(const EisensteinIdeal&, const EisensteinIdeal&) = default;

 private:
  EisensteinInt gen_;
};

/// Value num/12 with a fixed denominator.
class Twelfth {
 public:
  Twelfth() = default;
  static Twelfth from_twelfths(Integer num) {
    Twelfth t;
    t.num_ = std::move(num);
    return t;
  }
  static Twelfth from_integer(const Integer& n) { return from_twelfths(12 * n); }
  static Twelfth from_quarters(const Integer& q) { return from_twelfths(3 * q); }
  /// Throws std::domain_error unless 12*r is an integer.
  static Twelfth from_rational(const Rational& r);

  const Integer& twelfths() const { return num_; }
  Rational to_rational() const {
    Rational r(num_, 12);
    r.canonicalize();
    return r;
  }
  double to_double() const { return num_.get_d() / 12.0; }
  bool is_integer() const { return mpz_divisible_ui_p(num_.get_mpz_t(), 12) != 0; }
  /// True iff the value lies in n*Z for a nonzero integer n.
  bool is_multiple_of(const Integer& n) const;

  Twelfth operator-() const { return from_twelfths(-num_); }
  Twelfth& operator+=(const Twelfth& o) {
    num_ += o.num_;
    return *this;
  }
  Twelfth& operator-=(const Twelfth& o) {
    num_ -= o.num_;
    return *this;
  }
  friend Twelfth operator+(Twelfth x, const Twelfth& y) { return x += y; }
  friend Twelfth operator-(Twelfth x, const Twelfth& y) { return x -= y; }
  friend bool operator==(const Twelfth& x, const Twelfth& y) { return x.num_ == y.num_; }

  /// Reduced fraction text, e.g. "-1/4", "0", "3".
  std::string to_string() const;

 private:
  Integer num_{0};
};

std::ostream& operator<<(std::ostream& os, const Twelfth& t);

}  // namespace picard
