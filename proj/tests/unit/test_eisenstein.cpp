#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "picard/eisenstein.hpp"

using namespace picard;

namespace {

// (a + b z)(c + d z) with z^2 = -1 - z, by hand.
std::pair<long, long> mul(long a, long b, long c, long d) { return {a * c - b * d, a * d + b * c - b * d}; }

std::complex<double> embed(long a, long b) {
  const std::complex<double> zeta = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  return static_cast<double>(a) + static_cast<double>(b) * zeta;
}

}  // namespace

TEST_CASE("zeta satisfies its minimal polynomial") {
  const EisensteinInt z = EisensteinInt::zeta();
  CHECK(z * z == EisensteinInt(-1, -1));
  CHECK(z * z * z == EisensteinInt(1));
  CHECK(z * z + z + EisensteinInt(1) == EisensteinInt());
  CHECK(EisensteinInt::sqrt_minus3() * EisensteinInt::sqrt_minus3() == EisensteinInt(-3));
}

TEST_CASE("conj, norm and trace match the complex embedding") {
  for (long a = -7; a <= 7; ++a)
    for (long b = -7; b <= 7; ++b) {
      const EisensteinInt w(a, b);
      const auto c = embed(a, b);
      CHECK(w.norm().get_si() == doctest::Approx(std::norm(c)).epsilon(1e-12));
      CHECK(w.trace().get_si() == doctest::Approx(2.0 * c.real()).epsilon(1e-12));
      const auto cc = w.conj().to_complex();
      CHECK(std::abs(cc - std::conj(c)) < 1e-12);
      CHECK(w * w.conj() == EisensteinInt(Integer(w.norm()), 0));
    }
}

TEST_CASE("to_complex keeps +0.0 in the imaginary part of rational integers") {
  const auto c = EisensteinInt(-3).to_complex();
  CHECK(c.imag() == 0.0);
  CHECK_FALSE(std::signbit(c.imag()));
}

TEST_CASE("Tr(w / sqrt(-3)) agrees with a rational oracle on the grid |a|,|b| <= 50") {
  // 1/sqrt(-3) = conj(1 + 2z) / 3 = (-1 - 2z) / 3 and Tr(p + q z) = 2p - q.
  for (long a = -50; a <= 50; ++a)
    for (long b = -50; b <= 50; ++b) {
      const auto [p, q] = mul(a, b, -1, -2);
      const long num = 2 * p - q;
      REQUIRE(num % 3 == 0);
      CHECK(EisensteinInt(a, b).tr_over_sqrt_minus3() == num / 3);
    }
}

TEST_CASE("norm is multiplicative") {
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) {
          const EisensteinInt x(a, b), y(c, d);
          CHECK((x * y).norm() == x.norm() * y.norm());
          const auto [e, f] = mul(a, b, c, d);
          CHECK(x * y == EisensteinInt(e, f));
        }
}

TEST_CASE("divmod leaves a remainder of smaller norm") {
  for (long a = -20; a <= 20; a += 3)
    for (long b = -20; b <= 20; b += 2)
      for (const EisensteinInt d : {EisensteinInt(2), EisensteinInt(1, 2), EisensteinInt(3, 1), EisensteinInt(-4, 5)}) {
        const EisensteinInt w(a, b);
        const auto r = divmod(w, d);
        CHECK(r.quotient * d + r.remainder == w);
        CHECK(r.remainder.norm() < d.norm());
      }
}

TEST_CASE("divides and div_exact") {
  CHECK(divides(EisensteinInt(1, 2), EisensteinInt(3)));
  CHECK(div_exact(EisensteinInt(1, 2), EisensteinInt(3)) * EisensteinInt(1, 2) == EisensteinInt(3));
  CHECK_FALSE(divides(EisensteinInt(2), EisensteinInt(1, 1)));
  CHECK_THROWS_AS(divides(EisensteinInt(), EisensteinInt(1)), std::domain_error);
  CHECK(divides(EisensteinInt(5), EisensteinInt()));
}

TEST_CASE("canonical associate lies in the sector 0 <= arg < pi/3") {
  const EisensteinInt units[] = {{1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1}};
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      if (a == 0 && b == 0) continue;
      const EisensteinInt w(a, b);
      const EisensteinInt c = canonical_associate(w);
      const double arg = std::arg(c.to_complex());
      CHECK(arg >= -1e-12);
      CHECK(arg < std::numbers::pi / 3 - 1e-12);
      bool associate = false;
      for (const auto& u : units) associate = associate || u * c == w;
      CHECK(associate);
      for (const auto& u : units) CHECK(canonical_associate(u * w) == c);
    }
}

TEST_CASE("ideals") {
  const EisensteinIdeal i(EisensteinInt(1, 2));
  CHECK(i.norm() == 3);
  CHECK(i.contains(EisensteinInt(3)));
  CHECK(i.contains(EisensteinInt(1, 2) * EisensteinInt(4, -7)));
  CHECK_FALSE(i.contains(EisensteinInt(1)));
  CHECK(EisensteinIdeal(EisensteinInt(2)).norm() == 4);
  CHECK(i.scaled(EisensteinInt(2)).norm() == 12);
  CHECK(EisensteinIdeal(EisensteinInt(0, 2)) == EisensteinIdeal(EisensteinInt(-2)));
  CHECK(EisensteinIdeal::unit().contains(EisensteinInt(7, 3)));
  CHECK_THROWS(EisensteinIdeal(EisensteinInt()));
}

TEST_CASE("Twelfth arithmetic") {
  CHECK(Twelfth::from_quarters(1).twelfths() == 3);
  CHECK(Twelfth::from_quarters(1).to_string() == "1/4");
  CHECK(Twelfth::from_integer(-2).to_string() == "-2");
  CHECK(Twelfth::from_rational(Rational(5, 6)).twelfths() == 10);
  CHECK_THROWS_AS(Twelfth::from_rational(Rational(1, 5)), std::domain_error);
  CHECK((Twelfth::from_twelfths(5) + Twelfth::from_twelfths(7)).is_integer());
  CHECK(Twelfth::from_integer(9).is_multiple_of(3));
  CHECK_FALSE(Twelfth::from_twelfths(6).is_multiple_of(1));
  CHECK((-Twelfth::from_twelfths(4)).to_double() == doctest::Approx(-1.0 / 3.0));
}
