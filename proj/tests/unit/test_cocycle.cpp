#include <doctest.h>

#include <cmath>
#include <numbers>

#include "picard/cocycle.hpp"
#include "picard/presentation.hpp"

using namespace picard;

namespace {

const Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

// sigma through the explicit action h tau instead of j(gh)/j(h).
double sigma_direct(const GroupMatrix& g, const GroupMatrix& h, double cut = kPrincipalCut) {
  const NumericMatrix ng = NumericMatrix::embed(g), nh = NumericMatrix::embed(h), ngh = NumericMatrix::embed(g * h);
  const BallPoint tau = BallPoint::base_point(2);
  const Complex v = (j_tilde(ngh, tau, cut) - j_tilde(ng, act(nh, tau), cut) - j_tilde(nh, tau, cut)) / kTwoPiI;
  REQUIRE(std::abs(v.imag()) < 1e-8);
  REQUIRE(std::abs(v.real() - std::round(v.real())) < 1e-8);
  return std::round(v.real());
}

// (1/4) Tr(x / sqrt(-3)) with Tr = 2 Re, in twelfths.
long Sigma_twelfths(const EisensteinInt& a, const EisensteinInt& b) {
  const Complex x = a.to_complex() * std::conj(b.to_complex()) / Complex(0.0, std::sqrt(3.0));
  return std::lround(12.0 * 0.25 * 2.0 * x.real());
}

// Central value of a lifted relator, summed by hand along prefixes.
Rational defect_oracle(const Word& r, SigmaOrientation o, double cut = kPrincipalCut) {
  auto c = [&](const GroupMatrix& g, const EisensteinInt& pg, const GroupMatrix& h, const EisensteinInt& ph) {
    const long s = o == SigmaOrientation::printed ? Sigma_twelfths(pg, ph) : Sigma_twelfths(ph, pg);
    Rational v(12 * static_cast<long>(sigma_direct(g, h, cut)) - s, 12);
    v.canonicalize();
    return v;
  };
  Rational total = 0;
  GroupMatrix prefix = GroupMatrix::identity();
  EisensteinInt pphi;
  for (const auto& l : r) {
    const GroupMatrix& m = letter_matrix(l);
    if (l.sign < 0) total -= c(generator_matrix(l.generator), generator_phi(l.generator), m, phi(l));
    total += c(prefix, pphi, m, phi(l));
    prefix = prefix * m;
    pphi += phi(l);
  }
  total.canonicalize();
  return total;
}

}  // namespace

TEST_CASE("sigma vanishes on the identity and on inverse pairs") {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const Word w = sample_word(rng, 15);
    CHECK(sigma(Word(), w) == 0);
    CHECK(sigma(w, Word()) == 0);
  }
  for (int i = 1; i <= kGeneratorCount; ++i) {
    CHECK(sigma(generator_matrix(i), generator_inverse(i)) == 0);
    CHECK(sigma(generator_inverse(i), generator_matrix(i)) == 0);
  }
}

TEST_CASE("sigma agrees with the direct action formula") {
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const GroupMatrix g = evaluate(sample_word(rng, 10)), h = evaluate(sample_word(rng, 10));
    CHECK(sigma(g, h) == sigma_direct(g, h));
  }
}

TEST_CASE("sigma is independent of the base point") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Word g = sample_word(rng, 30), h = sample_word(rng, 30);
    SigmaConfig other;
    other.base_point = random_ball_point(rng, 2);
    other.second_point = random_ball_point(rng, 2);
    CHECK(sigma(g, h) == sigma(g, h, other));
  }
}

TEST_CASE("the rounding gate raises PrecisionError") {
  Rng rng(4);
  SigmaConfig strict;
  strict.round_tol = 1e-300;
  int raised = 0;
  for (int i = 0; i < 20; ++i) {
    try {
      (void)sigma(random_su(rng, 2), random_su(rng, 2), strict);
    } catch (const PrecisionError&) {
      ++raised;
    }
  }
  CHECK(raised > 0);
}

TEST_CASE("Sigma matches a floating oracle and is biadditive") {
  CHECK(Sigma(EisensteinInt(1), EisensteinInt::zeta()) == Twelfth::from_quarters(-1));
  CHECK(Sigma(EisensteinInt(3, 1), EisensteinInt(3, 1)) == Twelfth());
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) {
          const EisensteinInt x(a, b), y(c, d);
          CHECK(Sigma(x, y).twelfths() == Sigma_twelfths(x, y));
          CHECK(Sigma(x, y) == -Sigma(y, x));
        }
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const Word g1 = sample_word(rng, 20), g2 = sample_word(rng, 20), h = sample_word(rng, 20);
    CHECK(Sigma(g1 * g2, h) == Sigma(g1, h) + Sigma(g2, h));
    CHECK(Sigma(h, g1 * g2) == Sigma(h, g1) + Sigma(h, g2));
  }
}

TEST_CASE("sigma satisfies the cocycle relation") {
  Rng rng(6);
  for (int i = 0; i < 200; ++i)
    CHECK(cocycle_relation(sample_word(rng, 20), sample_word(rng, 20), sample_word(rng, 20)));
  for (int d : {2, 3})
    for (int i = 0; i < 200; ++i) CHECK(cocycle_relation(random_su(rng, d), random_su(rng, d), random_su(rng, d)));
  const Word h = parse_word("n1 n2"), k = parse_word("n5^-1 n3");
  CHECK(cocycle_relation(Word(), h, k));
}

TEST_CASE("relator defects") {
  const auto& rels = bundled_presentation().relators;
  // Swapped orientation, principal branch.
  const long frozen_halves[] = {0, 0, 0, 2, 1, 0, 0, 0, -1, 0, 1, 0, 0};
  CocycleOptions printed;
  printed.orientation = SigmaOrientation::printed;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    CAPTURE(rels[i].to_string());
    Rational f(frozen_halves[i], 2);
    f.canonicalize();
    CHECK(defect(rels[i]).to_rational() == f);
    CHECK(defect(rels[i]).to_rational() == defect_oracle(rels[i], SigmaOrientation::swapped));
    CHECK(defect(rels[i], printed).to_rational() == defect_oracle(rels[i], SigmaOrientation::printed));
  }
  CHECK_THROWS_AS(defect(parse_word("n1 n2")), std::invalid_argument);
}

TEST_CASE("extension product is associative and inverses cancel") {
  const Extension ext;
  Rng rng(7);
  std::uniform_int_distribution<long> central(-30, 30);
  for (int i = 0; i < 60; ++i) {
    ExtensionElement x = ext.lift(sample_word(rng, 12)), y = ext.lift(sample_word(rng, 12)),
                     z = ext.lift(sample_word(rng, 12));
    x.central += Twelfth::from_twelfths(central(rng));
    y.central += Twelfth::from_twelfths(central(rng));
    const ExtensionElement left = ext.multiply(ext.multiply(x, y), z);
    const ExtensionElement right = ext.multiply(x, ext.multiply(y, z));
    CHECK(left.matrix == right.matrix);
    CHECK(left.central == right.central);
    const ExtensionElement e = ext.multiply(x, ext.inverse(x));
    CHECK(e.matrix == GroupMatrix::identity());
    CHECK(e.central == Twelfth());
  }
}

TEST_CASE("solver-derived kappa") {
  const SplitPipeline pipe = derive_kappa();
  CHECK(pipe.kappa[1] == Twelfth::from_twelfths(-1));
  CHECK(pipe.kappa[2] == Twelfth());
  CHECK(pipe.kappa[3] == Twelfth::from_twelfths(-2));
  CHECK(pipe.kappa[4] == Twelfth::from_twelfths(-1));
  CHECK(pipe.kappa[5] == Twelfth::from_twelfths(-2));

  const SplitPipeline upper = derive_kappa({}, SplitNormalization::upper_triangular_zero);
  CHECK(upper.kappa[1] == Twelfth());
  CHECK(upper.kappa[2] == Twelfth());

  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const Word g = sample_word(rng, 30), h = sample_word(rng, 30);
    CHECK(verify_split(pipe.kappa, g, h));
    CHECK(verify_split(upper.kappa, g, h));
  }
  for (const auto& r : bundled_presentation().relators) CHECK(kappa(pipe.kappa, r) == Twelfth());
  CHECK(kappa(pipe.kappa, Word()) == Twelfth());
}

TEST_CASE("a corrupted kappa table is caught by the relators") {
  const KappaTable good = derive_kappa().kappa;
  const auto& rels = bundled_presentation().relators;
  // n3 appears with nonzero exponent sum in a relator, so shifting it breaks well-definedness.
  KappaTable bad = good;
  bad.values[2] += Twelfth::from_twelfths(1);
  bool relator_moved = false;
  for (const auto& r : rels) relator_moved = relator_moved || kappa(bad, r) != Twelfth();
  CHECK(relator_moved);

  // n2 has exponent sum zero in every relator: the shift is a homogeneous solution.
  KappaTable shifted = good;
  shifted.values[1] += Twelfth::from_twelfths(1);
  for (const auto& r : rels) CHECK(kappa(shifted, r) == Twelfth());
  Rng rng(9);
  for (int i = 0; i < 50; ++i) CHECK(verify_split(shifted, sample_word(rng, 20), sample_word(rng, 20)));
}

TEST_CASE("the printed orientation does not split") {
  CocycleOptions printed;
  printed.orientation = SigmaOrientation::printed;
  const auto& p = bundled_presentation();
  const ExtensionPresentation ext = build_extension(p, compute_defects(p, printed));
  const ExtensionReport rep = extension_abelianization(ext);
  CHECK(rep.forces_pure_z);
  CHECK(rep.z_order == 24);
  CHECK_THROWS_AS(derive_kappa(printed), SplitError);
}

TEST_CASE("a rotated cut for log X reproduces the published relations") {
  CocycleOptions rotated;
  rotated.sigma.x_log_cut = -3.0 * std::numbers::pi / 8.0;
  const auto& p = bundled_presentation();
  const ExtensionPresentation ext = build_extension(p, compute_defects(p, rotated));
  const ExtensionReport rep = extension_abelianization(ext);
  CHECK(rep.lattices_equal);
  CHECK(annihilates(published_phi(), ext.relation_matrix));

  // The published Phi then gives a working splitting.
  const KappaTable table = KappaTable::from_splitting(published_phi());
  Rng rng(10);
  for (int i = 0; i < 100; ++i) CHECK(verify_split(table, sample_word(rng, 20), sample_word(rng, 20), rotated));
}

TEST_CASE("multiplier") {
  const KappaTable table = derive_kappa().kappa;
  const EisensteinIdeal i(EisensteinInt(1, 2));
  const BallPoint tau = BallPoint::base_point(2);
  CHECK(std::abs(multiplier(table, Word(), tau, i) - Complex(1.0, 0.0)) < 1e-15);
  CHECK_THROWS_AS(multiplier(table, parse_word("n1"), tau, i), std::invalid_argument);

  Rng rng(11);
  for (const EisensteinIdeal ideal : {i, EisensteinIdeal(EisensteinInt(2))}) {
    const double n = ideal.norm().get_d();
    for (int k = 0; k < 100; ++k) {
      const Word g = sample_word_in_nc(rng, ideal, 12), h = sample_word_in_nc(rng, ideal, 12);
      const BallPoint t = random_ball_point(rng, 2);
      const Complex lhs = multiplier(table, g * h, t, ideal);
      const Complex rhs =
          multiplier(table, g, act(NumericMatrix::embed(evaluate(h)), t), ideal) * multiplier(table, h, t, ideal);
      CHECK(std::abs(lhs - rhs) <= 1e-8 * std::abs(rhs));
      const Complex l = multiplier(table, g, t, ideal);
      const Complex j = j_factor(NumericMatrix::embed(evaluate(g)), t);
      CHECK(std::abs(std::pow(l, 12.0 * n) / std::pow(j, 12.0) - 1.0) < 1e-8);
      CHECK(divisibility_check(g, h, ideal));
    }
  }
}

TEST_CASE("divisibility") {
  const EisensteinIdeal two(EisensteinInt(2));
  const Word c = Word::commutator(parse_word("n1 n2"), parse_word("n4"));
  CHECK(Sigma(c, c) == Twelfth());
  CHECK(divisibility_check(c, c, two));
  // phi = 4 and phi = 4 zeta.
  const Word g = parse_word("n1^4"), h = parse_word("n2^4");
  CHECK(Sigma(g, h).twelfths() == Sigma_twelfths(EisensteinInt(4), EisensteinInt(0, 4)));
  CHECK(divisibility_check(g, h, two));
  CHECK_THROWS_AS(divisibility_check(parse_word("n1"), g, two), std::invalid_argument);
}

TEST_CASE("orientation names") {
  CHECK(parse_orientation("printed") == SigmaOrientation::printed);
  CHECK(std::string(to_string(SigmaOrientation::swapped)) == "swapped");
  CHECK_THROWS_AS(parse_orientation("sideways"), std::invalid_argument);
}
