#include <doctest.h>

#include <algorithm>

#include "picard/group.hpp"
#include "picard/presentation.hpp"

using namespace picard;

namespace {

std::vector<Integer> row(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Rational q(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("exponent rows") {
  const Presentation p{5, {parse_word("[n1,n3]"), parse_word("(n3 n5)^3"), parse_word("n1^-2 n4")}};
  const IntegerMatrix m = exponent_matrix(p);
  CHECK(m.row(0) == row({0, 0, 0, 0, 0}));
  CHECK(m.row(1) == row({0, 0, 3, 0, 3}));
  CHECK(m.row(2) == row({-2, 0, 0, 1, 0}));
}

TEST_CASE("bundled presentation") {
  const auto& p = bundled_presentation();
  CHECK(p.generator_count == 5);
  const IntegerMatrix m = exponent_matrix(p);
  CHECK(m.rows() == 13);
  CHECK(m.cols() == 5);
  const HermiteForm h = hnf(m);
  CHECK(h.h.nonzero_rows() == std::vector<std::vector<Integer>>{row({3, 0, 0, 3, 0}), row({0, 0, 3, 0, 0}), row({0, 0, 0, 0, 3})});
  CHECK(abelianization(p) == AbelianStructure{2, {3, 3, 3}});
  CHECK_THROWS_AS(parse_presentation("n1 n6", 5), std::invalid_argument);
}

TEST_CASE("abelianization of small presentations") {
  CHECK(abelianization(Presentation{2, {}}) == AbelianStructure{2, {}});
  CHECK(abelianization(Presentation{1, {parse_word("n1^3")}}) == AbelianStructure{0, {3}});
  CHECK(abelianization(Presentation{2, {parse_word("n1^2"), parse_word("n2^3")}}) == AbelianStructure{0, {6}});
  CHECK(abelianization(Presentation{2, {parse_word("n1^4 n2^6")}}) == AbelianStructure{1, {2}});
  CHECK(abelianization(Presentation{2, {parse_word("[n1,n2]")}}) == AbelianStructure{2, {}});
}

TEST_CASE("abelianization is invariant under Tietze moves") {
  const Presentation base = bundled_presentation();
  const AbelianStructure want = abelianization(base);
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Presentation p = base;
    for (auto& r : p.relators) {
      switch (rng() % 4) {
        case 0: r = r.inverse(); break;
        case 1: {
          const Word x = Word::generator(static_cast<int>(1 + rng() % 5), (rng() & 1) ? 1 : -1);
          r = x * r * x.inverse();
          break;
        }
        case 2: r = r.rotated(rng() % std::max<std::size_t>(1, r.size())); break;
        default: break;
      }
    }
    std::shuffle(p.relators.begin(), p.relators.end(), rng);
    // A consequence of two relators may be added freely.
    p.relators.push_back(p.relators[0] * p.relators[1].inverse());
    CHECK(abelianization(p) == want);
  }
}

TEST_CASE("build_extension") {
  const auto& p = bundled_presentation();
  const auto defects = compute_defects(p);
  const ExtensionPresentation ext = build_extension(p, defects);
  CHECK(ext.generator_count() == 6);
  CHECK(ext.presentation.relators.size() == 18);
  CHECK(ext.relation_matrix.rows() == 18);
  for (std::size_t i = 0; i < 13; ++i)
    CHECK(ext.relation_matrix(i, 5) == -defects[i].twelfths());
  CHECK(ext.relation_matrix(0, 5) == 0);
  for (std::size_t i = 13; i < 18; ++i) CHECK(ext.relation_matrix.row_is_zero(i));
  CHECK(exponent_matrix(ext.presentation) == ext.relation_matrix);
  CHECK_THROWS_AS(build_extension(p, {}), std::invalid_argument);
}

TEST_CASE("extension abelianization against the published relations") {
  const auto& p = bundled_presentation();
  const ExtensionReport rep = extension_abelianization(build_extension(p, compute_defects(p)));
  REQUIRE(rep.published.size() == 3);
  CHECK(rep.published[0].in_computed);
  CHECK(rep.published[1].in_computed);
  // With the principal branch the n5 relation comes out as z^6, not z^-30.
  CHECK_FALSE(rep.published[2].in_computed);
  CHECK(in_row_lattice(IntegerMatrix::from_rows(rep.hnf_rows, 6), row({0, 0, 0, 0, 3, -6})));
  CHECK_FALSE(rep.lattices_equal);
  CHECK_FALSE(rep.forces_pure_z);
  CHECK(rep.z_order == 0);
  CHECK(rep.structure.free_rank == 3);
}

TEST_CASE("published Phi kills the published relations") {
  CHECK(annihilates(published_phi(), published_extension_relations()));
}

TEST_CASE("solve_split") {
  const auto& p = bundled_presentation();
  const ExtensionPresentation ext = build_extension(p, compute_defects(p));
  const SplitSolution s = solve_split(ext);
  CHECK(s.particular == std::vector<Rational>{q(1, 12), 0, q(2, 12), q(1, 12), q(2, 12), q(1, 12)});
  CHECK(annihilates(s.particular, ext.relation_matrix));
  REQUIRE(s.homogeneous.size() == 2);
  for (const auto& v : s.homogeneous) {
    std::vector<Rational> h(v.begin(), v.end());
    CHECK(annihilates(h, ext.relation_matrix));
    CHECK(v[5] == 0);
  }
  // Together the homogeneous vectors span the lattice of (1,0,0,-1,0,0) and (0,1,0,0,0,0).
  CHECK(same_row_lattice(IntegerMatrix::from_rows(s.homogeneous, 6), IntegerMatrix{{1, 0, 0, -1, 0, 0}, {0, 1, 0, 0, 0, 0}}));

  const SplitSolution upper = solve_split(ext, Twelfth::from_twelfths(1), SplitNormalization::upper_triangular_zero);
  CHECK(upper.particular == std::vector<Rational>{0, 0, q(2, 12), q(2, 12), q(2, 12), q(1, 12)});

  const SplitSolution zero = solve_split(ext, Twelfth());
  for (const auto& x : zero.particular) CHECK(x == 0);
}

TEST_CASE("solve_split reports a non-splitting extension") {
  ExtensionPresentation ext;
  ext.presentation.generator_count = 2;
  ext.relation_matrix = IntegerMatrix{{0, 4}};
  CHECK_THROWS_AS(solve_split(ext), SplitError);
}

TEST_CASE("normalization names") {
  CHECK(parse_normalization("minimal-norm") == SplitNormalization::minimal_norm);
  CHECK(std::string(to_string(SplitNormalization::upper_triangular_zero)) == "upper-triangular-zero");
  CHECK_THROWS_AS(parse_normalization("paper"), std::invalid_argument);
}
