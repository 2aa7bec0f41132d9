#include "picard/presentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "generated/relations_data.hpp"
#include "picard/group.hpp"

namespace picard {

const Presentation& bundled_presentation() {
  static const Presentation p = parse_presentation(detail::kBundledRelations, kGeneratorCount);
  return p;
}

Presentation parse_presentation(std::string_view text, int generator_count) {
  Presentation p{generator_count, parse_word_list(text)};
  for (const auto& r : p.relators)
    if (r.max_generator() > generator_count)
      throw std::invalid_argument("parse_presentation: relator " + r.to_string() + " uses an unknown generator");
  return p;
}

IntegerMatrix exponent_matrix(const Presentation& p) {
  IntegerMatrix m(p.relators.size(), static_cast<std::size_t>(p.generator_count));
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const auto& l : p.relators[i]) {
      if (l.generator < 1 || l.generator > p.generator_count)
        throw std::invalid_argument("exponent_matrix: letter outside the generating set");
      m(i, static_cast<std::size_t>(l.generator - 1)) += l.sign;
    }
  return m;
}

AbelianStructure abelian_structure(const IntegerMatrix& relations) {
  const SmithForm f = snf(relations);
  AbelianStructure a;
  a.free_rank = static_cast<int>(relations.cols() - f.invariants.size());
  for (const auto& d : f.invariants)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

AbelianStructure abelianization(const Presentation& p) {
  if (p.relators.empty()) return {p.generator_count, {}};
  return abelian_structure(exponent_matrix(p));
}

ExtensionPresentation build_extension(const Presentation& p, const std::vector<Twelfth>& defects) {
  if (defects.size() != p.relators.size())
    throw std::invalid_argument("build_extension: need one defect per relator");
  const int g = p.generator_count;
  const int z = g + 1;
  ExtensionPresentation ext;
  ext.presentation.generator_count = z;
  ext.defects = defects;

  const IntegerMatrix base = exponent_matrix(p);
  const std::size_t rows = p.relators.size() + static_cast<std::size_t>(g);
  ext.relation_matrix = IntegerMatrix(rows, static_cast<std::size_t>(z));
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    // Twelfth stores 12 * defect, which is exactly the z exponent.
    const Integer& power = defects[i].twelfths();
    if (!power.fits_sint_p()) throw std::invalid_argument("build_extension: defect too large");
    ext.presentation.relators.push_back(p.relators[i] * Word::generator(z, -static_cast<int>(power.get_si())));
    for (std::size_t j = 0; j < base.cols(); ++j) ext.relation_matrix(i, j) = base(i, j);
    ext.relation_matrix(i, static_cast<std::size_t>(g)) = -power;
  }
  for (int i = 1; i <= g; ++i)
    ext.presentation.relators.push_back(Word::commutator(Word::generator(z), Word::generator(i)));
  return ext;
}

std::vector<Twelfth> compute_defects(const Presentation& p, const CocycleOptions& options) {
  std::vector<Twelfth> out;
  out.reserve(p.relators.size());
  for (const auto& r : p.relators) out.push_back(defect(r, options));
  return out;
}

IntegerMatrix published_extension_relations() {
  return IntegerMatrix{{3, 0, 0, 3, 0, -6}, {0, 0, 3, 0, 0, -6}, {0, 0, 0, 0, 3, 30}};
}

ExtensionReport extension_abelianization(const ExtensionPresentation& ext, const IntegerMatrix& reference) {
  ExtensionReport r;
  const IntegerMatrix& m = ext.relation_matrix;
  r.structure = abelian_structure(m);
  const HermiteForm h = hnf(m);
  r.hnf_rows = h.h.nonzero_rows();

  r.lattices_equal = reference.cols() == m.cols();
  if (r.lattices_equal) {
    for (std::size_t i = 0; i < reference.rows(); ++i) {
      VectorCheck c{reference.row(i), in_row_lattice(m, reference.row(i))};
      r.lattices_equal = r.lattices_equal && c.in_computed;
      r.published.push_back(std::move(c));
    }
    for (const auto& row : r.hnf_rows) {
      VectorCheck c{row, in_row_lattice(reference, row)};
      r.lattices_equal = r.lattices_equal && c.in_computed;
      r.computed.push_back(std::move(c));
    }
  }

  // In echelon form only a row pivoting on the last column can be a pure z power.
  const std::size_t zc = m.cols() - 1;
  r.z_order = 0;
  for (const auto& row : r.hnf_rows)
    if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(zc), [](const Integer& x) { return sgn(x) == 0; })) {
      r.forces_pure_z = true;
      r.z_order = abs(row[zc]);
    }
  return r;
}

const char* to_string(SplitNormalization n) {
  return n == SplitNormalization::minimal_norm ? "minimal-norm" : "upper-triangular-zero";
}

SplitNormalization parse_normalization(const std::string& s) {
  if (s == "minimal-norm") return SplitNormalization::minimal_norm;
  if (s == "upper-triangular-zero") return SplitNormalization::upper_triangular_zero;
  throw std::invalid_argument("unknown normalization '" + s + "' (expected minimal-norm|upper-triangular-zero)");
}

namespace {

using RationalRows = std::vector<std::vector<Rational>>;

// Reduced row echelon form over Q of the first `ncoef` columns; trailing
// columns ride along as right-hand sides. Returns the pivot columns.
std::vector<std::size_t> rref(RationalRows& a, std::size_t ncoef) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncoef && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Solves A x = b; free variables are set to zero. Empty optional if inconsistent.
std::optional<std::vector<Rational>> solve_rational(RationalRows a, const std::vector<Rational>& b, std::size_t n) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a, n);
  for (std::size_t i = pivots.size(); i < a.size(); ++i)
    if (sgn(a[i][n]) != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][n];
  return x;
}

// Integer basis of { x in Z^n : A x = 0 }, in Hermite form.
std::vector<std::vector<Integer>> integer_kernel(const IntegerMatrix& a) {
  const HermiteForm f = hnf(a.transpose());
  IntegerMatrix basis(f.u.rows() - f.rank, f.u.cols());
  for (std::size_t i = f.rank; i < f.u.rows(); ++i)
    for (std::size_t j = 0; j < f.u.cols(); ++j) basis(i - f.rank, j) = f.u(i, j);
  return hnf(basis).h.nonzero_rows();
}

Rational dot(const std::vector<Rational>& x, const std::vector<Integer>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

SplitSolution solve_split(const ExtensionPresentation& ext, const Twelfth& center, SplitNormalization normalization) {
  const IntegerMatrix& m = ext.relation_matrix;
  const std::size_t n = m.cols();
  const std::size_t zc = n - 1;

  // Relation rows plus the row e_z, so that the z-value is pinned.
  IntegerMatrix constraints(m.rows() + 1, n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) constraints(i, j) = m(i, j);
  constraints(m.rows(), zc) = 1;

  RationalRows a(constraints.rows(), std::vector<Rational>(n));
  for (std::size_t i = 0; i < constraints.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = constraints(i, j);
  std::vector<Rational> b(constraints.rows());
  b.back() = center.to_rational();

  auto particular = solve_rational(a, b, n);
  if (!particular)
    throw SplitError("solve_split: no homomorphism with Phi(z) = " + center.to_string() +
                     " kills the relation lattice (the extension does not split over Q)");

  SplitSolution s;
  s.homogeneous = integer_kernel(constraints);
  std::vector<Rational>& p = *particular;
  const std::size_t k = s.homogeneous.size();

  if (normalization == SplitNormalization::minimal_norm && k > 0) {
    // p -= B^t (B B^t)^{-1} B p
    RationalRows gram(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      rhs[i] = dot(p, s.homogeneous[i]);
      for (std::size_t j = 0; j < k; ++j) {
        Rational g = 0;
        for (std::size_t t = 0; t < n; ++t) g += Rational(s.homogeneous[i][t] * s.homogeneous[j][t]);
        gram[i][j] = g;
      }
    }
    const auto c = solve_rational(gram, rhs, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < n; ++t) p[t] -= (*c)[i] * s.homogeneous[i][t];
  } else if (normalization == SplitNormalization::upper_triangular_zero) {
    // Add a homogeneous combination so that Phi(n^_1) = Phi(n^_2) = 0.
    RationalRows sys(2, std::vector<Rational>(k));
    std::vector<Rational> rhs{-p[0], -p[1]};
    for (std::size_t row = 0; row < 2; ++row)
      for (std::size_t i = 0; i < k; ++i) sys[row][i] = s.homogeneous[i][row];
    const auto c = solve_rational(sys, rhs, k);
    if (!c) throw SplitError("solve_split: cannot normalize Phi to vanish on n1 and n2");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < n; ++t) p[t] += (*c)[i] * s.homogeneous[i][t];
  }
  for (auto& x : p) x.canonicalize();
  s.particular = std::move(p);
  return s;
}

bool annihilates(const std::vector<Rational>& phi, const IntegerMatrix& rows) {
  if (phi.size() != rows.cols()) throw std::invalid_argument("annihilates: length mismatch");
  for (std::size_t i = 0; i < rows.rows(); ++i)
    if (sgn(dot(phi, rows.row(i))) != 0) return false;
  return true;
}

std::vector<Rational> published_phi() {
  std::vector<Rational> phi{Rational(1, 12), Rational(0), Rational(2, 12), Rational(1, 12), Rational(-10, 12), Rational(1, 12)};
  for (auto& x : phi) x.canonicalize();
  return phi;
}

SplitPipeline derive_kappa(const CocycleOptions& options, SplitNormalization normalization) {
  SplitPipeline out;
  const Presentation& p = bundled_presentation();
  out.defects = compute_defects(p, options);
  out.extension = build_extension(p, out.defects);
  out.solution = solve_split(out.extension, Twelfth::from_twelfths(1), normalization);
  out.kappa = KappaTable::from_splitting(out.solution.particular);
  return out;
}

}  // namespace picard
