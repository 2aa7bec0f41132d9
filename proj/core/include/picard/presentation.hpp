#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picard/cocycle.hpp"
#include "picard/eisenstein.hpp"
#include "picard/integer_matrix.hpp"
#include "picard/word.hpp"

namespace picard {

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;
};

/// The five-generator, thirteen-relator presentation of Upsilon shipped with the library.
const Presentation& bundled_presentation();

/// Parses one relator per line ('#' starts a comment). Throws std::invalid_argument
/// if a relator mentions a generator above `generator_count`.
Presentation parse_presentation(std::string_view text, int generator_count);

/// One row per relator: signed letter counts.
IntegerMatrix exponent_matrix(const Presentation& p);

struct AbelianStructure {
  int free_rank = 0;
  /// Entries > 1, each dividing the next.
  std::vector<Integer> torsion;

  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
};

/// Z^g modulo the row lattice of `relations`, read off the Smith form.
AbelianStructure abelian_structure(const IntegerMatrix& relations);
AbelianStructure abelianization(const Presentation& p);

/// Presentation of the central extension on n^_1..n^_g and z (the last generator).
struct ExtensionPresentation {
  Presentation presentation;
  std::vector<Twelfth> defects;
  /// Rows of the lifted relators "r z^{-12 defect}" followed by the commutators [z, n^_i].
  IntegerMatrix relation_matrix;

  int generator_count() const { return presentation.generator_count; }
  int z_index() const { return presentation.generator_count; }
};

/// Throws std::invalid_argument on a length mismatch.
ExtensionPresentation build_extension(const Presentation& p, const std::vector<Twelfth>& defects);

/// Defects of every relator; relators that do not evaluate to I are rejected.
std::vector<Twelfth> compute_defects(const Presentation& p, const CocycleOptions& options = {});

/// The relations n^_1^3 n^_4^3 = z^6, n^_3^3 = z^6, n^_5^3 = z^-30 as exponent rows.
IntegerMatrix published_extension_relations();

struct VectorCheck {
  std::vector<Integer> vector;
  bool in_computed = false;
};

struct ExtensionReport {
  AbelianStructure structure;
  /// Nonzero HNF rows of the relation matrix.
  std::vector<std::vector<Integer>> hnf_rows;
  /// Per published vector: membership in the computed lattice.
  std::vector<VectorCheck> published;
  /// Per computed HNF row: membership in the published lattice.
  std::vector<VectorCheck> computed;
  bool lattices_equal = false;
  /// A relation z^k with k != 0 and no other letters lies in the lattice.
  bool forces_pure_z = false;
  /// Order of z in the abelianization (0 when infinite).
  Integer z_order;
};

ExtensionReport extension_abelianization(const ExtensionPresentation& ext,
                                         const IntegerMatrix& reference = published_extension_relations());

enum class SplitNormalization {
  /// Particular solution orthogonal to the homogeneous space.
  minimal_norm,
  /// Phi(n^_1) = Phi(n^_2) = 0.
  upper_triangular_zero,
};

const char* to_string(SplitNormalization n);
SplitNormalization parse_normalization(const std::string& s);

struct SplitSolution {
  /// Phi on n^_1..n^_g, z.
  std::vector<Rational> particular;
  /// Integer basis of the solutions with Phi(z) = 0.
  std::vector<std::vector<Integer>> homogeneous;
};

class SplitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rational Phi with Phi(z) = center annihilating every relation row.
/// Throws SplitError when no such Phi exists.
SplitSolution solve_split(const ExtensionPresentation& ext, const Twelfth& center = Twelfth::from_twelfths(1),
                          SplitNormalization normalization = SplitNormalization::minimal_norm);

/// Dot product of Phi with every row; true when all vanish.
bool annihilates(const std::vector<Rational>& phi, const IntegerMatrix& rows);

/// The splitting values Phi(n^_1..n^_5, z) as published.
std::vector<Rational> published_phi();

/// defects -> extension -> solve_split -> kappa, for the bundled presentation.
struct SplitPipeline {
  std::vector<Twelfth> defects;
  ExtensionPresentation extension;
  SplitSolution solution;
  KappaTable kappa;
};
SplitPipeline derive_kappa(const CocycleOptions& options = {},
                           SplitNormalization normalization = SplitNormalization::minimal_norm);

}  // namespace picard
