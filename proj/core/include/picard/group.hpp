#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "picard/eisenstein.hpp"
#include "picard/word.hpp"

namespace picard {

/// Deterministic RNG used by every sampler.
using Rng = std::mt19937_64;

/// 3x3 matrix over Z[zeta]. Elements of Gamma satisfy det = 1 and
/// conj(g)^t J g = J with J the anti-diagonal permutation.
class GroupMatrix {
 public:
  GroupMatrix() = default;
  explicit GroupMatrix(std::array<EisensteinInt, 9> entries) : e_(std::move(entries)) {}

  static GroupMatrix identity();
  static GroupMatrix j_form();
  static GroupMatrix scalar(const EisensteinInt& c);

  const EisensteinInt& operator()(int i, int j) const { return e_[static_cast<std::size_t>(3 * i + j)]; }
  EisensteinInt& operator()(int i, int j) { return e_[static_cast<std::size_t>(3 * i + j)]; }

  GroupMatrix transpose() const;
  GroupMatrix conj_transpose() const;
  /// J * conj(g)^t * J, the inverse of a J-unitary matrix.
  GroupMatrix unitary_inverse() const;
  EisensteinInt det() const;
  bool is_j_unitary() const;

  friend GroupMatrix operator*(const GroupMatrix& x, const GroupMatrix& y);
  friend bool operator==(const GroupMatrix&, const GroupMatrix&) = default;

 private:
  std::array<EisensteinInt, 9> e_{};
};

std::ostream& operator<<(std::ostream& os, const GroupMatrix& m);

/// Parameters of the Heisenberg element n(z, x); requires x = Norm(z) mod 2.
struct HeisenbergParam {
  EisensteinInt z;
  Integer x;
};

/// [[1, s z, (-3 N(z) + x s)/2], [0, 1, s conj(z)], [0, 0, 1]] with s = sqrt(-3).
/// Throws std::invalid_argument when the parity condition fails.
GroupMatrix make_n(const HeisenbergParam& p);
GroupMatrix make_n_transpose(const HeisenbergParam& p);

inline constexpr int kGeneratorCount = 5;

/// n1 = n(1,1), n2 = n(zeta,1), n3 = n(0,2), n4 = n1^t, n5 = n3^t.
const GroupMatrix& generator_matrix(int index);
const GroupMatrix& generator_inverse(int index);
/// phi(n1) = 1, phi(n2) = zeta, phi(n3) = 0, phi(n4) = -1, phi(n5) = 0.
const EisensteinInt& generator_phi(int index);

const GroupMatrix& letter_matrix(const Letter& l);

/// Product of generator matrices; throws for generator indices outside 1..5.
GroupMatrix evaluate(const Word& w);

/// The homomorphism Upsilon -> Z[zeta] on a word.
EisensteinInt phi(const Word& w);
EisensteinInt phi(const Letter& l);

bool in_gamma(const GroupMatrix& m);
/// Gamma plus g = I mod sqrt(-3) entrywise.
bool in_gamma_sqrt3(const GroupMatrix& m);
/// Gamma(sqrt(-3)) plus 3 | (g_11 - 1).
bool in_upsilon(const GroupMatrix& m);

/// phi(w) lies in the ideal.
bool in_upsilon_nc(const Word& w, const EisensteinIdeal& ideal);

/// [Upsilon : Upsilon_nc(I)] = Norm(I), phi being surjective.
Integer tower_index(const EisensteinIdeal& ideal);

/// Length uniform in [1, max_len], letters uniform over n1^{+-1}..n5^{+-1}.
Word sample_word(Rng& rng, int max_len);

/// A sampled word followed by n1^{-a} n2^{-b}, where a + b zeta is the
/// remainder of phi(draft) modulo 2I; the result lies in Upsilon_nc(2I).
Word sample_word_in_nc(Rng& rng, const EisensteinIdeal& ideal, int max_len);

}  // namespace picard
