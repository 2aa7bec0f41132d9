#include "picard/group.hpp"

#include <ostream>
#include <stdexcept>

namespace picard {

GroupMatrix GroupMatrix::identity() { return scalar(1); }

GroupMatrix GroupMatrix::scalar(const EisensteinInt& c) {
  GroupMatrix m;
  for (int i = 0; i < 3; ++i) m(i, i) = c;
  return m;
}

GroupMatrix GroupMatrix::j_form() {
  GroupMatrix m;
  m(0, 2) = 1;
  m(1, 1) = 1;
  m(2, 0) = 1;
  return m;
}

GroupMatrix GroupMatrix::transpose() const {
  GroupMatrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
  return t;
}

GroupMatrix GroupMatrix::conj_transpose() const {
  GroupMatrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i).conj();
  return t;
}

GroupMatrix GroupMatrix::unitary_inverse() const {
  // (J g* J)_{ij} = conj(g_{2-j, 2-i})
  GroupMatrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = (*this)(2 - j, 2 - i).conj();
  return t;
}

EisensteinInt GroupMatrix::det() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool GroupMatrix::is_j_unitary() const { return conj_transpose() * j_form() * (*this) == j_form(); }

GroupMatrix operator*(const GroupMatrix& x, const GroupMatrix& y) {
  GroupMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EisensteinInt s;
      for (int k = 0; k < 3; ++k) {
        if (x(i, k).is_zero() || y(k, j).is_zero()) continue;
        s += x(i, k) * y(k, j);
      }
      r(i, j) = std::move(s);
    }
  return r;
}

std::ostream& operator<<(std::ostream& os, const GroupMatrix& m) {
  os << '[';
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

GroupMatrix make_n(const HeisenbergParam& p) {
  Integer diff = p.x - p.z.norm();
  if (!mpz_even_p(diff.get_mpz_t()))
    throw std::invalid_argument("make_n: x = " + p.x.get_str() + " has the wrong parity for Norm(z) = " +
                                p.z.norm().get_str());
  const EisensteinInt s = EisensteinInt::sqrt_minus3();
  const EisensteinInt twice = EisensteinInt(Integer(-3 * p.z.norm()), Integer(0)) + EisensteinInt(p.x, 0) * s;
  GroupMatrix m = GroupMatrix::identity();
  m(0, 1) = s * p.z;
  m(0, 2) = div_exact(EisensteinInt(2), twice);
  m(1, 2) = s * p.z.conj();
  return m;
}

GroupMatrix make_n_transpose(const HeisenbergParam& p) { return make_n(p).transpose(); }

namespace {

struct GeneratorTable {
  std::array<GroupMatrix, kGeneratorCount> forward;
  std::array<GroupMatrix, kGeneratorCount> inverse;
  std::array<EisensteinInt, kGeneratorCount> phi;

  GeneratorTable() {
    const EisensteinInt one(1);
    forward[0] = make_n({one, 1});
    forward[1] = make_n({EisensteinInt::zeta(), 1});
    forward[2] = make_n({EisensteinInt(0), 2});
    forward[3] = make_n_transpose({one, 1});
    forward[4] = make_n_transpose({EisensteinInt(0), 2});
    for (int i = 0; i < kGeneratorCount; ++i) inverse[static_cast<std::size_t>(i)] = forward[static_cast<std::size_t>(i)].unitary_inverse();
    phi = {EisensteinInt(1), EisensteinInt::zeta(), EisensteinInt(0), EisensteinInt(-1), EisensteinInt(0)};
  }
};

const GeneratorTable& table() {
  static const GeneratorTable t;
  return t;
}

std::size_t checked_index(int index) {
  if (index < 1 || index > kGeneratorCount)
    throw std::out_of_range("generator index " + std::to_string(index) + " outside 1..5");
  return static_cast<std::size_t>(index - 1);
}

}  // namespace

const GroupMatrix& generator_matrix(int index) { return table().forward[checked_index(index)]; }
const GroupMatrix& generator_inverse(int index) { return table().inverse[checked_index(index)]; }
const EisensteinInt& generator_phi(int index) { return table().phi[checked_index(index)]; }

const GroupMatrix& letter_matrix(const Letter& l) {
  return l.sign > 0 ? generator_matrix(l.generator) : generator_inverse(l.generator);
}

GroupMatrix evaluate(const Word& w) {
  GroupMatrix m = GroupMatrix::identity();
  for (const auto& l : w) m = m * letter_matrix(l);
  return m;
}

EisensteinInt phi(const Letter& l) {
  const EisensteinInt& v = generator_phi(l.generator);
  return l.sign > 0 ? v : -v;
}

EisensteinInt phi(const Word& w) {
  EisensteinInt s;
  for (const auto& l : w) s += phi(l);
  return s;
}

bool in_gamma(const GroupMatrix& m) { return m.det() == EisensteinInt(1) && m.is_j_unitary(); }

bool in_gamma_sqrt3(const GroupMatrix& m) {
  if (!in_gamma(m)) return false;
  const EisensteinInt s = EisensteinInt::sqrt_minus3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EisensteinInt d = m(i, j) - EisensteinInt(i == j ? 1 : 0);
      if (!divides(s, d)) return false;
    }
  return true;
}

bool in_upsilon(const GroupMatrix& m) {
  return in_gamma_sqrt3(m) && divides(EisensteinInt(3), m(0, 0) - EisensteinInt(1));
}

bool in_upsilon_nc(const Word& w, const EisensteinIdeal& ideal) { return ideal.contains(phi(w)); }

Integer tower_index(const EisensteinIdeal& ideal) { return ideal.norm(); }

Word sample_word(Rng& rng, int max_len) {
  if (max_len < 1) throw std::invalid_argument("sample_word: max_len must be >= 1");
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 2 * kGeneratorCount - 1);
  const int len = len_dist(rng);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int k = letter_dist(rng);
    letters.push_back({k / 2 + 1, (k % 2) ? -1 : 1});
  }
  return Word(std::move(letters));
}

Word sample_word_in_nc(Rng& rng, const EisensteinIdeal& ideal, int max_len) {
  const EisensteinIdeal target = ideal.scaled(EisensteinInt(2));
  Word w = sample_word(rng, max_len);
  const EisensteinInt r = divmod(phi(w), target.gen()).remainder;
  w *= Word::generator(1, -static_cast<int>(r.a().get_si()));
  w *= Word::generator(2, -static_cast<int>(r.b().get_si()));
  if (!in_upsilon_nc(w, target)) throw std::logic_error("sample_word_in_nc: postcondition failed");
  return w;
}

}  // namespace picard
