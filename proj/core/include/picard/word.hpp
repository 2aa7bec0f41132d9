#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace picard {

/// One letter of a word: generator index (1-based) and exponent sign.
struct Letter {
  int generator = 1;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in numbered generators n1, n2, ...; evaluation happens elsewhere.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(int index, int exponent = 1);
  static Word commutator(const Word& a, const Word& b);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Largest generator index used (0 for the empty word).
  int max_generator() const;

  Word inverse() const;
  Word power(int k) const;
  /// Cancels adjacent pairs x x^-1 until none remain.
  Word reduced() const;
  /// Rotation by k letters; conjugate to the original.
  Word rotated(std::size_t k) const;

  Word& operator*=(const Word& o) {
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }
  friend Word operator*(Word x, const Word& y) { return x *= y; }
  friend bool operator==(const Word&, const Word&) = default;

  /// Canonical text: "n1 n2^-1 n3"; the empty word prints as "1".
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Parses word syntax.
///
///   word  := term*
///   term  := atom ('^' integer)?
///   atom  := 'n' digits | '(' word ')' | '[' word ',' word ']' | '1'
///
/// Tokens may be separated by whitespace; "n3^-2" and "n3^{-2}" are both
/// accepted. [a,b] means a b a^-1 b^-1. Throws std::invalid_argument.
Word parse_word(std::string_view text);

/// One word per non-empty line; '#' starts a comment.
std::vector<Word> parse_word_list(std::string_view text);

}  // namespace picard
