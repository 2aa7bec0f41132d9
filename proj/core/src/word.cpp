#include "picard/word.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace picard {

Word Word::generator(int index, int exponent) {
  if (index < 1) throw std::invalid_argument("Word::generator: index must be >= 1");
  std::vector<Letter> letters(static_cast<std::size_t>(std::abs(exponent)), Letter{index, exponent < 0 ? -1 : 1});
  return Word(std::move(letters));
}

Word Word::commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

int Word::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::power(int k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

Word Word::reduced() const {
  std::vector<Letter> stack;
  stack.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!stack.empty() && stack.back() == l.inverse()) stack.pop_back();
    else stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> out = letters_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 'n' << letters_[i].generator;
    if (letters_[i].sign < 0) os << "^-1";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_word: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                                std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long parse_integer() {
    skip_space();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    const long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Word parse_sequence() {
    Word w;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (c == ')' || c == ']' || c == ',') break;
      w *= parse_term();
    }
    return w;
  }

  Word parse_term() {
    Word atom = parse_atom();
    if (peek('^')) {
      ++pos_;
      long e;
      if (peek('{')) {
        ++pos_;
        e = parse_integer();
        expect('}');
      } else {
        e = parse_integer();
      }
      return atom.power(static_cast<int>(e));
    }
    return atom;
  }

  Word parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = parse_sequence();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word a = parse_sequence();
      expect(',');
      Word b = parse_sequence();
      expect(']');
      return Word::commutator(a, b);
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    if (c == 'n') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected generator number");
      const int g = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (g < 1) fail("generator index must be >= 1");
      return Word::generator(g);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

std::vector<Word> parse_word_list(std::string_view text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const bool blank = std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back(parse_word(line));
    start = end + 1;
  }
  return out;
}

}  // namespace picard
