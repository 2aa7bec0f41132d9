#include <doctest.h>

#include <stdexcept>

#include "picard/word.hpp"

using namespace picard;

TEST_CASE("parse simple words") {
  const Word w = parse_word("n1 n2^-1 n3");
  REQUIRE(w.size() == 3);
  CHECK(w.letters()[0] == Letter{1, 1});
  CHECK(w.letters()[1] == Letter{2, -1});
  CHECK(w.to_string() == "n1 n2^-1 n3");
  CHECK(parse_word("1").empty());
  CHECK(parse_word("").empty());
  CHECK(Word().to_string() == "1");
}

TEST_CASE("powers, groups and commutators") {
  CHECK(parse_word("(n3 n5)^3").to_string() == "n3 n5 n3 n5 n3 n5");
  CHECK(parse_word("n3^-2") == parse_word("n3^{-2}"));
  CHECK(parse_word("n_3^2").to_string() == "n3 n3");
  CHECK(parse_word("[n1,n3]").to_string() == "n1 n3 n1^-1 n3^-1");
  CHECK(parse_word("n2^0").empty());
  CHECK(parse_word("(n1 n2)^-1").to_string() == "n2^-1 n1^-1");
  CHECK(parse_word("[n1 n2, n3]") == Word::commutator(parse_word("n1 n2"), parse_word("n3")));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_word("n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("n0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("(n1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("[n1 n2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("n1^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x1"), std::invalid_argument);
}

TEST_CASE("inverse, power, reduced and rotated") {
  const Word w = parse_word("n1 n2^-1 n3");
  CHECK(w.inverse().to_string() == "n3^-1 n2 n1^-1");
  CHECK((w * w.inverse()).reduced().empty());
  CHECK(w.power(2).size() == 6);
  CHECK(w.power(-1) == w.inverse());
  CHECK(w.power(0).empty());
  CHECK(w.rotated(1).to_string() == "n2^-1 n3 n1");
  CHECK(w.rotated(3) == w);
  CHECK(parse_word("n1 n2 n2^-1 n1^-1 n4").reduced().to_string() == "n4");
  CHECK(w.max_generator() == 3);
  CHECK(Word().max_generator() == 0);
}

TEST_CASE("word lists skip comments and blank lines") {
  const auto ws = parse_word_list("# header\n\nn1 n2\n  [n1,n3]  # trailing\n");
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].to_string() == "n1 n2");
  CHECK(ws[1].size() == 4);
}
