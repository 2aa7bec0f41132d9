#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "picard/ball.hpp"
#include "picard/eisenstein.hpp"
#include "picard/integer_matrix.hpp"
#include "picard/presentation.hpp"

namespace picard {

using Json = nlohmann::json;

/// Integers that fit in int64 are JSON numbers, larger ones decimal strings.
Json to_json(const Integer& n);
/// Exact fractions are strings such as "-5/6".
Json to_json(const Rational& q);
Json to_json(const Twelfth& t);
/// [a, b] for a + b zeta.
Json to_json(const EisensteinInt& w);
Json to_json(const EisensteinIdeal& ideal);
Json to_json(const GroupMatrix& m);
Json to_json(const Complex& c);
Json to_json(const BallPoint& tau);
Json to_json(const NumericMatrix& m);
Json to_json(const IntegerMatrix& m);
Json to_json(const std::vector<Integer>& v);
Json to_json(const std::vector<Rational>& v);
Json to_json(const std::vector<std::vector<Integer>>& rows);
Json to_json(const AbelianStructure& a);

/// "a,b" -> the ideal (a + b zeta). Throws std::invalid_argument.
EisensteinIdeal parse_ideal(std::string_view text);
/// "re,im;re,im;..." -> a point of H. Throws std::invalid_argument or std::domain_error.
BallPoint parse_ball_point(std::string_view text);

}  // namespace picard
