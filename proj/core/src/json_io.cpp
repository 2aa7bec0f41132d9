#include "picard/json_io.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace picard {

Json to_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Json to_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Json to_json(const Twelfth& t) { return t.to_string(); }

Json to_json(const EisensteinInt& w) { return Json::array({to_json(w.a()), to_json(w.b())}); }

Json to_json(const EisensteinIdeal& ideal) { return Json{{"gen", to_json(ideal.gen())}, {"norm", to_json(ideal.norm())}}; }

Json to_json(const GroupMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const BallPoint& tau) {
  Json out = Json::array();
  for (int i = 0; i < tau.dim(); ++i) out.push_back(to_json(tau[i]));
  return out;
}

Json to_json(const NumericMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i <= m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j <= m.dim(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

Json to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const std::vector<std::vector<Integer>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

Json to_json(const AbelianStructure& a) {
  return Json{{"rank", a.free_rank}, {"torsion", to_json(a.torsion)}};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

double parse_double(std::string_view s) {
  try {
    std::size_t used = 0;
    const std::string str(s);
    const double v = std::stod(str, &used);
    if (used != str.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a real number, got '" + std::string(s) + "'");
  }
}

}  // namespace

EisensteinIdeal parse_ideal(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw std::invalid_argument("ideal must be given as \"a,b\"");
  Integer a, b;
  if (a.set_str(std::string(parts[0]), 10) != 0 || b.set_str(std::string(parts[1]), 10) != 0)
    throw std::invalid_argument("ideal coordinates must be integers: '" + std::string(text) + "'");
  if (sgn(a) == 0 && sgn(b) == 0) throw std::invalid_argument("the zero ideal is not allowed");
  return EisensteinIdeal(EisensteinInt(a, b));
}

BallPoint parse_ball_point(std::string_view text) {
  const auto coords = split(text, ';');
  ComplexVector tau(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto parts = split(coords[i], ',');
    if (parts.size() != 2) throw std::invalid_argument("each coordinate must be \"re,im\"");
    tau(static_cast<Eigen::Index>(i)) = Complex(parse_double(parts[0]), parse_double(parts[1]));
  }
  return BallPoint(std::move(tau));
}

}  // namespace picard
