#include "picard/cocycle.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace picard {

BallPoint SigmaConfig::base_for(int d) const {
  if (base_point && base_point->dim() == d) return *base_point;
  return BallPoint::base_point(d);
}

BallPoint SigmaConfig::second_for(int d) const {
  if (second_point && second_point->dim() == d) return *second_point;
  ComplexVector t = ComplexVector::Zero(d);
  t(0) = Complex(-1.5, 0.25);
  if (d >= 2) t(1) = Complex(0.5, -0.5);
  return BallPoint(std::move(t));
}

namespace {

SigmaValue round_sigma(const NumericMatrix& g, const NumericMatrix& h, const NumericMatrix& gh, const SigmaConfig& cfg) {
  const int d = g.dim();
  const Complex v0 = branch_defect(g, h, gh, cfg.base_for(d), cfg.x_log_cut);
  const Complex v1 = branch_defect(g, h, gh, cfg.second_for(d), cfg.x_log_cut);
  const double r0 = std::round(v0.real());
  const double r1 = std::round(v1.real());
  const double res0 = std::abs(v0 - Complex(r0, 0.0));
  const double res1 = std::abs(v1 - Complex(r1, 0.0));
  if (!(res0 <= cfg.round_tol) || !(res1 <= cfg.round_tol))
    throw PrecisionError("sigma: value " + std::to_string(v0.real()) + "+" + std::to_string(v0.imag()) +
                         "i is not within " + std::to_string(cfg.round_tol) + " of an integer");
  if (r0 != r1)
    throw PrecisionError("sigma: base points disagree (" + std::to_string(r0) + " vs " + std::to_string(r1) + ")");
  return {static_cast<long>(r0), std::max(res0, res1)};
}

}  // namespace

SigmaValue sigma_value(const NumericMatrix& g, const NumericMatrix& h, const SigmaConfig& cfg) {
  return round_sigma(g, h, g * h, cfg);
}

long sigma(const NumericMatrix& g, const NumericMatrix& h, const SigmaConfig& cfg) {
  return sigma_value(g, h, cfg).value;
}

long sigma(const GroupMatrix& g, const GroupMatrix& h, const SigmaConfig& cfg) {
  return round_sigma(NumericMatrix::embed(g), NumericMatrix::embed(h), NumericMatrix::embed(g * h), cfg).value;
}

long sigma(const Word& g, const Word& h, const SigmaConfig& cfg) { return sigma(evaluate(g), evaluate(h), cfg); }

Twelfth Sigma(const EisensteinInt& phi_g, const EisensteinInt& phi_h) {
  return Twelfth::from_quarters((phi_g * phi_h.conj()).tr_over_sqrt_minus3());
}

Twelfth Sigma(const Word& g, const Word& h) { return Sigma(phi(g), phi(h)); }

const char* to_string(SigmaOrientation o) { return o == SigmaOrientation::printed ? "printed" : "swapped"; }

SigmaOrientation parse_orientation(const std::string& s) {
  if (s == "printed") return SigmaOrientation::printed;
  if (s == "swapped") return SigmaOrientation::swapped;
  throw std::invalid_argument("unknown Sigma orientation '" + s + "' (expected printed|swapped)");
}

Twelfth comparison_cocycle(const EisensteinInt& phi_g, const EisensteinInt& phi_h, SigmaOrientation o) {
  return o == SigmaOrientation::printed ? Sigma(phi_g, phi_h) : Sigma(phi_h, phi_g);
}

Twelfth Extension::cocycle(const GroupMatrix& g, const EisensteinInt& phi_g, const GroupMatrix& h,
                           const EisensteinInt& phi_h) const {
  const long s = sigma(g, h, options_.sigma);
  return Twelfth::from_integer(s) - comparison_cocycle(phi_g, phi_h, options_.orientation);
}

ExtensionElement Extension::multiply(const ExtensionElement& x, const ExtensionElement& y) const {
  ExtensionElement r;
  r.central = x.central + y.central + cocycle(x.matrix, x.phi, y.matrix, y.phi);
  r.matrix = x.matrix * y.matrix;
  r.phi = x.phi + y.phi;
  return r;
}

ExtensionElement Extension::inverse(const ExtensionElement& x) const {
  // (g,a)(g^-1,b) = (I, a + b + c(g,g^-1)) and c vanishes at the identity.
  ExtensionElement r;
  r.matrix = x.matrix.unitary_inverse();
  r.phi = -x.phi;
  r.central = -x.central - cocycle(x.matrix, x.phi, r.matrix, r.phi);
  return r;
}

ExtensionElement Extension::lift(const Letter& l) const {
  ExtensionElement hat;
  hat.matrix = generator_matrix(l.generator);
  hat.phi = generator_phi(l.generator);
  return l.sign > 0 ? hat : inverse(hat);
}

ExtensionElement Extension::lift(const Word& w) const {
  ExtensionElement acc;
  for (const auto& l : w) acc = multiply(acc, lift(l));
  return acc;
}

Twelfth defect(const Word& relator, const CocycleOptions& options) {
  const Extension ext(options);
  ExtensionElement r = ext.lift(relator);
  if (r.matrix != GroupMatrix::identity())
    throw std::invalid_argument("defect: relator " + relator.to_string() + " does not evaluate to the identity");
  return r.central;
}

KappaTable KappaTable::from_splitting(const std::vector<Rational>& phi) {
  if (phi.size() < static_cast<std::size_t>(kGeneratorCount))
    throw std::invalid_argument("KappaTable::from_splitting: need a value per generator");
  KappaTable t;
  for (std::size_t i = 0; i < t.values.size(); ++i) t.values[i] = -Twelfth::from_rational(phi[i]);
  return t;
}

Twelfth kappa(const KappaTable& table, const Word& w, const CocycleOptions& options) {
  const Extension ext(options);
  Twelfth value;
  GroupMatrix prefix = GroupMatrix::identity();
  EisensteinInt prefix_phi;
  for (const auto& l : w) {
    const GroupMatrix& m = letter_matrix(l);
    const EisensteinInt p = phi(l);
    Twelfth letter_value = table[l.generator];
    if (l.sign < 0) {
      // kappa(g^-1) = -kappa(g) - c(g, g^-1)
      letter_value = -letter_value - ext.cocycle(generator_matrix(l.generator), generator_phi(l.generator), m, p);
    }
    value += letter_value + ext.cocycle(prefix, prefix_phi, m, p);
    prefix = prefix * m;
    prefix_phi += p;
  }
  return value;
}

bool verify_split(const KappaTable& table, const Word& g, const Word& h, const CocycleOptions& options) {
  const long s = sigma(g, h, options.sigma);
  const Twelfth rhs = comparison_cocycle(phi(g), phi(h), options.orientation) + kappa(table, g * h, options) -
                      kappa(table, g, options) - kappa(table, h, options);
  return rhs == Twelfth::from_integer(s);
}

Complex multiplier(const KappaTable& table, const Word& w, const BallPoint& tau, const EisensteinIdeal& ideal,
                   const CocycleOptions& options) {
  const EisensteinIdeal level = ideal.scaled(EisensteinInt(2));
  if (!in_upsilon_nc(w, level))
    throw std::invalid_argument("multiplier: " + w.to_string() + " is not in Upsilon_nc(2I)");
  const NumericMatrix g = NumericMatrix::embed(evaluate(w));
  const Complex jt = j_tilde(g, tau, options.sigma.x_log_cut);
  const double k = kappa(table, w, options).to_double();
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  return std::exp((jt - two_pi_i * k) / ideal.norm().get_d());
}

bool divisibility_check(const Word& g, const Word& h, const EisensteinIdeal& ideal) {
  const EisensteinIdeal level = ideal.scaled(EisensteinInt(2));
  if (!in_upsilon_nc(g, level) || !in_upsilon_nc(h, level))
    throw std::invalid_argument("divisibility_check: words must lie in Upsilon_nc(2I)");
  return Sigma(g, h).is_multiple_of(ideal.norm());
}

bool cocycle_relation(const NumericMatrix& g, const NumericMatrix& h, const NumericMatrix& k, const SigmaConfig& cfg) {
  return sigma(g, h, cfg) + sigma(g * h, k, cfg) == sigma(g, h * k, cfg) + sigma(h, k, cfg);
}

bool cocycle_relation(const Word& g, const Word& h, const Word& k, const SigmaConfig& cfg) {
  const GroupMatrix mg = evaluate(g), mh = evaluate(h), mk = evaluate(k);
  return sigma(mg, mh, cfg) + sigma(mg * mh, mk, cfg) == sigma(mg, mh * mk, cfg) + sigma(mh, mk, cfg);
}

}  // namespace picard
