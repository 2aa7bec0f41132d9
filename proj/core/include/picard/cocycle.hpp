#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "picard/ball.hpp"
#include "picard/eisenstein.hpp"
#include "picard/group.hpp"
#include "picard/word.hpp"

namespace picard {

/// sigma evaluated too far from an integer, or two base points disagree.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SigmaConfig {
  /// Defaults to (-1, 0, ..., 0) of the matching dimension.
  std::optional<BallPoint> base_point;
  /// Defaults to (-3/2 + i/4, 1/2 - i/2, 0, ..., 0).
  std::optional<BallPoint> second_point;
  double round_tol = 1e-6;
  /// Branch cut for log X(g); the default is the principal branch.
  double x_log_cut = kPrincipalCut;

  BallPoint base_for(int d) const;
  BallPoint second_for(int d) const;
};

struct SigmaValue {
  long value = 0;
  /// Largest distance from the rounded integer over both base points.
  double residual = 0.0;
};

/// sigma(g,h): the branch defect rounded at the base point and re-checked at
/// the second point. Throws PrecisionError.
SigmaValue sigma_value(const NumericMatrix& g, const NumericMatrix& h, const SigmaConfig& cfg = {});
long sigma(const NumericMatrix& g, const NumericMatrix& h, const SigmaConfig& cfg = {});
long sigma(const GroupMatrix& g, const GroupMatrix& h, const SigmaConfig& cfg = {});
long sigma(const Word& g, const Word& h, const SigmaConfig& cfg = {});

/// Sigma(g,h) = (1/4) Tr(phi(g) conj(phi(h)) / sqrt(-3)), exactly.
Twelfth Sigma(const EisensteinInt& phi_g, const EisensteinInt& phi_h);
Twelfth Sigma(const Word& g, const Word& h);

/// Which cocycle is compared with sigma. `printed` uses Sigma(g,h);
/// `swapped` uses Sigma(h,g) = -Sigma(g,h). Only `swapped` makes
/// sigma - Sigma split over (1/12)Z with the principal branch.
enum class SigmaOrientation { printed, swapped };

const char* to_string(SigmaOrientation o);
SigmaOrientation parse_orientation(const std::string& s);

struct CocycleOptions {
  SigmaConfig sigma;
  SigmaOrientation orientation = SigmaOrientation::swapped;
};

/// The comparison cocycle Sigma_c selected by the orientation.
Twelfth comparison_cocycle(const EisensteinInt& phi_g, const EisensteinInt& phi_h, SigmaOrientation o);

/// Element (g, x) of Upsilon x (1/12)Z.
struct ExtensionElement {
  GroupMatrix matrix = GroupMatrix::identity();
  EisensteinInt phi;
  Twelfth central;
};

/// The central extension with product (g,x)(g',x') = (gg', x + x' + (sigma - Sigma_c)(g,g')).
class Extension {
 public:
  explicit Extension(CocycleOptions options = {}) : options_(std::move(options)) {}

  const CocycleOptions& options() const { return options_; }

  /// (sigma - Sigma_c)(g, h).
  Twelfth cocycle(const GroupMatrix& g, const EisensteinInt& phi_g, const GroupMatrix& h,
                  const EisensteinInt& phi_h) const;

  ExtensionElement multiply(const ExtensionElement& x, const ExtensionElement& y) const;
  ExtensionElement inverse(const ExtensionElement& x) const;
  /// hat n_i = (n_i, 0) for a positive letter, its group inverse otherwise.
  ExtensionElement lift(const Letter& l) const;
  /// Product of letter lifts.
  ExtensionElement lift(const Word& w) const;

 private:
  CocycleOptions options_;
};

/// Central value of the lifted relator. Throws std::invalid_argument unless
/// the relator evaluates to the identity.
Twelfth defect(const Word& relator, const CocycleOptions& options = {});

/// Splitting kappa : Upsilon -> (1/12)Z given on the five generators.
struct KappaTable {
  std::array<Twelfth, kGeneratorCount> values{};

  /// kappa(n_i) = -Phi(hat n_i) for a splitting homomorphism Phi.
  static KappaTable from_splitting(const std::vector<Rational>& phi);
  const Twelfth& operator[](int generator) const { return values.at(static_cast<std::size_t>(generator - 1)); }
};

/// kappa on a word via kappa(us) = kappa(u) + kappa(s) + (sigma - Sigma_c)(u, s).
Twelfth kappa(const KappaTable& table, const Word& w, const CocycleOptions& options = {});

/// sigma(g,h) == Sigma_c(g,h) + kappa(gh) - kappa(g) - kappa(h), exactly.
bool verify_split(const KappaTable& table, const Word& g, const Word& h, const CocycleOptions& options = {});

/// l(g,tau) = exp((j~(g,tau) - 2 pi i kappa(g)) / Norm(I)); requires phi(g) in 2I.
Complex multiplier(const KappaTable& table, const Word& w, const BallPoint& tau, const EisensteinIdeal& ideal,
                   const CocycleOptions& options = {});

/// Sigma(g,h) lies in Norm(I) Z; both words must lie in Upsilon_nc(2I).
bool divisibility_check(const Word& g, const Word& h, const EisensteinIdeal& ideal);

/// sigma(g,h) + sigma(gh,k) == sigma(g,hk) + sigma(h,k).
bool cocycle_relation(const NumericMatrix& g, const NumericMatrix& h, const NumericMatrix& k,
                      const SigmaConfig& cfg = {});
bool cocycle_relation(const Word& g, const Word& h, const Word& k, const SigmaConfig& cfg = {});

}  // namespace picard
