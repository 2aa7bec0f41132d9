#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "picard/group.hpp"

namespace picard {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Point of the ball model H = { tau in C^d : 2 Re(tau_1) + sum_{i>=2} |tau_i|^2 < 0 }.
class BallPoint {
 public:
  /// Throws std::domain_error when tau is not in H.
  explicit BallPoint(ComplexVector tau);

  /// tau_0 = (-1, 0, ..., 0).
  static BallPoint base_point(int d);

  int dim() const { return static_cast<int>(tau_.size()); }
  const ComplexVector& tau() const { return tau_; }
  const Complex& operator[](int i) const { return tau_(i); }

  /// <(tau,1),(tau,1)> for the form J; negative inside H.
  double hermitian_value() const { return hermitian_value(tau_); }
  static double hermitian_value(const ComplexVector& tau);

 private:
  ComplexVector tau_;
};

/// Approximate element of SU(d,1), stored as a (d+1)x(d+1) complex matrix.
class NumericMatrix {
 public:
  explicit NumericMatrix(ComplexMatrix m);
  /// Embeds an exact matrix via zeta -> exp(2 pi i / 3).
  static NumericMatrix embed(const GroupMatrix& g);
  static NumericMatrix identity(int d);

  int dim() const { return static_cast<int>(m_.rows()) - 1; }
  const ComplexMatrix& matrix() const { return m_; }
  const Complex& operator()(int i, int j) const { return m_(i, j); }

  /// max(|conj(g)^t J g - J|_inf, |det g - 1|).
  double su_residual() const;

  friend NumericMatrix operator*(const NumericMatrix& x, const NumericMatrix& y) {
    return NumericMatrix(x.m_ * y.m_);
  }

 private:
  ComplexMatrix m_;
};

/// J with the identity block I_{d-1} in the middle.
ComplexMatrix j_form(int d);

/// Log with -pi < Im <= pi; a negative real input (either zero sign) maps to +pi.
Complex principal_log(Complex z);

/// Log with branch cut along arg = cut, i.e. cut < Im <= cut + 2 pi.
Complex log_with_cut(Complex z, double cut);

inline constexpr double kPrincipalCut = -std::numbers::pi;

/// g * tau = (C tau + D)^{-1} (A tau + B).
BallPoint act(const NumericMatrix& g, const BallPoint& tau);
/// j(g, tau) = C tau + D.
Complex j_factor(const NumericMatrix& g, const BallPoint& tau);

/// -g_{d+1,1} if nonzero, otherwise g_{d+1,d+1}.
Complex x_value(const NumericMatrix& g);
EisensteinInt x_value(const GroupMatrix& g);

/// log(j / X) + log(X); the first log is principal, the second uses `x_log_cut`.
Complex j_tilde(const NumericMatrix& g, const BallPoint& tau, double x_log_cut = kPrincipalCut);

/// Re(j(g, tau) / X(g)); positive for every g in SU(d,1) and tau in H.
double halfplane_margin(const NumericMatrix& g, const BallPoint& tau);

/// (1 / 2 pi i)(j~(gh,tau) - j~(g,h tau) - j~(h,tau)) before rounding.
/// j(g, h tau) is taken as j(gh, tau) / j(h, tau), which avoids forming h tau.
Complex branch_defect(const NumericMatrix& g, const NumericMatrix& h, const BallPoint& tau,
                      double x_log_cut = kPrincipalCut);
/// Same, with the product supplied (e.g. embedded from an exact product).
Complex branch_defect(const NumericMatrix& g, const NumericMatrix& h, const NumericMatrix& gh, const BallPoint& tau,
                      double x_log_cut = kPrincipalCut);

/// Scaling and squaring with a truncated Taylor series.
ComplexMatrix expm(const ComplexMatrix& m, double rel_tol = 1e-13);

/// Random element of the Lie algebra su(d,1): M^* J + J M = 0, tr M = 0,
/// entries of modulus at most 1.
ComplexMatrix random_su_algebra(Rng& rng, int d);
/// exp of random_su_algebra; throws std::runtime_error if the result misses
/// the SU(d,1) invariants by more than 1e-9.
NumericMatrix random_su(Rng& rng, int d);

/// Random point of H with moderate coordinates.
BallPoint random_ball_point(Rng& rng, int d);

/// diag(z, conj(z)^2, I_{d-2}, z) for |z| = 1 and d >= 2; throws std::domain_error otherwise.
NumericMatrix make_torus(Complex z, int d);

/// Psi(t_z, n) = log(z) / (2 pi i) - n.
double psi(Complex z, long n);

/// |Psi((t_z,n)(t_z',n')) - Psi(t_z,n) - Psi(t_z',n')| with the product law
/// (t_z,n)(t_z',n') = (t_zz', n + n' + sigma(t_z, t_z')).
double psi_check(Complex z, long n, Complex z2, long n2, int d = 2);

}  // namespace picard
