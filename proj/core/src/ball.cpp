#include "picard/ball.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace picard {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kTwoPiI{0.0, kTwoPi};
}  // namespace

BallPoint::BallPoint(ComplexVector tau) : tau_(std::move(tau)) {
  if (tau_.size() < 1) throw std::domain_error("BallPoint: dimension must be >= 1");
  const double h = hermitian_value(tau_);
  if (!(h < 0.0)) throw std::domain_error("BallPoint: point outside H (form value " + std::to_string(h) + ")");
}

BallPoint BallPoint::base_point(int d) {
  ComplexVector t = ComplexVector::Zero(d);
  t(0) = -1.0;
  return BallPoint(std::move(t));
}

double BallPoint::hermitian_value(const ComplexVector& tau) {
  double v = 2.0 * tau(0).real();
  for (Eigen::Index i = 1; i < tau.size(); ++i) v += std::norm(tau(i));
  return v;
}

NumericMatrix::NumericMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2) throw std::invalid_argument("NumericMatrix: expected a square matrix of size >= 2");
}

NumericMatrix NumericMatrix::embed(const GroupMatrix& g) {
  ComplexMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = g(i, j).to_complex();
  return NumericMatrix(std::move(m));
}

NumericMatrix NumericMatrix::identity(int d) { return NumericMatrix(ComplexMatrix::Identity(d + 1, d + 1)); }

double NumericMatrix::su_residual() const {
  const ComplexMatrix j = j_form(dim());
  const ComplexMatrix defect = m_.adjoint() * j * m_ - j;
  double worst = 0.0;
  for (Eigen::Index r = 0; r < defect.rows(); ++r) worst = std::max(worst, defect.row(r).cwiseAbs().sum());
  return std::max(worst, std::abs(m_.determinant() - 1.0));
}

ComplexMatrix j_form(int d) {
  ComplexMatrix j = ComplexMatrix::Zero(d + 1, d + 1);
  j(0, d) = 1.0;
  j(d, 0) = 1.0;
  for (int i = 1; i < d; ++i) j(i, i) = 1.0;
  return j;
}

Complex principal_log(Complex z) {
  if (z.imag() == 0.0 && z.real() < 0.0) return {std::log(-z.real()), std::numbers::pi};
  return std::log(z);
}

Complex log_with_cut(Complex z, double cut) {
  Complex l = principal_log(z);
  double arg = l.imag();
  while (arg <= cut) arg += kTwoPi;
  while (arg > cut + kTwoPi) arg -= kTwoPi;
  return {l.real(), arg};
}

Complex j_factor(const NumericMatrix& g, const BallPoint& tau) {
  const int d = g.dim();
  if (tau.dim() != d) throw std::invalid_argument("j_factor: dimension mismatch");
  Complex j = g(d, d);
  for (int i = 0; i < d; ++i) j += g(d, i) * tau[i];
  return j;
}

BallPoint act(const NumericMatrix& g, const BallPoint& tau) {
  const int d = g.dim();
  const Complex j = j_factor(g, tau);
  if (std::abs(j) < 1e-12) throw std::domain_error("act: automorphy factor vanishes");
  const ComplexMatrix& m = g.matrix();
  ComplexVector num = m.topLeftCorner(d, d) * tau.tau() + m.topRightCorner(d, 1);
  return BallPoint(num / j);
}

Complex x_value(const NumericMatrix& g) {
  const int d = g.dim();
  if (g(d, 0) != Complex(0.0, 0.0)) return -g(d, 0);
  return g(d, d);
}

EisensteinInt x_value(const GroupMatrix& g) {
  if (!g(2, 0).is_zero()) return -g(2, 0);
  return g(2, 2);
}

Complex j_tilde(const NumericMatrix& g, const BallPoint& tau, double x_log_cut) {
  const Complex x = x_value(g);
  return principal_log(j_factor(g, tau) / x) + log_with_cut(x, x_log_cut);
}

double halfplane_margin(const NumericMatrix& g, const BallPoint& tau) {
  return (j_factor(g, tau) / x_value(g)).real();
}

Complex branch_defect(const NumericMatrix& g, const NumericMatrix& h, const BallPoint& tau, double x_log_cut) {
  return branch_defect(g, h, g * h, tau, x_log_cut);
}

Complex branch_defect(const NumericMatrix& g, const NumericMatrix& h, const NumericMatrix& gh, const BallPoint& tau,
                      double x_log_cut) {
  const Complex j_h = j_factor(h, tau);
  const Complex j_gh = j_factor(gh, tau);
  const Complex x_g = x_value(g);
  const Complex jt_g_at_h = principal_log((j_gh / j_h) / x_g) + log_with_cut(x_g, x_log_cut);
  const Complex total = j_tilde(gh, tau, x_log_cut) - jt_g_at_h - j_tilde(h, tau, x_log_cut);
  return total / kTwoPiI;
}

ComplexMatrix expm(const ComplexMatrix& m, double rel_tol) {
  const Eigen::Index n = m.rows();
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix a = m / std::ldexp(1.0, squarings);

  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  bool converged = false;
  for (int k = 1; k <= 60; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() <= rel_tol * result.cwiseAbs().maxCoeff()) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("expm: Taylor series did not converge");
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

ComplexMatrix random_su_algebra(Rng& rng, int d) {
  if (d < 1) throw std::invalid_argument("random_su_algebra: d must be >= 1");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = d + 1;
  ComplexMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = Complex(u(rng), u(rng));
  // J A with A anti-Hermitian solves M^* J + J M = 0; the trace is then
  // imaginary and i*I lies in the algebra, so subtracting it keeps M inside.
  const ComplexMatrix anti = 0.5 * (b - b.adjoint());
  ComplexMatrix m = j_form(d) * anti;
  m -= (m.trace() / static_cast<double>(n)) * ComplexMatrix::Identity(n, n);
  const double biggest = m.cwiseAbs().maxCoeff();
  if (biggest > 1.0) m /= biggest;
  return m;
}

NumericMatrix random_su(Rng& rng, int d) {
  NumericMatrix g(expm(random_su_algebra(rng, d)));
  if (g.su_residual() > 1e-9) throw std::runtime_error("random_su: invariant residual too large");
  return g;
}

BallPoint random_ball_point(Rng& rng, int d) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> depth(0.05, 3.0);
  ComplexVector t(d);
  double tail = 0.0;
  for (int i = 1; i < d; ++i) {
    t(i) = Complex(u(rng), u(rng));
    tail += std::norm(t(i));
  }
  t(0) = Complex(-0.5 * tail - depth(rng), 3.0 * u(rng));
  return BallPoint(std::move(t));
}

NumericMatrix make_torus(Complex z, int d) {
  if (d < 2) throw std::invalid_argument("make_torus: d must be >= 2");
  if (std::abs(std::abs(z) - 1.0) > 1e-12) throw std::domain_error("make_torus: |z| must be 1");
  ComplexMatrix m = ComplexMatrix::Identity(d + 1, d + 1);
  m(0, 0) = z;
  m(d, d) = z;
  m(1, 1) = std::conj(z) * std::conj(z);
  return NumericMatrix(std::move(m));
}

double psi(Complex z, long n) { return (principal_log(z) / kTwoPiI).real() - static_cast<double>(n); }

double psi_check(Complex z, long n, Complex z2, long n2, int d) {
  const NumericMatrix t1 = make_torus(z, d);
  const NumericMatrix t2 = make_torus(z2, d);
  const long sigma = std::lround(branch_defect(t1, t2, BallPoint::base_point(d)).real());
  const double lhs = psi(z * z2, n + n2 + sigma);
  return std::abs(lhs - psi(z, n) - psi(z2, n2));
}

}  // namespace picard
