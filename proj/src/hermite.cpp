#include "quap/hermite.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace quap {

double hermite_fn(int k, double s) {
  if (k < 0) throw std::invalid_argument("hermite_fn: k must be >= 0");
  if (k > 400) throw std::invalid_argument("hermite_fn: k > 400 outside validated range");
  const double eta0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * s * s);
  if (k == 0) return eta0;
  double prev = eta0;
  double cur = std::sqrt(2.0) * s * eta0;
  for (int j = 2; j <= k; ++j) {
    double next = s * std::sqrt(2.0 / j) * cur - std::sqrt((j - 1.0) / j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_fn_derivative(int k, double s) {
  double lower = k > 0 ? std::sqrt(2.0 * k) * hermite_fn(k - 1, s) : 0.0;
  return lower - s * hermite_fn(k, s);
}

namespace {
// Normalized Hermite polynomial h_k = H_k / sqrt(2^k k! sqrt(pi)) and the
// running sum of squares used for the Christoffel weights.
double normalized_hermite_poly(int k, double x) {
  double prev = std::pow(M_PI, -0.25);
  if (k == 0) return prev;
  double cur = std::sqrt(2.0) * x * prev;
  for (int j = 2; j <= k; ++j) {
    double next = x * std::sqrt(2.0 / j) * cur - std::sqrt((j - 1.0) / j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}
}  // namespace

GaussHermiteRule gauss_hermite(int npoints) {
  if (npoints < 1) throw std::invalid_argument("gauss_hermite: npoints must be >= 1");
  // Golub-Welsch eigenvalues as starting points, Newton-refined on the
  // normalized polynomial; weights from the Christoffel function
  // w_i = 1 / sum_{k<n} h_k(x_i)^2.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(npoints, npoints);
  for (int i = 1; i < npoints; ++i) {
    double off = std::sqrt(i / 2.0);
    jacobi(i - 1, i) = off;
    jacobi(i, i - 1) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  GaussHermiteRule rule;
  rule.nodes.resize(npoints);
  rule.weights.resize(npoints);
  for (int i = 0; i < npoints; ++i) {
    double x = es.eigenvalues()[i];
    for (int it = 0; it < 40; ++it) {
      double f = normalized_hermite_poly(npoints, x);
      double fp = std::sqrt(2.0 * npoints) * normalized_hermite_poly(npoints - 1, x);
      double step = f / fp;
      x -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    double sumsq = 0;
    for (int k = 0; k < npoints; ++k) {
      double h = normalized_hermite_poly(k, x);
      sumsq += h * h;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / sumsq;
  }
  return rule;
}

double hermite_overlap(int j, int k, const GaussHermiteRule& rule) {
  // eta_j eta_k e^{+x^2} = h_j h_k, a polynomial of degree j + k
  double acc = 0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    double x = rule.nodes[i];
    acc += rule.weights[i] * normalized_hermite_poly(j, x) * normalized_hermite_poly(k, x);
  }
  return acc;
}

HermiteExpansion HermiteExpansion::basis(int k) {
  HermiteExpansion e;
  e.coeff[k] = Radical(GRat(1));
  return e;
}

// s eta_k = sqrt((k+1)/2) eta_{k+1} + sqrt(k/2) eta_{k-1},
// with sqrt(m/2) carried exactly as sqrt(2m)/2.
HermiteExpansion HermiteExpansion::apply_position() const {
  HermiteExpansion out;
  for (auto& [k, c] : coeff) {
    out.coeff[k + 1] += Radical::root(Int(2 * (k + 1)), GRat(Rat(1, 2))) * c;
    if (k > 0) out.coeff[k - 1] += Radical::root(Int(2 * k), GRat(Rat(1, 2))) * c;
  }
  for (auto it = out.coeff.begin(); it != out.coeff.end();)
    it = it->second.is_zero() ? out.coeff.erase(it) : std::next(it);
  return out;
}

// d/ds eta_k = sqrt(k/2) eta_{k-1} - sqrt((k+1)/2) eta_{k+1}
HermiteExpansion HermiteExpansion::apply_derivative() const {
  HermiteExpansion out;
  for (auto& [k, c] : coeff) {
    if (k > 0) out.coeff[k - 1] += Radical::root(Int(2 * k), GRat(Rat(1, 2))) * c;
    out.coeff[k + 1] -= Radical::root(Int(2 * (k + 1)), GRat(Rat(1, 2))) * c;
  }
  for (auto it = out.coeff.begin(); it != out.coeff.end();)
    it = it->second.is_zero() ? out.coeff.erase(it) : std::next(it);
  return out;
}

HermiteExpansion& HermiteExpansion::operator-=(const HermiteExpansion& o) {
  for (auto& [k, c] : o.coeff) {
    coeff[k] -= c;
    if (coeff[k].is_zero()) coeff.erase(k);
  }
  return *this;
}

HermiteExpansion& HermiteExpansion::operator+=(const HermiteExpansion& o) {
  for (auto& [k, c] : o.coeff) {
    coeff[k] += c;
    if (coeff[k].is_zero()) coeff.erase(k);
  }
  return *this;
}

bool HermiteExpansion::is_zero() const { return coeff.empty(); }

}  // namespace quap
