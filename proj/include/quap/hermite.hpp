#ifndef QUAP_HERMITE_HPP
#define QUAP_HERMITE_HPP

#include <map>
#include <vector>

#include "quap/rational.hpp"

namespace quap {

/// L2-normalized Hermite function eta_k(s) = H_k(s) e^{-s^2/2} / sqrt(2^k k! sqrt(pi)),
/// computed by upward recurrence.  k <= 400.
double hermite_fn(int k, double s);

/// d/ds eta_k(s) via eta_k' = sqrt(2k) eta_{k-1} - s eta_k.
double hermite_fn_derivative(int k, double s);

/// Nodes and weights of N-point Gauss-Hermite quadrature for the weight
/// e^{-x^2} (Golub-Welsch on the Jacobi matrix).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermiteRule gauss_hermite(int npoints);

/// integral eta_j eta_k dx by Gauss-Hermite quadrature (exact for
/// j + k < 2 npoints up to rounding).
double hermite_overlap(int j, int k, const GaussHermiteRule& rule);

/// Exact expansion in the eta-basis with Radical coefficients; used to
/// check the ladder identities (s -+ d/ds) eta_k = sqrt(2(k + {1,0})) eta_{k +- 1}
/// and (s^2 - d^2/ds^2) eta_k = (2k+1) eta_k without floating point.
struct HermiteExpansion {
  std::map<int, Radical> coeff;  // index -> coefficient

  static HermiteExpansion basis(int k);
  HermiteExpansion apply_position() const;    // multiply by s
  HermiteExpansion apply_derivative() const;  // d/ds
  HermiteExpansion& operator-=(const HermiteExpansion& o);
  HermiteExpansion& operator+=(const HermiteExpansion& o);
  bool is_zero() const;
};

}  // namespace quap

#endif
