#ifndef QUAP_FIELDS_HPP
#define QUAP_FIELDS_HPP

#include <functional>
#include <string>
#include <vector>

#include "quap/fock.hpp"
#include "quap/gt.hpp"

namespace quap {

/// Little-group side of the product representation: sigma'(Z_ab) matrices
/// over the index range of the preset (0..n noncompact, 1..n compact).
struct SigmaRep {
  int dim = 1;
  bool noncompact = false;
  long d1 = 0;
  std::vector<int> label;  // echo for reports
  std::function<Eigen::MatrixXcd(int, int)> z;
};

SigmaRep sigma_trivial(int n, bool noncompact);
SigmaRep sigma_from_gt(const GTSpace& space);          // compact indices 1..n
SigmaRep sigma_from_ladder(const LadderSpace& ladder); // indices 0..n

/// H^sigma (x) H^xi with the U(1) block grading of the Fock factor.
class ProductSpace {
 public:
  ProductSpace(SigmaRep sigma, TruncatedFock fock, RepConfig cfg);

  const SigmaRep& sigma() const { return sigma_; }
  const TruncatedFock& fock() const { return fock_; }
  const RepConfig& cfg() const { return cfg_; }
  int dim() const { return sigma_.dim * fock_.dim(); }
  int row(int g, int f) const { return g * fock_.dim() + f; }
  int grade_of(int r) const { return fock_.grade(r % fock_.dim()); }
  std::vector<int> grades() const { return fock_.grades(); }
  std::vector<int> block_rows(int grade) const;
  std::vector<int> interior_block_rows(int grade, int d) const;

  Eigen::MatrixXcd lift_fock(const SparseOp& op) const;   // 1 (x) op
  Eigen::MatrixXcd lift_sigma(const Eigen::MatrixXcd& m) const;  // m (x) 1

 private:
  SigmaRep sigma_;
  TruncatedFock fock_;
  RepConfig cfg_;
};

using FieldOp = Eigen::MatrixXcd;

/// rho'(W_ab) = a (Xhat_a Xhat_b + Yhat_a Yhat_b)_sym (x) 1 -
/// kappa sigma'(Z_ab) (x) 1_fock with a = (1 + kappa/s)/2; the unit-ladder
/// bilinear reproduces the coordinate-form field operators.
FieldOp build_W(const ProductSpace& space, int a, int b);

/// Cyclic eta-contracted W products: order 0/1 -> kappa Id, 2 -> eta^ab W_ab,
/// 2m -> trace of the m-fold product.
FieldOp build_C(const ProductSpace& space, int order);

struct SpectrumBlock {
  int grade = 0;
  int dim = 0;
  std::vector<double> eigenvalues;
  double residual = 0;
};

struct SpectrumReport {
  double s = 0;
  double kappa = 0;
  std::vector<int> label;
  int n_max = 0;
  bool noncompact = false;
  double tolerance = 0;
  std::vector<SpectrumBlock> blocks;

  std::string to_json() const;
  std::string to_markdown() const;
  std::string to_csv() const;
};

/// Per-block Hermitian eigensolve; throws std::domain_error when a block
/// deviates from Hermiticity beyond tol (a construction bug, not data).
SpectrumReport spectrum(const FieldOp& op, const ProductSpace& space, double tol = 1e-10);

struct BoundaryReport {
  double a = 0;
  double c1 = 0;
  double c2 = 0;        // for the requested signature
  std::string coupling; // "d1 = l" or "k = d1"
  double max_deviation = 0;
  bool matched_ok = false;
};

/// a = s/(2(s-1)), c1 = 2a, c2 = n a (compact) or (n-1) a (noncompact);
/// builds the representation at kappa = c1 and checks the C2 spectrum on the
/// d1-matched blocks.  s = 1 is rejected.
BoundaryReport verify_boundary_conditions(const Rat& s, int n, bool noncompact,
                                          const IrrepLabel& label, int n_max);

/// Fourth-order reduction: the sandwich operator
///   sum_ab eta^aa eta^bb sigma'(Z_ab) (x) (xhat - d)_a (xhat + d)_b
/// equals f01 + f11 D1 + f21 D1^2 + f12 D2 - (1/2) C4 built from the total
/// U(n) action, with the coefficients pinned at kappa = c1.  Returns the
/// largest residual entry on the given grade block (interior rows).
double verify_C4_reduction(const ProductSpace& space, int grade,
                           const double* c4_override = nullptr);

/// Cartesian oscillator check on Hermite products: exact ladder route plus
/// a grid evaluation; returns the worst grid residual (the ladder route
/// must vanish identically or it throws).
double oscillator_pde_check(const std::vector<int>& quanta, bool noncompact);

struct MassMoments {
  double mean = 0;
  double variance = 0;
};

/// Expectation and variance of E^2 - P^2 in the given normalized state;
/// mass is statistical here, not an eigenvalue.
MassMoments mass_moments(const Eigen::VectorXcd& state, const ProductSpace& space);

}  // namespace quap

#endif
