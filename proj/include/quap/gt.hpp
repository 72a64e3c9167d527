#ifndef QUAP_GT_HPP
#define QUAP_GT_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "quap/rational.hpp"

namespace quap {

/// Non-increasing integer top row labeling a U(n) irrep.
struct IrrepLabel {
  std::vector<int> rows;
  int n() const { return static_cast<int>(rows.size()); }
  bool valid() const;
};

/// Triangular integer pattern m[r][i], rows r = 1..n (r entries each),
/// top row = label, betweenness m[r+1][i] >= m[r][i] >= m[r+1][i+1].
struct GTPattern {
  std::vector<std::vector<int>> m;
  int n() const { return static_cast<int>(m.size()); }
  int row_sum(int r) const;  // 1-based; r = 0 gives 0
  bool betweenness_ok() const;
  friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.m == b.m; }
  friend bool operator<(const GTPattern& a, const GTPattern& b) { return a.m < b.m; }
};

/// All patterns of one label in a deterministic order.
class GTSpace {
 public:
  explicit GTSpace(IrrepLabel label);
  const IrrepLabel& label() const { return label_; }
  int dim() const { return static_cast<int>(patterns_.size()); }
  const GTPattern& pattern(int i) const { return patterns_[i]; }
  int index_of(const GTPattern& p) const;  // -1 when absent

 private:
  IrrepLabel label_;
  std::vector<GTPattern> patterns_;
};

/// Weyl dimension formula prod_{i<j} (l_i - l_j + j - i)/(j - i); the
/// independent oracle for the enumeration count.
long weyl_dimension(const IrrepLabel& label);

/// sigma'(Z_kk) (diagonal), sigma'(Z_{k,k+1}) (raising) and
/// sigma'(Z_{k+1,k}) (lowering) on a GTSpace; other elements follow from
/// commutators.  Entries are square roots of rationals; both a double
/// matrix and an exact Radical matrix are exposed.
Eigen::MatrixXd sigma_z(const GTSpace& space, int k, int kp);
std::vector<std::vector<Radical>> sigma_z_exact(const GTSpace& space, int k, int kp);

/// General sigma'(Z_ab) assembled from the band generators by commutators.
Eigen::MatrixXd sigma_z_full(const GTSpace& space, int a, int b);

/// d_1..d_upto for the label: d_alpha = eigenvalue of the cyclic
/// delta-contracted sigma'(Z...Z) product, exact, checked to be constant
/// across patterns.
std::vector<Int> un_casimirs(const IrrepLabel& label, int upto);

/// Closed-form Casimir polynomials d_alpha(label) for cross-checking the
/// operator eigenvalues: sum_i l_i (l_i + n + 1 - 2i) for alpha = 2 and the
/// analogous third-order sum for alpha = 3.
Int casimir_polynomial(const IrrepLabel& label, int alpha);

/// Scalar little-group rule: Sigma_ab = d1 delta_ab (compact) or
/// d1 eta_ab (noncompact) on a one-dimensional space.
Eigen::MatrixXd scalar_sigma(long d1, int index_count, bool noncompact, int a, int b);

/// Truncated U(1,n) module: a ladder of U(n) rungs.  Rung r carries the
/// label with n-th row fixed to `base` plus r added to entry `step_entry`.
class LadderSpace {
 public:
  LadderSpace(std::vector<int> top, int rungs);

  int n() const { return static_cast<int>(top_.size()) - 1; }
  int rungs() const { return static_cast<int>(rung_labels_.size()); }
  int dim() const { return dim_; }
  const std::vector<int>& top() const { return top_; }
  const IrrepLabel& rung_label(int r) const { return rung_labels_[r]; }
  int rung_of(int row) const;
  int offset(int r) const { return offsets_[r]; }
  const GTSpace& rung(int r) const { return *spaces_[r]; }

  /// Rows on rungs 1..rungs-2 (both boundary rungs excluded).
  std::vector<int> interior_rows() const;

 private:
  std::vector<int> top_;
  std::vector<IrrepLabel> rung_labels_;
  std::vector<std::shared_ptr<GTSpace>> spaces_;
  std::vector<int> offsets_;
  int dim_ = 0;
};

/// sigma'(Z_ab) on the ladder: compact block-diagonal pieces for spatial
/// indices, rung-coupling blocks with the noncompact i factors for the
/// 0-row generators.  Indices a, b in 0..n.
Eigen::MatrixXcd u1n_sigma(const LadderSpace& ladder, int a, int b);

}  // namespace quap

#endif
