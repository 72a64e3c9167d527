#ifndef QUAP_FOCK_HPP
#define QUAP_FOCK_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quap/rational.hpp"

namespace quap {

using SparseOp = Eigen::SparseMatrix<std::complex<double>>;
using DenseOp = Eigen::MatrixXcd;

/// Multi-index of oscillator quanta.
struct FockIndex {
  std::vector<int> k;
  int total() const {
    int t = 0;
    for (int v : k) t += v;
    return t;
  }
  friend bool operator<(const FockIndex& a, const FockIndex& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.k < b.k;
  }
  friend bool operator==(const FockIndex& a, const FockIndex& b) { return a.k == b.k; }
};

/// Oscillator basis with total-quanta cutoff N_max, enumerated grade by
/// grade, first component most significant inside a grade.  Noncompact
/// spaces treat index 0 as the time mode and grade states by
/// k = -k_0 + sum_i k_i.
class TruncatedFock {
 public:
  TruncatedFock(int modes, int n_max, bool noncompact);

  int modes() const { return modes_; }
  int n_max() const { return n_max_; }
  bool noncompact() const { return noncompact_; }
  int dim() const { return static_cast<int>(states_.size()); }
  const FockIndex& state(int row) const { return states_[row]; }
  std::optional<int> row_of(const FockIndex& k) const;

  /// U(1) grade: total quanta (compact) or -k_0 + sum k_i (noncompact).
  int grade(int row) const;
  std::vector<int> grades() const;
  std::vector<int> block_rows(int grade) const;

  /// Rows with total quanta <= N_max - d.
  std::vector<int> interior(int d) const;

 private:
  int modes_;
  int n_max_;
  bool noncompact_;
  std::vector<FockIndex> states_;
  std::map<std::vector<int>, int> lookup_;
};

/// Projective constant s and central eigenvalue kappa of the realization.
struct RepConfig {
  Rat s{2};
  Rat kappa{1};

  void validate() const;
  double sd() const { return to_double(s); }
  double kd() const { return to_double(kappa); }
};

enum class CoordBasis { PositionTime, MomentumTime, EnergyMomentum, EnergyPosition };

/// kappa-scaled ladder operator xi'(A_a^pm); on the time mode the raising
/// and lowering roles are swapped so that the u(1,n) bracket table holds.
/// `a` is the paper index: 0..n-1 plus time at 0 for noncompact spaces,
/// spatial 1..n otherwise.  Rows beyond the cutoff are dropped.
SparseOp ladder(const TruncatedFock& space, int a, int sign, const RepConfig& cfg);

/// rho'(Z_ab) = (1/s) xi'(A_a^+) xi'(A_b^-), with the (0,0) entry ordered so
/// that every diagonal action is (kappa/s) k_a.
SparseOp rho_z(const TruncatedFock& space, int a, int b, const RepConfig& cfg);

/// rho'(U) = eta^{ab} rho'(Z_ab): diagonal (kappa/s) times the grade.
SparseOp rho_u(const TruncatedFock& space, const RepConfig& cfg);

/// Unit-normalized (kappa-free) position/momentum matrices; the momentum
/// of the time mode carries a sign flip from the swapped ladder roles.
SparseOp unit_position(const TruncatedFock& space, int a);
SparseOp unit_momentum(const TruncatedFock& space, int a);

/// Hermitian generator matrices named as in the n-notation presets
/// (J/K/N/M/R only when the corresponding index range exists).  The basis
/// choice conjugates by the mode-phase unitaries, realizing the four
/// diagonalizations of the translation pairs.
std::map<std::string, SparseOp> real_generators(const TruncatedFock& space,
                                                const RepConfig& cfg, CoordBasis basis);

/// Diagonal phase unitary diag(i^{k_m}) over the selected modes; conjugation
/// by it maps (q, p) -> (p, -q) mode-wise (the reciprocity rotation).
SparseOp mode_phase(const TruncatedFock& space, bool spatial, bool time);

/// Max |entry| of op over columns restricted to interior(d).
double interior_residual(const TruncatedFock& space, const SparseOp& op, int d);

/// Operator norm of [Q_1, P_1] on interior(2) for each kappa in the list;
/// the norm scales linearly with kappa.
std::vector<std::pair<double, double>> degenerate_limit_probe(const TruncatedFock& space,
                                                              const RepConfig& base,
                                                              const std::vector<Rat>& kappas);

/// Compares matrix elements of a named generator against an independent
/// per-mode Hermite-recurrence evaluation of its differential form.
/// Returns the largest absolute deviation over interior(2) columns.
double coordinate_check(const TruncatedFock& space, const RepConfig& cfg,
                        const std::string& op_name);

}  // namespace quap

#endif
