#ifndef QUAP_TRANSFORM_HPP
#define QUAP_TRANSFORM_HPP

#include <Eigen/Dense>
#include <vector>

#include "quap/algebra.hpp"

namespace quap {

/// Boost/rotation parameters of a homogeneous element
///   Z = beta.K + gamma.N + alpha.J + theta^{ij} M_ij + vartheta R.
/// Components present in the basis are used; the rest must be zero.
struct BoostParams {
  std::vector<double> beta;
  std::vector<double> gamma;
  std::vector<double> alpha;
  std::vector<std::vector<double>> theta;
  double vartheta = 0;
};

/// Dense adjoint matrix ad_z on the full algebra, z given by coefficients.
Eigen::MatrixXd adjoint_matrix(const StructureConstants& sc, const Eigen::VectorXd& z);

/// Homogeneous element assembled from boost parameters (coefficient vector).
Eigen::VectorXd boost_element(const StructureConstants& sc, const BoostParams& p);

/// exp(ad_z) . a via scaling-and-squaring; a must lie in the
/// translation+center span.
Eigen::VectorXd boost_transform(const StructureConstants& sc, const BoostParams& p,
                                const Eigen::VectorXd& a);

/// Matrix exponential of a general square matrix (scaling and squaring with
/// a machine-precision Taylor core).
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);

/// a + [z, a] with exact coefficients; z must be homogeneous and a must lie
/// in the translation+center span, else std::invalid_argument.
AlgebraElement infinitesimal_transform(const StructureConstants& sc, const AlgebraElement& z,
                                       const AlgebraElement& a);

}  // namespace quap

#endif
