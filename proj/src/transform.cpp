#include "quap/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace quap {

Eigen::MatrixXd adjoint_matrix(const StructureConstants& sc, const Eigen::VectorXd& z) {
  const int d = sc.dim();
  if (z.size() != d) throw std::invalid_argument("basis mismatch");
  Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    if (z[a] == 0.0) continue;
    for (int b = 0; b < d; ++b)
      for (auto& [c, t] : sc.table(a, b)) {
        GRat v = c.eval(sc.params());
        if (!v.is_real()) throw std::invalid_argument("adjoint flow needs a real table");
        ad(t, b) += z[a] * to_double(v.re);
      }
  }
  return ad;
}

Eigen::VectorXd boost_element(const StructureConstants& sc, const BoostParams& p) {
  const int d = sc.dim();
  Eigen::VectorXd z = Eigen::VectorXd::Zero(d);
  auto put = [&](const std::string& name, double v) {
    if (v == 0.0) return;
    auto idx = sc.basis().find(name);
    if (!idx) throw std::invalid_argument("preset has no generator " + name);
    z[*idx] += v;
  };
  for (size_t i = 0; i < p.beta.size(); ++i) put("K_" + std::to_string(i + 1), p.beta[i]);
  for (size_t i = 0; i < p.gamma.size(); ++i) put("N_" + std::to_string(i + 1), p.gamma[i]);
  for (size_t i = 0; i < p.alpha.size(); ++i) put("J_" + std::to_string(i + 1), p.alpha[i]);
  for (size_t i = 0; i < p.theta.size(); ++i)
    for (size_t j = 0; j < p.theta[i].size(); ++j) {
      double v = p.theta[i][j];
      if (v == 0.0) continue;
      int a = static_cast<int>(std::min(i, j)) + 1;
      int b = static_cast<int>(std::max(i, j)) + 1;
      put("M(" + std::to_string(a) + "," + std::to_string(b) + ")", v);
    }
  put("R", p.vartheta);
  return z;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  Eigen::MatrixXd a = m;
  if (norm > 0.5) {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
    a /= std::pow(2.0, squarings);
  }
  const int d = static_cast<int>(m.rows());
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(d, d);
  for (int k = 1; k <= 24; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

Eigen::VectorXd boost_transform(const StructureConstants& sc, const BoostParams& p,
                                const Eigen::VectorXd& a) {
  const int d = sc.dim();
  if (a.size() != d) throw std::invalid_argument("basis mismatch");
  for (int g = 0; g < d; ++g)
    if (a[g] != 0.0 && sc.basis().grading[g] == Grading::Homogeneous)
      throw std::invalid_argument("boost_transform argument must be in the translation span");
  Eigen::VectorXd z = boost_element(sc, p);
  return expm(adjoint_matrix(sc, z)) * a;
}

AlgebraElement infinitesimal_transform(const StructureConstants& sc, const AlgebraElement& z,
                                       const AlgebraElement& a) {
  const int d = sc.dim();
  for (int g = 0; g < d; ++g) {
    if (!z.coeff[g].is_zero() && sc.basis().grading[g] != Grading::Homogeneous)
      throw std::invalid_argument("infinitesimal_transform: z must be homogeneous");
    if (!a.coeff[g].is_zero() && sc.basis().grading[g] == Grading::Homogeneous)
      throw std::invalid_argument("infinitesimal_transform: a must be a translation");
  }
  AlgebraElement out = a;
  out += commutator(z, a, sc);
  return out;
}

}  // namespace quap
