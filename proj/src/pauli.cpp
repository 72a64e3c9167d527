#include "quap/pauli.hpp"

#include <cmath>

namespace quap {

namespace {
Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}
Mat2 add_scaled_identity(Mat2 a, std::complex<double> s) {
  a[0][0] += s;
  a[1][1] += s;
  return a;
}
double dist_to_scaled_identity(const Mat2& a, double s) {
  double m = 0;
  m = std::max(m, std::abs(a[0][0] - s));
  m = std::max(m, std::abs(a[1][1] - s));
  m = std::max(m, std::abs(a[0][1]));
  m = std::max(m, std::abs(a[1][0]));
  return m;
}
}  // namespace

Mat2 sigma_dot(const std::array<double, 3>& p) {
  const std::complex<double> i(0, 1);
  Mat2 m{};
  m[0][0] = p[2];
  m[1][1] = -p[2];
  m[0][1] = std::complex<double>(p[0], 0) - i * p[1];
  m[1][0] = std::complex<double>(p[0], 0) + i * p[1];
  return m;
}

bool pauli_identity_check(const std::array<double, 3>& p, double energy) {
  const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  Mat2 sp = sigma_dot(p);
  if (dist_to_scaled_identity(mul(sp, sp), p2) > 1e-14 * std::max(1.0, p2)) return false;

  Mat2 plus = add_scaled_identity(sp, energy);
  Mat2 minus{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) minus[i][j] = -sp[i][j];
  minus = add_scaled_identity(minus, energy);
  double e2p2 = energy * energy - p2;
  return dist_to_scaled_identity(mul(plus, minus), e2p2) <=
         1e-14 * std::max(1.0, std::abs(e2p2) + p2);
}

}  // namespace quap
