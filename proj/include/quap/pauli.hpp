#ifndef QUAP_PAULI_HPP
#define QUAP_PAULI_HPP

#include <array>
#include <complex>

namespace quap {

using Mat2 = std::array<std::array<std::complex<double>, 2>, 2>;

Mat2 sigma_dot(const std::array<double, 3>& p);

/// Checks (sigma.p)^2 = |p|^2 1 and the two-factor identity
/// (E + sigma.p)(E - sigma.p) = (E^2 - |p|^2) 1 that makes the second and
/// fourth order invariants coincide on spin-1/2 solutions.  Tolerance 1e-14.
bool pauli_identity_check(const std::array<double, 3>& p, double energy = 1.0);

}  // namespace quap

#endif
