#pragma once

#include <array>
#include <complex>

#include "qinv/multipoly.hpp"

namespace qinv::invariants {

/// Coordinates of a state in the u-basis of the critical subspace A.
using ACoords = std::array<std::complex<double>, 4>;

/// E_0 = z0 z1 z2 z3, E_j = sum_i z_i^(2j) for j = 1..4. Cached.
const MultiPoly& E(int j);

/// F_k(z) = (1/6) sum_{i<j} (z_i - z_j)^(2k) + (1/6) sum_{i<j} (z_i + z_j)^(2k),
/// 1 <= k <= 12. Cached.
const MultiPoly& F(int k);

/// delta = prod_{i<j} (z_i - z_j)(z_i + z_j), degree 12. Cached.
const MultiPoly& delta();

/// gamma = delta^2 = prod_{i<j} (z_i - z_j)^2 (z_i + z_j)^2, degree 24. Cached.
const MultiPoly& gamma();

/// Cached partial derivative of gamma with respect to z_i.
const MultiPoly& gamma_dz(int i);

/// Rebuilds gamma through the power-sum recurrence
///   e_k = (1/k) sum_{m=1..k} (-1)^(m-1) e_{k-m} p_m,  p_m = 6 F_m,
/// over the 12 quantities {(z_i - z_j)^2, (z_i + z_j)^2 : i < j}, and
/// returns e_12. Equals gamma() exactly.
MultiPoly gamma_via_newton();

/// Determinant of the 4x4 Jacobian matrix (dF_k/dz_i), k in {1,3,4,6}.
/// A nonzero polynomial of degree 24. Cached.
const MultiPoly& jacobian_F();

struct InvariantReport {
  std::complex<double> E0, E1, E2, E3;
  std::complex<double> F1, F3, F4, F6;
  std::complex<double> delta, gamma;
};

/// Evaluates every report field at z. Throws std::invalid_argument on
/// non-finite input.
InvariantReport eval_invariants(const ACoords& z);

/// (1, w, conj(w), 0)/sqrt(3) with w = exp(i pi/3): the maximally generic
/// candidate state. E0 = E1 = E2 = 0, E3 = 1/9, gamma = -3^-9 there.
ACoords state_L();

/// (3 - sqrt(3), (1+i) sqrt(3), (1-i) sqrt(3), -i (3 - sqrt(3))), unnormalized:
/// the state with F1 = F3 = F4 = 0 and F6 != 0.
ACoords state_F();

}  // namespace qinv::invariants
