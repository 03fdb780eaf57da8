#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qinv/invariants.hpp"

namespace qinv::qstate {

using Complex = std::complex<double>;
using invariants::ACoords;

/// An n-qubit state vector. Amplitude index is the big-endian bitstring of
/// the qubit values (qubit 0 = most significant bit). The norm is arbitrary:
/// SL actions do not preserve it.
struct StateVec {
  int n = 0;
  std::vector<Complex> amps;  // length 2^n

  static StateVec zero_state(int n);
  static StateVec basis_state(int n, std::uint32_t bits);
  std::size_t dim() const { return amps.size(); }
  double norm() const;
};

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Complex, 4>;

/// One 2x2 factor per qubit slot; each factor is expected to have
/// determinant 1 (|det - 1| <= 1e-10 for sampled operators).
struct LocalOp {
  std::vector<Mat2> factors;
  int n() const { return static_cast<int>(factors.size()); }
};

Complex det2(const Mat2& m);

/// Sum z_i u_i as a 16-amplitude 4-qubit state, where u_0..u_3 is the
/// orthonormal basis of the critical subspace A.
StateVec embed_A(const ACoords& z);

/// (g_1 x ... x g_n) psi by per-slot contraction; never materializes the
/// 2^n x 2^n matrix. Throws on qubit-count mismatch.
StateVec apply_local(const LocalOp& g, const StateVec& psi);

/// The n-qubit bilinear form <psi*| sigma_y^(x n) |psi> (no conjugation of
/// the amplitudes). Requires even n. |result| is the concurrence for n = 2.
Complex bilinear_form(const StateVec& psi);

/// The three-qubit invariant det[(phi_i, phi_j)] built from the two-qubit
/// bilinear forms of the slices psi = |0>|phi_0> + |1>|phi_1> along
/// `slot` (the value is slot-independent; the parameter exists so tests can
/// assert that). |result| is the 3-tangle. Requires n = 3.
Complex f4(const StateVec& psi, int slot = 0);

/// Complex dimension of the local-SL orbit through psi: numeric rank of the
/// 12 tangent vectors X_a psi, X_a one of the sl(2) basis matrices on one
/// slot. Rank threshold: 1e-8 x largest singular value, psi pre-normalized.
/// Requires n = 4 and psi != 0.
int orbit_dim(const StateVec& psi);

/// True iff orbit_dim(psi) = 12, i.e. gamma does not vanish on the orbit.
bool is_generic(const StateVec& psi);

/// Standard normal via Box-Muller on the given engine (bit-reproducible
/// across library implementations, unlike std::normal_distribution).
double gaussian(std::mt19937_64& rng);
Complex gaussian_complex(std::mt19937_64& rng);

/// Random SL(2,C) factor: complex Gaussian 2x2, redrawn until |det| > 0.1,
/// then divided by a square root of the determinant.
Mat2 random_sl2(std::mt19937_64& rng);
LocalOp random_local_op(int n, std::mt19937_64& rng);

// Common small states.
StateVec bell_state();  // (|00> + |11>)/sqrt(2)
StateVec ghz3();        // (|000> + |111>)/sqrt(2)
StateVec w3();          // (|001> + |010> + |100>)/sqrt(3)

}  // namespace qinv::qstate
