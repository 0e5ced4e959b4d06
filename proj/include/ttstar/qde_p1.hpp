#pragma once

#include <utility>

#include "ttstar/loop_matrix.hpp"

namespace ttstar {

// Quantum cohomology of P^1 in the basis (1, omega), restricted to the
// second-cohomology direction t^1 with q = e^{t^1}.

// Small quantum product by omega: [[0, q], [1, 0]].
LoopMatrix omega_product(long trunc);

// Cup product by omega: [[0, 0], [1, 0]]  (the classical limit).
LoopMatrix omega_cup(long trunc);

// Poincare pairing matrix g = [[0, 1], [1, 0]] (its own inverse).
LoopMatrix poincare_g(long trunc);

// Grading operator mu = diag(-1/2, +1/2) as a constant matrix; it is
// anti-self-adjoint for g: g mu + mu^T g = 0.
LoopMatrix mu_matrix(long trunc);

// Cup product by the first Chern class 2*omega: [[0, 0], [2, 0]].
LoopMatrix rho_matrix(long trunc);

// Components of the cohomology-valued hypergeometric series underlying the
// fundamental solution:
//   J0 = sum_k q^k / ((k!)^2 z^{2k}),
//   J1 = -2 sum_k H_k q^k / ((k!)^2 z^{2k}),  H_k = 1 + 1/2 + ... + 1/k.
// Both are series in q only, carried at the given truncation.
std::pair<BiSeries, BiSeries> j_coeffs(long order);

// Fundamental solution matrix Q = [[J0, z d1 J0], [J1/z, J0 + d1 J1]].
// Q(q=0) is the identity.
LoopMatrix fundamental_matrix(long order);

// Inverse of Q via the pairing: Q^{-1} = g^{-1} Q(-z)^T g.
LoopMatrix adjoint_inverse(const LoopMatrix& Q);

// g^{-1} Q(-z)^T g Q(z) - 1; vanishes identically to truncation.
LoopMatrix unitarity_residual(long order);

// (omega o)^2 - q * 1; vanishes identically.
LoopMatrix quantum_ring_residual(long order);

// Gauge-free form of the flat-section equation satisfied by Q:
// (omega cup) Q + z d1 Q - Q (omega o) = 0.
LoopMatrix qde_residual(long order);

}  // namespace ttstar
