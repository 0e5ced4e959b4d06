#pragma once

#include <array>

#include "ttstar/loop_matrix.hpp"

namespace ttstar {

// Loop-group factorization machinery for the P^1 real structure.
//
// The conjugate-linear involution on the loop space, transported to the
// gauged frame, acts on column vectors as v |-> K * bar(v) with
//     K = [[z, 0], [a, -1/z]],
// where a = -t^1 - tbar^1 - 4*gamma.  The Euler constant is eliminated
// exactly by the gauge transport (see docs/conventions.md); a is the only
// transcendental-valued symbol left and it is treated as a formal variable.

// K as a loop matrix.
LoopMatrix involution_matrix(long trunc);

// kappa applied to a matrix columnwise: K * bar(M).  An involution.
LoopMatrix apply_involution(const LoopMatrix& m);

// kappa applied to a single column vector.
std::array<BiSeries, 2> apply_involution(const std::array<BiSeries, 2>& v);

// Factorization K = B*C of the involution image of the constant frame:
// B = [[1, z/a], [0, 1]], C = [[0, 1/a], [a, -1/z]].
LoopMatrix factor_B(long trunc);
LoopMatrix factor_C(long trunc);
LoopMatrix factor_B_inv(long trunc);
LoopMatrix factor_C_inv(long trunc);

// The loop-space pairing (alpha, beta) = (alpha(-z), beta(z))_orb with
// (x, y)_orb = x_1 y_omega + x_omega y_1.
BiSeries pairing_H(const std::array<BiSeries, 2>& alpha, const std::array<BiSeries, 2>& beta);

std::array<BiSeries, 2> matrix_column(const LoopMatrix& m, long j);

// S defined by kappa(Q) = Q B S C, computed as B^-1 Q^-1 kappa(Q) C^-1 with
// Q^-1 = g^-1 Q(-z)^T g.  S(0,0) = identity; entries are Laurent in z and a.
LoopMatrix s_matrix(long order);

// The same matrix assembled entrywise from bilinear expressions in J0, J1
// and their d1-derivatives (with 2Re(X) meaning X + bar(X) and |X|^2
// meaning X bar(X)).  Used to cross-check s_matrix against an independent
// transcription; the two must agree identically.
LoopMatrix s_matrix_closed_form(long order);

struct BirkhoffFactors {
    LoopMatrix btilde;  // entries have only z-exponents >= 1 beyond the identity
    LoopMatrix ctilde;  // entries have only z-exponents <= 0
};

// Recursive Birkhoff factorization S = Btilde * Ctilde over the truncated
// biseries ring.  Requires S's (q,qbar)-constant term to be the identity;
// the recursion per total degree splits
//   Btilde_{n,m} + Ctilde_{n,m} = S_{n,m} - sum' Btilde_{i,j} Ctilde_{n-i,m-j}
// into strictly positive / nonpositive z-parts.
BirkhoffFactors birkhoff_factorize(const LoopMatrix& S);

// Everything the downstream metric needs, computed once.
struct Pipeline {
    long order;  // total (q, qbar) truncation
    LoopMatrix Q;
    LoopMatrix S;
    BirkhoffFactors factors;
    LoopMatrix frame;  // Q * B * Btilde; columns span F' and kappa(F')

    static Pipeline build(long order);
};

// Q B Btilde at the given truncation.
LoopMatrix frame_phi(long order);

}  // namespace ttstar
