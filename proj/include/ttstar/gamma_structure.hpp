#pragma once

#include <array>
#include <complex>

namespace ttstar {

// K-theoretic integral structure of the P^1 quantum cohomology, specialized
// to the basis {[O], [O_pt]} of K(P^1).  All transcendentals (pi, gamma,
// sqrt(2 pi), i) live in double precision in this module only; identities
// are checked to 1e-10 and integers recovered by rounding.

struct KClass {
    long rank = 0;    // coefficient of [O]
    long degree = 0;  // coefficient of [O_pt]; [O(n)] = [O] + n [O_pt]

    friend KClass operator+(KClass a, KClass b) { return {a.rank + b.rank, a.degree + b.degree}; }
    friend KClass operator-(KClass a, KClass b) { return {a.rank - b.rank, a.degree - b.degree}; }
    bool operator==(const KClass&) const = default;
};

inline KClass sheaf_O(long n = 0) { return {1, n}; }
inline KClass sheaf_O_point() { return {0, 1}; }

// V -> V^dual: [O(n)] -> [O(-n)].
inline KClass dual(KClass v) { return {v.rank, -v.degree}; }

// Tensor product in K(P^1).
inline KClass tensor(KClass a, KClass b) {
    return {a.rank * b.rank, a.rank * b.degree + a.degree * b.rank};
}

// Riemann-Roch on P^1: chi(O(n)) = n + 1, extended additively.
inline long euler_chi(KClass v) { return v.rank + v.degree; }

// Mukai pairing (V1, V2) = chi(V2^dual tensor V1); integer valued.
inline long mukai_pairing(KClass v1, KClass v2) { return euler_chi(tensor(dual(v2), v1)); }

// Cohomology vector (components along 1 and omega).
using CohVec = std::array<std::complex<double>, 2>;

// Psi([O])    = (2 pi)^{-1/2} (1 - 2 gamma omega)
// Psi([O_pt]) = sqrt(2 pi) i omega
CohVec psi_map(KClass v);

// (alpha, beta) = (e^{pi i rho} alpha, e^{pi i mu} beta)_orb with rho = 2 omega,
// mu = diag(-1/2, 1/2) and (x, y)_orb = x_1 y_omega + x_omega y_1.
std::complex<double> pairing_V(const CohVec& alpha, const CohVec& beta);

// |Psi(V tensor O(-1)) - e^{-2 pi i omega} Psi(V)|, componentwise max.
double galois_residual(KClass v);

// Conjugate-linear involution kappa_V = [[1,0],[-4 gamma,-1]] after conjugation.
CohVec kappa_V(const CohVec& a);

// The loop-space involution matrix [[z,0],[-4 gamma,-1/z]] (after
// conjugation) applied at a point z of the unit circle.  This is the
// numeric-gamma form; the symbolic pipeline uses its gauge transport, in
// which gamma cancels (docs/conventions.md).
CohVec kappa_H_at(std::complex<double> z, const CohVec& a);

struct GramResult {
    long exact[2][2];        // Mukai pairings of {O, O_pt}
    double numeric[2][2];    // real parts via the pairing formula
    double max_residual;     // max |numeric - exact| and max |Im numeric|
    long det;                // determinant of the exact Gram matrix
};

GramResult gram_matrix();

}  // namespace ttstar
