#pragma once

#include <string>
#include <vector>

#include "ttstar/birkhoff.hpp"

namespace ttstar {

// Hermitian metric and Cecotti-Vafa data assembled from the factorized
// frame.  See docs/conventions.md for the pairing/gauge identities that
// justify computing everything in the gauged frame.

struct MetricSeries {
    BiSeries h;            // z-free and diagonal in (q, qbar); truncation 2*order
    std::vector<APoly> F;  // h = sum_n F[n] (q qbar)^n, n = 0..order
};

// h = (kappa(v), v) with v the first frame column.  Checks that the result
// carries no z-dependence and no off-diagonal (q, qbar) terms, and that
// every F_n is a monic polynomial in a of degree 2n+1; violations throw.
MetricSeries metric_h(long order);

// Same quantity from an already-built pipeline (order = pipeline order / 2).
MetricSeries metric_h(const Pipeline& pipe);

struct CVData {
    long trunc;         // underlying truncation (2 * qqbar-order)
    BiSeries h, hinv;   // metric coefficient and its series inverse
    LoopMatrix g;       // [[0,1],[1,0]]
    LoopMatrix kappa;   // matrix part of the involution: [[0, h^-1],[h, 0]] (compose with bar)
    LoopMatrix gamma1;  // connection form of D_1: diag(d1 h / h, -d1 h / h)
    LoopMatrix C1;      // [[0, q],[1, 0]]
    LoopMatrix C1bar;   // [[0, h^-2],[qbar h^2, 0]]
    LoopMatrix U;       // 2 C1
    LoopMatrix Ubar;    // 2 C1bar
    LoopMatrix Qop;     // diag(-1/2 - 2 d1 log h, 1/2 + 2 d1 log h)
};

CVData cv_data(long order);
CVData cv_data(const MetricSeries& metric);

struct EquationResidual {
    std::string name;
    bool zero;            // exact vanishing to truncation
    long nonzero_terms;   // 0 when zero
};

// Evaluates the full single-coordinate Cecotti-Vafa equation set plus the
// g-compatibilities and the kappa-reality identities; every residual must
// vanish identically.
std::vector<EquationResidual> check_cv_equations(const CVData& d);

// The scalar reduction of [D1, D1bar] + [C1, C1bar~] = 0:
//   d1 d1bar log h + h^-2 - q qbar h^2   (must be zero)
BiSeries metric_pde_residual(const CVData& d);

// -(2/h)(1 - q qbar h^4) as a Laurent-in-a biseries.
BiSeries curvature_series(long order);

}  // namespace ttstar
