#pragma once

#include <vector>

#include "ttstar/apoly.hpp"

namespace ttstar {

// Independent verification layer for the Hermitian metric: the scalar PDE
//   d1 d1bar log h = -h^-2 + s h^2,   s = q qbar,
// solved order by order with the ansatz h = sum_n F_n s^n, F_0 = a,
// deg F_n = 2n+1, plus radial sinh-Gordon numerics.
//
// Multiplying the PDE by h^2 gives the polynomial form used here:
//   h * (d1 d1bar h) - (d1 h)(d1bar h) + 1 - s h^4 = 0,
// where on F(a) s^n the derivations act as
//   d1 (F s^n) = d1bar (F s^n) = (n F - F') s^n.

// F_0..F_order by exact linear algebra; each order solves an
// overdetermined rational system that must have a unique solution
// (std::domain_error otherwise; that would contradict the uniqueness of
// the recursion and is surfaced, never patched over).
std::vector<APoly> oracle_fn(long order);

// True iff oracle_fn and the Birkhoff-side metric agree exactly for all
// n <= order.
bool cross_check(long order);

// --- numerics ---------------------------------------------------------

// Euler-Mascheroni constant, double precision.
inline constexpr double kEulerGamma = 0.5772156649015329;

// h evaluated from the truncated exact series at |q| = r with
// a = -2 log r - 4 gamma.
double series_h(double r, const std::vector<APoly>& F);
double series_h(double r, long order = 10);
// d h / d r from the same series.
double series_dh(double r, const std::vector<APoly>& F);

// The closed-form large-|q| asymptotics:
//   h ~ (1/sqrt|q|) (1 - e^{-8 sqrt|q|} / (2 sqrt(pi) |q|^{1/4})).
double asymptotic_h(double q_abs);

struct OdeOptions {
    double rel_tol = 1e-12;
    double abs_tol = 3e-14;
    long series_order = 10;      // exact series order used at the anchor
    double series_anchor = 0.05; // |q| at which the series seeds the trajectory
    double forward_limit = 4.0;  // beyond this |q|, anchor on the asymptotic branch
    double asym_floor = 24.0;    // minimum x-value (PIII variable) of that anchor
    double asym_margin = 8.0;    // anchor at x_target + margin, at least asym_floor
};

// h(|q|) along the separating trajectory of u'' + u'/x = 4 sinh u,
// h = e^{u/2} |q|^{-1/2}, x = 4 |q|^{1/2}.  Small-|q| trajectories are
// integrated from the series anchor; large-|q| ones backward from the
// asymptotic branch (forward integration amplifies the unstable mode as
// e^{2 dx} and leaves the separatrix; see the tests for the overlap
// consistency of the two anchors).  Throws std::runtime_error on
// divergence (wrong branch) or step-size underflow.
double ode_h(double q_abs, const OdeOptions& opts = {});

struct OdePoint {
    double x;   // PIII variable, x = 4 sqrt|q|
    double u;
    double du;
};

// Accepted integration steps over |q| in [q_lo, q_hi], strictly monotone
// in x, starting from whichever anchor ode_h would use for q_hi.
struct OdeSolution {
    std::vector<OdePoint> points;
};

OdeSolution ode_trajectory(double q_lo, double q_hi, const OdeOptions& opts = {});

// Gauss curvature -(2/h)(1 - |q|^2 h^4) of the moduli metric h^-1,
// evaluated numerically.
double gauss_curvature(double q_abs, const OdeOptions& opts = {});

struct CurvatureOptions {
    double rel_tol = 1e-9;
    double x_left = -20.0;   // left cutoff in x = log|q|; analytic tail beyond
    double z_switch = 7.0;   // hand off from the forward to the backward pass
    double z_far = 28.0;     // backward anchor on the asymptotic branch
    long series_order = 12;
};

struct CurvatureResult {
    double radial;       // integral over x = log|q| of the curvature density K/h
    double total;        // pi * radial: the quoted normalization (docs/curvature.md)
    double total_gauss;  // 2*pi * radial: full-cylinder Gauss-Bonnet integral
};

// Total curvature of the moduli metric.  The radial density equals
// (1/2) (log h)''(x); docs/curvature.md derives the reduction and fixes
// the angular normalization of `total`.
CurvatureResult total_curvature(const CurvatureOptions& opts = {});

}  // namespace ttstar
