#include "ttstar/painleve.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "ttstar/cv_structure.hpp"
#include "ttstar/rational_matrix.hpp"

namespace ttstar {

namespace {

// d1 d1bar acting on F(a) s^j: (j^2 F - 2j F' + F'') s^j.
APoly laplace_term(const APoly& f, long j) {
    APoly fp = f.derivative();
    return Rational(j * j) * f - Rational(2 * j) * fp + fp.derivative();
}

// d1 acting on F(a) s^j: (j F - F') s^j.
APoly d1_term(const APoly& f, long j) { return Rational(j) * f - f.derivative(); }

}  // namespace

std::vector<APoly> oracle_fn(long order) {
    if (order < 0) throw std::invalid_argument("oracle_fn: order must be >= 0");
    std::vector<APoly> F{APoly::var()};
    std::vector<APoly> h2{F[0] * F[0]};  // [h^2]_s-coefficients, kept current
    std::vector<APoly> h4{h2[0] * h2[0]};

    for (long n = 1; n <= order; ++n) {
        // Known part of the s^n coefficient of h*(d1 d1bar h) - (d1 h)(d1bar h)
        // + 1 - s h^4; the F_n terms form the linear operator
        //   L(F) = a (n^2 F - 2n F' + F'') + 2n F - 2 F'.
        APoly rhs;
        for (long i = 1; i < n; ++i) {
            rhs -= F[i] * laplace_term(F[n - i], n - i);
            rhs += d1_term(F[i], i) * d1_term(F[n - i], n - i);
        }
        rhs += h4[n - 1];

        if (!rhs.is_zero() && (rhs.min_exp() < 0 || rhs.max_exp() > 2 * n + 2))
            throw std::domain_error("oracle_fn: right-hand side escapes the polynomial ansatz");

        const long cols = 2 * n + 2;  // coefficients of a^0..a^{2n+1}
        const long rows = 2 * n + 3;  // a-exponents 0..2n+2
        RationalMatrix L(rows, cols);
        for (long j = 0; j < cols; ++j) {
            L.at(j + 1, j) += Rational(n * n);
            L.at(j, j) += Rational(2 * n * (1 - j));
            if (j >= 1) L.at(j - 1, j) += Rational(j * (j - 3));
        }
        std::vector<Rational> b(rows, Rational(0));
        for (const auto& [e, c] : rhs.terms()) b[e] = c;

        std::vector<Rational> x;
        try {
            x = L.solve_unique(b);
        } catch (const std::domain_error& e) {
            throw std::domain_error("oracle_fn: order " + std::to_string(n) + ": " + e.what());
        }
        APoly fn;
        for (long j = 0; j < cols; ++j) fn += APoly::monomial(x[j], j);
        F.push_back(fn);

        // extend h^2 and h^4 to order n
        APoly s2;
        for (long i = 0; i <= n; ++i) s2 += F[i] * F[n - i];
        h2.push_back(s2);
        APoly s4;
        for (long i = 0; i <= n; ++i) s4 += h2[i] * h2[n - i];
        h4.push_back(s4);
    }
    return F;
}

bool cross_check(long order) {
    std::vector<APoly> recursion = oracle_fn(order);
    MetricSeries metric = metric_h(order);
    for (long n = 0; n <= order; ++n)
        if (recursion[n] != metric.F[n]) return false;
    return true;
}

// --- numerics ----------------------------------------------------------

namespace {

const std::vector<APoly>& cached_fn(long order) {
    static std::mutex mu;
    static std::map<long, std::vector<APoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, oracle_fn(order)).first;
    return it->second;
}

// Cash-Karp embedded Runge-Kutta 4(5) with PI-free step control.  The
// observer sees every accepted step (including the initial state).
template <int N, typename F, typename Obs>
std::array<double, N> integrate_ck45_obs(F deriv, double x0, std::array<double, N> y, double x1,
                                         double rel_tol, double abs_tol, Obs observe) {
    static const double b21 = 1.0 / 5;
    static const double b31 = 3.0 / 40, b32 = 9.0 / 40;
    static const double b41 = 3.0 / 10, b42 = -9.0 / 10, b43 = 6.0 / 5;
    static const double b51 = -11.0 / 54, b52 = 5.0 / 2, b53 = -70.0 / 27, b54 = 35.0 / 27;
    static const double b61 = 1631.0 / 55296, b62 = 175.0 / 512, b63 = 575.0 / 13824,
                        b64 = 44275.0 / 110592, b65 = 253.0 / 4096;
    static const double a2 = 1.0 / 5, a3 = 3.0 / 10, a4 = 3.0 / 5, a5 = 1.0, a6 = 7.0 / 8;
    static const double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594, c6 = 512.0 / 1771;
    static const double d1 = c1 - 2825.0 / 27648, d3 = c3 - 18575.0 / 48384,
                        d4 = c4 - 13525.0 / 55296, d5 = -277.0 / 14336, d6 = c6 - 1.0 / 4;

    observe(x0, y);
    if (x0 == x1) return y;
    double dir = x1 > x0 ? 1.0 : -1.0;
    double x = x0;
    double h = dir * std::min(0.05, std::abs(x1 - x0));
    std::array<double, N> k1, k2, k3, k4, k5, k6, yt, y5, yerr;

    while (dir * (x1 - x) > 0) {
        if (dir * (x + h - x1) > 0) h = x1 - x;
        k1 = deriv(x, y);
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * b21 * k1[i];
        k2 = deriv(x + a2 * h, yt);
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * (b31 * k1[i] + b32 * k2[i]);
        k3 = deriv(x + a3 * h, yt);
        for (int i = 0; i < N; ++i) yt[i] = y[i] + h * (b41 * k1[i] + b42 * k2[i] + b43 * k3[i]);
        k4 = deriv(x + a4 * h, yt);
        for (int i = 0; i < N; ++i)
            yt[i] = y[i] + h * (b51 * k1[i] + b52 * k2[i] + b53 * k3[i] + b54 * k4[i]);
        k5 = deriv(x + a5 * h, yt);
        for (int i = 0; i < N; ++i)
            yt[i] = y[i] + h * (b61 * k1[i] + b62 * k2[i] + b63 * k3[i] + b64 * k4[i] + b65 * k5[i]);
        k6 = deriv(x + a6 * h, yt);
        double err = 0;
        for (int i = 0; i < N; ++i) {
            y5[i] = y[i] + h * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
            yerr[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i]);
            double sc = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(yerr[i]) / sc);
        }
        if (err <= 1.0) {
            x += h;
            y = y5;
            observe(x, y);
            double grow = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
            h *= std::min(grow, 5.0);
            if (std::abs(y[0]) > 40.0)
                throw std::runtime_error(
                    "PIII integration diverged: the trajectory left the separating branch");
        } else {
            h *= std::max(0.9 * std::pow(err, -0.25), 0.1);
        }
        if (std::abs(h) < 1e-13 * std::max(1.0, std::abs(x)))
            throw std::runtime_error("PIII integration: step-size underflow");
    }
    return y;
}

template <int N, typename F>
std::array<double, N> integrate_ck45(F deriv, double x0, std::array<double, N> y, double x1,
                                     double rel_tol, double abs_tol) {
    return integrate_ck45_obs<N>(deriv, x0, y, x1, rel_tol, abs_tol,
                                 [](double, const std::array<double, N>&) {});
}

std::array<double, 2> piii_rhs(double x, const std::array<double, 2>& y) {
    return {y[1], -y[1] / x + 4.0 * std::sinh(y[0])};
}

// (u, u') at the series anchor r0.
std::array<double, 2> series_anchor_state(double r0, const std::vector<APoly>& F) {
    double x0 = 4.0 * std::sqrt(r0);
    double h0 = series_h(r0, F);
    double dh0 = series_dh(r0, F);
    double u0 = 2.0 * std::log(h0) + std::log(r0);
    double du0 = 2.0 * dh0 * (x0 / 8.0) / h0 + 2.0 / x0;
    return {u0, du0};
}

// (u, u') on the asymptotic branch at PIII variable x.
std::array<double, 2> asymptotic_state(double x) {
    double del = std::exp(-2.0 * x) / std::sqrt(M_PI * x);
    double u = 2.0 * std::log1p(-del);
    double du = 2.0 * del * (2.0 + 0.5 / x) / (1.0 - del);
    return {u, du};
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace

double series_h(double r, const std::vector<APoly>& F) {
    double a = -2.0 * std::log(r) - 4.0 * kEulerGamma;
    double s = 0.0, rp = 1.0;
    for (const auto& f : F) {
        s += f.eval(a) * rp;
        rp *= r * r;
    }
    return s;
}

double series_h(double r, long order) { return series_h(r, cached_fn(order)); }

double series_dh(double r, const std::vector<APoly>& F) {
    // d/dr [F_n(a) r^{2n}] = (2n F_n - 2 F_n') r^{2n-1} since da/dr = -2/r.
    double a = -2.0 * std::log(r) - 4.0 * kEulerGamma;
    double s = 0.0, rp = 1.0 / r;
    for (size_t n = 0; n < F.size(); ++n) {
        s += (2.0 * static_cast<double>(n) * F[n].eval(a) - 2.0 * F[n].derivative().eval(a)) * rp;
        rp *= r * r;
    }
    return s;
}

double asymptotic_h(double q_abs) {
    return (1.0 - std::exp(-8.0 * std::sqrt(q_abs)) / (2.0 * std::sqrt(M_PI) * std::pow(q_abs, 0.25))) /
           std::sqrt(q_abs);
}

double ode_h(double q_abs, const OdeOptions& o) {
    if (!(q_abs > 0)) throw std::invalid_argument("ode_h: q_abs must be positive");
    double xt = 4.0 * std::sqrt(q_abs);
    std::array<double, 2> y;
    double x0;
    if (q_abs <= o.forward_limit) {
        const auto& F = cached_fn(o.series_order);
        x0 = 4.0 * std::sqrt(o.series_anchor);
        y = series_anchor_state(o.series_anchor, F);
    } else {
        x0 = std::max(xt + o.asym_margin, o.asym_floor);
        y = asymptotic_state(x0);
    }
    if (std::abs(xt - x0) > 1e-14)
        y = integrate_ck45<2>(piii_rhs, x0, y, xt, o.rel_tol, o.abs_tol);
    return std::exp(0.5 * y[0]) / std::sqrt(q_abs);
}

double gauss_curvature(double q_abs, const OdeOptions& o) {
    double h = ode_h(q_abs, o);
    double h2 = h * h;
    return -(2.0 / h) * (1.0 - q_abs * q_abs * h2 * h2);
}

CurvatureResult total_curvature(const CurvatureOptions& o) {
    const auto& F = cached_fn(o.series_order);
    auto a_of = [](double x) { return -2.0 * x - 4.0 * kEulerGamma; };

    // Left tail: the density is -2/a^2 + O(e^{2x} poly) as x -> -infinity,
    // and the tail integral of -2/a^2 up to x_left is -1/a(x_left).
    double tail_left = -1.0 / a_of(o.x_left);

    // Series window [x_left, log(series anchor)].
    double x_c = std::log(0.05);
    auto density = [&](double x) {
        double r = std::exp(x);
        double h = series_h(r, F);
        return -2.0 / (h * h) + 2.0 * std::exp(2.0 * x) * h * h;
    };
    double seg_series = integrate_simpson(density, o.x_left, x_c, o.rel_tol * 0.25);

    // PIII window: carry the quadrature along the trajectory.  In the PIII
    // variable, dA/dx = x sinh(u) / 2 accumulates the same density.  The
    // forward pass stops at z_switch, where the e^{2 dx} error growth of the
    // unstable mode would start to outweigh the e^{-2x} decay of the true
    // density; a backward pass from the asymptotic branch covers the rest.
    auto rhs3 = [](double x, const std::array<double, 3>& v) -> std::array<double, 3> {
        return {v[1], -v[1] / x + 4.0 * std::sinh(v[0]), 0.5 * x * std::sinh(v[0])};
    };
    double z0 = 4.0 * std::sqrt(0.05);
    auto st = series_anchor_state(0.05, F);
    std::array<double, 3> y{st[0], st[1], 0.0};
    y = integrate_ck45<3>(rhs3, z0, y, o.z_switch, o.rel_tol * 1e-2, 1e-14);
    double seg_forward = y[2];

    auto far = asymptotic_state(o.z_far);
    std::array<double, 3> yb{far[0], far[1], 0.0};
    yb = integrate_ck45<3>(rhs3, o.z_far, yb, o.z_switch, o.rel_tol * 1e-2, 1e-16);
    double seg_backward = -yb[2];  // reorient to increasing x
    // beyond z_far the density is below 1e-25

    double radial = tail_left + seg_series + seg_forward + seg_backward;
    return {radial, M_PI * radial, 2.0 * M_PI * radial};
}

}  // namespace ttstar
