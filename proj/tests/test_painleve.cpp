#include <doctest.h>

#include <cmath>

#include "ttstar/cv_structure.hpp"
#include "ttstar/painleve.hpp"

using namespace ttstar;

namespace {

APoly poly(std::initializer_list<long> cs) {
    APoly p;
    long e = 0;
    for (long c : cs) p += APoly::monomial(Rational(c), e++);
    return p;
}

APoly polyq(std::initializer_list<const char*> cs) {
    APoly p;
    long e = 0;
    for (const char* c : cs) p += APoly::monomial(rational_from_string(c), e++);
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("painleve");

TEST_CASE("recursion reproduces the low-order metric polynomials") {
    auto F = oracle_fn(3);
    CHECK(F[0] == APoly::var());
    CHECK(F[1] == poly({8, 8, 4, 1}));
    CHECK(F[2] == polyq({"145/4", "145/2", "129/2", "121/4", "8", "1"}));
    // leading part of F_3: a^7 + 12 a^6 + ...
    CHECK(F[3].coeff(7) == 1);
    CHECK(F[3].coeff(6) == 12);
    CHECK(F[3].coeff(5) == frac(275, 4));
}

TEST_CASE("recursion degrees and structure") {
    auto F = oracle_fn(5);
    for (long n = 0; n <= 5; ++n) {
        CHECK(F[n].is_polynomial());
        CHECK(F[n].max_exp() == 2 * n + 1);
        CHECK(F[n].coeff(2 * n + 1) == 1);
    }
}

TEST_CASE("the two pipelines agree") {
    CHECK(cross_check(2));
    CHECK(cross_check(4));
    // negative control: any corrupted coefficient breaks the match
    auto F = oracle_fn(2);
    MetricSeries m = metric_h(2);
    F[1] += APoly(Rational(1));
    bool match = true;
    for (long n = 0; n <= 2; ++n) match = match && F[n] == m.F[n];
    CHECK_FALSE(match);
}

TEST_CASE("series evaluation in doubles") {
    auto F = oracle_fn(2);
    double r = 0.01;
    double a = -2.0 * std::log(r) - 4.0 * kEulerGamma;
    double direct = F[0].eval(a) + F[1].eval(a) * r * r + F[2].eval(a) * std::pow(r, 4);
    CHECK(series_h(r, F) == doctest::Approx(direct).epsilon(1e-12));
    // derivative against a centered difference
    auto F10 = oracle_fn(10);
    double eps = 1e-6;
    double fd = (series_h(r + eps, F10) - series_h(r - eps, F10)) / (2 * eps);
    CHECK(series_dh(r, F10) == doctest::Approx(fd).epsilon(1e-5));
}

TEST_CASE("ode agrees with the series at small |q|") {
    auto F = oracle_fn(10);
    for (double r : {0.01, 0.02, 0.05}) {
        double hs = series_h(r, F);
        double ho = ode_h(r);
        CHECK(std::abs(ho - hs) / hs < 1e-6);
    }
}

TEST_CASE("ode agrees with the asymptotic branch at large |q|") {
    for (double r : {4.0, 9.0, 16.0, 25.0}) {
        double ho = ode_h(r);
        double ha = asymptotic_h(r);
        CHECK(std::abs(ho - ha) / ha < 1e-3);
    }
}

TEST_CASE("forward and backward anchors agree on the overlap") {
    // Forward integration amplifies errors as e^{2 dx}, so the comparison
    // window stays modest; agreement here pins the connection between the
    // series branch and the asymptotic branch.
    OdeOptions backward;
    backward.forward_limit = 0.5;  // force the asymptotic anchor
    for (double r : {1.0, 2.0, 4.0}) {
        double fwd = ode_h(r);  // default: forward from the series anchor
        double bwd = ode_h(r, backward);
        CHECK(std::abs(fwd - bwd) / fwd < 1e-4);
    }
}

TEST_CASE("h is positive on the sampled window") {
    for (int i = 0; i < 50; ++i) {
        double t = static_cast<double>(i) / 49.0;
        double r = std::pow(10.0, -3.0 + 4.0 * t);  // log-spaced in [1e-3, 10]
        CHECK(ode_h(r) > 0.0);
    }
}

TEST_CASE("asymptotic formula") {
    // sqrt|q| h -> 1
    CHECK(std::sqrt(1e8) * asymptotic_h(1e8) == doctest::Approx(1.0).epsilon(1e-12));
    // |q| = 16 in closed form
    double expect = 0.25 * (1.0 - std::exp(-32.0) / (4.0 * std::sqrt(M_PI)));
    CHECK(asymptotic_h(16.0) == doctest::Approx(expect).epsilon(1e-15));
    // the correction is strictly negative (within double range)
    for (double r : {0.1, 1.0, 9.0}) CHECK(asymptotic_h(r) * std::sqrt(r) < 1.0);
}

TEST_CASE("off-branch trajectories are detected") {
    // starting above the separatrix must blow up doubly-exponentially
    OdeOptions o;
    auto blowup = [&] {
        // perturb the anchor by integrating from a slightly wrong state: use
        // a wrong series value by shifting |q| but keeping the target far out
        double r0 = o.series_anchor;
        double x0 = 4.0 * std::sqrt(r0);
        (void)x0;
        // emulate: integrate from the series anchor to a far target after
        // injecting an offset via a manual two-step call
        OdeOptions oo = o;
        oo.forward_limit = 1e9;  // force forward integration to large |q|
        oo.series_anchor = 0.05;
        oo.series_order = 1;  // badly truncated series -> off the separatrix
        return ode_h(30.0, oo);
    };
    CHECK_THROWS_AS(blowup(), std::runtime_error);
}

TEST_CASE("gauss curvature vanishes at both ends and is negative between") {
    CHECK(std::abs(gauss_curvature(1e3)) < 1e-6);
    double prev = -10;
    for (double r : {1e-4, 1e-5, 1e-6}) {  // |K| ~ 2/a decays as |q| -> 0
        double k = gauss_curvature(r);
        CHECK(k < 0.0);
        CHECK(k > prev);
        prev = k;
    }
    CHECK(std::abs(gauss_curvature(1e-6)) < 0.1);
}

TEST_CASE("total curvature") {
    CurvatureResult c = total_curvature();
    CHECK(std::abs(c.radial - (-0.25)) < 0.25 * 0.01);
    CHECK(c.total == doctest::Approx(M_PI * c.radial));
    CHECK(c.total_gauss == doctest::Approx(2.0 * M_PI * c.radial));
    // halving the tolerance moves the result by far less than 0.1%
    CurvatureOptions tight;
    tight.rel_tol = 0.5e-9;
    CurvatureResult c2 = total_curvature(tight);
    CHECK(std::abs(c2.radial - c.radial) / std::abs(c.radial) < 1e-3);
}

TEST_SUITE_END();
