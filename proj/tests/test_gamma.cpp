#include <doctest.h>

#include <cmath>

#include "ttstar/gamma_structure.hpp"

using namespace ttstar;

namespace {
constexpr double kGamma = 0.5772156649015329;
}

TEST_SUITE_BEGIN("gamma-structure");

TEST_CASE("psi map on the basis classes") {
    double s = std::sqrt(2.0 * M_PI);
    CohVec o = psi_map(sheaf_O());
    CHECK(std::abs(o[0] - 1.0 / s) < 1e-15);
    CHECK(std::abs(o[1] - (-2.0 * kGamma / s)) < 1e-15);
    CohVec pt = psi_map(sheaf_O_point());
    CHECK(std::abs(pt[0]) == 0.0);
    CHECK(std::abs(pt[1] - std::complex<double>(0.0, s)) < 1e-15);
    // linearity: O(1) = O + O_pt
    CohVec o1 = psi_map(sheaf_O(1));
    CHECK(std::abs(o1[0] - (o[0] + pt[0])) < 1e-15);
    CHECK(std::abs(o1[1] - (o[1] + pt[1])) < 1e-15);
}

TEST_CASE("Mukai pairing via Riemann-Roch") {
    CHECK(mukai_pairing(sheaf_O(), sheaf_O()) == 1);
    CHECK(mukai_pairing(sheaf_O(), sheaf_O_point()) == -1);
    CHECK(mukai_pairing(sheaf_O_point(), sheaf_O()) == 1);
    CHECK(mukai_pairing(sheaf_O_point(), sheaf_O_point()) == 0);
    CHECK(euler_chi(sheaf_O(5)) == 6);
}

TEST_CASE("pairing formula matches the Mukai pairing") {
    CHECK(std::abs(pairing_V(psi_map(sheaf_O()), psi_map(sheaf_O())) - 1.0) < 1e-10);
    CHECK(std::abs(pairing_V(psi_map(sheaf_O_point()), psi_map(sheaf_O())) - 1.0) < 1e-10);
    CHECK(std::abs(pairing_V(psi_map(sheaf_O_point()), psi_map(sheaf_O_point()))) < 1e-10);
    for (long n = -5; n <= 5; ++n) {
        for (long m = -5; m <= 5; ++m) {
            double expect = static_cast<double>(mukai_pairing(sheaf_O(n), sheaf_O(m)));
            CHECK(std::abs(pairing_V(psi_map(sheaf_O(n)), psi_map(sheaf_O(m))) - expect) < 1e-10);
        }
        double expect = static_cast<double>(mukai_pairing(sheaf_O(n), sheaf_O_point()));
        CHECK(std::abs(pairing_V(psi_map(sheaf_O(n)), psi_map(sheaf_O_point())) - expect) < 1e-10);
    }
}

TEST_CASE("bilinearity on random classes") {
    for (long r1 = -2; r1 <= 2; ++r1)
        for (long d1 = -2; d1 <= 2; ++d1)
            for (long r2 = -2; r2 <= 2; ++r2) {
                KClass v{r1, d1}, w{r2, 3 - r2};
                CHECK(mukai_pairing(v + w, w) == mukai_pairing(v, w) + mukai_pairing(w, w));
                CHECK(mukai_pairing(v, v + w) == mukai_pairing(v, v) + mukai_pairing(v, w));
            }
}

TEST_CASE("Galois compatibility") {
    CHECK(galois_residual(sheaf_O()) < 1e-10);
    CHECK(galois_residual(sheaf_O_point()) < 1e-10);
    CHECK(galois_residual(sheaf_O(1)) < 1e-10);
    CHECK(galois_residual(sheaf_O(-3)) < 1e-10);
}

TEST_CASE("Gram matrix, determinant, integrality") {
    GramResult g = gram_matrix();
    CHECK(g.exact[0][0] == 1);
    CHECK(g.exact[0][1] == -1);
    CHECK(g.exact[1][0] == 1);
    CHECK(g.exact[1][1] == 0);
    CHECK(g.max_residual < 1e-10);
    CHECK((g.det == 1 || g.det == -1));
}

TEST_CASE("kappa_H is an involution on the unit circle") {
    // applying kappa_H twice at z sends a loop value through the
    // conjugated matrix at 1/zbar = z; for |z| = 1 the composite is the
    // identity regardless of gamma
    CohVec v{std::complex<double>(0.3, -1.2), std::complex<double>(-2.0, 0.25)};
    for (double th : {0.0, 0.7, 2.1, 3.9}) {
        std::complex<double> z = std::polar(1.0, th);
        CohVec w = kappa_H_at(z, kappa_H_at(z, v));
        CHECK(std::abs(w[0] - v[0]) < 1e-12);
        CHECK(std::abs(w[1] - v[1]) < 1e-12);
    }
    // and at z = 1 it restricts to kappa_V
    CohVec kv = kappa_V(v), kh = kappa_H_at(1.0, v);
    CHECK(std::abs(kv[0] - kh[0]) < 1e-15);
    CHECK(std::abs(kv[1] - kh[1]) < 1e-15);
}

TEST_CASE("kappa_V is an involution fixing the integral basis") {
    CohVec o = psi_map(sheaf_O()), pt = psi_map(sheaf_O_point());
    auto diff = [](const CohVec& x, const CohVec& y) {
        return std::max(std::abs(x[0] - y[0]), std::abs(x[1] - y[1]));
    };
    CHECK(diff(kappa_V(o), o) < 1e-12);
    CHECK(diff(kappa_V(pt), pt) < 1e-12);
    // real combinations stay fixed; involution squares to the identity
    double xs[] = {1.0, -2.0, 0.5};
    for (double x : xs)
        for (double y : xs) {
            CohVec v{x * o[0] + y * pt[0], x * o[1] + y * pt[1]};
            CHECK(diff(kappa_V(v), v) < 1e-12);
            CohVec w{v[0] + std::complex<double>(0, 0.7), v[1] - std::complex<double>(0.3, 0.1)};
            CHECK(diff(kappa_V(kappa_V(w)), w) < 1e-12);
        }
}

TEST_SUITE_END();
