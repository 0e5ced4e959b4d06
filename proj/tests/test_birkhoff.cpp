#include <doctest.h>
#include <cstdlib>

#include <map>
#include <tuple>

#include "golden_frame.hpp"
#include "test_helpers.hpp"
#include "ttstar/birkhoff.hpp"

using namespace ttstar;
using ttstar::testing::Rng;

namespace {

// Exact polynomials in (a, gamma, z): used once to verify the gauge-transport
// identity that eliminates the Euler constant from the involution matrix.
struct BivZ {
    std::map<std::tuple<long, long, long>, Rational> t;  // (a-exp, g-exp, z-exp)

    static BivZ term(Rational c, long ae, long ge, long ze) {
        BivZ r;
        if (c != 0) r.t[{ae, ge, ze}] = c;
        return r;
    }
    BivZ operator+(const BivZ& o) const {
        BivZ r = *this;
        for (const auto& [k, c] : o.t) {
            auto& v = r.t[k];
            v += c;
            if (v == 0) r.t.erase(k);
        }
        return r;
    }
    BivZ operator*(const BivZ& o) const {
        BivZ r;
        for (const auto& [k1, c1] : t)
            for (const auto& [k2, c2] : o.t) {
                std::tuple<long, long, long> k{std::get<0>(k1) + std::get<0>(k2),
                                               std::get<1>(k1) + std::get<1>(k2),
                                               std::get<2>(k1) + std::get<2>(k2)};
                auto& v = r.t[k];
                v += c1 * c2;
                if (v == 0) r.t.erase(k);
            }
        return r;
    }
    bool operator==(const BivZ& o) const { return t == o.t; }
};

using BivMat = std::array<BivZ, 4>;

BivMat mul(const BivMat& x, const BivMat& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

}  // namespace

TEST_SUITE_BEGIN("birkhoff");

TEST_CASE("gauge transport eliminates the Euler constant exactly") {
    // (1 + (a + 4g) w / z) * [[z, 0], [-4g, -1/z]] = [[z, 0], [a, -1/z]],
    // with w the nilpotent cup-product matrix [[0,0],[1,0]].
    BivZ zero;
    BivZ one = BivZ::term(Rational(1), 0, 0, 0);
    // e^{(a+4g) w / z} = [[1, 0], [(a+4g)/z, 1]]
    BivMat gauge = {one, zero, BivZ::term(Rational(1), 1, 0, -1) + BivZ::term(Rational(4), 0, 1, -1),
                    one};
    BivMat kappa_h = {BivZ::term(Rational(1), 0, 0, 1), zero, BivZ::term(Rational(-4), 0, 1, 0),
                      BivZ::term(Rational(-1), 0, 0, -1)};
    BivMat expect = {BivZ::term(Rational(1), 0, 0, 1), zero, BivZ::term(Rational(1), 1, 0, 0),
                     BivZ::term(Rational(-1), 0, 0, -1)};
    CHECK(mul(gauge, kappa_h) == expect);
}

TEST_CASE("B C equals the involution image of the constant frame") {
    for (long trunc : {0L, 3L}) {
        CHECK(factor_B(trunc) * factor_C(trunc) == involution_matrix(trunc));
        CHECK(factor_B(trunc) * factor_B_inv(trunc) == LoopMatrix::identity(2, trunc));
        CHECK(factor_C(trunc) * factor_C_inv(trunc) == LoopMatrix::identity(2, trunc));
        CHECK(factor_C_inv(trunc) * factor_C(trunc) == LoopMatrix::identity(2, trunc));
    }
}

TEST_CASE("the gauged involution is an involution") {
    Rng rng;
    for (int i = 0; i < 40; ++i) {
        LoopMatrix m(2, 4);
        for (long r = 0; r < 2; ++r)
            for (long c = 0; c < 2; ++c) m.at(r, c) = rng.biseries(4);
        CHECK(apply_involution(apply_involution(m)) == m);
    }
}

TEST_CASE("S is the identity at order 0 and at (q,qbar) = 0") {
    CHECK(s_matrix(0) == LoopMatrix::identity(2, 0));
    LoopMatrix s = s_matrix(2);
    auto c0 = s.coeff(0, 0);
    CHECK(c0[0].is_one());
    CHECK(c0[3].is_one());
    CHECK(c0[1].is_zero());
    CHECK(c0[2].is_zero());
}

TEST_CASE("both constructions of S agree") {
    for (long order : {1L, 2L, 4L}) {
        CHECK(s_matrix(order) == s_matrix_closed_form(order));
    }
}

TEST_CASE("factorization basics") {
    // S = identity
    auto f = birkhoff_factorize(LoopMatrix::identity(2, 2));
    CHECK(f.btilde == LoopMatrix::identity(2, 2));
    CHECK(f.ctilde == LoopMatrix::identity(2, 2));

    // S = 1 + qbar z M: the correction sits entirely in the positive part
    LoopMatrix s = LoopMatrix::identity(2, 2);
    s.at(0, 1) += BiSeries::monomial(2, 0, 1, ZLoop::monomial(APoly(3), 1));
    s.at(1, 0) += BiSeries::monomial(2, 0, 1, ZLoop::monomial(APoly(-1), 1));
    auto g = birkhoff_factorize(s);
    CHECK(g.btilde == s);
    CHECK(g.ctilde == LoopMatrix::identity(2, 2));

    // nonidentity constant term is rejected
    LoopMatrix bad = LoopMatrix::identity(2, 1);
    bad.at(0, 0) += BiSeries::constant(1, ZLoop::z(1));
    CHECK_THROWS_AS(birkhoff_factorize(bad), non_invertible);
}

TEST_CASE("factorization residual vanishes at order 12") {
    LoopMatrix s = s_matrix(12);
    auto f = birkhoff_factorize(s);
    CHECK((f.btilde * f.ctilde - s).is_zero());
}

TEST_CASE("factorization residual vanishes at order 16 (long mode)") {
    if (!std::getenv("TTSTAR_LONG_TESTS")) return;
    LoopMatrix s = s_matrix(16);
    auto f = birkhoff_factorize(s);
    CHECK((f.btilde * f.ctilde - s).is_zero());
}

TEST_CASE("factorization is exact and strictly split") {
    const long order = 8;
    LoopMatrix s = s_matrix(order);
    auto f = birkhoff_factorize(s);
    CHECK((f.btilde * f.ctilde - s).is_zero());
    // Btilde - 1 has only z-exponents >= 1; Ctilde only <= 0
    LoopMatrix bdev = f.btilde - LoopMatrix::identity(2, order);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) {
            for (const auto& [k, c] : bdev.at(i, j).terms())
                for (const auto& [ze, ap] : c.terms()) CHECK(ze >= 1);
            for (const auto& [k, c] : f.ctilde.at(i, j).terms())
                for (const auto& [ze, ap] : c.terms()) CHECK(ze <= 0);
        }
    // purity precondition held (the constant term was the identity), and the
    // recursion solved every order
    CHECK(f.btilde.coeff(0, 0)[0].is_one());
}

TEST_CASE("frame normalization") {
    Pipeline p = Pipeline::build(4);
    // B Btilde = 1 + O(z): its z^0-part is exactly the identity, which is
    // what normalizes the frame against the quotient by z F'
    LoopMatrix bb = factor_B(4) * p.factors.btilde;
    LoopMatrix dev = bb - LoopMatrix::identity(2, 4);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            for (const auto& [k, c] : dev.at(i, j).terms()) CHECK(c.coeff(0).is_zero());
    // constant block of the frame is B itself
    auto c00 = p.frame.coeff(0, 0);
    CHECK(c00[0].is_one());
    CHECK(c00[1] == ZLoop::monomial(APoly::monomial(Rational(1), -1), 1));
    CHECK(c00[2].is_zero());
    CHECK(c00[3].is_one());
    // Ctilde * C has only nonpositive z-powers: the frame columns stay in
    // the involution image of F'
    LoopMatrix cc = p.factors.ctilde * factor_C(4);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            for (const auto& [k, c] : cc.at(i, j).terms())
                for (const auto& [ze, ap] : c.terms()) CHECK(ze <= 0);
}

TEST_CASE("frame matches the printed low-order expansion") {
    Pipeline p = Pipeline::build(3);
    LoopMatrix bb = factor_B(3) * p.factors.btilde;

    for (const auto& block : ttstar::testing::golden_frame_blocks()) {
        auto c = bb.coeff(block.n, block.m);
        for (int e = 0; e < 4; ++e) {
            INFO("block (", block.n, ",", block.m, ") entry ", e);
            CHECK(c[e] == block.entries[e]);
        }
    }

    // blocks in pure powers of q vanish: the involution corrections are
    // qbar-heavy at this order
    for (long n = 1; n <= 3; ++n) {
        auto c = bb.coeff(n, 0);
        for (const auto& e : c) CHECK(e.is_zero());
    }
}

TEST_SUITE_END();
