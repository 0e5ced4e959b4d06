#include <doctest.h>

#include "test_helpers.hpp"
#include "ttstar/biseries.hpp"

using namespace ttstar;
using ttstar::testing::Rng;

TEST_SUITE_BEGIN("exact-algebra");

TEST_CASE("rational arithmetic is exact") {
    CHECK(frac(1, 2) + frac(1, 3) == frac(5, 6));
    CHECK(rational_from_string("-4/6") == frac(-2, 3));
    CHECK(rational_to_string(frac(8, 1)) == "8");
    CHECK(rational_to_string(frac(121, 4)) == "121/4");
    CHECK(rational_pow(frac(2, 3), -2) == frac(9, 4));
    CHECK_THROWS_AS(rational_from_string("nonsense"), std::invalid_argument);
}

TEST_CASE("geometric series inverse: 1/(1+q) at N=3") {
    BiSeries s = BiSeries::constant(3, Rational(1)) + BiSeries::q(3);
    BiSeries inv = s.inverse();
    BiSeries expect(3);
    expect += BiSeries::constant(3, Rational(1));
    expect -= BiSeries::q(3);
    expect += BiSeries::monomial(3, 2, 0, ZLoop(1));
    expect -= BiSeries::monomial(3, 3, 0, ZLoop(1));
    CHECK(inv == expect);
    CHECK(inv * s == BiSeries::constant(3, Rational(1)));
}

TEST_CASE("(a + z/a)(a - z/a) = a^2 - z^2/a^2") {
    ZLoop x = ZLoop::monomial(APoly::var(), 0) + ZLoop::monomial(APoly::monomial(Rational(1), -1), 1);
    ZLoop y = ZLoop::monomial(APoly::var(), 0) - ZLoop::monomial(APoly::monomial(Rational(1), -1), 1);
    ZLoop expect = ZLoop::monomial(APoly::monomial(Rational(1), 2), 0) -
                   ZLoop::monomial(APoly::monomial(Rational(1), -2), 2);
    CHECK(x * y == expect);
}

TEST_CASE("z_split puts z^{>=1} left and z^{<=0} right") {
    ZLoop p = ZLoop::monomial(APoly::var(), 2) + ZLoop(Rational(3)) + ZLoop::z(-1);
    auto [pos, nonpos] = p.z_split();
    CHECK(pos == ZLoop::monomial(APoly::var(), 2));
    CHECK(nonpos == ZLoop(Rational(3)) + ZLoop::z(-1));

    auto [zp, zn] = ZLoop().z_split();
    CHECK(zp.is_zero());
    CHECK(zn.is_zero());

    ZLoop w = ZLoop::z(1) - ZLoop::z(-1);
    auto [wp, wn] = w.z_split();
    CHECK(wp == ZLoop::z(1));
    CHECK(wn == -ZLoop::z(-1));
}

TEST_CASE("z_split is a direct-sum decomposition on random inputs") {
    Rng rng;
    for (int i = 0; i < 10000; ++i) {
        ZLoop p = rng.zloop(4, 5);
        auto [pos, nonpos] = p.z_split();
        CHECK(pos + nonpos == p);
        for (const auto& [e, c] : pos.terms()) CHECK(e >= 1);
        for (const auto& [e, c] : nonpos.terms()) CHECK(e <= 0);
    }
}

TEST_CASE("bar involution basics") {
    // q z -> qbar z^-1
    BiSeries qz = BiSeries::monomial(2, 1, 0, ZLoop::z(1));
    CHECK(qz.bar() == BiSeries::monomial(2, 0, 1, ZLoop::z(-1)));
    // a is a real symbol
    BiSeries a = BiSeries::constant(2, ZLoop(APoly::var()));
    CHECK(a.bar() == a);
}

TEST_CASE("bar is a ring map and an involution (random)") {
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        BiSeries x = rng.biseries(4), y = rng.biseries(4);
        CHECK(x.bar().bar() == x);
        CHECK((x * y).bar() == x.bar() * y.bar());
        CHECK((x + y).bar() == x.bar() + y.bar());
    }
}

TEST_CASE("derivations act by the monomial rule") {
    // d1(q a) = q a - q
    BiSeries qa = BiSeries::monomial(2, 1, 0, ZLoop(APoly::var()));
    BiSeries expect = qa - BiSeries::q(2);
    CHECK(qa.d1() == expect);
    // d1bar(a^2) = -2a
    BiSeries a2 = BiSeries::constant(2, ZLoop(APoly::monomial(Rational(1), 2)));
    CHECK(a2.d1bar() == BiSeries::constant(2, ZLoop(APoly::monomial(Rational(-2), 1))));
}

TEST_CASE("derivations commute and satisfy Leibniz (random)") {
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        BiSeries x = rng.biseries(4), y = rng.biseries(4);
        CHECK(x.d1().d1bar() == x.d1bar().d1());
        CHECK((x * y).d1() == x.d1() * y + x * y.d1());
        CHECK((x * y).d1bar() == x.d1bar() * y + x * y.d1bar());
        // bar conjugates the two derivations into each other
        CHECK(x.d1().bar() == x.bar().d1bar());
    }
}

TEST_CASE("metric equation through first order in q qbar") {
    // h = a + q qbar (a^3 + 4a^2 + 8a + 8); then d1bar(d1 h / h) agrees with
    // -h^-2 + q qbar h^2 to total degree 2.
    APoly f1 = APoly::monomial(Rational(1), 3) + APoly::monomial(Rational(4), 2) +
               APoly::monomial(Rational(8), 1) + APoly(Rational(8));
    BiSeries h = BiSeries::constant(2, ZLoop(APoly::var())) + BiSeries::monomial(2, 1, 1, ZLoop(f1));
    BiSeries hinv = h.inverse();
    BiSeries lhs = (h.d1() * hinv).d1bar();
    BiSeries rhs = -(hinv * hinv) + BiSeries::q(2) * BiSeries::qbar(2) * h * h;
    CHECK(lhs == rhs);
}

TEST_CASE("series log and exp") {
    BiSeries one_q = BiSeries::constant(3, Rational(1)) + BiSeries::q(3);
    BiSeries lg = one_q.log_series();
    BiSeries expect(3);
    expect += BiSeries::q(3);
    expect -= BiSeries::monomial(3, 2, 0, ZLoop(frac(1, 2)));
    expect += BiSeries::monomial(3, 3, 0, ZLoop(frac(1, 3)));
    CHECK(lg == expect);

    CHECK(BiSeries(4).exp_series() == BiSeries::constant(4, Rational(1)));

    BiSeries s = BiSeries::constant(4, Rational(1)) + BiSeries::q(4) + BiSeries::qbar(4);
    CHECK(s.log_series().exp_series() == s);

    CHECK_THROWS_AS(BiSeries::q(3).log_series(), non_invertible);
    BiSeries unit_bad = BiSeries::constant(3, Rational(2)) + BiSeries::q(3);
    CHECK_THROWS_AS(unit_bad.exp_series(), non_invertible);
}

TEST_CASE("ring axioms on random inputs") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        BiSeries x = rng.biseries(3), y = rng.biseries(3), z = rng.biseries(3);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x - x == BiSeries(3));
    }
}

TEST_CASE("error paths: truncation mismatch and non-unit inverse") {
    CHECK_THROWS_AS(BiSeries::q(3) + BiSeries::q(4), truncation_mismatch);
    CHECK_THROWS_AS(BiSeries::q(3).inverse(), non_invertible);
    // constant term a + 1 is not a unit of the Laurent ring
    BiSeries bad = BiSeries::constant(3, ZLoop(APoly::var() + APoly(1)));
    CHECK_THROWS_AS(bad.inverse(), non_invertible);
    APoly two_terms = APoly::var() + APoly(1);
    CHECK_THROWS_AS(two_terms.inverse(), non_invertible);
}

TEST_CASE("biseries inverse round-trips on random units") {
    Rng rng;
    for (int i = 0; i < 100; ++i) {
        BiSeries s = rng.biseries(4);
        // force a unit constant term
        s -= BiSeries::constant(4, s.coeff(0, 0));
        s += BiSeries::constant(4, ZLoop::monomial(APoly::monomial(rng.rational() + Rational(9), rng.range(-1, 1)),
                                                   rng.range(-1, 1)));
        BiSeries inv = s.inverse();
        CHECK(s * inv == BiSeries::constant(4, Rational(1)));
    }
}

TEST_SUITE_END();
