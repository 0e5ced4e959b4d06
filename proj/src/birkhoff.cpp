#include "ttstar/birkhoff.hpp"

#include <map>

#include "ttstar/qde_p1.hpp"

namespace ttstar {

namespace {

BiSeries cnst(long trunc, const ZLoop& c) { return BiSeries::constant(trunc, c); }

ZLoop z_pow(long k) { return ZLoop::z(k); }
ZLoop a_pow(long k) { return ZLoop(APoly::monomial(Rational(1), k)); }

// 2x2 matrices of ZLoops, used inside the per-order recursion.
using Mat2Z = std::array<ZLoop, 4>;

Mat2Z mul(const Mat2Z& l, const Mat2Z& r) {
    return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3], l[2] * r[0] + l[3] * r[2],
            l[2] * r[1] + l[3] * r[3]};
}

bool is_identity(const Mat2Z& m) {
    return m[0].is_one() && m[3].is_one() && m[1].is_zero() && m[2].is_zero();
}

}  // namespace

LoopMatrix involution_matrix(long trunc) {
    LoopMatrix k(2, trunc);
    k.at(0, 0) = cnst(trunc, z_pow(1));
    k.at(1, 0) = cnst(trunc, a_pow(1));
    k.at(1, 1) = cnst(trunc, -z_pow(-1));
    return k;
}

LoopMatrix apply_involution(const LoopMatrix& m) {
    return involution_matrix(m.truncation()) * m.bar();
}

std::array<BiSeries, 2> apply_involution(const std::array<BiSeries, 2>& v) {
    long trunc = v[0].truncation();
    BiSeries b0 = v[0].bar(), b1 = v[1].bar();
    return {cnst(trunc, z_pow(1)) * b0,
            cnst(trunc, a_pow(1)) * b0 - cnst(trunc, z_pow(-1)) * b1};
}

LoopMatrix factor_B(long trunc) {
    LoopMatrix b = LoopMatrix::identity(2, trunc);
    b.at(0, 1) = cnst(trunc, ZLoop::monomial(APoly::monomial(Rational(1), -1), 1));  // z/a
    return b;
}

LoopMatrix factor_B_inv(long trunc) {
    LoopMatrix b = LoopMatrix::identity(2, trunc);
    b.at(0, 1) = cnst(trunc, ZLoop::monomial(APoly::monomial(Rational(-1), -1), 1));
    return b;
}

LoopMatrix factor_C(long trunc) {
    LoopMatrix c(2, trunc);
    c.at(0, 1) = cnst(trunc, a_pow(-1));
    c.at(1, 0) = cnst(trunc, a_pow(1));
    c.at(1, 1) = cnst(trunc, -z_pow(-1));
    return c;
}

LoopMatrix factor_C_inv(long trunc) {
    // [[1/z, 1/a], [a, 0]]; C * C^-1 = 1 exactly.
    LoopMatrix c(2, trunc);
    c.at(0, 0) = cnst(trunc, z_pow(-1));
    c.at(0, 1) = cnst(trunc, a_pow(-1));
    c.at(1, 0) = cnst(trunc, a_pow(1));
    return c;
}

BiSeries pairing_H(const std::array<BiSeries, 2>& alpha, const std::array<BiSeries, 2>& beta) {
    return alpha[0].negate_z() * beta[1] + alpha[1].negate_z() * beta[0];
}

std::array<BiSeries, 2> matrix_column(const LoopMatrix& m, long j) {
    return {m.at(0, j), m.at(1, j)};
}

LoopMatrix s_matrix(long order) {
    LoopMatrix Q = fundamental_matrix(order);
    LoopMatrix Qinv = adjoint_inverse(Q);
    return factor_B_inv(order) * Qinv * apply_involution(Q) * factor_C_inv(order);
}

LoopMatrix s_matrix_closed_form(long order) {
    auto [j0, j1] = j_coeffs(order);
    BiSeries d0 = j0.d1(), d1 = j1.d1();
    BiSeries j0b = j0.bar(), j1b = j1.bar(), d0b = d0.bar(), d1b = d1.bar();
    auto re2 = [](const BiSeries& x) { return x + x.bar(); };  // X + bar(X)

    BiSeries ai = cnst(order, a_pow(-1)), a1 = cnst(order, a_pow(1));
    BiSeries z1 = cnst(order, z_pow(1)), zi = cnst(order, z_pow(-1));

    LoopMatrix s(2, order);
    s.at(0, 0) = re2(j0 * j1b) * ai + j0 * j0b + re2(d0 * j1b + j0 * d1b) +
                 re2(d0 * d1b) * a1 - d0 * d0b * a1 * a1;
    s.at(0, 1) = (re2(j0 * j1b) * ai * ai + (d0 * j1b + j0b * d1) * ai - d0 * j0b) * z1;
    s.at(1, 0) = (-re2(j0 * j1b) - (d0b * j1 + j0 * d1b) * a1 + j0 * d0b * a1 * a1) * zi;
    s.at(1, 1) = -re2(j1 * j0b) * ai + j0 * j0b;
    return s;
}

BirkhoffFactors birkhoff_factorize(const LoopMatrix& S) {
    const long N = S.truncation();
    {
        auto c0 = S.coeff(0, 0);
        if (!is_identity({c0[0], c0[1], c0[2], c0[3]}))
            throw non_invertible("birkhoff_factorize: constant term is not the identity");
    }

    std::map<std::pair<long, long>, Mat2Z> bt, ct;
    ZLoop one(1);
    bt[{0, 0}] = {one, ZLoop(), ZLoop(), one};
    ct[{0, 0}] = bt[{0, 0}];

    for (long d = 1; d <= N; ++d) {
        for (long n = 0; n <= d; ++n) {
            long m = d - n;
            auto sc = S.coeff(n, m);
            Mat2Z r = {sc[0], sc[1], sc[2], sc[3]};
            // subtract sum of Btilde_{i,j} Ctilde_{n-i,m-j}, both factors
            // of strictly smaller total degree
            for (long i = 0; i <= n; ++i)
                for (long j = 0; j <= m; ++j) {
                    if (i + j == 0 || i + j == d) continue;
                    auto itb = bt.find({i, j});
                    auto itc = ct.find({n - i, m - j});
                    if (itb == bt.end() || itc == ct.end()) continue;
                    Mat2Z p = mul(itb->second, itc->second);
                    for (int k = 0; k < 4; ++k) r[k] -= p[k];
                }
            Mat2Z bpart, cpart;
            bool bz = true, cz = true;
            for (int k = 0; k < 4; ++k) {
                auto [pos, nonpos] = r[k].z_split();
                bpart[k] = pos;
                cpart[k] = nonpos;
                bz = bz && pos.is_zero();
                cz = cz && nonpos.is_zero();
            }
            if (!bz) bt[{n, m}] = bpart;
            if (!cz) ct[{n, m}] = cpart;
        }
    }

    BirkhoffFactors f{LoopMatrix(2, N), LoopMatrix(2, N)};
    for (const auto& [k, m2] : bt)
        for (int e = 0; e < 4; ++e)
            if (!m2[e].is_zero())
                f.btilde.at(e / 2, e % 2) += BiSeries::monomial(N, k.first, k.second, m2[e]);
    for (const auto& [k, m2] : ct)
        for (int e = 0; e < 4; ++e)
            if (!m2[e].is_zero())
                f.ctilde.at(e / 2, e % 2) += BiSeries::monomial(N, k.first, k.second, m2[e]);
    return f;
}

Pipeline Pipeline::build(long order) {
    Pipeline p{order, fundamental_matrix(order), s_matrix(order), {LoopMatrix(2, order), LoopMatrix(2, order)},
               LoopMatrix(2, order)};
    p.factors = birkhoff_factorize(p.S);
    p.frame = p.Q * factor_B(order) * p.factors.btilde;
    return p;
}

LoopMatrix frame_phi(long order) { return Pipeline::build(order).frame; }

}  // namespace ttstar
