#include "ttstar/qde_p1.hpp"

namespace ttstar {

LoopMatrix omega_product(long trunc) {
    LoopMatrix m(2, trunc);
    m.at(0, 1) = BiSeries::q(trunc);
    m.at(1, 0) = BiSeries::constant(trunc, Rational(1));
    return m;
}

LoopMatrix omega_cup(long trunc) {
    LoopMatrix m(2, trunc);
    m.at(1, 0) = BiSeries::constant(trunc, Rational(1));
    return m;
}

LoopMatrix poincare_g(long trunc) {
    LoopMatrix m(2, trunc);
    m.at(0, 1) = BiSeries::constant(trunc, Rational(1));
    m.at(1, 0) = BiSeries::constant(trunc, Rational(1));
    return m;
}

LoopMatrix mu_matrix(long trunc) {
    LoopMatrix m(2, trunc);
    m.at(0, 0) = BiSeries::constant(trunc, frac(-1, 2));
    m.at(1, 1) = BiSeries::constant(trunc, frac(1, 2));
    return m;
}

LoopMatrix rho_matrix(long trunc) {
    LoopMatrix m(2, trunc);
    m.at(1, 0) = BiSeries::constant(trunc, Rational(2));
    return m;
}

std::pair<BiSeries, BiSeries> j_coeffs(long order) {
    if (order < 0) throw std::invalid_argument("j_coeffs: order must be >= 0");
    BiSeries j0(order), j1(order);
    Rational kfac2(1);  // (k!)^2
    Rational hk(0);     // H_k
    for (long k = 0; k <= order; ++k) {
        if (k > 0) {
            kfac2 *= Rational(k) * Rational(k);
            hk += frac(1, k);
        }
        j0 += BiSeries::monomial(order, k, 0, ZLoop::monomial(APoly(Rational(1) / kfac2), -2 * k));
        if (k > 0)
            j1 += BiSeries::monomial(order, k, 0,
                                     ZLoop::monomial(APoly(Rational(-2) * hk / kfac2), -2 * k));
    }
    return {j0, j1};
}

LoopMatrix fundamental_matrix(long order) {
    auto [j0, j1] = j_coeffs(order);
    BiSeries z = BiSeries::constant(order, ZLoop::z(1));
    BiSeries zinv = BiSeries::constant(order, ZLoop::z(-1));
    LoopMatrix Q(2, order);
    Q.at(0, 0) = j0;
    Q.at(0, 1) = z * j0.d1();
    Q.at(1, 0) = zinv * j1;
    Q.at(1, 1) = j0 + j1.d1();
    return Q;
}

LoopMatrix adjoint_inverse(const LoopMatrix& Q) {
    LoopMatrix g = poincare_g(Q.truncation());
    return g * Q.negate_z().transpose() * g;  // g^{-1} = g
}

LoopMatrix unitarity_residual(long order) {
    LoopMatrix Q = fundamental_matrix(order);
    return adjoint_inverse(Q) * Q - LoopMatrix::identity(2, order);
}

LoopMatrix quantum_ring_residual(long order) {
    LoopMatrix w = omega_product(order);
    LoopMatrix qid(2, order);
    qid.at(0, 0) = BiSeries::q(order);
    qid.at(1, 1) = BiSeries::q(order);
    return w * w - qid;
}

LoopMatrix qde_residual(long order) {
    LoopMatrix Q = fundamental_matrix(order);
    BiSeries z = BiSeries::constant(order, ZLoop::z(1));
    LoopMatrix zd1Q(2, order);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) zd1Q.at(i, j) = z * Q.at(i, j).d1();
    return omega_cup(order) * Q + zd1Q - Q * omega_product(order);
}

}  // namespace ttstar
