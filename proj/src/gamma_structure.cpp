#include "ttstar/gamma_structure.hpp"

#include <cmath>

namespace ttstar {

namespace {
constexpr double kGamma = 0.5772156649015329;
const std::complex<double> kI(0.0, 1.0);
}  // namespace

CohVec psi_map(KClass v) {
    const double s = std::sqrt(2.0 * M_PI);
    // r * Psi(O) + d * Psi(O_pt)
    std::complex<double> c0 = static_cast<double>(v.rank) / s;
    std::complex<double> c1 =
        -2.0 * kGamma * static_cast<double>(v.rank) / s + s * kI * static_cast<double>(v.degree);
    return {c0, c1};
}

std::complex<double> pairing_V(const CohVec& alpha, const CohVec& beta) {
    // e^{pi i rho} = 1 + 2 pi i omega (rho = 2 omega, omega^2 = 0)
    std::complex<double> a0 = alpha[0];
    std::complex<double> a1 = alpha[1] + 2.0 * M_PI * kI * alpha[0];
    // e^{pi i mu} = diag(e^{-pi i/2}, e^{pi i/2}) = diag(-i, i)
    std::complex<double> b0 = -kI * beta[0];
    std::complex<double> b1 = kI * beta[1];
    return a0 * b1 + a1 * b0;
}

double galois_residual(KClass v) {
    CohVec lhs = psi_map(tensor(v, sheaf_O(-1)));
    CohVec p = psi_map(v);
    // e^{-2 pi i omega} = [[1, 0], [-2 pi i, 1]]
    CohVec rhs = {p[0], p[1] - 2.0 * M_PI * kI * p[0]};
    return std::max(std::abs(lhs[0] - rhs[0]), std::abs(lhs[1] - rhs[1]));
}

CohVec kappa_V(const CohVec& a) {
    std::complex<double> c0 = std::conj(a[0]);
    std::complex<double> c1 = std::conj(a[1]);
    return {c0, -4.0 * kGamma * c0 - c1};
}

CohVec kappa_H_at(std::complex<double> z, const CohVec& a) {
    std::complex<double> c0 = std::conj(a[0]);
    std::complex<double> c1 = std::conj(a[1]);
    return {z * c0, -4.0 * kGamma * c0 - c1 / z};
}

GramResult gram_matrix() {
    GramResult g{};
    KClass basis[2] = {sheaf_O(), sheaf_O_point()};
    double res = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            g.exact[i][j] = mukai_pairing(basis[i], basis[j]);
            std::complex<double> p = pairing_V(psi_map(basis[i]), psi_map(basis[j]));
            g.numeric[i][j] = p.real();
            res = std::max(res, std::abs(p.real() - static_cast<double>(g.exact[i][j])));
            res = std::max(res, std::abs(p.imag()));
        }
    g.max_residual = res;
    g.det = g.exact[0][0] * g.exact[1][1] - g.exact[0][1] * g.exact[1][0];
    return g;
}

}  // namespace ttstar
