#include "ttstar/cv_structure.hpp"

#include "ttstar/qde_p1.hpp"

namespace ttstar {

namespace {

long count_terms(const LoopMatrix& m) {
    long n = 0;
    for (long i = 0; i < m.dim(); ++i)
        for (long j = 0; j < m.dim(); ++j) n += static_cast<long>(m.at(i, j).terms().size());
    return n;
}

LoopMatrix comm(const LoopMatrix& x, const LoopMatrix& y) { return x * y - y * x; }

}  // namespace

MetricSeries metric_h(const Pipeline& pipe) {
    const long trunc = pipe.order;
    auto v = matrix_column(pipe.frame, 0);
    // h is defined through the ungauged frame Phi(1) = e^{t1 w/z} v, but the
    // gauge factor cancels exactly in the pairing:
    //   kappa_H e^{t1 w/z} = e^{-t1bar w/z} kappa_H   (w/z purely imaginary,
    //                                                  conjugate linearity)
    //   kappa_H = e^{(t1+t1bar) w/z} kappa_H^tau      (definition)
    //   => kappa_H(Phi(1)) = e^{t1 w/z} kappa_H^tau(v)
    //   (f(-z) s1, s2) = (s1, f(z) s2) and self-adjointness of cup products
    //   => (e^{t1 w/z} alpha, e^{t1 w/z} beta) = (alpha, beta).
    // Hence (kappa_H(Phi(1)), Phi(1)) = (kappa_H^tau(v), v), computed below.
    // Full chain: docs/conventions.md, section 2.
    BiSeries h = pairing_H(apply_involution(v), v);

    if (!h.is_z_free()) throw std::logic_error("metric_h: unexpected z-dependence");
    if (!h.is_diagonal()) throw std::logic_error("metric_h: off-diagonal (q,qbar) term");

    MetricSeries ms{h, {}};
    for (long n = 0; 2 * n <= trunc; ++n) {
        APoly fn = h.coeff(n, n).coeff(0);
        if (!fn.is_polynomial())
            throw std::logic_error("metric_h: negative a-power in F_" + std::to_string(n));
        if (fn.is_zero() || fn.max_exp() != 2 * n + 1 || fn.coeff(2 * n + 1) != 1)
            throw std::logic_error("metric_h: F_" + std::to_string(n) +
                                   " is not monic of degree " + std::to_string(2 * n + 1));
        ms.F.push_back(fn);
    }
    return ms;
}

MetricSeries metric_h(long order) {
    if (order < 0) throw std::invalid_argument("metric_h: order must be >= 0");
    return metric_h(Pipeline::build(2 * order));
}

CVData cv_data(const MetricSeries& metric) {
    const long trunc = metric.h.truncation();
    CVData d{trunc,
             metric.h,
             metric.h.inverse(),
             poincare_g(trunc),
             LoopMatrix(2, trunc),
             LoopMatrix(2, trunc),
             omega_product(trunc),
             LoopMatrix(2, trunc),
             LoopMatrix(2, trunc),
             LoopMatrix(2, trunc),
             LoopMatrix(2, trunc)};

    d.kappa.at(0, 1) = d.hinv;
    d.kappa.at(1, 0) = d.h;

    BiSeries dlog = d.h.d1() * d.hinv;  // d1 log h, Laurent in a
    d.gamma1.at(0, 0) = dlog;
    d.gamma1.at(1, 1) = -dlog;

    d.C1bar.at(0, 1) = d.hinv * d.hinv;
    d.C1bar.at(1, 0) = BiSeries::qbar(trunc) * d.h * d.h;

    d.U = d.C1 + d.C1;
    d.Ubar = d.C1bar + d.C1bar;

    BiSeries half = BiSeries::constant(trunc, frac(1, 2));
    d.Qop.at(0, 0) = -half - (dlog + dlog);
    d.Qop.at(1, 1) = half + (dlog + dlog);
    return d;
}

CVData cv_data(long order) { return cv_data(metric_h(order)); }

BiSeries metric_pde_residual(const CVData& d) {
    // d1bar(d1 h / h) + h^-2 - q qbar h^2
    BiSeries dlog = d.h.d1() * d.hinv;
    return dlog.d1bar() + d.hinv * d.hinv - BiSeries::q(d.trunc) * BiSeries::qbar(d.trunc) * d.h * d.h;
}

std::vector<EquationResidual> check_cv_equations(const CVData& d) {
    const long trunc = d.trunc;
    LoopMatrix id = LoopMatrix::identity(2, trunc);

    auto D1 = [&](const LoopMatrix& m) { return m.d1() + comm(d.gamma1, m); };
    auto D1bar = [&](const LoopMatrix& m) { return m.d1bar(); };
    // Conjugation by the involution: M -> kappa M kappa = K bar(M) bar(K),
    // with bar(K) = K here since h is a diagonal real series.
    auto conj_kappa = [&](const LoopMatrix& m) { return d.kappa * m.bar() * d.kappa.bar(); };

    std::vector<std::pair<std::string, LoopMatrix>> eqs;

    // curvature equation [D1, D1bar] + [C1, C1bar] = 0; the commutator of
    // the connections reduces to -d1bar(Gamma1)
    eqs.emplace_back("[D1,D1bar]+[C1,C1bar]", -d.gamma1.d1bar() + comm(d.C1, d.C1bar));
    // its advertised scalar form
    {
        BiSeries p = metric_pde_residual(d);
        LoopMatrix diag(2, trunc);
        diag.at(0, 0) = -p;
        diag.at(1, 1) = p;
        eqs.emplace_back("[D1,D1bar]+[C1,C1bar] == diag(-pde,+pde)",
                         (-d.gamma1.d1bar() + comm(d.C1, d.C1bar)) - diag);
        eqs.emplace_back("pde: d1 d1bar log h = -h^-2 + qqbar h^2",
                         [&] {
                             LoopMatrix m(2, trunc);
                             m.at(0, 0) = p;
                             return m;
                         }());
    }

    eqs.emplace_back("D1 C1bar", d.C1bar.d1() + comm(d.gamma1, d.C1bar));
    eqs.emplace_back("D1bar C1", d.C1.d1bar());
    eqs.emplace_back("[C1,C1]", comm(d.C1, d.C1));
    eqs.emplace_back("[C1bar,C1bar]", comm(d.C1bar, d.C1bar));

    eqs.emplace_back("D1 Ubar", D1(d.Ubar));
    eqs.emplace_back("D1 Q - [Ubar,C1]", D1(d.Qop) - comm(d.Ubar, d.C1));
    eqs.emplace_back("D1 U - C1 + [Q,C1]", D1(d.U) - d.C1 + comm(d.Qop, d.C1));
    eqs.emplace_back("[U,C1]", comm(d.U, d.C1));

    eqs.emplace_back("D1bar U", D1bar(d.U));
    eqs.emplace_back("D1bar Q + [U,C1bar]", D1bar(d.Qop) + comm(d.U, d.C1bar));
    eqs.emplace_back("D1bar Ubar - C1bar - [Q,C1bar]", D1bar(d.Ubar) - d.C1bar - comm(d.Qop, d.C1bar));
    eqs.emplace_back("[Ubar,C1bar]", comm(d.Ubar, d.C1bar));

    // metric compatibilities (g is constant, so d g = 0)
    eqs.emplace_back("g-compat D1: g Gamma1 + Gamma1^T g",
                     d.g * d.gamma1 + d.gamma1.transpose() * d.g);
    eqs.emplace_back("g-sym C1", d.g * d.C1 - d.C1.transpose() * d.g);
    eqs.emplace_back("g-sym C1bar", d.g * d.C1bar - d.C1bar.transpose() * d.g);
    eqs.emplace_back("g-sym U", d.g * d.U - d.U.transpose() * d.g);
    eqs.emplace_back("g-sym Ubar", d.g * d.Ubar - d.Ubar.transpose() * d.g);
    eqs.emplace_back("g-antisym Q", d.g * d.Qop + d.Qop.transpose() * d.g);

    // reality with respect to kappa
    eqs.emplace_back("kappa^2 = 1", d.kappa * d.kappa.bar() - id);
    eqs.emplace_back("C1bar = kappa C1 kappa", d.C1bar - conj_kappa(d.C1));
    eqs.emplace_back("Ubar = kappa U kappa", d.Ubar - conj_kappa(d.U));
    eqs.emplace_back("Q kappa + kappa Q", d.Qop * d.kappa + d.kappa * d.Qop.bar());
    // D real: kappa D1 kappa = D1bar reduces to K bar(d1 K + Gamma1 K) = 0
    eqs.emplace_back("D real wrt kappa",
                     d.kappa * (d.kappa.d1() + d.gamma1 * d.kappa).bar());
    // determinant of the metric matrix diag(h, h^-1)
    {
        LoopMatrix m(2, trunc);
        m.at(0, 0) = d.h * d.hinv - BiSeries::constant(trunc, Rational(1));
        eqs.emplace_back("det diag(h, h^-1) = 1", m);
    }

    std::vector<EquationResidual> out;
    out.reserve(eqs.size());
    for (auto& [name, res] : eqs) {
        long nz = count_terms(res);
        out.push_back({name, nz == 0, nz});
    }
    return out;
}

BiSeries curvature_series(long order) {
    if (order < 0) throw std::invalid_argument("curvature_series: order must be >= 0");
    MetricSeries m = metric_h(order);
    long trunc = m.h.truncation();
    BiSeries hinv = m.h.inverse();
    BiSeries two = BiSeries::constant(trunc, Rational(2));
    return -(two * hinv) + two * BiSeries::q(trunc) * BiSeries::qbar(trunc) * m.h * m.h * m.h;
}

}  // namespace ttstar
