#include "ttstar/sl2.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttstar {

namespace {

RationalMatrix from_columns(long dim, const std::vector<std::vector<Rational>>& cols) {
    RationalMatrix m(dim, static_cast<long>(cols.size()));
    for (long j = 0; j < static_cast<long>(cols.size()); ++j)
        for (long i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
    return m;
}

RationalMatrix coordinate_basis(long dim, const std::vector<long>& idx) {
    RationalMatrix m(dim, static_cast<long>(idx.size()));
    for (long j = 0; j < static_cast<long>(idx.size()); ++j) m.at(idx[j], j) = 1;
    return m;
}

RationalMatrix power(const RationalMatrix& m, long k) {
    RationalMatrix acc = RationalMatrix::identity(m.rows());
    for (long i = 0; i < k; ++i) acc = acc * m;
    return acc;
}

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix m(a.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (long j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

}  // namespace

long GradedSpace::top_degree() const {
    long t = 0;
    for (long d : degrees) t = std::max(t, d);
    return t;
}

std::vector<long> GradedSpace::slice(long d) const {
    std::vector<long> idx;
    for (long i = 0; i < dim(); ++i)
        if (degrees[i] == d) idx.push_back(i);
    return idx;
}

std::vector<long> GradedSpace::slice_le(long d) const {
    std::vector<long> idx;
    for (long i = 0; i < dim(); ++i)
        if (degrees[i] <= d) idx.push_back(i);
    return idx;
}

std::vector<long> GradedSpace::slice_ge(long d) const {
    std::vector<long> idx;
    for (long i = 0; i < dim(); ++i)
        if (degrees[i] >= d) idx.push_back(i);
    return idx;
}

void GradedSpace::validate() const {
    if (raising.rows() != dim() || raising.cols() != dim())
        throw std::invalid_argument("GradedSpace: raising operator has wrong shape");
    for (long d : degrees)
        if (d < 0 || d % 2 != 0)
            throw std::invalid_argument("GradedSpace: degrees must be even and nonnegative");
    for (long i = 0; i < dim(); ++i)
        for (long j = 0; j < dim(); ++j)
            if (raising.at(i, j) != 0 && degrees[i] != degrees[j] + 2)
                throw std::invalid_argument("GradedSpace: raising operator is not of degree +2");
    if (!power(raising, top_degree() / 2 + 1).is_zero())
        throw std::invalid_argument("GradedSpace: raising operator is not nilpotent");
}

GradedSpace GradedSpace::projective_space(long n) {
    GradedSpace v{std::vector<long>(n + 1), RationalMatrix(n + 1, n + 1)};
    for (long k = 0; k <= n; ++k) v.degrees[k] = 2 * k;
    for (long k = 0; k < n; ++k) v.raising.at(k + 1, k) = 1;  // omega^k -> omega^{k+1}
    return v;
}

GradedSpace GradedSpace::p1_times_p1() {
    // basis 1, w1, w2, w1 w2; raising by w1 + w2 with w1^2 = w2^2 = 0
    GradedSpace v{{0, 2, 2, 4}, RationalMatrix(4, 4)};
    v.raising.at(1, 0) = 1;
    v.raising.at(2, 0) = 1;
    v.raising.at(3, 1) = 1;
    v.raising.at(3, 2) = 1;
    return v;
}

Sl2Triple lefschetz_triple(const GradedSpace& v) {
    v.validate();
    const long dim = v.dim();
    const long n = v.middle();

    // hard Lefschetz: a^k : H^{n-k} -> H^{n+k} must be an isomorphism
    for (long k = 1; k <= n; ++k) {
        auto lo = v.slice(n - k), hi = v.slice(n + k);
        if (lo.size() != hi.size())
            throw std::domain_error("hard Lefschetz fails: asymmetric Betti numbers at k=" +
                                    std::to_string(k));
        if (lo.empty()) continue;
        RationalMatrix img = power(v.raising, k) * coordinate_basis(dim, lo);
        if (img.rank() != static_cast<long>(lo.size()))
            throw std::domain_error("hard Lefschetz fails: a^" + std::to_string(k) +
                                    " is not injective on H^" + std::to_string(n - k));
    }

    // primitive decomposition: P^{n-k} = Ker(a^{k+1}) on H^{n-k}, k >= 0
    Sl2Triple t{v.raising, RationalMatrix(dim, dim), RationalMatrix(dim, dim), {}};
    for (long i = 0; i < dim; ++i) t.grading.at(i, i) = v.degrees[i] - n;

    std::vector<std::vector<Rational>> string_vectors;  // columns of the change of basis
    std::vector<std::pair<long, long>> string_pos;      // (string index, level l)

    for (long k = n; k >= 0; --k) {
        auto lo = v.slice(n - k);
        if (lo.empty()) continue;
        RationalMatrix ak1 = power(v.raising, k + 1) * coordinate_basis(dim, lo);
        for (const auto& ker : ak1.kernel()) {
            std::vector<Rational> p(dim, Rational(0));
            for (size_t j = 0; j < lo.size(); ++j) p[lo[j]] = ker[j];
            Sl2Triple::String s{k, p};
            long sidx = static_cast<long>(t.strings.size());
            t.strings.push_back(s);
            std::vector<Rational> cur = p;
            for (long l = 0; l <= k; ++l) {
                string_vectors.push_back(cur);
                string_pos.emplace_back(sidx, l);
                if (l < k) cur = v.raising.apply(cur);
            }
        }
    }

    RationalMatrix T = from_columns(dim, string_vectors);
    if (T.rank() != dim)
        throw std::domain_error("primitive strings do not span; hard Lefschetz violated");

    // a+ in the string basis: a+ (a^l p) = l (k+1-l) a^{l-1} p
    RationalMatrix low_str(dim, dim);
    for (long col = 0; col < dim; ++col) {
        auto [sidx, l] = string_pos[col];
        if (l == 0) continue;
        long k = t.strings[sidx].length;
        low_str.at(col - 1, col) = Rational(l) * Rational(k + 1 - l);
    }
    t.lowering = T * low_str * T.inverse();

    // the defining relations, exactly
    RationalMatrix comm = t.raising * t.lowering - t.lowering * t.raising;
    if (!(comm == t.grading)) throw std::logic_error("sl2: [a, a+] != h");
    RationalMatrix ha = t.grading * t.raising - t.raising * t.grading;
    if (!(ha == Rational(2) * t.raising)) throw std::logic_error("sl2: [h, a] != 2a");
    RationalMatrix hl = t.grading * t.lowering - t.lowering * t.grading;
    if (!(hl == Rational(-2) * t.lowering)) throw std::logic_error("sl2: [h, a+] != -2a+");
    for (const auto& s : t.strings) {
        auto z = t.lowering.apply(s.primitive);
        for (const auto& c : z)
            if (c != 0) throw std::logic_error("sl2: a+ does not annihilate a primitive vector");
    }
    return t;
}

WeightFiltration weight_filtration(const RationalMatrix& nilpotent) {
    if (nilpotent.rows() != nilpotent.cols())
        throw std::invalid_argument("weight_filtration: matrix must be square");
    const long dim = nilpotent.rows();

    std::vector<RationalMatrix> pw{RationalMatrix::identity(dim)};
    long s = 0;
    while (!pw.back().is_zero()) {
        if (s > dim) throw std::domain_error("weight_filtration: operator is not nilpotent");
        pw.push_back(pw.back() * nilpotent);
        ++s;
    }
    // pw[i] = N^i; N^s = 0 with s minimal (s = 0 for the zero map on dim 0)

    WeightFiltration w;
    RationalMatrix chosen(dim, 0);  // K_{i-1} basis + images of longer strings
    std::vector<std::pair<long, std::vector<Rational>>> tops;

    for (long i = s; i >= 1; --i) {
        // span to avoid: K_{i-1} + N^{l-i} (tops of length l > i)
        std::vector<std::vector<Rational>> avoid = pw[i - 1].kernel();
        for (const auto& [len, top] : tops) {
            std::vector<Rational> img = top;
            for (long j = 0; j < len - i; ++j) img = nilpotent.apply(img);
            avoid.push_back(img);
        }
        RationalMatrix avoid_m = from_columns(dim, avoid);
        long base_rank = avoid_m.rank();
        for (const auto& cand : pw[i].kernel()) {
            RationalMatrix ext = hcat(avoid_m, from_columns(dim, {cand}));
            if (ext.rank() > base_rank) {
                tops.emplace_back(i, cand);
                avoid_m = ext;
                ++base_rank;
            }
        }
    }

    for (const auto& [len, top] : tops) {
        std::vector<Rational> cur = top;
        for (long l = 0; l < len; ++l) {
            w.weights.push_back(len - 1 - 2 * l);
            w.vectors.push_back(cur);
            if (l + 1 < len) cur = nilpotent.apply(cur);
        }
    }
    if (static_cast<long>(w.vectors.size()) != dim)
        throw std::logic_error("weight_filtration: string basis does not span");
    return w;
}

long WeightFiltration::max_weight() const {
    long m = 0;
    for (long w : weights) m = std::max(m, w);
    return m;
}

long WeightFiltration::dim_w(long k) const {
    long d = 0;
    for (long w : weights)
        if (w <= k) ++d;
    return d;
}

RationalMatrix WeightFiltration::w_basis(long k) const {
    std::vector<std::vector<Rational>> cols;
    for (size_t i = 0; i < weights.size(); ++i)
        if (weights[i] <= k) cols.push_back(vectors[i]);
    long dim = vectors.empty() ? 0 : static_cast<long>(vectors.front().size());
    return from_columns(dim, cols);
}

bool same_span(const RationalMatrix& a, const RationalMatrix& b) {
    long ra = a.rank(), rb = b.rank();
    return ra == rb && hcat(a, b).rank() == ra;
}

RationalMatrix exp_nilpotent(const RationalMatrix& n) {
    RationalMatrix acc = RationalMatrix::identity(n.rows());
    RationalMatrix pw = acc;
    Rational kfac(1);
    for (long k = 1;; ++k) {
        pw = pw * n;
        if (pw.is_zero()) break;
        if (k > n.rows()) throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
        kfac *= k;
        acc = acc + Rational(1) / kfac * pw;
    }
    return acc;
}

ExpLemmaReport exp_lemma_check(const GradedSpace& v) {
    ExpLemmaReport rep;
    Sl2Triple t = lefschetz_triple(v);
    const long dim = v.dim();
    const long n = v.middle();
    RationalMatrix E = exp_nilpotent(-t.raising) * exp_nilpotent(t.lowering);

    for (long k = 0; k <= n; ++k) {
        auto src = v.slice_ge(n - k), dst = v.slice_le(n + k);
        if (src.empty()) continue;
        RationalMatrix img = E * coordinate_basis(dim, src);
        if (!same_span(img, coordinate_basis(dim, dst))) {
            rep.ok = false;
            rep.failures.push_back("image of H^{>=" + std::to_string(n - k) +
                                   "} is not H^{<=" + std::to_string(n + k) + "}");
        }
        ++rep.cases_checked;
    }

    for (size_t si = 0; si < t.strings.size(); ++si) {
        const auto& s = t.strings[si];
        std::vector<Rational> u = s.primitive;
        for (long j = 0; j <= s.length; ++j) {
            long k = s.length - 2 * j;  // u = a^j p lies in H^{n-k}
            if (k >= 0) {
                std::vector<Rational> w = E.apply(u);
                // expected top part: (-1)^{k+j} j!/(k+j)! a^k u
                std::vector<Rational> topv = u;
                for (long l = 0; l < k; ++l) topv = t.raising.apply(topv);
                Rational coef = ((k + j) % 2 ? Rational(-1) : Rational(1)) * factorial(j) /
                                factorial(k + j);
                bool good = true;
                for (long i = 0; i < dim; ++i) {
                    if (v.degrees[i] == n + k) {
                        if (w[i] != coef * topv[i]) good = false;
                    } else if (v.degrees[i] > n + k) {
                        if (w[i] != 0) good = false;
                    }
                }
                if (!good) {
                    rep.ok = false;
                    rep.failures.push_back("leading term mismatch: string " + std::to_string(si) +
                                           " (k=" + std::to_string(k) + ", j=" + std::to_string(j) +
                                           ")");
                }
                ++rep.cases_checked;
            }
            if (j < s.length) u = t.raising.apply(u);
        }
    }
    return rep;
}

RationalMatrix kappa_diag_model(const GradedSpace& v) {
    RationalMatrix m(v.dim(), v.dim());
    for (long i = 0; i < v.dim(); ++i) m.at(i, i) = (v.degrees[i] / 2) % 2 ? -1 : 1;
    return m;
}

RationalMatrix kappa_perturbed_model(const GradedSpace& v, const Rational& eps) {
    RationalMatrix m = kappa_diag_model(v);
    for (long i = 0; i < v.dim(); ++i)
        for (long j = 0; j < v.dim(); ++j)
            if (v.degrees[i] > v.degrees[j])
                m.at(i, j) = eps * Rational(1 + (i + 2 * j) % 3);
    return m;
}

TransversalityReport transversality_rank(const GradedSpace& v, const RationalMatrix& kappa,
                                         const std::vector<Rational>& ts) {
    v.validate();
    const long dim = v.dim();
    const long n = v.middle();
    TransversalityReport rep{{}, true, true, true};

    auto run_case = [&](long k, const RationalMatrix& map_b) -> TransversalityCase {
        auto lo = v.slice_le(n - k);
        auto hi = v.slice_le(n + k);
        auto mid = v.slice(n - k);
        RationalMatrix A = coordinate_basis(dim, lo);
        RationalMatrix B = map_b * coordinate_basis(dim, hi);
        RationalMatrix M = hcat(A, -B);
        auto ker = M.kernel();
        // basis of the intersection, then its projection to H^{n-k}
        RationalMatrix proj(static_cast<long>(mid.size()), static_cast<long>(ker.size()));
        for (size_t c = 0; c < ker.size(); ++c) {
            std::vector<Rational> xa(ker[c].begin(), ker[c].begin() + A.cols());
            std::vector<Rational> vec = A.apply(xa);
            for (size_t r = 0; r < mid.size(); ++r) proj.at(r, c) = vec[mid[r]];
        }
        bool full = proj.rank() == static_cast<long>(mid.size());
        return TransversalityCase{k, Rational(0), full, static_cast<long>(ker.size()),
                                  static_cast<long>(mid.size())};
    };

    Rational tmax(0);
    for (const auto& t : ts) tmax = std::max(tmax, t);

    for (long k = 0; k <= n; ++k) {
        if (v.slice(n - k).empty()) continue;
        for (const auto& t : ts) {
            RationalMatrix e2t = exp_nilpotent(Rational(2) * t * v.raising);
            TransversalityCase c = run_case(k, e2t * kappa);
            c.t = t;
            rep.cases.push_back(c);
            if (!c.full_rank) {
                rep.all_full_rank = false;
                if (t == tmax) rep.full_rank_large_t = false;
            }
        }
    }

    // rescaled t -> infinity limit: e^{a} composed with the degree-preserving
    // leading part of kappa
    RationalMatrix lead(dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            if (v.degrees[i] == v.degrees[j]) lead.at(i, j) = kappa.at(i, j);
    RationalMatrix ea = exp_nilpotent(v.raising);
    for (long k = 0; k <= n; ++k) {
        if (v.slice(n - k).empty()) continue;
        TransversalityCase c = run_case(k, ea * lead);
        if (!c.full_rank) rep.limit_ok = false;
    }
    return rep;
}

}  // namespace ttstar
