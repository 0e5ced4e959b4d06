#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ttstar/biseries.hpp"

namespace ttstar {

// Square matrix of BiSeries (a loop-group element over the truncated
// biseries ring).  dim is 2 everywhere in this project but is not hardwired.
class LoopMatrix {
  public:
    LoopMatrix(long dim, long trunc)
        : dim_(dim), trunc_(trunc), e_(dim * dim, BiSeries(trunc)) {
        if (dim <= 0) throw std::invalid_argument("LoopMatrix dim must be positive");
    }

    static LoopMatrix identity(long dim, long trunc) {
        LoopMatrix m(dim, trunc);
        for (long i = 0; i < dim; ++i) m.at(i, i) = BiSeries::constant(trunc, Rational(1));
        return m;
    }

    long dim() const { return dim_; }
    long truncation() const { return trunc_; }

    BiSeries& at(long i, long j) { return e_[i * dim_ + j]; }
    const BiSeries& at(long i, long j) const { return e_[i * dim_ + j]; }

    bool is_zero() const {
        for (const auto& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }

    LoopMatrix& operator+=(const LoopMatrix& o) {
        check(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    LoopMatrix& operator-=(const LoopMatrix& o) {
        check(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend LoopMatrix operator+(LoopMatrix l, const LoopMatrix& r) { return l += r; }
    friend LoopMatrix operator-(LoopMatrix l, const LoopMatrix& r) { return l -= r; }

    LoopMatrix operator-() const {
        LoopMatrix m(dim_, trunc_);
        for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
        return m;
    }

    friend LoopMatrix operator*(const LoopMatrix& l, const LoopMatrix& r) {
        l.check(r);
        LoopMatrix m(l.dim_, l.trunc_);
        for (long i = 0; i < l.dim_; ++i)
            for (long j = 0; j < l.dim_; ++j) {
                BiSeries s(l.trunc_);
                for (long k = 0; k < l.dim_; ++k) s += l.at(i, k) * r.at(k, j);
                m.at(i, j) = std::move(s);
            }
        return m;
    }

    LoopMatrix transpose() const {
        LoopMatrix m(dim_, trunc_);
        for (long i = 0; i < dim_; ++i)
            for (long j = 0; j < dim_; ++j) m.at(i, j) = at(j, i);
        return m;
    }

    LoopMatrix negate_z() const { return map([](const BiSeries& s) { return s.negate_z(); }); }
    LoopMatrix bar() const { return map([](const BiSeries& s) { return s.bar(); }); }
    LoopMatrix d1() const { return map([](const BiSeries& s) { return s.d1(); }); }
    LoopMatrix d1bar() const { return map([](const BiSeries& s) { return s.d1bar(); }); }

    // The (q,qbar)-coefficient at (n,m) as a matrix of ZLoops.
    std::vector<ZLoop> coeff(long n, long m) const {
        std::vector<ZLoop> c;
        c.reserve(e_.size());
        for (const auto& s : e_) c.push_back(s.coeff(n, m));
        return c;
    }

    // Entrywise split into strictly-positive and nonpositive z-parts.
    std::pair<LoopMatrix, LoopMatrix> z_split() const {
        LoopMatrix pos(dim_, trunc_), nonpos(dim_, trunc_);
        for (long i = 0; i < dim_; ++i)
            for (long j = 0; j < dim_; ++j) {
                for (const auto& [k, c] : at(i, j).terms()) {
                    auto [p, np] = c.z_split();
                    if (!p.is_zero()) pos.at(i, j) += BiSeries::monomial(trunc_, k.first, k.second, p);
                    if (!np.is_zero())
                        nonpos.at(i, j) += BiSeries::monomial(trunc_, k.first, k.second, np);
                }
            }
        return {pos, nonpos};
    }

    // Series inverse: invert the (q,qbar)-constant term (entries must form a
    // matrix whose determinant is a unit of the coefficient ring), then the
    // geometric series handles the rest.
    LoopMatrix inverse() const {
        LoopMatrix c0inv = constant_term_inverse();
        LoopMatrix y = c0inv * *this;  // identity + positive total degree
        LoopMatrix id = identity(dim_, trunc_);
        y -= id;
        LoopMatrix acc = id, pw = id;
        for (long k = 1; k <= trunc_; ++k) {
            pw = pw * y;
            if (pw.is_zero()) break;
            if (k % 2 == 0)
                acc += pw;
            else
                acc -= pw;
        }
        return acc * c0inv;
    }

    bool operator==(const LoopMatrix& o) const {
        return dim_ == o.dim_ && trunc_ == o.trunc_ && e_ == o.e_;
    }
    bool operator!=(const LoopMatrix& o) const { return !(*this == o); }

    std::string str() const {
        std::string out;
        for (long i = 0; i < dim_; ++i)
            for (long j = 0; j < dim_; ++j)
                out += "[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                       at(i, j).str() + "\n";
        return out;
    }

  private:
    template <typename F>
    LoopMatrix map(F&& f) const {
        LoopMatrix m(dim_, trunc_);
        for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = f(e_[k]);
        return m;
    }

    void check(const LoopMatrix& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("LoopMatrix dimension mismatch");
        if (trunc_ != o.trunc_) throw truncation_mismatch("LoopMatrix truncations differ");
    }

    // Inverse of the (0,0) ZLoop-matrix, currently for dim <= 2 (adjugate
    // over the Laurent ring; the determinant must be a unit).
    LoopMatrix constant_term_inverse() const {
        if (dim_ > 2) throw std::invalid_argument("constant-term inverse implemented for dim <= 2");
        auto c = coeff(0, 0);
        LoopMatrix m(dim_, trunc_);
        if (dim_ == 1) {
            m.at(0, 0) = BiSeries::constant(trunc_, c[0].inverse());
            return m;
        }
        ZLoop det = c[0] * c[3] - c[1] * c[2];
        ZLoop dinv = det.inverse();  // throws non_invertible for a non-unit
        m.at(0, 0) = BiSeries::constant(trunc_, c[3] * dinv);
        m.at(0, 1) = BiSeries::constant(trunc_, -(c[1] * dinv));
        m.at(1, 0) = BiSeries::constant(trunc_, -(c[2] * dinv));
        m.at(1, 1) = BiSeries::constant(trunc_, c[0] * dinv);
        return m;
    }

    long dim_;
    long trunc_;
    std::vector<BiSeries> e_;
};

}  // namespace ttstar
