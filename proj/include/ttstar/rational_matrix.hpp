#pragma once

#include <vector>

#include "ttstar/rational.hpp"

namespace ttstar {

// Dense matrix over Rational with exact Gaussian elimination.
class RationalMatrix {
  public:
    RationalMatrix(long rows, long cols) : r_(rows), c_(cols), e_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(long n) {
        RationalMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    long rows() const { return r_; }
    long cols() const { return c_; }
    Rational& at(long i, long j) { return e_[i * c_ + j]; }
    const Rational& at(long i, long j) const { return e_[i * c_ + j]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("RationalMatrix: shape mismatch");
        RationalMatrix m(a.r_, b.c_);
        for (long i = 0; i < a.r_; ++i)
            for (long k = 0; k < a.c_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (long j = 0; j < b.c_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return m;
    }
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
        for (long i = 0; i < a.r_ * a.c_; ++i) a.e_[i] += b.e_[i];
        return a;
    }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
        for (long i = 0; i < a.r_ * a.c_; ++i) a.e_[i] -= b.e_[i];
        return a;
    }
    RationalMatrix operator-() const {
        RationalMatrix m(r_, c_);
        for (long i = 0; i < r_ * c_; ++i) m.e_[i] = -e_[i];
        return m;
    }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) {
        for (auto& v : a.e_) v *= s;
        return a;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        std::vector<Rational> w(r_, Rational(0));
        for (long i = 0; i < r_; ++i)
            for (long j = 0; j < c_; ++j)
                if (at(i, j) != 0) w[i] += at(i, j) * v[j];
        return w;
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const RationalMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }

    // Row-reduce in place; returns the pivot columns.
    std::vector<long> rref() {
        std::vector<long> pivots;
        long row = 0;
        for (long col = 0; col < c_ && row < r_; ++col) {
            long p = -1;
            for (long i = row; i < r_; ++i)
                if (at(i, col) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (long j = 0; j < c_; ++j) std::swap(at(p, j), at(row, j));
            Rational inv = Rational(1) / at(row, col);
            for (long j = col; j < c_; ++j) at(row, j) *= inv;
            for (long i = 0; i < r_; ++i) {
                if (i == row || at(i, col) == 0) continue;
                Rational f = at(i, col);
                for (long j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    long rank() const {
        RationalMatrix m = *this;
        return static_cast<long>(m.rref().size());
    }

    // Basis of the null space, one column vector each.
    std::vector<std::vector<Rational>> kernel() const {
        RationalMatrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(c_, false);
        for (long p : pivots) is_pivot[p] = true;
        std::vector<std::vector<Rational>> basis;
        for (long free = 0; free < c_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rational> v(c_, Rational(0));
            v[free] = 1;
            for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Unique solution of A x = b; throws if the system is singular or
    // inconsistent.
    std::vector<Rational> solve_unique(const std::vector<Rational>& b) const {
        RationalMatrix aug(r_, c_ + 1);
        for (long i = 0; i < r_; ++i) {
            for (long j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, c_) = b[i];
        }
        auto pivots = aug.rref();
        for (long p : pivots)
            if (p == c_) throw std::domain_error("solve_unique: inconsistent system");
        if (static_cast<long>(pivots.size()) != c_)
            throw std::domain_error("solve_unique: singular system (rank " +
                                    std::to_string(pivots.size()) + " of " + std::to_string(c_) + ")");
        std::vector<Rational> x(c_, Rational(0));
        for (long i = 0; i < c_; ++i) x[i] = aug.at(i, c_);
        return x;
    }

    RationalMatrix inverse() const {
        if (r_ != c_) throw std::invalid_argument("inverse: not square");
        RationalMatrix aug(r_, 2 * c_);
        for (long i = 0; i < r_; ++i) {
            for (long j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, c_ + i) = 1;
        }
        auto pivots = aug.rref();
        if (static_cast<long>(pivots.size()) != c_ || pivots.back() >= c_)
            throw std::domain_error("inverse: singular matrix");
        RationalMatrix m(r_, c_);
        for (long i = 0; i < r_; ++i)
            for (long j = 0; j < c_; ++j) m.at(i, j) = aug.at(i, c_ + j);
        return m;
    }

  private:
    long r_, c_;
    std::vector<Rational> e_;
};

}  // namespace ttstar
