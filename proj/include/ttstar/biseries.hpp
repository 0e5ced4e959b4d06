#pragma once

#include <map>
#include <string>
#include <utility>

#include "ttstar/zloop.hpp"

namespace ttstar {

// Truncated formal power series in q and qbar with ZLoop coefficients.
// Truncation is by total degree: only terms q^n qbar^m with n+m <= N are
// kept, and every arithmetic result is re-truncated to the same N.
// Mixing series with different truncations throws truncation_mismatch.
class BiSeries {
  public:
    using Key = std::pair<long, long>;  // (n, m): coefficient of q^n qbar^m

    explicit BiSeries(long trunc) : trunc_(trunc) {
        if (trunc < 0) throw std::invalid_argument("BiSeries truncation must be >= 0");
    }

    static BiSeries constant(long trunc, const ZLoop& c) {
        BiSeries s(trunc);
        if (!c.is_zero()) s.terms_[{0, 0}] = c;
        return s;
    }
    static BiSeries constant(long trunc, const Rational& c) { return constant(trunc, ZLoop(c)); }
    static BiSeries monomial(long trunc, long n, long m, const ZLoop& c) {
        if (n < 0 || m < 0) throw std::invalid_argument("BiSeries exponents must be >= 0");
        BiSeries s(trunc);
        if (n + m <= trunc && !c.is_zero()) s.terms_[{n, m}] = c;
        return s;
    }
    static BiSeries q(long trunc) { return monomial(trunc, 1, 0, ZLoop(1)); }
    static BiSeries qbar(long trunc) { return monomial(trunc, 0, 1, ZLoop(1)); }

    long truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, ZLoop>& terms() const { return terms_; }

    ZLoop coeff(long n, long m) const {
        auto it = terms_.find({n, m});
        return it == terms_.end() ? ZLoop() : it->second;
    }

    BiSeries& operator+=(const BiSeries& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    BiSeries& operator-=(const BiSeries& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend BiSeries operator+(BiSeries l, const BiSeries& r) { return l += r; }
    friend BiSeries operator-(BiSeries l, const BiSeries& r) { return l -= r; }

    BiSeries operator-() const {
        BiSeries s(trunc_);
        for (const auto& [k, c] : terms_) s.terms_[k] = -c;
        return s;
    }

    friend BiSeries operator*(const BiSeries& l, const BiSeries& r) {
        l.check(r);
        BiSeries s(l.trunc_);
        for (const auto& [k1, c1] : l.terms_)
            for (const auto& [k2, c2] : r.terms_) {
                long n = k1.first + k2.first, m = k1.second + k2.second;
                if (n + m > l.trunc_) continue;
                s.add_term({n, m}, c1 * c2);
            }
        return s;
    }
    BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }

    BiSeries& scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v.scale(c);
        return *this;
    }
    BiSeries& scale(const ZLoop& c) { return *this = *this * constant(trunc_, c); }

    // Multiplicative inverse.  Exists iff the (0,0) coefficient is a unit of
    // the coefficient ring (a z,a-monomial); the rest follows by the
    // geometric series, which terminates at the truncation order.
    BiSeries inverse() const {
        auto it = terms_.find({0, 0});
        if (it == terms_.end()) throw non_invertible("BiSeries inverse: zero constant term");
        ZLoop c0inv = it->second.inverse();  // throws non_invertible if not a unit
        BiSeries y = *this * constant(trunc_, c0inv);  // 1 + (positive total degree)
        y.add_term({0, 0}, -ZLoop(1));
        // sum_{k} (-y)^k, truncation kills k > trunc_
        BiSeries acc = constant(trunc_, Rational(1));
        BiSeries pw = constant(trunc_, Rational(1));
        for (long k = 1; k <= trunc_ && !pw.is_zero(); ++k) {
            pw = pw * y;
            if (k % 2 == 0)
                acc += pw;
            else
                acc -= pw;
        }
        return acc * constant(trunc_, c0inv);
    }

    // Conjugation on the unit circle: q^n qbar^m z^k a^j -> q^m qbar^n z^-k a^j.
    BiSeries bar() const {
        BiSeries s(trunc_);
        for (const auto& [k, c] : terms_) s.terms_[{k.second, k.first}] = c.invert_z();
        return s;
    }

    // d/dt^1 with q = e^{t^1} and da/dt^1 = -1:
    // q^n qbar^m a^k  |->  n q^n qbar^m a^k - k q^n qbar^m a^{k-1}.
    BiSeries d1() const { return derive(true); }
    // d/dtbar^1: same with m in place of n.
    BiSeries d1bar() const { return derive(false); }

    // z -> -z in every coefficient.
    BiSeries negate_z() const {
        BiSeries s(trunc_);
        for (const auto& [k, c] : terms_) s.terms_[k] = c.negate_z();
        return s;
    }

    // log(1 + x): requires the (0,0) coefficient to equal 1 exactly.
    BiSeries log_series() const {
        auto it = terms_.find({0, 0});
        if (it == terms_.end() || !it->second.is_one())
            throw non_invertible("BiSeries log: constant term must be 1");
        BiSeries y = *this;
        y.add_term({0, 0}, -ZLoop(1));
        BiSeries acc(trunc_);
        BiSeries pw = constant(trunc_, Rational(1));
        for (long k = 1; k <= trunc_; ++k) {
            pw = pw * y;
            if (pw.is_zero()) break;
            BiSeries t = pw;
            t.scale(frac((k % 2) ? 1 : -1, k));
            acc += t;
        }
        return acc;
    }

    // exp(x): requires zero (0,0) coefficient (nilpotent to truncation).
    BiSeries exp_series() const {
        if (terms_.count({0, 0}))
            throw non_invertible("BiSeries exp: constant term must vanish");
        BiSeries acc = constant(trunc_, Rational(1));
        BiSeries pw = constant(trunc_, Rational(1));
        Rational kfac(1);
        for (long k = 1; k <= trunc_; ++k) {
            pw = pw * *this;
            if (pw.is_zero()) break;
            kfac *= k;
            BiSeries t = pw;
            t.scale(Rational(1) / kfac);
            acc += t;
        }
        return acc;
    }

    bool is_z_free() const {
        for (const auto& [k, c] : terms_)
            if (!c.is_z_free()) return false;
        return true;
    }
    // Nonzero coefficients only at n == m (depends on |q| alone).
    bool is_diagonal() const {
        for (const auto& [k, c] : terms_)
            if (k.first != k.second) return false;
        return true;
    }

    bool operator==(const BiSeries& o) const { return trunc_ == o.trunc_ && terms_ == o.terms_; }
    bool operator!=(const BiSeries& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += "\n + ";
            out += "q^" + std::to_string(k.first) + " qb^" + std::to_string(k.second) + " * [" +
                   c.str() + "]";
        }
        return out;
    }

  private:
    void check(const BiSeries& o) const {
        if (trunc_ != o.trunc_)
            throw truncation_mismatch("BiSeries truncations differ: " + std::to_string(trunc_) +
                                      " vs " + std::to_string(o.trunc_));
    }

    void add_term(const Key& k, const ZLoop& c) {
        if (k.first + k.second > trunc_) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BiSeries derive(bool holomorphic) const {
        BiSeries s(trunc_);
        for (const auto& [k, c] : terms_) {
            long deg = holomorphic ? k.first : k.second;
            ZLoop t;
            for (const auto& [ze, ap] : c.terms()) {
                APoly np = Rational(deg) * ap - ap.derivative();
                if (!np.is_zero()) t += ZLoop::monomial(np, ze);
            }
            if (!t.is_zero()) s.add_term(k, t);
        }
        return s;
    }

    long trunc_;
    std::map<Key, ZLoop> terms_;
};

}  // namespace ttstar
