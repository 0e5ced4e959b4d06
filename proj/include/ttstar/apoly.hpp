#pragma once

#include <map>
#include <string>

#include "ttstar/rational.hpp"

namespace ttstar {

// Laurent polynomial in the single real variable `a` over Rational.
// Sparse map exponent -> coefficient; zero coefficients are never stored.
class APoly {
  public:
    APoly() = default;
    explicit APoly(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    explicit APoly(long c) : APoly(Rational(c)) {}

    static APoly monomial(const Rational& c, long exp) {
        APoly p;
        if (c != 0) p.terms_[exp] = c;
        return p;
    }
    // The variable `a` itself.
    static APoly var() { return monomial(Rational(1), 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Rational>& terms() const { return terms_; }

    Rational coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long min_exp() const { return terms_.begin()->first; }   // requires !is_zero()
    long max_exp() const { return terms_.rbegin()->first; }  // requires !is_zero()

    bool is_polynomial() const { return terms_.empty() || min_exp() >= 0; }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const { return terms_.size() == 1 && coeff(0) == 1; }

    APoly& operator+=(const APoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    APoly& operator-=(const APoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend APoly operator+(APoly l, const APoly& r) { return l += r; }
    friend APoly operator-(APoly l, const APoly& r) { return l -= r; }

    APoly operator-() const {
        APoly p;
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    friend APoly operator*(const APoly& l, const APoly& r) {
        APoly p;
        for (const auto& [e1, c1] : l.terms_)
            for (const auto& [e2, c2] : r.terms_) p.add_term(e1 + e2, c1 * c2);
        return p;
    }
    APoly& operator*=(const APoly& o) { return *this = *this * o; }

    APoly& scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend APoly operator*(const Rational& c, APoly p) { return p.scale(c); }

    // Units of Q[a, a^-1] are the nonzero monomials.
    APoly inverse() const {
        if (!is_monomial()) throw non_invertible("APoly inverse requires a monomial");
        const auto& [e, c] = *terms_.begin();
        return monomial(Rational(1) / c, -e);
    }

    // d/da.
    APoly derivative() const {
        APoly p;
        for (const auto& [e, c] : terms_)
            if (e != 0) p.terms_[e - 1] = Rational(e) * c;
        return p;
    }

    double eval(double a) const {
        double s = 0.0;
        for (const auto& [e, c] : terms_) {
            double m = c.get_d();
            long k = e;
            double base = k >= 0 ? a : 1.0 / a;
            for (long i = 0; i < (k >= 0 ? k : -k); ++i) m *= base;
            s += m;
        }
        return s;
    }

    bool operator==(const APoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const APoly& o) const { return !(*this == o); }

    // Human-readable, e.g. "a^3 + 4*a^2 + 8*a + 8".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += rational_to_string(it->second);
            if (it->first != 0) out += "*a^" + std::to_string(it->first);
        }
        return out;
    }

  private:
    void add_term(long e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<long, Rational> terms_;
};

}  // namespace ttstar
