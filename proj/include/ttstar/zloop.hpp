#pragma once

#include <map>
#include <string>
#include <utility>

#include "ttstar/apoly.hpp"

namespace ttstar {

// Laurent polynomial in the loop variable z with APoly coefficients.
class ZLoop {
  public:
    ZLoop() = default;
    explicit ZLoop(const APoly& c) {
        if (!c.is_zero()) terms_[0] = c;
    }
    explicit ZLoop(const Rational& c) : ZLoop(APoly(c)) {}
    explicit ZLoop(long c) : ZLoop(APoly(c)) {}

    static ZLoop monomial(const APoly& c, long zexp) {
        ZLoop p;
        if (!c.is_zero()) p.terms_[zexp] = c;
        return p;
    }
    static ZLoop z(long exp = 1) { return monomial(APoly(1), exp); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, APoly>& terms() const { return terms_; }

    APoly coeff(long zexp) const {
        auto it = terms_.find(zexp);
        return it == terms_.end() ? APoly() : it->second;
    }

    long min_exp() const { return terms_.begin()->first; }
    long max_exp() const { return terms_.rbegin()->first; }
    bool is_z_free() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }

    ZLoop& operator+=(const ZLoop& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ZLoop& operator-=(const ZLoop& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend ZLoop operator+(ZLoop l, const ZLoop& r) { return l += r; }
    friend ZLoop operator-(ZLoop l, const ZLoop& r) { return l -= r; }

    ZLoop operator-() const {
        ZLoop p;
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    friend ZLoop operator*(const ZLoop& l, const ZLoop& r) {
        ZLoop p;
        for (const auto& [e1, c1] : l.terms_)
            for (const auto& [e2, c2] : r.terms_) p.add_term(e1 + e2, c1 * c2);
        return p;
    }
    ZLoop& operator*=(const ZLoop& o) { return *this = *this * o; }

    ZLoop& scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v.scale(c);
        return *this;
    }

    // Exact direct-sum split: first component carries z-exponents >= 1,
    // second carries exponents <= 0.  Their sum reassembles the input.
    std::pair<ZLoop, ZLoop> z_split() const {
        ZLoop pos, nonpos;
        for (const auto& [e, c] : terms_) {
            if (e >= 1)
                pos.terms_[e] = c;
            else
                nonpos.terms_[e] = c;
        }
        return {pos, nonpos};
    }

    // z -> -z.
    ZLoop negate_z() const {
        ZLoop p;
        for (const auto& [e, c] : terms_) p.terms_[e] = (e % 2 != 0) ? -c : c;
        return p;
    }

    // z -> z^-1 (restriction to the unit circle composed with conjugation
    // fixes the real coefficients and the real variable a).
    ZLoop invert_z() const {
        ZLoop p;
        for (const auto& [e, c] : terms_) p.terms_[-e] = c;
        return p;
    }

    // Units are monomials c*a^j*z^k.
    ZLoop inverse() const {
        if (terms_.size() != 1) throw non_invertible("ZLoop inverse requires a z-monomial");
        const auto& [e, c] = *terms_.begin();
        return monomial(c.inverse(), -e);
    }

    bool operator==(const ZLoop& o) const { return terms_ == o.terms_; }
    bool operator!=(const ZLoop& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += "  +  ";
            out += "(" + c.str() + ")";
            if (e != 0) out += "*z^" + std::to_string(e);
        }
        return out;
    }

  private:
    void add_term(long e, const APoly& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<long, APoly> terms_;
};

}  // namespace ttstar
