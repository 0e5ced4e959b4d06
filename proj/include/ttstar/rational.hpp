#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ttstar {

// Arbitrary-precision rational scalar. GMP's mpq_class keeps values in
// lowest terms with a positive denominator, which is exactly the invariant
// the coefficient ring needs.
using Rational = mpq_class;

struct non_invertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct truncation_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational: '" + s + "'");
    r.canonicalize();
    return r;
}

// Canonical form: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q)=1).
inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

// mpq_class(n, d) does not canonicalize; this does.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw non_invertible("0 has no negative powers");
        return Rational(0);
    }
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Rational factorial(long n) {
    Rational acc(1);
    for (long k = 2; k <= n; ++k) acc *= k;
    return acc;
}

// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
inline Rational harmonic(long n) {
    Rational acc(0);
    for (long k = 1; k <= n; ++k) acc += Rational(1, k);
    return acc;
}

}  // namespace ttstar
