#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "errors.hpp"

namespace klab {

// Exact arithmetic only: certified values never touch floating point.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) {
    if (rational_den(r) == 1) return rational_num(r).str();
    return rational_num(r).str() + "/" + rational_den(r).str();
}

/// Parses "p" or "p/q" with q > 0.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den <= 0) throw BadParams("rational denominator must be positive: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw BadParams("cannot parse rational: " + s);
    }
}

inline BigInt big_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

inline BigInt big_pow(BigInt base, long exp) {
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

/// C(n,k) as long, or -1 when it exceeds `cap`.
inline long binomial_capped(long n, long k, long cap) {
    BigInt b = big_binomial(n, k);
    if (b > cap) return -1;
    return static_cast<long>(b);
}

} // namespace klab
