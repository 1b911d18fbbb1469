#pragma once

// Exact integer / rational arithmetic used throughout the library.
// Every probability and bound is kept exact; decimal strings are for
// reporting only and never feed back into comparisons.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kneser_dist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at each step
    }
    return r;
}

// n (n-1) ... (n-k+1)
inline BigInt falling_factorial(int n, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline BigInt pow2(std::int64_t e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << static_cast<unsigned>(e);
}

inline BigInt ipow(BigInt base, unsigned e) {
    BigInt r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    return Rational(std::move(num), std::move(den));
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// |a - b| <= tol, all exact.
inline bool within(const Rational& a, const Rational& b, const Rational& tol) {
    return rational_abs(a - b) <= tol;
}

// Renders q to `sig` significant decimal digits, round half up.  Exact digit
// extraction: no floating point involved.
inline std::string decimal_string(const Rational& q, int sig = 10) {
    if (sig < 1) throw std::invalid_argument("decimal_string: sig < 1");
    if (q == 0) return "0";
    const bool neg = q < 0;
    BigInt num = neg ? BigInt(-numerator(q)) : BigInt(numerator(q));
    BigInt den = denominator(q);

    // Number of digits of the integer part (0 if value < 1).
    int int_digits = 0;
    {
        BigInt ip = num / den;
        while (ip > 0) { ip /= 10; ++int_digits; }
    }
    int frac_digits;  // digits to keep after the decimal point
    if (int_digits >= 1) {
        frac_digits = sig - int_digits;
        if (frac_digits < 0) frac_digits = 0;  // rounding handled on the scaled value below
    } else {
        // Leading zeros after the point: find the first significant position.
        int lead = 0;
        BigInt scaled = num * 10;
        while (scaled < den) { scaled *= 10; ++lead; }
        frac_digits = lead + sig;
    }

    BigInt scale = ipow(BigInt(10), static_cast<unsigned>(frac_digits));
    // round(num * scale / den), half away from zero
    BigInt scaled = (num * scale * 2 + den) / (den * 2);

    std::string digits = scaled.str();
    std::string out;
    if (static_cast<int>(digits.size()) <= frac_digits) {
        out = "0.";
        out.append(frac_digits - digits.size(), '0');
        out += digits;
    } else if (frac_digits == 0) {
        out = digits;
    } else {
        out = digits.substr(0, digits.size() - frac_digits) + "." +
              digits.substr(digits.size() - frac_digits);
    }
    return neg ? "-" + out : out;
}

inline std::string fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace kneser_dist
