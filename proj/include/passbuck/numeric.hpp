// Arbitrary-precision integer/rational aliases and exact-arithmetic helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace passbuck {

/// Unbounded non-negative integer (chip counts, restoration values, periods).
using Natural = boost::multiprecision::cpp_int;

/// Unbounded rational, kept in lowest terms by the backend, so equality is
/// structural and sums of probabilities can be compared against 1 exactly.
using Rational = boost::multiprecision::cpp_rational;

/// a / b when b is known to divide a; throws if the remainder is nonzero.
inline Natural exact_div(const Natural& a, const Natural& b) {
    Natural q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) {
        throw std::logic_error("exact_div: " + b.str() + " does not divide " + a.str());
    }
    return q;
}

inline Natural lcm(const Natural& a, const Natural& b) {
    return boost::multiprecision::lcm(a, b);
}

/// Renders x with exactly `digits` digits after the decimal point, rounding
/// half to even. Formatting only; no floating point involved.
inline std::string format_decimal(const Rational& x, int digits) {
    if (digits < 0) throw std::invalid_argument("format_decimal: digits must be >= 0");
    Natural num = boost::multiprecision::numerator(x);
    const Natural& den = boost::multiprecision::denominator(x);  // canonical: den > 0
    const bool negative = num < 0;
    if (negative) num = -num;

    const Natural scale = boost::multiprecision::pow(Natural(10), static_cast<unsigned>(digits));
    const Natural shifted = num * scale;
    Natural q = shifted / den;
    const Natural twice_rem = (shifted % den) * 2;
    if (twice_rem > den || (twice_rem == den && (q & 1) != 0)) ++q;

    std::string s = Natural(q / scale).str();
    if (digits > 0) {
        std::string frac = Natural(q % scale).str();
        s += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    if (negative && q != 0) s.insert(0, "-");
    return s;
}

}  // namespace passbuck
