#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace percrit {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer abs_int(const Integer& n) { return boost::multiprecision::abs(n); }
inline Rational abs_rat(const Rational& q) { return boost::multiprecision::abs(q); }

// Floor division with sign convention matching mathematical floor.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer floor_rat(const Rational& q) {
    return floor_div(numerator_of(q), denominator_of(q));
}

// q reduced into [0, 1).
inline Rational frac_mod1(const Rational& q) { return q - Rational(floor_rat(q)); }

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return Rational(1) / rat_pow(base, -e);
    }
    Rational r = 1, b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// Accepts "a/b", plain integers, and decimal notation ("0.6", "-1e-9", "2.5e3").
inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer n(s.substr(0, slash));
        Integer d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(n, d);
    }

    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    std::string digits;
    long frac_digits = 0, exponent = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.') {
            if (seen_dot) throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            exponent = std::stol(s.substr(i + 1));
            break;
        } else {
            throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
    Integer n(digits);
    if (neg) n = -n;
    long p = exponent - frac_digits;
    Rational r(n);
    if (p > 0) r *= Rational(int_pow(10, static_cast<unsigned long>(p)));
    if (p < 0) r /= Rational(int_pow(10, static_cast<unsigned long>(-p)));
    return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& n) { return n.str(); }

inline bool is_dyadic(const Rational& q) {
    Integer d = denominator_of(q);
    return d > 0 && (d & (d - 1)) == 0;
}

// Exact string form "k/2^m" for dyadic rationals.
inline std::string format_dyadic(const Rational& q) {
    if (!is_dyadic(q)) throw std::invalid_argument("format_dyadic: not dyadic: " + q.str());
    Integer d = denominator_of(q);
    unsigned m = boost::multiprecision::lsb(d);  // d == 2^m
    return numerator_of(q).str() + "/2^" + std::to_string(m);
}

}  // namespace percrit
