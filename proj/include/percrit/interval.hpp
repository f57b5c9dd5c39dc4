#pragma once

#include <percrit/rational.hpp>

#include <algorithm>
#include <stdexcept>

namespace percrit {

/// Closed interval with exact rational endpoints. All operations are exact,
/// so enclosure certificates carry no rounding slack at all.
struct Interval {
    Rational lo, hi;

    Interval() : lo(0), hi(0) {}
    explicit Interval(const Rational& point) : lo(point), hi(point) {}
    Interval(const Rational& a, const Rational& b) : lo(a), hi(b) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    // Largest absolute value attained on the interval.
    Rational mag() const { return std::max(abs_rat(lo), abs_rat(hi)); }

    bool subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }

    Interval operator*(const Interval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }

    Interval operator+(const Rational& s) const { return {lo + s, hi + s}; }
    Interval operator-(const Rational& s) const { return {lo - s, hi - s}; }
    Interval operator*(const Rational& s) const {
        return s >= 0 ? Interval{lo * s, hi * s} : Interval{hi * s, lo * s};
    }
};

}  // namespace percrit
