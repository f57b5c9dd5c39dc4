#pragma once

#include <percrit/int_matrix.hpp>
#include <percrit/rational.hpp>

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace percrit {

/// Fixed-point count of one iterate of a linear toral endomorphism. A
/// degenerate level means det(A^n - I) == 0: the fixed set is a
/// positive-dimensional subgroup, not a finite set.
struct FixedPointCount {
    bool degenerate = false;
    Integer count = 0;  // |det(A^n - I)| when non-degenerate
};

inline void require_torus_matrix(const IntMatrix& a) {
    if (a.dim() != 2)
        throw std::invalid_argument("toral oracle: matrix must be 2x2 (genus 1)");
}

/// Number of solutions of A^n x == x on the 2-torus: |det(A^n - I)|, or the
/// degenerate marker when the determinant vanishes.
inline FixedPointCount fixed_point_count(const IntMatrix& a, unsigned long n) {
    require_torus_matrix(a);
    if (n == 0) throw std::invalid_argument("fixed_point_count: n must be positive");
    IntMatrix p = matrix_power(a, n) - IntMatrix::identity(2);
    Integer d = determinant(p);
    if (d == 0) return {true, 0};
    return {false, abs_int(d)};
}

namespace detail {

// Moebius function by trial division; desk scale.
inline int moebius(unsigned long n) {
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace detail

/// Number of points of exact (minimal) period n, by Moebius inversion over
/// the fixed-point counts of the divisor levels.
inline Integer exact_period_count(const IntMatrix& a, unsigned long n) {
    require_torus_matrix(a);
    if (n == 0) throw std::invalid_argument("exact_period_count: n must be positive");
    Integer total = 0;
    for (unsigned long d : detail::divisors(n)) {
        FixedPointCount f = fixed_point_count(a, d);
        if (f.degenerate)
            throw std::runtime_error("exact_period_count: degenerate level " + std::to_string(d));
        total += Integer(detail::moebius(n / d)) * f.count;
    }
    if (total < 0) throw std::logic_error("exact_period_count: negative count");
    return total;
}

/// Periodic-point census of x -> Ax mod 1 for periods 1..max_period.
/// Degeneracy is in-band: levels with det(A^n - I) == 0 are recorded, and
/// exact-period counts are left unset for every level with a degenerate
/// divisor.
struct ToralPeriodReport {
    IntMatrix matrix;
    unsigned long max_period = 0;
    std::vector<std::optional<Integer>> fix_counts;           // index n-1; nullopt = degenerate
    std::vector<std::optional<Integer>> exact_period_counts;  // index n-1; nullopt = not computable
    std::set<unsigned long> realized_periods;
    std::set<unsigned long> degenerate_levels;
};

inline ToralPeriodReport periods_up_to(const IntMatrix& a, unsigned long max_period) {
    require_torus_matrix(a);
    if (max_period == 0) throw std::invalid_argument("periods_up_to: max_period must be positive");
    ToralPeriodReport r;
    r.matrix = a;
    r.max_period = max_period;
    r.fix_counts.resize(max_period);
    r.exact_period_counts.resize(max_period);
    for (unsigned long n = 1; n <= max_period; ++n) {
        FixedPointCount f = fixed_point_count(a, n);
        if (f.degenerate)
            r.degenerate_levels.insert(n);
        else
            r.fix_counts[n - 1] = f.count;
    }
    for (unsigned long n = 1; n <= max_period; ++n) {
        bool computable = true;
        Integer total = 0;
        for (unsigned long d : detail::divisors(n)) {
            if (!r.fix_counts[d - 1]) {
                computable = false;
                break;
            }
            total += Integer(detail::moebius(n / d)) * *r.fix_counts[d - 1];
        }
        if (!computable) continue;
        r.exact_period_counts[n - 1] = total;
        if (total > 0) r.realized_periods.insert(n);
    }
    return r;
}

}  // namespace percrit
