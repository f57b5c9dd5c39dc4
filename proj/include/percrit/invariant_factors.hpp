#pragma once

#include <percrit/int_matrix.hpp>
#include <percrit/polynomial.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace percrit {

/// Invariant factors d_1 | d_2 | ... | d_k of xI - M over Q[x], monic, with
/// constant factors omitted. Their product is the characteristic polynomial;
/// root multiplicities across the chain are the Jordan block sizes.
struct InvariantFactors {
    std::vector<Poly> factors;
};

namespace detail {

class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static PolyMatrix characteristic(const IntMatrix& m) {
        PolyMatrix a(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) {
                Poly v(Rational(-m.at(i, j)));
                if (i == j) v = v + Poly::x();
                a.at(i, j) = std::move(v);
            }
        return a;
    }

    std::size_t dim() const { return n_; }
    Poly& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < n_; ++i) std::swap(at(i, a), at(i, b));
    }
    // row[dst] -= q * row[src]
    void row_axpy(std::size_t dst, std::size_t src, const Poly& q) {
        for (std::size_t j = 0; j < n_; ++j) at(dst, j) = at(dst, j) - q * at(src, j);
    }
    void col_axpy(std::size_t dst, std::size_t src, const Poly& q) {
        for (std::size_t i = 0; i < n_; ++i) at(i, dst) = at(i, dst) - q * at(i, src);
    }
    void add_row(std::size_t dst, std::size_t src) {
        for (std::size_t j = 0; j < n_; ++j) at(dst, j) = at(dst, j) + at(src, j);
    }

private:
    std::size_t n_;
    std::vector<Poly> e_;
};

// Smith normal form of a polynomial matrix, diagonal returned in divisibility
// order. Pivots are chosen as minimal-degree nonzero entries; every entry is
// kept content-normalized to limit coefficient growth.
inline std::vector<Poly> smith_diagonal(PolyMatrix a) {
    std::size_t n = a.dim();
    std::vector<Poly> diag;
    for (std::size_t t = 0; t < n; ++t) {
        // Find minimal-degree nonzero entry in the trailing submatrix.
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Poly& e = a.at(i, j);
                if (e.is_zero()) continue;
                if (!found || e.degree() < a.at(pi, pj).degree()) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);

        for (int guard = 0;; ++guard) {
            if (guard > 10000) throw std::logic_error("smith_diagonal: no convergence");
            // Clear column t below the pivot.
            bool dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a.at(i, t).is_zero()) continue;
                Poly q = a.at(i, t).divmod(a.at(t, t)).quotient;
                a.row_axpy(i, t, q);
                if (!a.at(i, t).is_zero()) {
                    // Remainder has strictly smaller degree: make it the pivot.
                    a.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j).is_zero()) continue;
                Poly q = a.at(t, j).divmod(a.at(t, t)).quotient;
                a.col_axpy(j, t, q);
                if (!a.at(t, j).is_zero()) {
                    a.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Row and column are clear; enforce pivot | submatrix.
            bool fixed = true;
            for (std::size_t i = t + 1; i < n && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j) {
                    if (a.at(i, j).is_zero()) continue;
                    if (!a.at(i, j).divmod(a.at(t, t)).remainder.is_zero()) {
                        a.add_row(t, i);
                        fixed = false;
                    }
                }
            if (fixed) break;
        }
        Poly pivot = a.at(t, t).primitive();
        a.at(t, t) = pivot;
        diag.push_back(pivot.monic());
    }
    return diag;
}

}  // namespace detail

/// Invariant factors of xI - M (Smith normal form over Q[x]); trivial constant
/// factors omitted.
inline InvariantFactors invariant_factors(const IntMatrix& m) {
    auto diag = detail::smith_diagonal(detail::PolyMatrix::characteristic(m));
    InvariantFactors out;
    for (auto& d : diag)
        if (d.degree() > 0) out.factors.push_back(std::move(d));
    return out;
}

/// Monic polynomial whose roots (without multiplicity) are exactly the
/// eigenvalues of M carrying a Jordan block of size >= 2; the constant 1 when
/// no such eigenvalue exists. Computed as the squarefree part of the product
/// over invariant factors d of gcd(d, d').
inline Poly repeated_block_locus(const IntMatrix& m) {
    Poly product(Rational(1));
    for (const Poly& d : invariant_factors(m).factors) {
        Poly g = poly_gcd(d, d.derivative());
        if (g.degree() > 0) product = product * g;
    }
    if (product.degree() == 0) return Poly(Rational(1));
    return squarefree_part(product);
}

}  // namespace percrit
