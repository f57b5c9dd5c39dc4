#pragma once

#include <percrit/polynomial.hpp>
#include <percrit/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace percrit {

/// Square matrix with arbitrary-precision integer entries, row major.
/// General square matrices are supported; the homology-specific requirement
/// (even dimension >= 2, i.e. a first-homology representative M_{2g}) is
/// enforced at the entry points that carry that meaning.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), e_(n * n) {}
    IntMatrix(std::size_t n, std::vector<Integer> entries) : n_(n), e_(std::move(entries)) {
        if (e_.size() != n_ * n_) throw std::invalid_argument("IntMatrix: entry count mismatch");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix companion(const Poly& monic) {
        if (monic.is_zero() || !monic.is_monic() || monic.degree() < 1)
            throw std::invalid_argument("IntMatrix::companion: needs a monic polynomial of degree >= 1");
        std::size_t n = static_cast<std::size_t>(monic.degree());
        IntMatrix m(n);
        for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = monic.coeff(j);
            if (denominator_of(c) != 1)
                throw std::invalid_argument("IntMatrix::companion: non-integer coefficient");
            m.at(n - 1, j) = -numerator_of(c);
        }
        return m;
    }

    std::size_t dim() const { return n_; }

    Integer& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_homology_dim() const { return n_ >= 2 && n_ % 2 == 0; }

    IntMatrix operator*(const IntMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
        IntMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const Integer& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
        IntMatrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
        IntMatrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    Integer trace() const {
        Integer t = 0;
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    std::string to_text() const {
        std::string s;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) s += ";";
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) s += ",";
                s += at(i, j).str();
            }
        }
        return s;
    }

private:
    std::size_t n_ = 0;
    std::vector<Integer> e_;
};

/// Exact M^n by binary exponentiation; M^0 is the identity.
inline IntMatrix matrix_power(const IntMatrix& m, unsigned long n) {
    IntMatrix result = IntMatrix::identity(m.dim());
    IntMatrix base = m;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

/// Exact determinant via Bareiss fraction-free elimination.
inline Integer determinant(const IntMatrix& m) {
    std::size_t n = m.dim();
    if (n == 0) return 1;
    IntMatrix b = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && b.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
        prev = b.at(k, k);
    }
    Integer det = b.at(n - 1, n - 1);
    return sign > 0 ? det : -det;
}

/// Characteristic polynomial det(xI - M), monic with integer coefficients,
/// via the Berkowitz division-free algorithm.
inline Poly char_poly(const IntMatrix& m) {
    std::size_t n = m.dim();
    if (n == 0) return Poly(Rational(1));
    // Coefficient vector of the leading principal submatrix's characteristic
    // polynomial, highest degree first.
    std::vector<Integer> p = {Integer(1), -m.at(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // Submatrix A_r = m[0..r) x [0..r), row R = m[r][0..r), col C = m[0..r)[r].
        std::vector<Integer> t(r + 2);
        t[0] = 1;
        t[1] = -m.at(r, r);
        std::vector<Integer> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = m.at(i, r);
        for (std::size_t k = 2; k <= r + 1; ++k) {
            Integer dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += m.at(r, i) * v[i];
            t[k] = -dot;
            if (k == r + 1) break;
            std::vector<Integer> w(r);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j) w[i] += m.at(i, j) * v[j];
            }
            v = std::move(w);
        }
        // q = lower-triangular Toeplitz(t) * p, truncated to length r+2.
        std::vector<Integer> q(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (i >= j && i - j < t.size()) acc += t[i - j] * p[j];
            }
            q[i] = acc;
        }
        p = std::move(q);
    }
    std::vector<Rational> coeffs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) coeffs[p.size() - 1 - i] = Rational(p[i]);
    return Poly(std::move(coeffs));
}

/// Parses the matrix text format: rows separated by ';', entries by ','.
inline IntMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> row;
    std::string cur;
    auto flush_entry = [&]() {
        std::string t;
        for (char c : cur)
            if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
        if (t.empty()) throw std::invalid_argument("matrix text: empty entry");
        row.push_back(Integer(t));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush_entry();
        } else if (c == ';') {
            flush_entry();
            rows.push_back(std::move(row));
            row.clear();
        } else {
            cur.push_back(c);
        }
    }
    flush_entry();
    rows.push_back(std::move(row));
    std::size_t n = rows.size();
    std::vector<Integer> entries;
    entries.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("matrix text: not square");
        for (const auto& e : r) entries.push_back(e);
    }
    return IntMatrix(n, std::move(entries));
}

}  // namespace percrit
