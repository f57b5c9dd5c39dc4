#pragma once

#include <percrit/interval.hpp>
#include <percrit/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace percrit {

/// Dense bivariate polynomial with rational coefficients; c[i][j] multiplies
/// x^i y^j. Evaluation is Horner in y per row, then Horner in x, both for
/// exact points and for rational intervals.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<std::vector<Rational>> grid) : c_(std::move(grid)) { trim(); }

    static BiPoly constant(const Rational& v) { return BiPoly({{v}}); }
    static BiPoly x() { return BiPoly({{Rational(0)}, {Rational(1)}}); }
    static BiPoly y() { return BiPoly({{Rational(0), Rational(1)}}); }

    bool is_zero() const { return c_.empty(); }
    const std::vector<std::vector<Rational>>& grid() const { return c_; }

    int x_degree() const { return static_cast<int>(c_.size()) - 1; }
    int y_degree() const {
        int d = -1;
        for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < c_[i].size(); ++j)
                if (c_[i][j] != 0) d = std::max(d, static_cast<int>(i + j));
        return d;
    }

    bool operator==(const BiPoly& o) const { return c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& row : r.c_)
            for (auto& v : row) v = -v;
        return r;
    }

    BiPoly operator+(const BiPoly& o) const {
        std::vector<std::vector<Rational>> g(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::size_t w = 0;
            if (i < c_.size()) w = std::max(w, c_[i].size());
            if (i < o.c_.size()) w = std::max(w, o.c_[i].size());
            g[i].assign(w, Rational(0));
            for (std::size_t j = 0; j < w; ++j) {
                if (i < c_.size() && j < c_[i].size()) g[i][j] += c_[i][j];
                if (i < o.c_.size() && j < o.c_[i].size()) g[i][j] += o.c_[i][j];
            }
        }
        return BiPoly(std::move(g));
    }
    BiPoly operator-(const BiPoly& o) const { return *this + (-o); }

    BiPoly operator*(const BiPoly& o) const {
        if (is_zero() || o.is_zero()) return BiPoly();
        std::vector<std::vector<Rational>> g(c_.size() + o.c_.size() - 1);
        std::size_t w = 0;
        for (const auto& row : c_) w = std::max(w, row.size());
        std::size_t w2 = 0;
        for (const auto& row : o.c_) w2 = std::max(w2, row.size());
        for (auto& row : g) row.assign(w + w2 - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < c_[i].size(); ++j) {
                if (c_[i][j] == 0) continue;
                for (std::size_t k = 0; k < o.c_.size(); ++k)
                    for (std::size_t l = 0; l < o.c_[k].size(); ++l)
                        g[i + k][j + l] += c_[i][j] * o.c_[k][l];
            }
        return BiPoly(std::move(g));
    }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) {
            Rational row = 0;
            for (std::size_t j = c_[i].size(); j-- > 0;) row = row * y + c_[i][j];
            acc = acc * x + row;
        }
        return acc;
    }

    Interval eval(const Interval& x, const Interval& y) const {
        Interval acc;
        for (std::size_t i = c_.size(); i-- > 0;) {
            Interval row;
            for (std::size_t j = c_[i].size(); j-- > 0;) row = row * y + Interval(c_[i][j]);
            acc = acc * x + row;
        }
        return acc;
    }

    BiPoly derivative_x() const {
        if (c_.size() <= 1) return BiPoly();
        std::vector<std::vector<Rational>> g(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            g[i - 1] = c_[i];
            for (auto& v : g[i - 1]) v *= Rational(Integer(i));
        }
        return BiPoly(std::move(g));
    }

    BiPoly derivative_y() const {
        std::vector<std::vector<Rational>> g(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].size() <= 1) continue;
            g[i].resize(c_[i].size() - 1);
            for (std::size_t j = 1; j < c_[i].size(); ++j)
                g[i][j - 1] = c_[i][j] * Rational(Integer(j));
        }
        return BiPoly(std::move(g));
    }

private:
    void trim() {
        for (auto& row : c_)
            while (!row.empty() && row.back() == 0) row.pop_back();
        while (!c_.empty() && c_.back().empty()) c_.pop_back();
    }

    std::vector<std::vector<Rational>> c_;
};

/// A polynomial self-map candidate of the unit square: (x, y) -> (p1, p2).
struct PolynomialMap2D {
    BiPoly p1, p2;

    const BiPoly& component(int axis) const {
        if (axis == 1) return p1;
        if (axis == 2) return p2;
        throw std::invalid_argument("PolynomialMap2D: axis must be 1 or 2");
    }

    // p_axis - id_axis, the displacement whose zero set is the fixed-point curve.
    BiPoly displacement(int axis) const {
        return component(axis) - (axis == 1 ? BiPoly::x() : BiPoly::y());
    }
};

}  // namespace percrit
