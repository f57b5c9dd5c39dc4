#pragma once

#include <percrit/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace percrit {

/// Dense univariate polynomial over the rationals, coefficients stored lowest
/// degree first. Canonical form: no trailing zero coefficients, so the zero
/// polynomial is the empty list and degree() == -1 for it.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(std::size_t degree, const Rational& coeff = Rational(1)) {
        if (coeff == 0) return Poly();
        std::vector<Rational> c(degree + 1);
        c[degree] = coeff;
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of x^k; zero beyond the degree.
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational leading() const {
        if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly scaled(const Rational& s) const {
        if (s == 0) return Poly();
        Poly r = *this;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(Integer(i));
        return Poly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    int sign_at(const Rational& x) const { return eval(x).sign(); }

    // Sign of the value at +inf (or -inf).
    int sign_at_infinity(bool positive) const {
        if (is_zero()) return 0;
        int s = c_.back().sign();
        if (!positive && (degree() % 2 != 0)) s = -s;
        return s;
    }

    struct DivMod;
    DivMod divmod(const Poly& d) const;
    Poly exact_div(const Poly& d) const;
    bool divides(const Poly& other) const;

    Poly monic() const {
        if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
        return scaled(Rational(1) / leading());
    }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    // Positive rational c such that (*this)/c has coprime integer coefficients.
    Rational content() const {
        if (is_zero()) return Rational(1);
        Integer g = 0, l = 1;
        for (const auto& c : c_) {
            if (c == 0) continue;
            g = boost::multiprecision::gcd(g, numerator_of(c));
            l = boost::multiprecision::lcm(l, denominator_of(c));
        }
        return Rational(g, l);
    }

    // Content-free version; sign of the leading coefficient is preserved.
    Poly primitive() const {
        if (is_zero()) return Poly();
        return scaled(Rational(1) / content());
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& c = c_[i];
            if (c == 0) continue;
            if (!out.empty()) out += (c > 0) ? " + " : " - ";
            else if (c < 0) out += "-";
            Rational a = abs_rat(c);
            bool unit = (a == 1) && i > 0;
            if (!unit) out += a.str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

struct Poly::DivMod {
    Poly quotient;
    Poly remainder;
};

inline Poly::DivMod Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    Poly r = *this;
    std::vector<Rational> q;
    if (r.degree() >= d.degree()) q.assign(r.degree() - d.degree() + 1, Rational(0));
    const Rational lead = d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = r.degree() - d.degree();
        Rational f = r.leading() / lead;
        q[shift] = f;
        // r -= f * x^shift * d
        std::vector<Rational> rc(r.c_.begin(), r.c_.end());
        for (std::size_t i = 0; i < d.c_.size(); ++i) rc[shift + i] -= f * d.c_[i];
        rc.pop_back();  // leading term cancels exactly
        r = Poly(std::move(rc));
    }
    return {Poly(std::move(q)), r};
}

inline Poly Poly::exact_div(const Poly& d) const {
    DivMod dm = divmod(d);
    if (!dm.remainder.is_zero()) throw std::logic_error("Poly::exact_div: division is not exact");
    return dm.quotient;
}

inline bool Poly::divides(const Poly& other) const {
    return other.divmod(*this).remainder.is_zero();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

/// Monic greatest common divisor. Remainders are reduced to primitive form at
/// each step to keep coefficient growth in check.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: undefined gcd");
    Poly p = a.primitive(), q = b.primitive();
    while (!q.is_zero()) {
        Poly r = p.divmod(q).remainder.primitive();
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic();
}

struct SquarefreeFactor {
    Poly factor;       // monic, squarefree
    int multiplicity;  // >= 1
};

/// Yun's algorithm. Factors are pairwise coprime, monic and squarefree; the
/// product of factor^multiplicity equals the monic normalization of the input.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<SquarefreeFactor> out;
    Poly f = p.monic();
    if (f.degree() == 0) return out;
    Poly df = f.derivative();
    Poly a = poly_gcd(f, df);
    Poly b = f.exact_div(a);
    Poly c = df.exact_div(a);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly g = poly_gcd(b, d);
        if (g.degree() > 0) out.push_back({g, i});
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() == 0) return Poly(Rational(1));
    return p.exact_div(poly_gcd(p, p.derivative())).monic();
}

/// x^n * p(1/x) with n = deg p: the coefficient list reversed (and trimmed).
inline Poly reciprocal(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("reciprocal: zero polynomial");
    std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly(std::move(c));
}

namespace detail {

inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p.primitive());
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive());
    while (true) {
        const Poly& s0 = chain[chain.size() - 2];
        const Poly& s1 = chain[chain.size() - 1];
        Poly r = s0.divmod(s1).remainder;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace detail

/// Number of distinct real roots of a squarefree polynomial in the open
/// interval (lo, hi), by Sturm's theorem.
inline int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_count: requires lo < hi");
    if (p.degree() < 1) return 0;
    if (poly_gcd(p, p.derivative()).degree() > 0)
        throw std::invalid_argument("sturm_count: polynomial is not squarefree");
    if (p.eval(lo) == 0 || p.eval(hi) == 0)
        throw std::runtime_error("sturm_count: endpoint root; perturb bounds");
    auto chain = detail::sturm_chain(p);
    std::vector<int> at_lo, at_hi;
    at_lo.reserve(chain.size());
    at_hi.reserve(chain.size());
    for (const Poly& s : chain) {
        at_lo.push_back(s.sign_at(lo));
        at_hi.push_back(s.sign_at(hi));
    }
    return detail::sign_variations(at_lo) - detail::sign_variations(at_hi);
}

/// Shifts x away from a root of p by +-1/2^k, k increasing, until p is nonzero
/// there. Bounded at k == 64.
inline Rational nudge_off_root(const Poly& p, const Rational& x, int direction) {
    if (direction == 0) throw std::invalid_argument("nudge_off_root: direction must be +-1");
    Rational y = x;
    Rational step(direction, 1);
    for (int k = 1; k <= 64; ++k) {
        if (p.eval(y) != 0) return y;
        step /= 2;
        y = x + step;
    }
    throw std::runtime_error("nudge_off_root: could not leave root after 64 halvings");
}

/// All real roots of p lie strictly inside (-B, B).
inline Rational cauchy_root_bound(const Poly& p) {
    if (p.is_zero() || p.degree() < 1) return Rational(2);
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs_rat(p.coeff(i)));
    return Rational(2) + m / abs_rat(p.leading());
}

}  // namespace percrit
