#pragma once

#include <percrit/polynomial.hpp>

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace percrit {

/// Root counts, with multiplicity, relative to the complex unit circle.
struct UnitCircleCount {
    long n_in = 0;
    long n_on = 0;
    long n_out = 0;

    bool operator==(const UnitCircleCount& o) const {
        return n_in == o.n_in && n_on == o.n_on && n_out == o.n_out;
    }
    UnitCircleCount& operator+=(const UnitCircleCount& o) {
        n_in += o.n_in;
        n_on += o.n_on;
        n_out += o.n_out;
        return *this;
    }
};

inline std::ostream& operator<<(std::ostream& os, const UnitCircleCount& c) {
    return os << "(in=" << c.n_in << ", on=" << c.n_on << ", out=" << c.n_out << ")";
}

namespace detail {

// Number of roots of Q in the open right half-plane, assuming Q has no roots
// on the imaginary axis. This is the Routh-Hurwitz tabulation carried out as
// the signed Euclidean remainder chain of the real/imaginary parts of Q(iw):
// degree skips (the classical zero-leading-element rows) are absorbed by
// polynomial division, an identically vanishing odd part (the classical zero
// row) is replaced by the derivative of the auxiliary even polynomial, and a
// nonconstant terminal gcd corresponds to sign-symmetric root quadruples.
inline long routh_rhp_count(const Poly& q) {
    int n = q.degree();
    if (n <= 0) return 0;

    std::vector<Rational> uc, vc;
    uc.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    vc.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
        Rational a = q.coeff(static_cast<std::size_t>(k));
        switch (k % 4) {
            case 0: uc[k] = a; break;
            case 1: vc[k] = a; break;
            case 2: uc[k] = -a; break;
            case 3: vc[k] = -a; break;
        }
    }
    Poly u{std::vector<Rational>(uc)}, v{std::vector<Rational>(vc)};

    bool even = (n % 2 == 0);
    Poly s0 = even ? u : v;
    Poly s1 = even ? v : u;
    if (s0.degree() != n) throw std::logic_error("routh_rhp_count: lost leading term");
    if (s1.is_zero()) {
        if (!even) throw std::runtime_error("circle root leaked");
        // Q is even in w, so any real root of its transform is an
        // imaginary-axis root of Q, i.e. a leaked unit-circle root.
        Poly sf = squarefree_part(s0);
        Rational bound = cauchy_root_bound(sf);
        if (sf.degree() > 0 && sturm_count(sf, -bound, bound) > 0)
            throw std::runtime_error("circle root leaked");
        s1 = s0.derivative();
    }

    std::vector<Poly> chain;
    chain.push_back(s0.primitive());
    chain.push_back(s1.primitive());
    while (true) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain[chain.size() - 1];
        Poly r = a.divmod(b).remainder;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    const Poly& last = chain.back();
    if (last.degree() > 0) {
        // Common factor of the two parts. Real roots would be imaginary-axis
        // roots of Q; complex ones come in mirror pairs and are counted by
        // the index formula unchanged.
        Poly g = squarefree_part(last);
        Rational bound = cauchy_root_bound(g);
        if (sturm_count(g, -bound, bound) > 0) throw std::runtime_error("circle root leaked");
    }

    std::vector<int> at_minus, at_plus;
    for (const Poly& s : chain) {
        at_minus.push_back(s.sign_at_infinity(false));
        at_plus.push_back(s.sign_at_infinity(true));
    }
    long index = detail::sign_variations(at_minus) - detail::sign_variations(at_plus);
    long twice_rho = even ? n + index : n - index;
    if (twice_rho % 2 != 0 || twice_rho < 0 || twice_rho > 2 * n)
        throw std::logic_error("routh_rhp_count: inconsistent Cauchy index");
    return twice_rho / 2;
}

}  // namespace detail

/// Splits a squarefree polynomial into s = gcd(f, reciprocal(f)) (monic; holds
/// every unit-circle root and every reciprocal root pair) and the cofactor
/// q = f/s. A root at zero is stripped first.
inline std::pair<Poly, Poly> self_inversive_split(const Poly& f_in) {
    if (f_in.is_zero()) throw std::invalid_argument("self_inversive_split: zero polynomial");
    Poly f = f_in;
    if (f.degree() >= 1 && f.coeff(0) == 0) f = f.exact_div(Poly::x());
    if (f.degree() == 0) return {Poly(Rational(1)), Poly(Rational(1))};
    Poly rec = reciprocal(f);
    Poly s = poly_gcd(f, rec);
    Poly q = f.monic().exact_div(s);
    return {s, q};
}

/// Exact number of unit-circle roots of a squarefree self-inversive
/// polynomial. Real circle roots (+-1) are stripped; the remaining palindromic
/// part h of degree 2m satisfies h(x) = x^m u(x + 1/x), and each root of u in
/// (-2, 2) lifts to a conjugate pair on the circle.
inline long on_circle_count(const Poly& s_in) {
    if (s_in.is_zero()) throw std::invalid_argument("on_circle_count: zero polynomial");
    if (s_in.degree() == 0) return 0;
    Poly s = s_in.monic();
    if (s.coeff(0) == 0 || reciprocal(s).monic() != s)
        throw std::invalid_argument("on_circle_count: not self-inversive");
    if (poly_gcd(s, s.derivative()).degree() > 0)
        throw std::invalid_argument("on_circle_count: input must be squarefree");

    long strips = 0;
    const Rational one(1);
    for (const Rational root : {Rational(1), Rational(-1)}) {
        if (s.eval(root) == 0) {
            s = s.exact_div(Poly(std::vector<Rational>{-root, one}));
            ++strips;
        }
    }
    if (s.degree() == 0) return strips;
    if (s.degree() % 2 != 0 || reciprocal(s) != s)
        throw std::logic_error("on_circle_count: expected an even palindromic part");

    std::size_t m = static_cast<std::size_t>(s.degree()) / 2;
    // u(y) = c_m + sum_k c_{m+k} * T~_k(y), T~_0 = 2, T~_1 = y,
    // T~_k = y T~_{k-1} - T~_{k-2}  (so T~_k(x + 1/x) = x^k + x^-k).
    Poly u(s.coeff(m));
    Poly t_prev(Rational(2)), t_cur = Poly::x();
    for (std::size_t k = 1; k <= m; ++k) {
        u = u + t_cur.scaled(s.coeff(m + k));
        Poly t_next = Poly::x() * t_cur - t_prev;
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    u = squarefree_part(u);
    return strips + 2 * sturm_count(u, Rational(-2), Rational(2));
}

/// Exact number of roots of modulus < 1, for a squarefree polynomial with no
/// roots on the unit circle. The Cayley transform z = (1+w)/(1-w) maps the
/// open disk to the open left half-plane; the half-plane count is exact
/// Routh-Hurwitz over the rationals.
inline long inside_disk_count(const Poly& q_in) {
    if (q_in.is_zero()) throw std::invalid_argument("inside_disk_count: zero polynomial");
    Poly q = q_in;
    long zeros_at_origin = 0;
    while (q.degree() >= 1 && q.coeff(0) == 0) {
        q = q.exact_div(Poly::x());
        ++zeros_at_origin;
    }
    int n = q.degree();
    if (n <= 0) return zeros_at_origin;
    q = q.primitive();

    const Poly one_plus{std::vector<Rational>{Rational(1), Rational(1)}};
    const Poly one_minus{std::vector<Rational>{Rational(1), Rational(-1)}};
    std::vector<Poly> p_pow{Poly(Rational(1))}, m_pow{Poly(Rational(1))};
    for (int k = 1; k <= n; ++k) {
        p_pow.push_back(p_pow.back() * one_plus);
        m_pow.push_back(m_pow.back() * one_minus);
    }
    Poly cayley;
    for (int k = 0; k <= n; ++k)
        cayley = cayley + (p_pow[k] * m_pow[n - k]).scaled(q.coeff(static_cast<std::size_t>(k)));
    if (cayley.degree() != n) throw std::runtime_error("circle root leaked");

    long rhp = detail::routh_rhp_count(cayley);
    return zeros_at_origin + (n - rhp);
}

/// Exact root counts of p relative to the unit circle, with multiplicity.
inline UnitCircleCount unit_circle_counts(const Poly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("unit_circle_counts: needs degree >= 1");
    UnitCircleCount total;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        Poly f = factor;
        UnitCircleCount part;
        if (f.degree() >= 1 && f.coeff(0) == 0) {
            f = f.exact_div(Poly::x());
            part.n_in += 1;
        }
        if (f.degree() > 0) {
            auto [s, q] = self_inversive_split(f);
            long on_s = (s.degree() > 0) ? on_circle_count(s) : 0;
            long off_s = s.degree() - on_s;
            if (off_s % 2 != 0)
                throw std::logic_error("unit_circle_counts: unpaired off-circle root in s");
            long in_q = (q.degree() > 0) ? inside_disk_count(q) : 0;
            part.n_in += off_s / 2 + in_q;
            part.n_on += on_s;
            part.n_out += off_s / 2 + (q.degree() - in_q);
        }
        total.n_in += multiplicity * part.n_in;
        total.n_on += multiplicity * part.n_on;
        total.n_out += multiplicity * part.n_out;
    }
    if (total.n_in + total.n_on + total.n_out != p.degree())
        throw std::logic_error("unit_circle_counts: count conservation violated");
    return total;
}

}  // namespace percrit
