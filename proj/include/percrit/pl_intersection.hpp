#pragma once

#include <percrit/rational.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace percrit {

struct TorusPoint {
    Rational x, y;
    bool operator==(const TorusPoint& o) const { return x == o.x && y == o.y; }
};

/// Closed piecewise-linear loop on the flat torus. Vertices live in the
/// fundamental square [0,1)^2; each edge lifts by its shortest displacement,
/// with components reduced into (-1/2, 1/2] (the +1/2 boundary is allowed so
/// that a two-vertex loop can traverse a full meridian).
class PLLoop {
public:
    explicit PLLoop(std::vector<TorusPoint> vertices) : v_(std::move(vertices)) {
        if (v_.size() < 2) throw std::invalid_argument("PLLoop: needs at least 2 vertices");
        if (v_.size() == 2 && v_[0] == v_[1])
            throw std::invalid_argument("PLLoop: two-vertex loop needs distinct points");
        for (const auto& p : v_)
            if (p.x < 0 || p.x >= 1 || p.y < 0 || p.y >= 1)
                throw std::invalid_argument("PLLoop: vertices must lie in [0,1)^2");
        for (std::size_t i = 0; i < v_.size(); ++i) {
            auto [dx, dy] = displacement(i);
            if (dx == 0 && dy == 0) throw std::invalid_argument("PLLoop: zero-length edge");
        }
    }

    std::size_t size() const { return v_.size(); }
    const std::vector<TorusPoint>& vertices() const { return v_; }
    const TorusPoint& vertex(std::size_t i) const { return v_[i % v_.size()]; }

    // Shortest-representative displacement of edge i (to vertex i+1, wrapping).
    std::pair<Rational, Rational> displacement(std::size_t i) const {
        auto reduce = [](Rational d) {
            d = frac_mod1(d);
            if (d > Rational(1, 2)) d -= 1;
            return d;  // in (-1/2, 1/2]
        };
        const TorusPoint& a = vertex(i);
        const TorusPoint& b = vertex(i + 1);
        return {reduce(b.x - a.x), reduce(b.y - a.y)};
    }

    PLLoop translated(const Rational& dx, const Rational& dy) const {
        std::vector<TorusPoint> w = v_;
        for (auto& p : w) {
            p.x = frac_mod1(p.x + dx);
            p.y = frac_mod1(p.y + dy);
        }
        return PLLoop(std::move(w));
    }

private:
    std::vector<TorusPoint> v_;
};

/// The standard basis loops: a horizontal loop through y = 1/3 and a vertical
/// loop through x = 1/3 (offsets chosen off 0 to avoid vertex coincidences).
inline std::pair<PLLoop, PLLoop> basis_loops() {
    PLLoop a({{Rational(0), Rational(1, 3)}, {Rational(1, 2), Rational(1, 3)}});
    PLLoop b({{Rational(1, 3), Rational(0)}, {Rational(1, 3), Rational(1, 2)}});
    return {a, b};
}

/// Straight loop of homology class (m, n), subdivided so each edge has
/// displacement components strictly inside (-1/2, 1/2).
inline PLLoop winding_loop(long m, long n, const Rational& x0, const Rational& y0) {
    if (m == 0 && n == 0) throw std::invalid_argument("winding_loop: (0,0) is not a loop");
    long steps = 2 * std::max(std::abs(m), std::abs(n)) + 1;
    std::vector<TorusPoint> v;
    for (long k = 0; k < steps; ++k) {
        Rational t(k, steps);
        v.push_back({frac_mod1(x0 + t * m), frac_mod1(y0 + t * n)});
    }
    return PLLoop(std::move(v));
}

/// Signed intersection number of two PL torus loops in general position:
/// sum over transversal crossings of the sign of det(edge of sigma, edge of
/// tau). Degenerate configurations (shared vertices, a vertex on an edge,
/// collinear overlap) raise an error; input is never silently perturbed.
inline long signed_intersection_number(const PLLoop& sigma, const PLLoop& tau) {
    struct LiftedEdge {
        Rational px, py, dx, dy;        // start point and displacement
        Rational x_lo, x_hi, y_lo, y_hi;  // bounding box of the lift
    };
    auto lift = [](const PLLoop& loop) {
        std::vector<LiftedEdge> edges;
        for (std::size_t i = 0; i < loop.size(); ++i) {
            const TorusPoint v = loop.vertex(i);
            auto [dx, dy] = loop.displacement(i);
            LiftedEdge e{v.x, v.y, dx, dy, v.x, v.x, v.y, v.y};
            if (dx < 0) e.x_lo += dx; else e.x_hi += dx;
            if (dy < 0) e.y_lo += dy; else e.y_hi += dy;
            edges.push_back(std::move(e));
        }
        return edges;
    };
    auto translate_range = [](const Rational& p_lo, const Rational& p_hi, const Rational& q_lo,
                              const Rational& q_hi, long& from, long& to) {
        // Integer m with [q_lo + m, q_hi + m] meeting [p_lo, p_hi].
        Rational lo = p_lo - q_hi, hi = p_hi - q_lo;
        from = (-floor_rat(-lo)).convert_to<long>();  // ceil
        to = floor_rat(hi).convert_to<long>();
    };

    const std::vector<LiftedEdge> sigma_edges = lift(sigma);
    const std::vector<LiftedEdge> tau_edges = lift(tau);
    long total = 0;
    for (const LiftedEdge& e : sigma_edges) {
        const Rational &ex = e.dx, &ey = e.dy;
        const TorusPoint p0{e.px, e.py};
        for (const LiftedEdge& f : tau_edges) {
            const Rational &fx = f.dx, &fy = f.dy;
            const TorusPoint q0{f.px, f.py};
            long mx_from, mx_to, my_from, my_to;
            translate_range(e.x_lo, e.x_hi, f.x_lo, f.x_hi, mx_from, mx_to);
            translate_range(e.y_lo, e.y_hi, f.y_lo, f.y_hi, my_from, my_to);
            for (long mx = mx_from; mx <= mx_to; ++mx) {
                for (long my = my_from; my <= my_to; ++my) {
                    Rational qx = q0.x + mx, qy = q0.y + my;
                    Rational rx = qx - p0.x, ry = qy - p0.y;
                    Rational cross = ex * fy - ey * fx;
                    Rational r_cross_f = rx * fy - ry * fx;
                    Rational r_cross_e = rx * ey - ry * ex;
                    if (cross == 0) {
                        if (r_cross_e != 0) continue;  // parallel, disjoint lines
                        // Collinear: any closed overlap is degenerate.
                        Rational t0, t1;
                        if (ex != 0) {
                            t0 = rx / ex;
                            t1 = (rx + fx) / ex;
                        } else {
                            t0 = ry / ey;
                            t1 = (ry + fy) / ey;
                        }
                        if (t0 > t1) std::swap(t0, t1);
                        if (t1 >= 0 && t0 <= 1)
                            throw std::runtime_error(
                                "degenerate configuration; perturb input");
                        continue;
                    }
                    Rational s = r_cross_f / cross;  // position along sigma's edge
                    Rational t = r_cross_e / cross;  // position along tau's edge
                    if (s < 0 || s > 1 || t < 0 || t > 1) continue;
                    bool s_interior = s > 0 && s < 1;
                    bool t_interior = t > 0 && t < 1;
                    if (s_interior && t_interior) {
                        total += cross > 0 ? 1 : -1;
                    } else {
                        // Endpoint contact: shared vertex or vertex-on-edge.
                        throw std::runtime_error("degenerate configuration; perturb input");
                    }
                }
            }
        }
    }
    return total;
}

}  // namespace percrit
