#pragma once

#include <percrit/bipoly.hpp>
#include <percrit/interval.hpp>
#include <percrit/polynomial.hpp>
#include <percrit/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace percrit {

enum class BoxStatus { MayContainZero, ExcludedZero };

/// Axis-aligned rectangle with dyadic endpoints inside Q = [0,1]^2.
/// ExcludedZero is backed by an exact interval evaluation whose range misses 0.
struct CertifiedBox {
    Rational x_lo, x_hi, y_lo, y_hi;
    BoxStatus status = BoxStatus::MayContainZero;
    int depth = 0;

    Interval xi() const { return {x_lo, x_hi}; }
    Interval yi() const { return {y_lo, y_hi}; }
    Rational side() const { return x_hi - x_lo; }
};

/// Adaptive quadtree cover of one displacement zero set on Q. The union of
/// MayContainZero boxes covers the true zero set; an identically vanishing
/// displacement (identity-like map) is a distinguished degenerate result.
struct ZeroCover {
    int axis = 1;
    int max_depth = 0;
    bool degenerate_identity = false;
    std::vector<CertifiedBox> boxes;  // leaves: excluded at any depth, undecided at max_depth
};

namespace detail {

// Certified containment f(x-box, y-box) within target, with adaptive
// subdivision to shed the overestimation of a single whole-box enclosure.
inline bool range_within(const BiPoly& f, const Interval& x, const Interval& y,
                         const Interval& target, int depth) {
    Interval v = f.eval(x, y);
    if (v.subset_of(target)) return true;
    Rational cx = x.mid(), cy = y.mid();
    if (!target.contains(f.eval(cx, cy))) return false;  // witnessed violation
    if (depth == 0) return false;
    Interval xl(x.lo, cx), xr(cx, x.hi), yl(y.lo, cy), yh(cy, y.hi);
    return range_within(f, xl, yl, target, depth - 1) &&
           range_within(f, xr, yl, target, depth - 1) &&
           range_within(f, xl, yh, target, depth - 1) &&
           range_within(f, xr, yh, target, depth - 1);
}

inline void subdivide_zero_set(const BiPoly& disp, const CertifiedBox& box, int max_depth,
                               std::vector<CertifiedBox>& out) {
    Interval v = disp.eval(box.xi(), box.yi());
    if (!v.contains_zero()) {
        CertifiedBox b = box;
        b.status = BoxStatus::ExcludedZero;
        out.push_back(b);
        return;
    }
    if (box.depth == max_depth) {
        CertifiedBox b = box;
        b.status = BoxStatus::MayContainZero;
        out.push_back(b);
        return;
    }
    Rational xm = (box.x_lo + box.x_hi) / 2;
    Rational ym = (box.y_lo + box.y_hi) / 2;
    const Rational xs[3] = {box.x_lo, xm, box.x_hi};
    const Rational ys[3] = {box.y_lo, ym, box.y_hi};
    for (int cy = 0; cy < 2; ++cy)
        for (int cx = 0; cx < 2; ++cx) {
            CertifiedBox child{xs[cx], xs[cx + 1], ys[cy], ys[cy + 1],
                               BoxStatus::MayContainZero, box.depth + 1};
            subdivide_zero_set(disp, child, max_depth, out);
        }
}

}  // namespace detail

inline ZeroCover displacement_zero_boxes(const PolynomialMap2D& map, int axis,
                                         int max_depth = 12) {
    if (max_depth < 0 || max_depth > 48)
        throw std::invalid_argument("displacement_zero_boxes: max_depth must be in [0, 48]");
    ZeroCover cover;
    cover.axis = axis;
    cover.max_depth = max_depth;
    BiPoly disp = map.displacement(axis);
    CertifiedBox root{Rational(0), Rational(1), Rational(0), Rational(1),
                      BoxStatus::MayContainZero, 0};
    if (disp.is_zero()) {
        cover.degenerate_identity = true;
        cover.boxes.push_back(root);
        return cover;
    }
    detail::subdivide_zero_set(disp, root, max_depth, cover.boxes);
    return cover;
}

/// Connected component of the MayContainZero boxes (adjacency: shared boundary
/// segment of positive length) with face-contact flags for the four sides of Q.
struct CurveComponent {
    std::vector<std::size_t> box_indices;
    bool touches_left = false, touches_right = false;
    bool touches_bottom = false, touches_top = false;
};

inline std::vector<CurveComponent> curve_components(const ZeroCover& cover) {
    std::vector<std::size_t> may;
    for (std::size_t i = 0; i < cover.boxes.size(); ++i)
        if (cover.boxes[i].status == BoxStatus::MayContainZero) may.push_back(i);
    if (may.empty()) return {};

    // Undecided leaves all live at max_depth (the degenerate whole-square
    // cover is the one exception and forms a single component).
    std::map<std::pair<Integer, Integer>, std::size_t> grid;  // cell -> index into `may`
    std::vector<std::pair<Integer, Integer>> cells(may.size());
    Integer scale = int_pow(2, static_cast<unsigned long>(cover.max_depth));
    for (std::size_t k = 0; k < may.size(); ++k) {
        const CertifiedBox& b = cover.boxes[may[k]];
        Integer ix = floor_rat(b.x_lo * Rational(scale));
        Integer iy = floor_rat(b.y_lo * Rational(scale));
        cells[k] = {ix, iy};
        grid[cells[k]] = k;
    }

    std::vector<std::size_t> parent(may.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    for (std::size_t k = 0; k < may.size(); ++k) {
        const auto& [ix, iy] = cells[k];
        const std::pair<Integer, Integer> nbrs[2] = {{ix + 1, iy}, {ix, iy + 1}};
        for (const auto& nb : nbrs) {
            auto it = grid.find(nb);
            if (it != grid.end()) unite(k, it->second);
        }
    }

    std::map<std::size_t, std::size_t> roots;
    std::vector<CurveComponent> comps;
    for (std::size_t k = 0; k < may.size(); ++k) {
        std::size_t r = find(k);
        auto [it, fresh] = roots.try_emplace(r, comps.size());
        if (fresh) comps.emplace_back();
        CurveComponent& c = comps[it->second];
        const CertifiedBox& b = cover.boxes[may[k]];
        c.box_indices.push_back(may[k]);
        if (b.x_lo == 0) c.touches_left = true;
        if (b.x_hi == 1) c.touches_right = true;
        if (b.y_lo == 0) c.touches_bottom = true;
        if (b.y_hi == 1) c.touches_top = true;
    }
    return comps;
}

/// A delta-grid cell meeting the zero sets of both displacements.
struct FixedPointSquare {
    long ix = 0, iy = 0;
    Rational delta;
    bool meets_zero_set_1 = false, meets_zero_set_2 = false;

    CertifiedBox box() const {
        return {delta * Rational(ix), delta * Rational(ix + 1), delta * Rational(iy),
                delta * Rational(iy + 1), BoxStatus::MayContainZero, 0};
    }
};

struct FixedPointSquareReport {
    bool degenerate_identity = false;  // some displacement vanishes identically
    Rational delta;
    std::vector<FixedPointSquare> squares;
};

namespace detail {

struct JointLeafSink {
    virtual void leaf(const CertifiedBox& box) = 0;
    virtual ~JointLeafSink() = default;
};

inline void subdivide_joint(const BiPoly& d1, const BiPoly& d2, const CertifiedBox& box,
                            int max_depth, JointLeafSink& sink) {
    if (!d1.is_zero() && !d1.eval(box.xi(), box.yi()).contains_zero()) return;
    if (!d2.is_zero() && !d2.eval(box.xi(), box.yi()).contains_zero()) return;
    if (box.depth == max_depth) {
        sink.leaf(box);
        return;
    }
    Rational xm = (box.x_lo + box.x_hi) / 2;
    Rational ym = (box.y_lo + box.y_hi) / 2;
    const Rational xs[3] = {box.x_lo, xm, box.x_hi};
    const Rational ys[3] = {box.y_lo, ym, box.y_hi};
    for (int cy = 0; cy < 2; ++cy)
        for (int cx = 0; cx < 2; ++cx) {
            CertifiedBox child{xs[cx], xs[cx + 1], ys[cy], ys[cy + 1],
                               BoxStatus::MayContainZero, box.depth + 1};
            subdivide_joint(d1, d2, child, max_depth, sink);
        }
}

inline int delta_grid_exponent(const Rational& delta) {
    if (delta <= 0 || numerator_of(delta) != 1 || !is_dyadic(delta))
        throw std::invalid_argument("delta must be 1/2^k");
    int k = static_cast<int>(boost::multiprecision::lsb(denominator_of(delta)));
    if (k > 20) throw std::invalid_argument("delta must be at least 2^-20");
    return k;
}

}  // namespace detail

/// All delta-grid squares whose intersection with both certified zero covers
/// is nonempty, decided by a joint subdivision a few levels below the grid so
/// that cells crossed by the two curves separately (with no common point) are
/// not reported.
inline FixedPointSquareReport fixed_point_squares(const PolynomialMap2D& map,
                                                  const Rational& delta, int extra_depth = 6) {
    int k = detail::delta_grid_exponent(delta);
    if (extra_depth < 0 || k + extra_depth > 40)
        throw std::invalid_argument("fixed_point_squares: refinement depth out of range");
    FixedPointSquareReport report;
    report.delta = delta;
    BiPoly d1 = map.displacement(1), d2 = map.displacement(2);
    report.degenerate_identity = d1.is_zero() || d2.is_zero();
    if (d1.is_zero() && d2.is_zero()) {
        // Identity map: every grid square is a fixed-point square.
        long cells_per_side = 1L << k;
        for (long ix = 0; ix < cells_per_side; ++ix)
            for (long iy = 0; iy < cells_per_side; ++iy)
                report.squares.push_back({ix, iy, delta, true, true});
        return report;
    }

    struct VecSink : detail::JointLeafSink {
        std::vector<CertifiedBox> leaves;
        void leaf(const CertifiedBox& box) override { leaves.push_back(box); }
    } sink;

    CertifiedBox root{Rational(0), Rational(1), Rational(0), Rational(1),
                      BoxStatus::MayContainZero, 0};
    detail::subdivide_joint(d1, d2, root, k + extra_depth, sink);

    Rational inv_delta(Integer(1) << k);
    std::map<std::pair<long, long>, bool> cells;
    for (const CertifiedBox& leaf : sink.leaves) {
        long ix = floor_rat(leaf.x_lo * inv_delta).convert_to<long>();
        long iy = floor_rat(leaf.y_lo * inv_delta).convert_to<long>();
        cells[{ix, iy}] = true;
    }
    for (const auto& [cell, _] : cells) {
        FixedPointSquare s;
        s.ix = cell.first;
        s.iy = cell.second;
        s.delta = delta;
        s.meets_zero_set_1 = true;
        s.meets_zero_set_2 = true;
        report.squares.push_back(s);
    }
    return report;
}

/// Result of the nested-square descent: the center of the final square with
/// its exactly evaluated displacement residual, plus the square sides seen
/// along the way (they halve at each level).
struct RefineResult {
    Rational x, y;
    Rational residual;
    std::vector<Rational> level_sides;
};

namespace detail {

inline Rational residual_at(const PolynomialMap2D& map, const Rational& x, const Rational& y) {
    Rational r1 = abs_rat(map.p1.eval(x, y) - x);
    Rational r2 = abs_rat(map.p2.eval(x, y) - y);
    return std::max(r1, r2);
}

inline bool refine_search(const PolynomialMap2D& map, const BiPoly& d1, const BiPoly& d2,
                          const CertifiedBox& box, const Rational& tol, int depth_left,
                          RefineResult& out) {
    out.level_sides.push_back(box.side());
    Rational cx = (box.x_lo + box.x_hi) / 2;
    Rational cy = (box.y_lo + box.y_hi) / 2;
    if (residual_at(map, cx, cy) <= tol) {
        out.x = cx;
        out.y = cy;
        out.residual = residual_at(map, cx, cy);
        return true;
    }
    if (depth_left == 0)
        throw std::runtime_error("refine_fixed_point: tolerance unreachable at depth limit");
    const Rational xs[3] = {box.x_lo, cx, box.x_hi};
    const Rational ys[3] = {box.y_lo, cy, box.y_hi};
    for (int cyi = 0; cyi < 2; ++cyi)
        for (int cxi = 0; cxi < 2; ++cxi) {
            CertifiedBox child{xs[cxi], xs[cxi + 1], ys[cyi], ys[cyi + 1],
                               BoxStatus::MayContainZero, box.depth + 1};
            bool z1 = d1.is_zero() || d1.eval(child.xi(), child.yi()).contains_zero();
            bool z2 = d2.is_zero() || d2.eval(child.xi(), child.yi()).contains_zero();
            if (!z1 || !z2) continue;
            if (refine_search(map, d1, d2, child, tol, depth_left - 1, out)) return true;
            out.level_sides.pop_back();  // dead end below; try the next sibling
        }
    return false;
}

}  // namespace detail

/// Nested-square refinement from a fixed-point square down to a point whose
/// displacement residual is certified (by exact evaluation) to be <= tol.
/// Throws when the descent loses the zero set, which flags an interval
/// false positive in the starting square.
inline RefineResult refine_fixed_point(const PolynomialMap2D& map, const FixedPointSquare& start,
                                       const Rational& tol, int max_levels = 160) {
    if (!start.meets_zero_set_1 || !start.meets_zero_set_2)
        throw std::invalid_argument("refine_fixed_point: start square must meet both zero sets");
    if (tol <= 0) throw std::invalid_argument("refine_fixed_point: tol must be positive");
    BiPoly d1 = map.displacement(1), d2 = map.displacement(2);
    RefineResult out;
    CertifiedBox box = start.box();
    bool z1 = d1.is_zero() || d1.eval(box.xi(), box.yi()).contains_zero();
    bool z2 = d2.is_zero() || d2.eval(box.xi(), box.yi()).contains_zero();
    if (!z1 || !z2 || !detail::refine_search(map, d1, d2, box, tol, max_levels, out))
        throw std::runtime_error("refinement lost the zero");
    return out;
}

enum class CertificationStatus { Complete, Incomplete };

struct FixedPointCountResult {
    long count = 0;
    CertificationStatus status = CertificationStatus::Incomplete;
    std::vector<CertifiedBox> enclosures;
    int depth_used = 0;
};

namespace detail {

struct CellCluster {
    long x0, x1, y0, y1;  // inclusive cell ranges
    std::vector<std::pair<long, long>> cells;
};

inline std::vector<CellCluster> cluster_cells(const std::vector<std::pair<long, long>>& cells) {
    std::map<std::pair<long, long>, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
    std::vector<std::size_t> parent(cells.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto [x, y] = cells[i];
        for (long dx = -1; dx <= 1; ++dx)
            for (long dy = -1; dy <= 1; ++dy) {
                if (dx == 0 && dy == 0) continue;
                auto it = index.find({x + dx, y + dy});
                if (it != index.end()) parent[find(i)] = find(it->second);
            }
    }
    std::map<std::size_t, std::size_t> roots;
    std::vector<CellCluster> clusters;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::size_t r = find(i);
        auto [it, fresh] = roots.try_emplace(r, clusters.size());
        if (fresh) clusters.push_back({cells[i].first, cells[i].first, cells[i].second,
                                       cells[i].second, {}});
        CellCluster& c = clusters[it->second];
        c.x0 = std::min(c.x0, cells[i].first);
        c.x1 = std::max(c.x1, cells[i].first);
        c.y0 = std::min(c.y0, cells[i].second);
        c.y1 = std::max(c.y1, cells[i].second);
        c.cells.push_back(cells[i]);
    }
    return clusters;
}

// Miranda existence test on a box: each displacement component must be
// sign-definite with opposite signs on one pair of opposite faces, the two
// components on different axis pairs.
inline bool miranda_certifies(const BiPoly& d1, const BiPoly& d2, const CertifiedBox& b) {
    auto face_sign = [](const BiPoly& f, const Interval& x, const Interval& y) -> int {
        Interval v = f.eval(x, y);
        if (v.hi < 0) return -1;
        if (v.lo > 0) return 1;
        return 0;
    };
    auto opposite_x = [&](const BiPoly& f) {
        int l = face_sign(f, Interval(b.x_lo), b.yi());
        int r = face_sign(f, Interval(b.x_hi), b.yi());
        return l != 0 && r != 0 && l != r;
    };
    auto opposite_y = [&](const BiPoly& f) {
        int lo = face_sign(f, b.xi(), Interval(b.y_lo));
        int hi = face_sign(f, b.xi(), Interval(b.y_hi));
        return lo != 0 && hi != 0 && lo != hi;
    };
    return (opposite_x(d1) && opposite_y(d2)) || (opposite_y(d1) && opposite_x(d2));
}

}  // namespace detail

/// Counts pairwise-disjoint certified fixed-point enclosures of a
/// conservative-interior map. Complete means every joint-cover cluster
/// resolved into a small isolated Miranda-certified enclosure; otherwise the
/// best-effort count is reported as Incomplete. When Complete, each enclosure
/// contains a fixed point and every fixed point lies in some enclosure.
inline FixedPointCountResult certified_fixed_point_count(const PolynomialMap2D& map,
                                                         const Rational& /*tol*/ = Rational(1, 1000000000),
                                                         int max_depth = 17) {
    const Interval unit(Rational(0), Rational(1));
    const Interval margin(Rational(1, 32), Rational(31, 32));
    for (int axis : {1, 2})
        if (!detail::range_within(map.component(axis), unit, unit, margin, 7))
            throw std::runtime_error("not conservative-interior");
    BiPoly d1 = map.displacement(1), d2 = map.displacement(2);

    FixedPointCountResult best;
    for (int depth = 9; depth <= max_depth; depth += 2) {
        struct VecSink : detail::JointLeafSink {
            std::vector<std::pair<long, long>> cells;
            long scale_bits = 0;
            void leaf(const CertifiedBox& box) override {
                Rational s(Integer(1) << scale_bits);
                cells.emplace_back(floor_rat(box.x_lo * s).convert_to<long>(),
                                   floor_rat(box.y_lo * s).convert_to<long>());
            }
        } sink;
        sink.scale_bits = depth;
        CertifiedBox root{Rational(0), Rational(1), Rational(0), Rational(1),
                          BoxStatus::MayContainZero, 0};
        detail::subdivide_joint(d1, d2, root, depth, sink);

        auto clusters = detail::cluster_cells(sink.cells);
        Rational side(Rational(1) / Rational(Integer(1) << depth));
        std::vector<CertifiedBox> boxes;
        bool resolved = !clusters.empty() || sink.cells.empty();
        for (const auto& c : clusters) {
            if (c.x1 - c.x0 >= 4 || c.y1 - c.y0 >= 4) resolved = false;
            boxes.push_back({side * Rational(c.x0), side * Rational(c.x1 + 1),
                             side * Rational(c.y0), side * Rational(c.y1 + 1),
                             BoxStatus::MayContainZero, depth});
        }
        if (resolved) {
            for (std::size_t i = 0; i < clusters.size() && resolved; ++i)
                for (std::size_t j = i + 1; j < clusters.size() && resolved; ++j) {
                    bool x_gap = clusters[i].x1 + 1 < clusters[j].x0 ||
                                 clusters[j].x1 + 1 < clusters[i].x0;
                    bool y_gap = clusters[i].y1 + 1 < clusters[j].y0 ||
                                 clusters[j].y1 + 1 < clusters[i].y0;
                    if (!x_gap && !y_gap) resolved = false;  // closed boxes overlap or touch
                }
        }
        if (resolved) {
            for (const auto& b : boxes)
                if (!detail::miranda_certifies(d1, d2, b)) {
                    resolved = false;
                    break;
                }
        }
        best.count = static_cast<long>(clusters.size());
        best.enclosures = boxes;
        best.depth_used = depth;
        if (resolved) {
            best.status = CertificationStatus::Complete;
            return best;
        }
    }
    best.status = CertificationStatus::Incomplete;
    return best;
}

enum class DirectionClass { Conservative, ExpansiveProbePassed, Unverified };

/// Conservative is certified by interval evaluation over Q. Expansiveness is
/// only probed: a fixed family of 32 monotone piecewise-linear curves joining
/// the left and right faces, with exact evaluations witnessing values <= 0 and
/// >= 1 on each curve (the image of a connected curve is an interval, so the
/// two witnesses certify that it covers [0,1]). The universally quantified
/// property is not decidable by sampling, hence the three-valued answer.
inline DirectionClass direction_class(const PolynomialMap2D& map, int axis) {
    const Interval unit(Rational(0), Rational(1));
    const BiPoly& f = map.component(axis);
    if (detail::range_within(f, unit, unit, unit, 7)) return DirectionClass::Conservative;

    for (int j = 0; j < 32; ++j) {
        Rational a(j, 31), b(((j * 13 + 5) % 32), 31);
        bool found_le0 = false, found_ge1 = false;
        const int segments = 8, samples_per_segment = 32;
        for (int s = 0; s < segments && !(found_le0 && found_ge1); ++s) {
            for (int t = 0; t <= samples_per_segment; ++t) {
                Rational u = (Rational(s) + Rational(t, samples_per_segment)) / segments;
                Rational x = u;
                Rational y = a + (b - a) * u;  // straight monotone probe curve
                Rational v = f.eval(x, y);
                if (v <= 0) found_le0 = true;
                if (v >= 1) found_ge1 = true;
                if (found_le0 && found_ge1) break;
            }
        }
        if (!(found_le0 && found_ge1)) return DirectionClass::Unverified;
    }
    return DirectionClass::ExpansiveProbePassed;
}

namespace detail {

// Crossings of a univariate polynomial sign with certified transversality on
// [a, b]; endpoints must not be roots. Subdivision refines until each active
// subinterval carries a certified monotone sign change or is excluded.
inline long certified_sign_crossings(const Poly& p, const Poly& dp, const Rational& a,
                                     const Rational& b, int depth) {
    auto interval_eval = [](const Poly& q, const Rational& lo, const Rational& hi) {
        Interval x(lo, hi), acc;
        for (std::size_t i = q.coeffs().size(); i-- > 0;)
            acc = acc * x + Interval(q.coeff(i));
        return acc;
    };
    if (!interval_eval(p, a, b).contains_zero()) return 0;
    int sa = p.sign_at(a), sb = p.sign_at(b);
    bool dp_definite = !interval_eval(dp, a, b).contains_zero();
    if (dp_definite) return sa != sb ? 1 : 0;
    if (depth == 0) throw std::runtime_error("radius not generic; retry smaller");
    Rational m = (a + b) / 2;
    if (p.eval(m) == 0) {
        if (dp.eval(m) == 0) throw std::runtime_error("radius not generic; retry smaller");
        // Exact root at a dyadic parameter: isolate it, count it once.
        Rational h = (b - a) / 4;
        for (int guard = 0;; ++guard) {
            if (guard > 64) throw std::runtime_error("radius not generic; retry smaller");
            if (p.eval(m - h) != 0 && p.eval(m + h) != 0 &&
                !interval_eval(dp, m - h, m + h).contains_zero())
                break;
            h /= 2;
        }
        return certified_sign_crossings(p, dp, a, m - h, depth - 1) + 1 +
               certified_sign_crossings(p, dp, m + h, b, depth - 1);
    }
    return certified_sign_crossings(p, dp, a, m, depth - 1) +
           certified_sign_crossings(p, dp, m, b, depth - 1);
}

}  // namespace detail

/// Number of transversal intersections of Z(curve) with the circle of the
/// given radius around a rational point of the curve, counted by adaptive
/// subdivision of the circle into sign-certified arcs. The circle is
/// parametrized rationally by t = tan(theta/2) on two charts; tangential
/// contact fails certification and raises "radius not generic".
inline long half_branch_count(const BiPoly& curve, const Rational& cx, const Rational& cy,
                              const Rational& radius) {
    if (radius <= 0) throw std::invalid_argument("half_branch_count: radius must be positive");
    if (curve.eval(cx, cy) != 0)
        throw std::invalid_argument("half_branch_count: center not on curve");
    int d = curve.total_degree();
    if (d < 1) throw std::invalid_argument("half_branch_count: curve is constant");

    // X(t) = cx (1+t^2) + r (1-t^2), Y(t) = cy (1+t^2) + 2rt over (1+t^2).
    Poly one_plus_t2(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    Poly X(std::vector<Rational>{cx + radius, Rational(0), cx - radius});
    Poly Y(std::vector<Rational>{cy, 2 * radius});

    std::vector<Poly> xp{Poly(Rational(1))}, yp{Poly(Rational(1))}, cp{Poly(Rational(1))};
    for (int k = 1; k <= d; ++k) {
        xp.push_back(xp.back() * X);
        yp.push_back(yp.back() * Y);
        cp.push_back(cp.back() * one_plus_t2);
    }
    Poly P;
    const auto& grid = curve.grid();
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            if (grid[i][j] == 0) continue;
            P = P + (xp[i] * yp[j] * cp[d - i - j]).scaled(grid[i][j]);
        }
    if (P.is_zero()) throw std::runtime_error("radius not generic; retry smaller");
    P = P.primitive();

    // Chart A covers t in [-2, 2]; chart B covers u = 1/t in [-1/2, 1/2]
    // (theta = pi sits at u = 0). The seams t = +-2 are counted once.
    std::vector<Rational> rev(2 * d + 1);
    for (int k = 0; k <= 2 * d; ++k) rev[k] = P.coeff(2 * d - k);
    Poly Prev(std::move(rev));
    Poly dP = P.derivative(), dPrev = Prev.derivative();

    long total = 0;
    const Rational two(2), half(1, 2);
    Rational a(-2), b(2), ua(-half), ub(half);
    for (const Rational& seam : {Rational(-2), Rational(2)}) {
        if (P.eval(seam) == 0) {
            if (dP.eval(seam) == 0) throw std::runtime_error("radius not generic; retry smaller");
            ++total;
        }
    }
    auto pull_in = [&](const Poly& p, const Poly& dp, Rational x, int dir) {
        // Move a chart endpoint off a root of p, certified root-free in between.
        Rational h(1, 64);
        for (int guard = 0; guard < 64; ++guard) {
            Rational y = x + Rational(dir) * h;
            auto iv = [&](const Rational& lo, const Rational& hi) {
                Interval xx(lo, hi), acc;
                for (std::size_t i = dp.coeffs().size(); i-- > 0;)
                    acc = acc * xx + Interval(dp.coeff(i));
                return acc;
            };
            Rational lo = std::min(x, y), hi = std::max(x, y);
            if (p.eval(y) != 0 && !iv(lo, hi).contains_zero()) return y;
            h /= 2;
        }
        throw std::runtime_error("radius not generic; retry smaller");
    };
    if (P.eval(a) == 0) a = pull_in(P, dP, a, +1);
    if (P.eval(b) == 0) b = pull_in(P, dP, b, -1);
    if (Prev.eval(ua) == 0) ua = pull_in(Prev, dPrev, ua, +1);
    if (Prev.eval(ub) == 0) ub = pull_in(Prev, dPrev, ub, -1);

    total += detail::certified_sign_crossings(P, dP, a, b, 48);
    total += detail::certified_sign_crossings(Prev, dPrev, ua, ub, 48);
    return total;
}

}  // namespace percrit
