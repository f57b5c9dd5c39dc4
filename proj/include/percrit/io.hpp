#pragma once

#include <percrit/criterion.hpp>
#include <percrit/curve_fixpoint.hpp>
#include <percrit/int_matrix.hpp>
#include <percrit/pl_intersection.hpp>
#include <percrit/polynomial.hpp>
#include <percrit/toral_oracle.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace percrit {

using Json = nlohmann::json;

// Polynomials serialize as arrays of rational strings, lowest degree first.
inline Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).str());
    return arr;
}

inline Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(parse_rational(v.get<std::string>()));
    return Poly(std::move(c));
}

inline Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be an array of rows");
    std::size_t n = j.size();
    std::vector<Integer> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("matrix JSON must be square");
        for (const auto& v : row) entries.emplace_back(v.get<std::string>());
    }
    return IntMatrix(n, std::move(entries));
}

inline Json verdict_to_json(const IntMatrix& m, const SpectralClassification& c,
                            const CriterionVerdict& v) {
    return Json{{"matrix", m.to_text()},
                {"genus", c.genus},
                {"char_poly", poly_to_json(c.char_poly)},
                {"counts",
                 {{"inside", c.counts.n_in}, {"on", c.counts.n_on}, {"outside", c.counts.n_out}}},
                {"repeated_outside", c.repeated_outside},
                {"semantics", semantics_name(v.semantics)},
                {"status", v.satisfied ? "satisfied" : "not_satisfied"},
                {"witness", witness_name(v.witness)}};
}

inline Json toral_report_to_json(const ToralPeriodReport& r) {
    Json fix = Json::array(), exact = Json::array();
    for (unsigned long n = 1; n <= r.max_period; ++n) {
        fix.push_back(r.fix_counts[n - 1] ? Json(r.fix_counts[n - 1]->str()) : Json("degenerate"));
        exact.push_back(r.exact_period_counts[n - 1] ? Json(r.exact_period_counts[n - 1]->str())
                                                     : Json("degenerate"));
    }
    Json realized = Json::array(), degenerate = Json::array();
    for (unsigned long n : r.realized_periods) realized.push_back(n);
    for (unsigned long n : r.degenerate_levels) degenerate.push_back(n);
    return Json{{"matrix", r.matrix.to_text()},
                {"max_period", r.max_period},
                {"fix_counts", fix},
                {"exact_period_counts", exact},
                {"realized_periods", realized},
                {"degenerate_levels", degenerate}};
}

// Map spec: {"p1": [["c00","c01"],...], "p2": ...}; row index = x power,
// column index = y power, rational strings.
inline BiPoly bipoly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("map component must be an array of rows");
    std::vector<std::vector<Rational>> grid;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("map component rows must be arrays");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(parse_rational(v.get<std::string>()));
        grid.push_back(std::move(r));
    }
    return BiPoly(std::move(grid));
}

inline Json bipoly_to_json(const BiPoly& p) {
    Json rows = Json::array();
    for (const auto& row : p.grid()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(r);
    }
    return rows;
}

inline PolynomialMap2D map_from_json(const Json& j) {
    if (!j.contains("p1") || !j.contains("p2"))
        throw std::invalid_argument("map spec needs fields p1 and p2");
    return {bipoly_from_json(j.at("p1")), bipoly_from_json(j.at("p2"))};
}

inline Json box_to_json(const CertifiedBox& b) {
    return Json{{"x_lo", format_dyadic(b.x_lo)},
                {"x_hi", format_dyadic(b.x_hi)},
                {"y_lo", format_dyadic(b.y_lo)},
                {"y_hi", format_dyadic(b.y_hi)},
                {"status", b.status == BoxStatus::MayContainZero ? "may_contain_zero"
                                                                 : "excluded_zero"},
                {"depth", b.depth}};
}

inline Json square_to_json(const FixedPointSquare& s) {
    CertifiedBox b = s.box();
    return Json{{"ix", s.ix},
                {"iy", s.iy},
                {"delta", format_dyadic(s.delta)},
                {"x_lo", format_dyadic(b.x_lo)},
                {"x_hi", format_dyadic(b.x_hi)},
                {"y_lo", format_dyadic(b.y_lo)},
                {"y_hi", format_dyadic(b.y_hi)},
                {"meets_zero_set_1", s.meets_zero_set_1},
                {"meets_zero_set_2", s.meets_zero_set_2}};
}

// Loops JSON: {"loops": [{"name": "a", "vertices": [["0","1/3"], ...]}, ...]}.
struct NamedLoop {
    std::string name;
    PLLoop loop;
};

inline std::vector<NamedLoop> loops_from_json(const Json& j) {
    if (!j.contains("loops") || !j.at("loops").is_array())
        throw std::invalid_argument("loops JSON needs a 'loops' array");
    std::vector<NamedLoop> out;
    for (const auto& item : j.at("loops")) {
        std::vector<TorusPoint> vertices;
        for (const auto& v : item.at("vertices")) {
            if (!v.is_array() || v.size() != 2)
                throw std::invalid_argument("loop vertex must be a pair");
            vertices.push_back(
                {parse_rational(v[0].get<std::string>()), parse_rational(v[1].get<std::string>())});
        }
        out.push_back({item.at("name").get<std::string>(), PLLoop(std::move(vertices))});
    }
    return out;
}

}  // namespace percrit
