// Command-line front end: spectral criterion analysis, the genus-1
// trace/determinant rule, the toral periodic-point oracle, the differential
// scan comparing the two, certified fixed-point machinery, and torus loop
// intersection numbers. Exit codes: 0 = satisfied / success, 1 = criterion
// not satisfied, 2 = error.

#include <percrit/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace percrit;

struct Range {
    long lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("range must have the form a:b, got '" + text + "'");
    Range r;
    r.lo = std::stol(text.substr(0, colon));
    r.hi = std::stol(text.substr(colon + 1));
    if (r.lo > r.hi) throw std::invalid_argument("range must satisfy a <= b");
    return r;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

Semantics parse_semantics(const std::string& s) {
    if (s == "spectral") return Semantics::Spectral;
    if (s == "strict") return Semantics::StrictPairing;
    throw std::invalid_argument("semantics must be 'spectral' or 'strict'");
}

int run_analyze(const std::string& matrix_text, const std::string& semantics, bool json) {
    IntMatrix m = parse_matrix_text(matrix_text);
    Semantics sem = parse_semantics(semantics);
    SpectralClassification c = classify_spectrum(m);
    CriterionVerdict v = theorem1_criterion(m, sem);
    if (json) {
        std::cout << verdict_to_json(m, c, v).dump(2) << "\n";
    } else {
        std::cout << "matrix:            " << m.to_text() << "\n"
                  << "genus:             " << c.genus << "\n"
                  << "char poly:         " << c.char_poly.to_string() << "\n"
                  << "unit-circle roots: inside=" << c.counts.n_in << " on=" << c.counts.n_on
                  << " outside=" << c.counts.n_out << "\n"
                  << "repeated outside:  " << (c.repeated_outside ? "yes" : "no") << "\n"
                  << "semantics:         " << semantics_name(v.semantics) << "\n"
                  << "criterion:         " << (v.satisfied ? "satisfied" : "not satisfied")
                  << " (witness: " << witness_name(v.witness) << ")\n";
        if (!v.satisfied)
            std::cout << "note: 'not satisfied' means no conclusion from the criterion, not"
                         " finiteness of the period set\n";
    }
    return v.satisfied ? 0 : 1;
}

int run_torus(long t, long d, bool json) {
    TorusCriterionInput in{Integer(t), Integer(d)};
    CriterionVerdict v = torus_corollary(in);
    IntMatrix companion = IntMatrix::companion(torus_char_poly(in));
    CriterionVerdict thm = theorem1_criterion(companion);
    if (json) {
        Json j{{"t", t},
               {"d", d},
               {"status", v.satisfied ? "satisfied" : "not_satisfied"},
               {"witness", witness_name(v.witness)},
               {"theorem1_status", thm.satisfied ? "satisfied" : "not_satisfied"}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "(t, d) = (" << t << ", " << d << ")\n"
                  << "corollary: " << (v.satisfied ? "satisfied" : "not satisfied")
                  << " (witness: " << witness_name(v.witness) << ")\n"
                  << "theorem 1 on companion matrix: "
                  << (thm.satisfied ? "satisfied" : "not satisfied") << "\n";
        if (v.satisfied != thm.satisfied)
            std::cout << "note: corollary and theorem 1 diverge on this input\n";
    }
    return v.satisfied ? 0 : 1;
}

int run_oracle(const std::string& matrix_text, unsigned long max_period) {
    IntMatrix m = parse_matrix_text(matrix_text);
    std::cout << toral_report_to_json(periods_up_to(m, max_period)).dump(2) << "\n";
    return 0;
}

int run_scan(const std::string& t_range_text, const std::string& d_range_text,
             const std::string& primes_text, const std::string& out_path) {
    Range tr = parse_range(t_range_text), dr = parse_range(d_range_text);
    long cells = (tr.hi - tr.lo + 1) * (dr.hi - dr.lo + 1);
    if (cells > 1000000) throw std::invalid_argument("scan: more than 10^6 cells requested");
    bool with_oracle = !primes_text.empty();
    Range pr;
    if (with_oracle) {
        pr = parse_range(primes_text);
        if (pr.lo < 1) throw std::invalid_argument("scan: prime window must be positive");
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    out << "t,d,corollary,theorem1,n_in,n_on,n_out,oracle_primes,divergence\n";

    long divergences = 0;
    std::vector<std::pair<long, long>> anomalies;
    for (long t = tr.lo; t <= tr.hi; ++t) {
        for (long d = dr.lo; d <= dr.hi; ++d) {
            TorusCriterionInput in{Integer(t), Integer(d)};
            CriterionVerdict cor = torus_corollary(in);
            IntMatrix companion = IntMatrix::companion(torus_char_poly(in));
            CriterionVerdict thm = theorem1_criterion(companion);
            UnitCircleCount counts = unit_circle_counts(torus_char_poly(in));
            std::string primes_field;
            if (with_oracle) {
                bool degenerate = fixed_point_count(companion, 1).degenerate;
                std::string listed;
                for (long p = pr.lo; p <= pr.hi && !degenerate; ++p) {
                    if (!is_prime(static_cast<unsigned long>(p))) continue;
                    FixedPointCount f = fixed_point_count(companion, static_cast<unsigned long>(p));
                    if (f.degenerate) {
                        degenerate = true;
                        break;
                    }
                    Integer exact = f.count - fixed_point_count(companion, 1).count;
                    if (exact > 0) {
                        if (!listed.empty()) listed += "|";
                        listed += std::to_string(p);
                    }
                }
                primes_field = degenerate ? "degenerate" : listed;
            }
            bool divergence = cor.satisfied != thm.satisfied;
            if (divergence) {
                ++divergences;
                if (counts.n_on < 1) anomalies.emplace_back(t, d);
            }
            out << t << "," << d << "," << (cor.satisfied ? "satisfied" : "not_satisfied") << ","
                << (thm.satisfied ? "satisfied" : "not_satisfied") << "," << counts.n_in << ","
                << counts.n_on << "," << counts.n_out << "," << primes_field << ","
                << (divergence ? "true" : "false") << "\n";
        }
    }
    out.flush();
    if (!out) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return 2;
    }
    std::cerr << "scan: " << cells << " cells, " << divergences
              << " corollary/theorem-1 divergences\n";
    if (!anomalies.empty()) {
        std::cerr << "scan: divergence rows without a unit-modulus eigenvalue (unexpected):";
        for (auto& [t, d] : anomalies) std::cerr << " (" << t << "," << d << ")";
        std::cerr << "\n";
    }
    return 0;
}

const char* direction_name(DirectionClass c) {
    switch (c) {
        case DirectionClass::Conservative: return "conservative";
        case DirectionClass::ExpansiveProbePassed: return "expansive_probe_passed";
        case DirectionClass::Unverified: return "unverified";
    }
    return "unverified";
}

int run_fixedpoints(const std::string& spec_path, const std::string& delta_text,
                    const std::string& tol_text, int max_depth) {
    std::ifstream in(spec_path);
    if (!in) {
        std::cerr << "error: cannot read map spec '" << spec_path << "'\n";
        return 2;
    }
    Json spec = Json::parse(in);
    PolynomialMap2D map = map_from_json(spec);
    Rational delta = parse_rational(delta_text);
    Rational tol = parse_rational(tol_text);

    FixedPointSquareReport squares = fixed_point_squares(map, delta);
    Json out;
    out["delta"] = format_dyadic(delta);
    out["degenerate_identity"] = squares.degenerate_identity;
    out["direction_class"] = Json{{"axis1", direction_name(direction_class(map, 1))},
                                  {"axis2", direction_name(direction_class(map, 2))}};
    Json sq = Json::array();
    for (const auto& s : squares.squares) sq.push_back(square_to_json(s));
    out["squares"] = sq;

    Json refinements = Json::array();
    for (const auto& s : squares.squares) {
        Json r{{"ix", s.ix}, {"iy", s.iy}};
        try {
            RefineResult res = refine_fixed_point(map, s, tol);
            r["point"] = Json::array({res.x.str(), res.y.str()});
            r["residual"] = res.residual.str();
            r["levels"] = res.level_sides.size();
        } catch (const std::exception& e) {
            r["error"] = e.what();
        }
        refinements.push_back(r);
    }
    out["refinements"] = refinements;

    try {
        FixedPointCountResult count = certified_fixed_point_count(map, tol, max_depth);
        Json enc = Json::array();
        for (const auto& b : count.enclosures) enc.push_back(box_to_json(b));
        out["certified_count"] =
            Json{{"count", count.count},
                 {"status",
                  count.status == CertificationStatus::Complete ? "complete" : "incomplete"},
                 {"enclosures", enc}};
    } catch (const std::exception& e) {
        out["certified_count"] = Json{{"error", e.what()}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_intersect(const std::string& loops_path) {
    std::ifstream in(loops_path);
    if (!in) {
        std::cerr << "error: cannot read loops file '" << loops_path << "'\n";
        return 2;
    }
    auto loops = loops_from_json(Json::parse(in));
    Json pairs = Json::array();
    for (std::size_t i = 0; i < loops.size(); ++i)
        for (std::size_t j = 0; j < loops.size(); ++j) {
            if (i == j) continue;
            long value = signed_intersection_number(loops[i].loop, loops[j].loop);
            pairs.push_back(Json{{"a", loops[i].name}, {"b", loops[j].name}, {"value", value}});
        }
    Json names = Json::array();
    for (const auto& l : loops) names.push_back(l.name);
    std::cout << Json{{"loops", names}, {"pairs", pairs}}.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"percrit: exact spectral criterion for infinitely many periodic points of "
                 "surface homotopy classes, with a toral oracle and certified fixed-point tools"};
    app.require_subcommand(1);

    std::string matrix_text, semantics = "spectral";
    bool json = false;
    auto* analyze = app.add_subcommand("analyze", "decide the criterion for a homology matrix");
    analyze->add_option("--matrix", matrix_text, "matrix, rows ';'-separated: \"2,1;1,1\"")
        ->required();
    analyze->add_option("--semantics", semantics, "spectral (default) or strict");
    analyze->add_flag("--json", json, "JSON output");

    long torus_t = 0, torus_d = 0;
    bool torus_json = false;
    auto* torus = app.add_subcommand("torus", "genus-1 trace/determinant rule");
    torus->add_option("-t", torus_t, "trace")->required();
    torus->add_option("-d", torus_d, "determinant")->required();
    torus->add_flag("--json", torus_json, "JSON output");

    std::string oracle_matrix;
    unsigned long max_period = 12;
    auto* oracle = app.add_subcommand("oracle", "toral periodic-point census");
    oracle->add_option("--matrix", oracle_matrix, "2x2 integer matrix")->required();
    oracle->add_option("--max-period", max_period, "largest period to census (default 12)");

    std::string t_range, d_range, prime_window, out_path = "scan.csv";
    auto* scan = app.add_subcommand("scan", "CSV scan comparing corollary and theorem 1");
    scan->add_option("--t-range", t_range, "inclusive trace range a:b")->required();
    scan->add_option("--d-range", d_range, "inclusive determinant range a:b")->required();
    scan->add_option("--oracle-primes", prime_window, "optional prime window p:q for the oracle");
    scan->add_option("--out", out_path, "output CSV path (default scan.csv)");

    std::string spec_path, delta_text = "1/64", tol_text = "1e-9";
    int max_depth = 17;
    auto* fixedpoints = app.add_subcommand("fixedpoints", "certified fixed-point analysis on Q");
    fixedpoints->add_option("--spec", spec_path, "map spec JSON file")->required();
    fixedpoints->add_option("--delta", delta_text, "grid size, a power of 1/2 (default 1/64)");
    fixedpoints->add_option("--tol", tol_text, "refinement residual tolerance (default 1e-9)");
    fixedpoints->add_option("--max-depth", max_depth, "subdivision depth cap (default 17)");

    std::string loops_path;
    auto* intersect = app.add_subcommand("intersect", "signed intersection numbers of torus loops");
    intersect->add_option("--loops", loops_path, "loops JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(matrix_text, semantics, json);
        if (app.got_subcommand(torus)) return run_torus(torus_t, torus_d, torus_json);
        if (app.got_subcommand(oracle)) return run_oracle(oracle_matrix, max_period);
        if (app.got_subcommand(scan)) return run_scan(t_range, d_range, prime_window, out_path);
        if (app.got_subcommand(fixedpoints))
            return run_fixedpoints(spec_path, delta_text, tol_text, max_depth);
        if (app.got_subcommand(intersect)) return run_intersect(loops_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
