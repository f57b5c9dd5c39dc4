#include <percrit/io.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace percrit;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PERCRIT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
    return ::testing::TempDir() + "/" + name;
}

TEST(RationalParse, Forms) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("0.6"), Rational(3, 5));
    EXPECT_EQ(parse_rational("1e-9"), Rational(1, Integer(1000000000)));
    EXPECT_EQ(parse_rational("2.5e3"), Rational(2500));
    EXPECT_EQ(parse_rational(" -1/2 "), Rational(-1, 2));
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(DyadicFormat, Strings) {
    EXPECT_EQ(format_dyadic(Rational(1, 2)), "1/2^1");
    EXPECT_EQ(format_dyadic(Rational(3, 16)), "3/2^4");
    EXPECT_EQ(format_dyadic(Rational(0)), "0/2^0");
    EXPECT_EQ(format_dyadic(Rational(1)), "1/2^0");
    EXPECT_THROW(format_dyadic(Rational(1, 3)), std::invalid_argument);
}

TEST(PolyJson, RoundTrip) {
    Poly p(std::vector<Rational>{Rational(1), Rational(-3), Rational(1)});
    Json j = poly_to_json(p);
    EXPECT_EQ(j.dump(), "[\"1\",\"-3\",\"1\"]");
    EXPECT_EQ(poly_from_json(j), p);
}

TEST(MatrixJson, RoundTrip) {
    IntMatrix m = parse_matrix_text("2,1;1,1");
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
    EXPECT_THROW(matrix_from_json(Json::parse("[[\"1\",\"2\"]]")), std::invalid_argument);
}

TEST(MapJson, ParsesRowAsXPower) {
    // p1 = 1/2 + x: rows indexed by x power.
    Json spec = Json::parse(R"({"p1": [["1/2"], ["1"]], "p2": [["0", "1"]]})");
    PolynomialMap2D map = map_from_json(spec);
    EXPECT_EQ(map.p1.eval(Rational(1, 4), Rational(0)), Rational(3, 4));
    EXPECT_EQ(map.p2.eval(Rational(0), Rational(5, 8)), Rational(5, 8));
}

TEST(Cli, AnalyzeExitCodes) {
    EXPECT_EQ(run_cli("analyze --matrix \"2,1;1,1\"").exit_code, 0);
    EXPECT_EQ(run_cli("analyze --matrix \"1,0;0,1\"").exit_code, 1);
    EXPECT_EQ(run_cli("analyze --matrix \"2,1,0,0;1,1,0,0;0,0,0,1;0,0,-1,0\"").exit_code, 0);
    EXPECT_EQ(run_cli("analyze --matrix \"1,2,3;4,5,6\"").exit_code, 2);
    EXPECT_EQ(run_cli("analyze --matrix \"1,2,3;4,5,6;7,8,9\"").exit_code, 2);  // odd dimension
    EXPECT_EQ(run_cli("nonsense").exit_code, 2);
}

TEST(Cli, AnalyzeJsonDeterministic) {
    RunResult a = run_cli("analyze --matrix \"2,1;1,1\" --json");
    RunResult b = run_cli("analyze --matrix \"2,1;1,1\" --json");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    Json j = Json::parse(a.out);
    EXPECT_EQ(j.at("status"), "satisfied");
    EXPECT_EQ(j.at("witness"), "hyperbolic_pair");
    EXPECT_EQ(j.at("genus"), 1);
    EXPECT_EQ(j.at("counts").at("inside"), 1);
    EXPECT_EQ(j.at("counts").at("outside"), 1);
    EXPECT_EQ(j.at("char_poly").dump(), "[\"1\",\"-3\",\"1\"]");

    RunResult strict = run_cli("analyze --matrix \"2,1;1,1\" --semantics strict --json");
    EXPECT_EQ(Json::parse(strict.out).at("semantics"), "strict");
}

TEST(Cli, Torus) {
    EXPECT_EQ(run_cli("torus -t 3 -d 1").exit_code, 0);
    EXPECT_EQ(run_cli("torus -t 0 -d 1").exit_code, 1);
    EXPECT_EQ(run_cli("torus -t 2 -d 1").exit_code, 1);
    Json j = Json::parse(run_cli("torus -t 1 -d -2 --json").out);
    EXPECT_EQ(j.at("status"), "satisfied");
    EXPECT_EQ(j.at("theorem1_status"), "not_satisfied");
}

TEST(Cli, OracleReport) {
    RunResult r = run_cli("oracle --matrix \"2,1;1,1\" --max-period 3");
    EXPECT_EQ(r.exit_code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j.at("fix_counts")[2], "16");
    EXPECT_EQ(j.at("exact_period_counts")[2], "15");
    EXPECT_EQ(j.at("realized_periods").size(), 3u);
}

TEST(Cli, ScanCsv) {
    std::string path = temp_path("scan_test.csv");
    RunResult r = run_cli("scan --t-range \"-3:3\" --d-range \"-3:3\" --out " + path);
    EXPECT_EQ(r.exit_code, 0);
    std::ifstream in(path);
    ASSERT_TRUE(in.good());
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "t,d,corollary,theorem1,n_in,n_on,n_out,oracle_primes,divergence");
    int rows = 0;
    bool found_divergence = false;
    std::string line;
    while (std::getline(in, line)) {
        ++rows;
        if (line.rfind("1,-2,", 0) == 0) {
            EXPECT_NE(line.find("satisfied,not_satisfied"), std::string::npos);
            EXPECT_NE(line.find("true"), std::string::npos);
            found_divergence = true;
        }
    }
    EXPECT_EQ(rows, 49);
    EXPECT_TRUE(found_divergence);

    // Byte-identical rerun.
    std::string path2 = temp_path("scan_test2.csv");
    run_cli("scan --t-range \"-3:3\" --d-range \"-3:3\" --out " + path2);
    std::ifstream a(path, std::ios::binary), b(path2, std::ios::binary);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str());

    EXPECT_EQ(run_cli("scan --t-range \"-3:3\" --d-range \"-3:3\" --out /nonexistent-dir/x.csv")
                  .exit_code,
              2);
}

TEST(Cli, FixedPointsAndIntersect) {
    std::string map_path = temp_path("map.json");
    {
        std::ofstream out(map_path);
        // Constant map (0.6, 0.6).
        out << R"({"p1": [["3/5"]], "p2": [["3/5"]]})";
    }
    RunResult r = run_cli("fixedpoints --spec " + map_path + " --delta 1/4");
    EXPECT_EQ(r.exit_code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j.at("squares").size(), 1u);
    EXPECT_EQ(j.at("squares")[0].at("ix"), 2);
    EXPECT_EQ(j.at("certified_count").at("count"), 1);
    EXPECT_EQ(j.at("certified_count").at("status"), "complete");
    Rational residual = parse_rational(j.at("refinements")[0].at("residual").get<std::string>());
    EXPECT_LE(residual, Rational(1, Integer(1000000000)));

    std::string loops_path = temp_path("loops.json");
    {
        std::ofstream out(loops_path);
        out << R"({"loops": [
            {"name": "a", "vertices": [["0","1/3"], ["1/2","1/3"]]},
            {"name": "b", "vertices": [["1/3","0"], ["1/3","1/2"]]}]})";
    }
    RunResult ri = run_cli("intersect --loops " + loops_path);
    EXPECT_EQ(ri.exit_code, 0);
    Json ji = Json::parse(ri.out);
    ASSERT_EQ(ji.at("pairs").size(), 2u);
    EXPECT_EQ(ji.at("pairs")[0].at("value"), 1);
    EXPECT_EQ(ji.at("pairs")[1].at("value"), -1);

    EXPECT_EQ(run_cli("intersect --loops /nonexistent.json").exit_code, 2);
}

}  // namespace
