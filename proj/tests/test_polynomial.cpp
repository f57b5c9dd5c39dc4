#include <percrit/polynomial.hpp>

#include <gtest/gtest.h>

#include "support/numeric_oracle.hpp"
#include "support/random_gen.hpp"

using namespace percrit;

namespace {

Poly P(std::initializer_list<long> coeffs_low_to_high) {
    std::vector<Rational> c;
    for (long v : coeffs_low_to_high) c.emplace_back(v);
    return Poly(std::move(c));
}

TEST(Poly, CanonicalForm) {
    EXPECT_TRUE(Poly().is_zero());
    EXPECT_EQ(Poly(std::vector<Rational>{Rational(0), Rational(0)}), Poly());
    EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(Poly().degree(), -1);
}

TEST(Poly, Arithmetic) {
    Poly a = P({1, 1});   // 1 + x
    Poly b = P({-1, 1});  // -1 + x
    EXPECT_EQ(a * b, P({-1, 0, 1}));
    EXPECT_EQ(a + b, P({0, 2}));
    EXPECT_EQ(a - a, Poly());
    EXPECT_EQ(P({-1, 0, 1}).eval(Rational(3)), Rational(8));
    EXPECT_EQ(P({0, 0, 0, 2}).derivative(), P({0, 0, 6}));
}

TEST(Poly, DivMod) {
    Poly n = P({-1, 0, 0, 1});  // x^3 - 1
    Poly d = P({-1, 1});        // x - 1
    auto dm = n.divmod(d);
    EXPECT_EQ(dm.quotient, P({1, 1, 1}));
    EXPECT_TRUE(dm.remainder.is_zero());
    EXPECT_THROW(n.divmod(Poly()), std::domain_error);
    EXPECT_THROW(P({1, 1, 1}).exact_div(d), std::logic_error);
}

TEST(PolyGcd, WorkedExamples) {
    // gcd(x^2-1, x-1) = x-1
    EXPECT_EQ(poly_gcd(P({-1, 0, 1}), P({-1, 1})), P({-1, 1}));
    // gcd(x^2+1, x^2-1) = 1
    EXPECT_EQ(poly_gcd(P({1, 0, 1}), P({-1, 0, 1})), P({1}));
    // gcd(x^3-3x^2+3x-1, x^2-2x+1) = x^2-2x+1; check the divisor relation
    Poly g = poly_gcd(P({-1, 3, -3, 1}), P({1, -2, 1}));
    EXPECT_EQ(g, P({1, -2, 1}));
    EXPECT_TRUE(g.divides(P({-1, 3, -3, 1})));
    EXPECT_TRUE(g.divides(P({1, -2, 1})));
}

TEST(PolyGcd, BothZeroRejected) {
    EXPECT_THROW(poly_gcd(Poly(), Poly()), std::invalid_argument);
}

TEST(PolyGcd, DividesBothOnRandoms) {
    testutil::Rng rng(7001);
    for (int i = 0; i < 100; ++i) {
        Poly a = testutil::random_int_poly(rng, 8, 9);
        Poly b = testutil::random_int_poly(rng, 8, 9);
        Poly g = poly_gcd(a, b);
        EXPECT_TRUE(a.divmod(g).remainder.is_zero());
        EXPECT_TRUE(b.divmod(g).remainder.is_zero());
        EXPECT_TRUE(g.is_monic());
    }
}

TEST(Squarefree, WorkedExamples) {
    // (x-1)^2 (x+2) -> [(x+2,1), (x-1,2)]
    Poly p = P({-1, 1}) * P({-1, 1}) * P({2, 1});
    auto dec = squarefree_decomposition(p);
    ASSERT_EQ(dec.size(), 2u);
    EXPECT_EQ(dec[0].factor, P({2, 1}));
    EXPECT_EQ(dec[0].multiplicity, 1);
    EXPECT_EQ(dec[1].factor, P({-1, 1}));
    EXPECT_EQ(dec[1].multiplicity, 2);

    auto dec2 = squarefree_decomposition(P({1, 0, 1}));
    ASSERT_EQ(dec2.size(), 1u);
    EXPECT_EQ(dec2[0].factor, P({1, 0, 1}));
    EXPECT_EQ(dec2[0].multiplicity, 1);

    // x^4 - 2x^2 + 1 = (x^2-1)^2
    auto dec3 = squarefree_decomposition(P({1, 0, -2, 0, 1}));
    ASSERT_EQ(dec3.size(), 1u);
    EXPECT_EQ(dec3[0].factor, P({-1, 0, 1}));
    EXPECT_EQ(dec3[0].multiplicity, 2);

    EXPECT_THROW(squarefree_decomposition(Poly()), std::invalid_argument);
}

TEST(Squarefree, ReassemblesExactly) {
    testutil::Rng rng(7002);
    for (int i = 0; i < 200; ++i) {
        Poly p = testutil::random_int_poly(rng, 6, 5);
        if (p.degree() < 1) continue;
        // Force interesting multiplicities now and then.
        if (i % 3 == 0) p = p * p;
        auto dec = squarefree_decomposition(p);
        Poly prod(Rational(1));
        for (const auto& [f, m] : dec) {
            EXPECT_TRUE(f.is_monic());
            EXPECT_EQ(poly_gcd(f, f.derivative()).degree(), 0);
            for (int k = 0; k < m; ++k) prod = prod * f;
        }
        EXPECT_EQ(prod, p.monic());
        for (std::size_t a = 0; a < dec.size(); ++a)
            for (std::size_t b = a + 1; b < dec.size(); ++b)
                EXPECT_EQ(poly_gcd(dec[a].factor, dec[b].factor).degree(), 0);
    }
}

TEST(Reciprocal, WorkedExamples) {
    EXPECT_EQ(reciprocal(P({1, -3, 1})), P({1, -3, 1}));  // palindromic
    EXPECT_EQ(reciprocal(P({-2, 1})), P({1, -2}));        // x-2 -> -2x+1
    EXPECT_EQ(reciprocal(P({0, 1, 0, 2})), P({2, 0, 1})); // 2x^3+x -> x^2+2
    EXPECT_THROW(reciprocal(Poly()), std::invalid_argument);
}

TEST(Reciprocal, InvolutionWhenNonzeroConstant) {
    testutil::Rng rng(7003);
    for (int i = 0; i < 200; ++i) {
        Poly p = testutil::random_int_poly(rng, 9, 9);
        if (p.coeff(0) == 0) continue;
        EXPECT_EQ(reciprocal(reciprocal(p)), p);
    }
}

TEST(Sturm, WorkedExamples) {
    EXPECT_EQ(sturm_count(P({-2, 0, 1}), Rational(0), Rational(2)), 1);
    EXPECT_EQ(sturm_count(P({1, 0, 1}), Rational(-10), Rational(10)), 0);
    EXPECT_EQ(sturm_count(P({0, -3, 0, 1}), Rational(-5, 2), Rational(5, 2)), 3);
}

TEST(Sturm, EndpointRootErrors) {
    EXPECT_THROW(sturm_count(P({-1, 1}), Rational(1), Rational(2)), std::runtime_error);
    EXPECT_THROW(sturm_count(P({-1, 1}), Rational(0), Rational(1)), std::runtime_error);
    EXPECT_THROW(sturm_count(P({-1, 1}), Rational(2), Rational(1)), std::invalid_argument);
    EXPECT_THROW(sturm_count(P({1, -2, 1}), Rational(0), Rational(2)), std::invalid_argument);
}

TEST(Sturm, NudgeHelper) {
    Poly p = P({-1, 1});
    Rational moved = nudge_off_root(p, Rational(1), 1);
    EXPECT_GT(moved, Rational(1));
    EXPECT_NE(p.eval(moved), Rational(0));
}

TEST(Sturm, MatchesNumericalIsolatorOn500Randoms) {
    testutil::Rng rng(7004);
    for (int i = 0; i < 500; ++i) {
        Poly p = testutil::random_squarefree_int_poly(rng, 10, 9);
        Rational lo(-12), hi(12);  // beyond the Cauchy bound for these coefficients
        if (p.eval(lo) == 0 || p.eval(hi) == 0) continue;
        int exact = sturm_count(p, lo, hi);
        int numeric = testutil::real_roots_in(p, -12.0, 12.0);
        EXPECT_EQ(exact, numeric) << "poly: " << p.to_string();
    }
}

TEST(Poly, ContentAndPrimitive) {
    Poly p = P({2, 4, 6});
    EXPECT_EQ(p.content(), Rational(2));
    EXPECT_EQ(p.primitive(), P({1, 2, 3}));
    Poly q = P({-2, -4});
    EXPECT_EQ(q.primitive(), P({-1, -2}));  // leading sign preserved
    Poly r(std::vector<Rational>{Rational(1, 2), Rational(3, 4)});
    EXPECT_EQ(r.content(), Rational(1, 4));
    EXPECT_EQ(r.primitive(), P({2, 3}));
}

}  // namespace
