#include <percrit/criterion.hpp>

#include <gtest/gtest.h>

#include "support/random_gen.hpp"

using namespace percrit;

namespace {

IntMatrix M2(long a, long b, long c, long d) {
    return IntMatrix(2, {Integer(a), Integer(b), Integer(c), Integer(d)});
}

const IntMatrix kCat = M2(2, 1, 1, 1);

TEST(ClassifySpectrum, WorkedExamples) {
    SpectralClassification c = classify_spectrum(kCat);
    EXPECT_EQ(c.counts, (UnitCircleCount{1, 0, 1}));
    EXPECT_FALSE(c.repeated_outside);
    EXPECT_EQ(c.genus, 1);
    EXPECT_EQ(c.char_poly.degree(), 2);

    SpectralClassification j = classify_spectrum(M2(2, 1, 0, 2));
    EXPECT_EQ(j.counts, (UnitCircleCount{0, 0, 2}));
    EXPECT_TRUE(j.repeated_outside);

    SpectralClassification id = classify_spectrum(IntMatrix::identity(2));
    EXPECT_EQ(id.counts, (UnitCircleCount{0, 2, 0}));
    EXPECT_FALSE(id.repeated_outside);
}

TEST(ClassifySpectrum, RepeatedOutsideImpliesTwoOutside) {
    testutil::Rng rng(10001);
    for (int i = 0; i < 60; ++i) {
        IntMatrix m = testutil::random_int_matrix(rng, 4, 3);
        SpectralClassification c = classify_spectrum(m);
        if (c.repeated_outside) EXPECT_GE(c.counts.n_out, 2);
    }
}

TEST(Theorem1, WorkedExamples) {
    for (Semantics sem : {Semantics::Spectral, Semantics::StrictPairing}) {
        CriterionVerdict cat = theorem1_criterion(kCat, sem);
        EXPECT_TRUE(cat.satisfied);
        EXPECT_EQ(cat.witness, Witness::HyperbolicPair);

        CriterionVerdict shear = theorem1_criterion(M2(1, 1, 0, 1), sem);
        EXPECT_FALSE(shear.satisfied);
        EXPECT_EQ(shear.witness, Witness::None);

        // Companion of x^2 - x - 2: eigenvalues -1 and 2; one root on the
        // circle blocks the criterion under both semantics.
        CriterionVerdict div = theorem1_criterion(M2(0, 1, 2, 1), sem);
        EXPECT_FALSE(div.satisfied);
    }

    CriterionVerdict twice = theorem1_criterion(M2(2, 0, 0, 2));
    EXPECT_TRUE(twice.satisfied);
    EXPECT_EQ(twice.witness, Witness::ExpansivePair);

    CriterionVerdict jordan = theorem1_criterion(M2(2, 1, 0, 2));
    EXPECT_TRUE(jordan.satisfied);
    EXPECT_EQ(jordan.witness, Witness::RepeatedExpansiveBlock);
    EXPECT_EQ(theorem1_criterion(M2(2, 1, 0, 2), Semantics::StrictPairing).witness,
              Witness::RepeatedExpansiveBlock);
}

TEST(Theorem1, GenusTwoBlockDiagonal) {
    // Anosov block plus an order-4 rotation block: eigenvalues (3 +- sqrt5)/2
    // and +-i, so counts (1, 2, 1) and a hyperbolic pair across the blocks.
    IntMatrix m(4);
    m.at(0, 0) = 2; m.at(0, 1) = 1; m.at(1, 0) = 1; m.at(1, 1) = 1;
    m.at(2, 3) = 1; m.at(3, 2) = -1;
    SpectralClassification c = classify_spectrum(m);
    EXPECT_EQ(c.genus, 2);
    EXPECT_EQ(c.counts, (UnitCircleCount{1, 2, 1}));
    EXPECT_FALSE(c.repeated_outside);
    for (Semantics sem : {Semantics::Spectral, Semantics::StrictPairing}) {
        CriterionVerdict v = theorem1_criterion(m, sem);
        EXPECT_TRUE(v.satisfied);
        EXPECT_EQ(v.witness, Witness::HyperbolicPair);
    }

    // Two rotation blocks: everything on the circle, criterion silent.
    IntMatrix rot2(4);
    rot2.at(0, 1) = 1; rot2.at(1, 0) = -1;
    rot2.at(2, 3) = 1; rot2.at(3, 2) = -1;
    EXPECT_FALSE(theorem1_criterion(rot2).satisfied);
    EXPECT_FALSE(theorem1_criterion(rot2, Semantics::StrictPairing).satisfied);
}

TEST(Theorem1, RejectsOddDimension) {
    IntMatrix odd(3);
    EXPECT_THROW(theorem1_criterion(odd), std::invalid_argument);
    EXPECT_THROW(classify_spectrum(odd), std::invalid_argument);
}

TEST(Theorem1, ConjugationInvariance) {
    testutil::Rng rng(10002);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = (i % 2 == 0) ? 2 : 4;
        IntMatrix m = testutil::random_int_matrix(rng, n, 4);
        auto [s, s_inv] = testutil::random_unimodular(rng, n);
        IntMatrix conj = s * m * s_inv;
        for (Semantics sem : {Semantics::Spectral, Semantics::StrictPairing}) {
            CriterionVerdict a = theorem1_criterion(m, sem);
            CriterionVerdict b = theorem1_criterion(conj, sem);
            EXPECT_EQ(a.satisfied, b.satisfied);
            EXPECT_EQ(a.witness, b.witness);
            EXPECT_EQ(a.satisfied, a.witness != Witness::None);
        }
        EXPECT_EQ(classify_spectrum(m).counts, classify_spectrum(conj).counts);
    }
}

TEST(Theorem1, StrictImpliesSpectral) {
    testutil::Rng rng(10003);
    for (int i = 0; i < 120; ++i) {
        std::size_t n = (i % 3 == 0) ? 4 : 2;
        IntMatrix m = testutil::random_int_matrix(rng, n, 5);
        if (theorem1_criterion(m, Semantics::StrictPairing).satisfied)
            EXPECT_TRUE(theorem1_criterion(m, Semantics::Spectral).satisfied);
    }
}

TEST(TorusCorollary, WorkedExamples) {
    CriterionVerdict ok = torus_corollary({Integer(3), Integer(1)});
    EXPECT_TRUE(ok.satisfied);
    EXPECT_EQ(ok.witness, Witness::HyperbolicPair);

    EXPECT_FALSE(torus_corollary({Integer(0), Integer(1)}).satisfied);  // in M6
    EXPECT_FALSE(torus_corollary({Integer(2), Integer(1)}).satisfied);  // on the line

    // (1,-2): corollary satisfied but the Theorem-1 sub-verdict is not; the
    // witness is reported as-is (None), surfacing the divergence.
    CriterionVerdict div = torus_corollary({Integer(1), Integer(-2)});
    EXPECT_TRUE(div.satisfied);
    EXPECT_EQ(div.witness, Witness::None);
}

TEST(TorusCorollary, AllSixExceptionalPairs) {
    const long m6[6][2] = {{0, 0}, {-1, 0}, {-2, 1}, {0, 1}, {-1, 1}, {1, 1}};
    for (auto& td : m6)
        EXPECT_FALSE(torus_corollary({Integer(td[0]), Integer(td[1])}).satisfied);
}

TEST(TorusCorollary, ConsistencyWithTheorem1OnGrid) {
    for (long t = -10; t <= 10; ++t) {
        for (long d = -10; d <= 10; ++d) {
            CriterionVerdict cor = torus_corollary({Integer(t), Integer(d)});
            CriterionVerdict thm =
                theorem1_criterion(IntMatrix::companion(torus_char_poly({Integer(t), Integer(d)})));
            if (!cor.satisfied) EXPECT_FALSE(thm.satisfied) << "t=" << t << " d=" << d;
            if (thm.satisfied) EXPECT_TRUE(cor.satisfied) << "t=" << t << " d=" << d;
        }
    }
}

TEST(Lefschetz, WorkedExamples) {
    EXPECT_EQ(lefschetz_iterate(kCat, Integer(1), 1), Integer(-1));
    EXPECT_EQ(lefschetz_iterate(IntMatrix::identity(2), Integer(1), 1), Integer(0));
    EXPECT_EQ(lefschetz_iterate(IntMatrix::identity(2), Integer(1), 7), Integer(0));
    EXPECT_EQ(lefschetz_iterate(kCat, Integer(1), 2), Integer(-5));
    EXPECT_THROW(lefschetz_iterate(kCat, Integer(1), 0), std::invalid_argument);
}

TEST(Lefschetz, MatchesDeterminantIdentityFor2x2) {
    testutil::Rng rng(10004);
    for (int i = 0; i < 50; ++i) {
        IntMatrix m = testutil::random_int_matrix(rng, 2, 6);
        for (unsigned long n = 1; n <= 10; ++n) {
            Integer lhs = lefschetz_iterate(m, determinant(m), n);
            Integer rhs = determinant(IntMatrix::identity(2) - matrix_power(m, n));
            EXPECT_EQ(lhs, rhs);
        }
    }
}

}  // namespace
