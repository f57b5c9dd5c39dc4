#include <percrit/pl_intersection.hpp>

#include <gtest/gtest.h>

#include <vector>

using namespace percrit;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

TEST(PLLoop, Validation) {
    EXPECT_THROW(PLLoop({{R(0), R(0)}}), std::invalid_argument);
    EXPECT_THROW(PLLoop({{R(1, 3), R(1, 3)}, {R(1, 3), R(1, 3)}}), std::invalid_argument);
    EXPECT_THROW(PLLoop({{R(0), R(0)}, {R(1), R(1, 2)}}), std::invalid_argument);  // x = 1 not in [0,1)
    // Repeated vertex inside a longer loop makes a zero-length edge.
    EXPECT_THROW(PLLoop({{R(0), R(0)}, {R(0), R(0)}, {R(1, 2), R(1, 2)}}), std::invalid_argument);
}

TEST(PLLoop, ShortestDisplacement) {
    PLLoop loop({{R(9, 10), R(1, 2)}, {R(1, 10), R(1, 2)}});
    auto [dx, dy] = loop.displacement(0);
    EXPECT_EQ(dx, R(1, 5));  // wraps across x = 1
    EXPECT_EQ(dy, R(0));
}

TEST(Intersection, BasisIdentity) {
    auto [a, b] = basis_loops();
    EXPECT_EQ(signed_intersection_number(a, b), 1);
    EXPECT_EQ(signed_intersection_number(b, a), -1);
    PLLoop a_translate = a.translated(R(0), R(1, 3));  // parallel loop at y = 2/3
    EXPECT_EQ(signed_intersection_number(a, a_translate), 0);
    PLLoop b_translate = b.translated(R(1, 3), R(0));
    EXPECT_EQ(signed_intersection_number(b, b_translate), 0);
}

TEST(Intersection, DoubledLoopDoublesTheCount) {
    auto [a, b] = basis_loops();
    // a traversed twice, vertices doubled around.
    PLLoop doubled({{R(0), R(1, 3)}, {R(1, 2), R(1, 3)}, {R(0), R(1, 3)}, {R(1, 2), R(1, 3)}});
    EXPECT_EQ(signed_intersection_number(doubled, b), 2);
    // Same class with the second circuit offset a hair.
    PLLoop offset({{R(0), R(1, 3)},
                   {R(1, 2), R(1, 3)},
                   {R(0), R(1, 3) + R(1, 1000000)},
                   {R(1, 2), R(1, 3) + R(1, 1000000)}});
    EXPECT_EQ(signed_intersection_number(offset, b), 2);
}

TEST(Intersection, Antisymmetry) {
    std::vector<PLLoop> loops = {
        winding_loop(1, 0, R(1, 7), R(2, 7)),
        winding_loop(0, 1, R(3, 11), R(5, 11)),
        winding_loop(1, 1, R(1, 13), R(2, 13)),
        winding_loop(2, -1, R(3, 17), R(5, 17)),
    };
    for (std::size_t i = 0; i < loops.size(); ++i)
        for (std::size_t j = 0; j < loops.size(); ++j) {
            if (i == j) continue;
            EXPECT_EQ(signed_intersection_number(loops[i], loops[j]),
                      -signed_intersection_number(loops[j], loops[i]));
        }
}

TEST(Intersection, TranslationInvariance) {
    PLLoop s = winding_loop(1, 2, R(1, 7), R(2, 7));
    PLLoop t = winding_loop(2, -1, R(3, 11), R(5, 11));
    long base = signed_intersection_number(s, t);
    for (long k = 1; k <= 5; ++k) {
        PLLoop moved = t.translated(R(k, 23), R(k, 29));
        EXPECT_EQ(signed_intersection_number(s, moved), base);
    }
}

TEST(Intersection, WindingBilinearForm) {
    // <(m,n), (m',n')> = m n' - n m'.
    for (long m = -3; m <= 3; ++m)
        for (long n = -3; n <= 3; ++n)
            for (long mp = -3; mp <= 3; ++mp)
                for (long np = -3; np <= 3; ++np) {
                    if ((m == 0 && n == 0) || (mp == 0 && np == 0)) continue;
                    PLLoop s = winding_loop(m, n, R(1, 64), R(1, 128));
                    PLLoop t = winding_loop(mp, np, R(3, 255), R(7, 511));
                    EXPECT_EQ(signed_intersection_number(s, t), m * np - n * mp)
                        << "(" << m << "," << n << ") vs (" << mp << "," << np << ")";
                }
}

TEST(Intersection, DegeneracyRaises) {
    auto [a, b] = basis_loops();
    // Shared point: translate b so it passes through a vertex of a.
    PLLoop through_vertex({{R(0), R(0)}, {R(0), R(1, 2)}});  // vertical line x = 0
    EXPECT_THROW(signed_intersection_number(a, through_vertex), std::runtime_error);
    // Collinear overlap.
    PLLoop same_line({{R(1, 4), R(1, 3)}, {R(3, 4), R(1, 3)}});
    EXPECT_THROW(signed_intersection_number(a, same_line), std::runtime_error);
}

}  // namespace
