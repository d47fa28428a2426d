#include <gtest/gtest.h>

#include <vector>

#include <ribbonlab/fredholm.hpp>

#include "oracle.hpp"

using namespace ribbonlab;

namespace
{

const Field Q = Field::rational();

LaurentPoly u(int e, long c = 1)
{
    return LaurentPoly::monomial(Q, e, c);
}

LaurentVector v1(const LaurentPoly &p)
{
    return LaurentVector{p};
}

std::vector<LaurentVector> powers(int lo, int hi)
{
    std::vector<LaurentVector> rows;
    for (int e = lo; e <= hi; ++e) {
        rows.push_back(v1(u(e)));
    }
    return rows;
}

} // namespace

TEST(Echelon, ReducedForm)
{
    const auto W = WindowedSubspace::echelonize(Q, {v1(u(1) + u(0)), v1(u(1))}, 1, -4, 4, false);
    ASSERT_EQ(W.dimension(), 2u);
    EXPECT_EQ(W.rows()[0], v1(u(0)));
    EXPECT_EQ(W.rows()[1], v1(u(1)));
    const auto profile = W.pivot_profile();
    EXPECT_EQ(profile[0], (Pivot{1, 0}));
    EXPECT_EQ(profile[1], (Pivot{1, 1}));
}

TEST(Echelon, DuplicatesAndEmpty)
{
    const auto W = WindowedSubspace::echelonize(Q, {v1(u(-1)), v1(u(-1))}, 1, -4, 4, false);
    EXPECT_EQ(W.dimension(), 1u);
    EXPECT_EQ(WindowedSubspace::echelonize(Q, {}, 1, -4, 4, false).dimension(), 0u);
}

TEST(Echelon, SupportOutsideWindow)
{
    EXPECT_THROW(WindowedSubspace::echelonize(Q, {v1(u(4))}, 1, -4, 4, true), error);
    EXPECT_THROW(WindowedSubspace::echelonize(Q, {v1(u(-5))}, 1, -4, 4, false), error);
    // Below-window terms are absorbed by the tail.
    const auto W = WindowedSubspace::echelonize(Q, {v1(u(-5) + u(1))}, 1, -4, 4, true);
    EXPECT_EQ(W.rows()[0], v1(u(1)));
}

TEST(Membership, Examples)
{
    const auto W = WindowedSubspace::echelonize(Q, {v1(u(0)), v1(u(1))}, 1, -4, 4, false);
    EXPECT_EQ(W.membership(v1(u(0, 3) + u(1, 2))), Membership::in);
    const auto W1 = WindowedSubspace::echelonize(Q, {v1(u(0))}, 1, -4, 4, false);
    EXPECT_EQ(W1.membership(v1(u(1))), Membership::not_in);
    const auto T = WindowedSubspace::echelonize(Q, powers(-4, 0), 1, -4, 4, true);
    EXPECT_THROW(T.membership(v1(u(-7))), error);
    EXPECT_EQ(T.membership(v1(u(-3) + u(-1))), Membership::in);
}

TEST(FredholmIndex, Examples)
{
    EXPECT_EQ(WindowedSubspace::echelonize(Q, powers(-4, 0), 1, -4, 4, true).fredholm_index(), 1);
    auto gap = powers(-4, -2);
    gap.push_back(v1(u(0)));
    EXPECT_EQ(WindowedSubspace::echelonize(Q, gap, 1, -4, 4, true).fredholm_index(), 0);
    try {
        (void)WindowedSubspace::echelonize(Q, {}, 1, -4, 4, false).fredholm_index();
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::not_cocompact);
    }
}

TEST(FredholmIndex, TopMarginContact)
{
    const auto W = WindowedSubspace::echelonize(Q, powers(-4, 2), 1, -4, 4, true);
    EXPECT_EQ(W.fredholm_index(1), 3);
    try {
        (void)W.fredholm_index(2);
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::window_too_small);
    }
}

TEST(FredholmIndex, OracleOnExamples)
{
    auto gap = powers(-4, -2);
    gap.push_back(v1(u(0)));
    EXPECT_EQ(oracle::brute_index(gap, 1, -4, 4, Q), 0);
    EXPECT_EQ(oracle::brute_index(powers(-4, 0), 1, -4, 4, Q), 1);
}

TEST(PivotProfile, Examples)
{
    const auto W = WindowedSubspace::echelonize(Q, {v1(u(-2) + u(1))}, 1, -4, 4, false);
    EXPECT_EQ(W.pivot_profile(), (std::vector<Pivot>{{1, -2}}));
    const auto W2 =
        WindowedSubspace::echelonize(Q, {LaurentVector{u(-1), LaurentPoly(Q)}, LaurentVector{LaurentPoly(Q), u(0)}}, 2,
                                     -4, 4, false);
    EXPECT_EQ(W2.pivot_profile(), (std::vector<Pivot>{{1, -1}, {2, 0}}));
}

TEST(FredholmIndex, DirectSumAdds)
{
    const auto a = WindowedSubspace::echelonize(Q, powers(-4, 2), 1, -4, 4, true);
    auto gap = powers(-4, -2);
    gap.push_back(v1(u(0)));
    const auto b = WindowedSubspace::echelonize(Q, gap, 1, -4, 4, true);
    const auto s = direct_sum(a, b);
    EXPECT_EQ(s.rank(), 2u);
    EXPECT_EQ(s.fredholm_index(), a.fredholm_index() + b.fredholm_index());
}

TEST(FredholmIndex, WindowMustStraddleZero)
{
    const auto W = WindowedSubspace::echelonize(Q, powers(1, 2), 1, 1, 4, true);
    EXPECT_THROW((void)W.fredholm_index(), error);
}

TEST(Enlargement, MaterializesTail)
{
    const auto W = WindowedSubspace::echelonize(Q, powers(-2, 0), 1, -2, 3, true);
    const auto E = W.enlarged(-5, 6);
    EXPECT_EQ(E.dimension(), 6u);
    EXPECT_EQ(E.fredholm_index(), W.fredholm_index());
    EXPECT_EQ(E.membership(v1(u(-5) + u(-1))), Membership::in);
    EXPECT_THROW(W.enlarged(-1, 3), error);
}
