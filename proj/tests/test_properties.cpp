#include <gtest/gtest.h>

#include <optional>
#include <vector>

#include <ribbonlab/ribbonlab.hpp>

#include "oracle.hpp"

using namespace ribbonlab;

namespace
{

constexpr int kCases = 1000;

struct RandomSubspace {
    Field field;
    std::size_t r;
    int u_lo;
    int u_hi;
    std::vector<LaurentVector> rows;
};

RandomSubspace random_subspace(oracle::Gen &g, int max_width, std::size_t max_rank,
                               std::optional<Field> field = std::nullopt)
{
    RandomSubspace s{field ? *field : g.field(), static_cast<std::size_t>(g.uniform(1, static_cast<int>(max_rank))), 0, 0, {}};
    const int width = g.uniform(2, max_width);
    s.u_lo = -g.uniform(1, width - 1);
    s.u_hi = s.u_lo + width;
    const int n = g.uniform(0, width * static_cast<int>(s.r));
    for (int i = 0; i < n; ++i) {
        LaurentVector v;
        for (std::size_t c = 0; c < s.r; ++c) {
            v.push_back(g.coin(0.7) ? g.laurent(s.field, s.u_lo, s.u_hi - 1, 3) : LaurentPoly(s.field));
        }
        s.rows.push_back(std::move(v));
    }
    return s;
}

LaurentVector random_vector(oracle::Gen &g, const RandomSubspace &s)
{
    LaurentVector v;
    for (std::size_t c = 0; c < s.r; ++c) {
        v.push_back(g.laurent(s.field, s.u_lo, s.u_hi - 1, 3));
    }
    if (!s.rows.empty() && g.coin()) {
        // A combination of the rows, possibly perturbed.
        v = zero_vector(s.field, s.r);
        for (const auto &row : s.rows) {
            const auto k = g.scalar(s.field);
            for (std::size_t c = 0; c < s.r; ++c) {
                v[c] = v[c] + row[c].scaled(k);
            }
        }
        if (g.coin(0.3)) {
            v[0].add_term(g.uniform(s.u_lo, s.u_hi - 1), g.scalar(s.field, true));
        }
    }
    return v;
}

std::vector<linalg::Row> random_matrix(oracle::Gen &g, const Field &f)
{
    const int rows = g.uniform(0, 7);
    const int cols = g.uniform(1, 8);
    std::vector<linalg::Row> m;
    for (int i = 0; i < rows; ++i) {
        linalg::Row r;
        for (int j = 0; j < cols; ++j) {
            r.push_back(g.coin(0.4) ? Scalar::zero(f) : g.scalar(f));
        }
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace

TEST(Properties, EchelonIdempotent)
{
    oracle::Gen g(1001);
    for (int i = 0; i < kCases; ++i) {
        const auto f = g.field();
        const auto m = random_matrix(g, f);
        const auto once = linalg::rref(m);
        const auto twice = linalg::rref(once.rows);
        ASSERT_EQ(twice.rows, once.rows);
        ASSERT_EQ(twice.pivots, once.pivots);
        ASSERT_EQ(once.rows.size(), oracle::rank(m, f));
        for (std::size_t k = 0; k < once.rows.size(); ++k) {
            ASSERT_TRUE(once.rows[k][once.pivots[k]].is_one());
            for (std::size_t l = 0; l < once.rows.size(); ++l) {
                if (l != k) {
                    ASSERT_TRUE(once.rows[l][once.pivots[k]].is_zero());
                }
            }
        }
    }
}

TEST(Properties, EchelonizePreservesSpan)
{
    oracle::Gen g(1002);
    for (int i = 0; i < kCases; ++i) {
        const auto s = random_subspace(g, 10, 2);
        const auto W = WindowedSubspace::echelonize(s.field, s.rows, s.r, s.u_lo, s.u_hi, false);
        for (const auto &row : s.rows) {
            ASSERT_EQ(W.membership(row), Membership::in);
        }
        const auto again = WindowedSubspace::echelonize(s.field, W.rows(), s.r, s.u_lo, s.u_hi, false);
        ASSERT_EQ(again, W);
        std::vector<std::vector<Scalar>> dense;
        for (const auto &row : s.rows) {
            dense.push_back(oracle::dense(row, s.u_lo, s.u_hi, s.field));
        }
        ASSERT_EQ(W.dimension(), oracle::rank(dense, s.field));
    }
}

TEST(Properties, MembershipMatchesBruteForce)
{
    oracle::Gen g(1003);
    int in = 0;
    for (int i = 0; i < kCases; ++i) {
        const auto s = random_subspace(g, 12, 2);
        const auto W = WindowedSubspace::echelonize(s.field, s.rows, s.r, s.u_lo, s.u_hi, false);
        const auto v = random_vector(g, s);
        const bool expect = oracle::in_span(s.rows, v, s.u_lo, s.u_hi, s.field);
        ASSERT_EQ(W.membership(v) == Membership::in, expect);
        in += expect ? 1 : 0;
    }
    EXPECT_GT(in, kCases / 10);
    EXPECT_LT(in, kCases);
}

TEST(Properties, FredholmIndexMatchesBruteForce)
{
    oracle::Gen g(1004);
    for (int i = 0; i < kCases; ++i) {
        const auto s = random_subspace(g, 16, 3);
        const auto W = WindowedSubspace::echelonize(s.field, s.rows, s.r, s.u_lo, s.u_hi, true);
        ASSERT_EQ(W.fredholm_index(), oracle::brute_index(s.rows, s.r, s.u_lo, s.u_hi, s.field));
    }
}

TEST(Properties, IndexStableUnderEnlargement)
{
    oracle::Gen g(1005);
    for (int i = 0; i < kCases; ++i) {
        const auto s = random_subspace(g, 10, 2);
        const auto W = WindowedSubspace::echelonize(s.field, s.rows, s.r, s.u_lo, s.u_hi, true);
        const auto E = W.enlarged(s.u_lo - g.uniform(0, 4), s.u_hi + g.uniform(0, 4));
        ASSERT_EQ(E.fredholm_index(), W.fredholm_index());
        const auto v = random_vector(g, s);
        ASSERT_EQ(E.membership(v), W.membership(v));
    }
}

TEST(Properties, IndexAdditiveOnDirectSums)
{
    oracle::Gen g(1006);
    for (int i = 0; i < kCases; ++i) {
        const auto a = random_subspace(g, 8, 2);
        auto b = random_subspace(g, 8, 2, a.field);
        for (auto &row : b.rows) {
            for (auto &p : row) {
                LaurentPoly q(a.field);
                for (const auto &[e, c] : p.terms()) {
                    if (e >= a.u_lo && e < a.u_hi) {
                        q.add_term(e, c);
                    }
                }
                p = q;
            }
        }
        const auto A = WindowedSubspace::echelonize(a.field, a.rows, a.r, a.u_lo, a.u_hi, true);
        const auto B = WindowedSubspace::echelonize(a.field, b.rows, b.r, a.u_lo, a.u_hi, true);
        ASSERT_EQ(direct_sum(A, B).fredholm_index(), A.fredholm_index() + B.fredholm_index());
    }
}

TEST(Properties, OrderAdditiveUnderProduct)
{
    oracle::Gen g(1007);
    int checked = 0;
    while (checked < kCases) {
        const auto f = g.field();
        const auto x = g.element(f, -6, 6, 5);
        const auto y = g.element(f, -6, 6, 5);
        if (x.is_zero() || y.is_zero()) {
            continue;
        }
        ASSERT_EQ((x * y).ord_t(), x.ord_t() + y.ord_t());
        ++checked;
    }
}

TEST(Properties, LaurentRingAxioms)
{
    oracle::Gen g(1008);
    int checked = 0;
    while (checked < kCases) {
        const auto f = g.field();
        const auto x = g.laurent(f, -5, 5, 4);
        const auto y = g.laurent(f, -5, 5, 4);
        const auto z = g.laurent(f, -5, 5, 4);
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_TRUE((x + (-x)).terms().empty());
        if (!x.is_zero() && !y.is_zero()) {
            ASSERT_EQ((x * y).ord(), x.ord() + y.ord());
        }
        ++checked;
    }
}

TEST(Properties, SerreDualityOnLine)
{
    oracle::Gen g(1009);
    for (int i = 0; i < kCases; ++i) {
        const int B = g.uniform(4, 9);
        const int d = g.uniform(-B + 2, B - 4);
        const auto f = g.coin() ? Field::rational() : Field::prime(7);
        const auto a = cech_line_bundle(d, B, f);
        const auto b = cech_line_bundle(-2 - d, B, f);
        ASSERT_EQ(a.h0, b.h1);
        ASSERT_EQ(a.h1, b.h0);
    }
}

TEST(Properties, LayeredMembershipIsSound)
{
    oracle::Gen g(1010);
    for (int i = 0; i < kCases; ++i) {
        const auto f = g.field();
        const auto w = Window2D::make(-g.uniform(1, 3), g.uniform(1, 3), -g.uniform(2, 5), g.uniform(2, 5), 0,
                                      g.uniform(0, 1));
        std::vector<WindowedSubspace> levels;
        for (int b = w.t_lo; b < w.t_hi; ++b) {
            std::vector<LaurentVector> rows;
            const int n = g.uniform(0, 3);
            for (int k = 0; k < n; ++k) {
                rows.push_back({g.laurent(f, w.u_lo, w.u_hi - 1, 2)});
            }
            levels.push_back(WindowedSubspace::echelonize(f, rows, 1, w.u_lo, w.u_hi, g.coin()));
        }
        const auto L = LayeredSubspace::make(f, 1, w, levels, {});
        Local2DElement x(f);
        for (int b = w.t_lo; b < w.t_hi; ++b) {
            if (g.coin(0.6) && L.level(b).dimension() > 0) {
                const auto rows = L.level(b).rows();
                const auto &row = rows[static_cast<std::size_t>(g.uniform(0, static_cast<int>(rows.size()) - 1))];
                x = x + Local2DElement::lift(row[0].scaled(g.scalar(f)), b);
            }
            if (g.coin(0.2)) {
                x.add_term(g.uniform(w.u_lo, w.u_hi - 1), b, g.scalar(f, true));
            }
        }
        const auto m = L.membership(scalar_vector(x));
        // Brute force: every t-coefficient lies in its level.
        bool all = true;
        for (int b = w.t_lo; b < w.t_hi; ++b) {
            const auto c = x.t_coefficient(b);
            if (!c.is_zero() && L.level(b).membership({c}) == Membership::not_in) {
                all = false;
            }
        }
        if (!all) {
            ASSERT_NE(m, Membership::in);
        } else {
            ASSERT_NE(m, Membership::not_in);
        }
    }
}

TEST(Properties, BuiltPairsPassAtAdequateWindows)
{
    oracle::Gen g(1011);
    int admissible = 0;
    for (int i = 0; i < 200; ++i) {
        const auto kind = g.coin() ? ExampleKind::p2_line : ExampleKind::nilpotent;
        const int m = g.uniform(0, 3);
        const int tw = g.uniform(8, 12);
        const int uw = g.uniform(12, 24);
        const int t_lo = -g.uniform(3, tw - 3);
        const int u_lo = -g.uniform(uw / 2, uw - 6);
        const auto w = Window2D::make(t_lo, t_lo + tw, u_lo, u_lo + uw, 2, g.uniform(2, 3));
        const auto datum = GeometricDatum::make(kind, m);
        std::optional<SchurPair> P;
        try {
            P = forward_krichever(datum, w);
        } catch (const error &e) {
            ASSERT_EQ(e.code(), errc::window_too_small);
            continue;
        }
        // Admissible: every interior level is visible with room to spare.
        bool visible = true;
        for (int b = w.t_lo + w.m_t; b < w.t_hi - w.m_t; ++b) {
            const auto cap = datum.level_cap(b, true);
            visible = visible && cap && *cap < w.u_hi - w.m_u && w.u_lo <= 0;
        }
        if (!visible) {
            continue;
        }
        ++admissible;
        const auto rep = check_schur_pair(*P);
        ASSERT_EQ(rep.verdict, Verdict::pass) << "window t[" << w.t_lo << "," << w.t_hi << ") u[" << w.u_lo << ","
                                              << w.u_hi << ") m=" << m;
    }
    EXPECT_GT(admissible, 20);
}
