#ifndef RIBBONLAB_COHOMOLOGY_HPP
#define RIBBONLAB_COHOMOLOGY_HPP

#include <cstddef>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include <ribbonlab/error.hpp>
#include <ribbonlab/geometry.hpp>
#include <ribbonlab/linalg.hpp>
#include <ribbonlab/scalar.hpp>

namespace ribbonlab
{

// Twists d_0, d_1, ... of the graded pieces O(d_j) of a truncated sheaf.
struct LevelStack {
    std::vector<int> twists;

    static LevelStack for_datum(const GeometricDatum &g, int top_level)
    {
        if (g.kind != ExampleKind::p2_line) {
            throw error(errc::unsupported, "level stacks are modeled for p2-line only");
        }
        LevelStack s;
        for (int j = 0; j <= top_level; ++j) {
            s.twists.push_back(g.twist - j * g.selfint);
        }
        return s;
    }

    LevelStack prefix(std::size_t n) const
    {
        return LevelStack{std::vector<int>(twists.begin(), twists.begin() + static_cast<std::ptrdiff_t>(n))};
    }
};

struct LineCohomology {
    long h0 = 0;
    long h1 = 0;

    friend bool operator==(const LineCohomology &, const LineCohomology &) = default;
};

namespace detail
{

// Čech differential of O(d) on the charts z = u (U1) and w = 1/z (U2):
// (f, g) -> f(z) - z^d g(1/z), with f in z^0..z^B, g in w^0..w^{B+d}, target
// z^{-B}..z^B. One row per cochain basis vector, placed at column offset
// `offset` of a row of width `width`.
inline std::vector<linalg::Row> cech_rows(const Field &f, int d, int B, std::size_t offset, std::size_t width)
{
    std::vector<linalg::Row> rows;
    const auto col = [&](int e) { return offset + static_cast<std::size_t>(e + B); };
    for (int a = 0; a <= B; ++a) {
        auto row = linalg::zero_row(f, width);
        row[col(a)] = Scalar::one(f);
        rows.push_back(std::move(row));
    }
    for (int j = 0; j <= B + d; ++j) {
        auto row = linalg::zero_row(f, width);
        row[col(d - j)] = -Scalar::one(f);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void require_bound(int d, int B)
{
    if (B < std::abs(d) + 2) {
        throw error(errc::window_too_small,
                    "truncation bound " + std::to_string(B) + " below |d| + 2 for d = " + std::to_string(d));
    }
}

inline std::size_t cochain1_width(int B)
{
    return static_cast<std::size_t>(2 * B + 1);
}

struct Complex {
    std::vector<linalg::Row> rows;  // images of the C^0 basis
    std::size_t width = 0;          // dim C^1
};

inline Complex stack_complex(const Field &f, const LevelStack &s, int B)
{
    Complex c;
    c.width = cochain1_width(B) * s.twists.size();
    for (std::size_t j = 0; j < s.twists.size(); ++j) {
        auto rows = cech_rows(f, s.twists[j], B, j * cochain1_width(B), c.width);
        c.rows.insert(c.rows.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
    }
    return c;
}

inline LineCohomology cohomology_of(const Complex &c)
{
    const auto rk = static_cast<long>(linalg::rank(c.rows));
    return {static_cast<long>(c.rows.size()) - rk, static_cast<long>(c.width) - rk};
}

} // namespace detail

/// (h0, h1) of O(d) on P^1 from the truncated two-chart complex. The
/// computation is repeated at B + 1; a change means the bound was too small.
inline LineCohomology cech_line_bundle(int d, int B, const Field &field = Field::rational())
{
    detail::require_bound(d, B);
    LineCohomology out[2];
    for (int k = 0; k < 2; ++k) {
        const int b = B + k;
        detail::Complex c;
        c.width = detail::cochain1_width(b);
        c.rows = detail::cech_rows(field, d, b, 0, c.width);
        out[k] = detail::cohomology_of(c);
    }
    if (!(out[0] == out[1])) {
        throw error(errc::window_too_small, "Čech dimensions change between bounds " + std::to_string(B) + " and " +
                                                std::to_string(B + 1));
    }
    return out[0];
}

struct LevelCohomology {
    int d = 0;
    long h0 = 0;
    long h1 = 0;
};

struct StackCohomology {
    long h0 = 0;  // full block complex
    long h1 = 0;
    long levelwise_h0 = 0;
    long levelwise_h1 = 0;
    std::vector<LevelCohomology> levels;
    bool transition_surjective = true;
    int bound = 0;

    bool agree() const noexcept
    {
        return h0 == levelwise_h0 && h1 == levelwise_h1;
    }
};

namespace detail
{

// Cokernel representatives of the complex: unit vectors on the non-pivot
// columns of its image.
inline std::vector<linalg::Row> cokernel_representatives(const Field &f, const Complex &c)
{
    const auto ech = linalg::rref(c.rows);
    std::vector<bool> pivot(c.width, false);
    for (const auto p : ech.pivots) {
        pivot[p] = true;
    }
    std::vector<linalg::Row> reps;
    for (std::size_t col = 0; col < c.width; ++col) {
        if (!pivot[col]) {
            auto row = linalg::zero_row(f, c.width);
            row[col] = Scalar::one(f);
            reps.push_back(std::move(row));
        }
    }
    return reps;
}

// Is H^1(bigger) -> H^1(smaller) onto? `smaller` is the prefix of `bigger`
// with the last level dropped; cochains restrict by truncation.
inline bool transition_onto(const Field &f, const Complex &bigger, const Complex &smaller, long h1_smaller)
{
    auto reps = cokernel_representatives(f, bigger);
    std::vector<linalg::Row> span = smaller.rows;
    const auto base = static_cast<long>(linalg::rank(span));
    for (auto &r : reps) {
        r.resize(smaller.width, Scalar::zero(f));
        span.push_back(std::move(r));
    }
    return static_cast<long>(linalg::rank(std::move(span))) - base == h1_smaller;
}

} // namespace detail

inline StackCohomology ribbon_cohomology(const LevelStack &s, int B, const Field &field = Field::rational())
{
    StackCohomology out;
    out.bound = B;
    for (const int d : s.twists) {
        detail::require_bound(d, B);
        const auto lc = cech_line_bundle(d, B, field);
        out.levels.push_back({d, lc.h0, lc.h1});
        out.levelwise_h0 += lc.h0;
        out.levelwise_h1 += lc.h1;
    }
    const auto full = detail::stack_complex(field, s, B);
    const auto hc = detail::cohomology_of(full);
    out.h0 = hc.h0;
    out.h1 = hc.h1;

    for (std::size_t n = 1; n < s.twists.size(); ++n) {
        const auto bigger = detail::stack_complex(field, s.prefix(n + 1), B);
        const auto smaller = detail::stack_complex(field, s.prefix(n), B);
        const auto h1_smaller = detail::cohomology_of(smaller).h1;
        if (!detail::transition_onto(field, bigger, smaller, h1_smaller)) {
            out.transition_surjective = false;
        }
    }
    return out;
}

enum class Chart { u1, u2, u12 };

inline std::string to_string(Chart c)
{
    switch (c) {
        case Chart::u1:
            return "U1";
        case Chart::u2:
            return "U2";
        case Chart::u12:
            return "U12";
    }
    return "?";
}

struct RestrictionReport {
    bool pass = true;
    std::size_t pairs_checked = 0;
    std::vector<std::string> findings;
};

/// On an affine chart, sections of F_i/F_n restrict onto F_i/F_j for every
/// i < j <= n: the restriction has rank dim (F_i/F_j)(U) and kernel of
/// dimension dim (F_j/F_n)(U). Sections of O(d) on U1 are z^0..z^B, on U2
/// w^0..w^{B+d}.
inline RestrictionReport restriction_exactness_check(const LevelStack &s, Chart chart, int B,
                                                     const Field &field = Field::rational())
{
    if (chart == Chart::u12) {
        throw error(errc::invalid_argument, "the overlap U12 is not one of the affine covering charts");
    }
    std::vector<std::size_t> dims;
    for (const int d : s.twists) {
        detail::require_bound(d, B);
        dims.push_back(static_cast<std::size_t>(chart == Chart::u1 ? B + 1 : B + d + 1));
    }
    RestrictionReport rep;
    const std::size_t n = dims.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t total = 0;
        for (std::size_t k = i; k < n; ++k) {
            total += dims[k];
        }
        for (std::size_t j = i + 1; j <= n; ++j) {
            std::size_t target = 0;
            for (std::size_t k = i; k < j; ++k) {
                target += dims[k];
            }
            // Restriction matrix: identity on the first `target` coordinates.
            std::vector<linalg::Row> rows;
            for (std::size_t c = 0; c < total; ++c) {
                auto row = linalg::zero_row(field, target);
                if (c < target) {
                    row[c] = Scalar::one(field);
                }
                rows.push_back(std::move(row));
            }
            const auto rk = linalg::rank(std::move(rows));
            ++rep.pairs_checked;
            if (rk != target || total - rk != total - target) {
                rep.pass = false;
                rep.findings.push_back("F_" + std::to_string(i) + "/F_" + std::to_string(n) + " -> F_" +
                                       std::to_string(i) + "/F_" + std::to_string(j) + " not onto on " +
                                       to_string(chart));
            }
        }
    }
    return rep;
}

struct PicardReport {
    int i = 0;
    long dimension = 0;
    std::vector<long> graded_h1;  // h1(O(-j * selfint)), j = 1..i
    bool h0_vanishes = true;      // the hypothesis for the additive count
    int d = 0;                    // -(C.C)
    int bound = 0;
};

/// dim Pic^0(X_i) as the sum of h1 of the graded pieces of (1 + A_1)/(1 + A_{i+1}).
inline PicardReport picard_dimension(const GeometricDatum &g, int i, int B, const Field &field = Field::rational())
{
    if (g.kind != ExampleKind::p2_line) {
        throw error(errc::unsupported, "Picard dimension is modeled for p2-line only");
    }
    if (i < 1) {
        throw error(errc::invalid_argument, "level must be positive");
    }
    PicardReport rep;
    rep.i = i;
    rep.d = -g.selfint;
    rep.bound = B;
    for (int j = 1; j <= i; ++j) {
        const auto lc = cech_line_bundle(-j * g.selfint, B, field);
        rep.graded_h1.push_back(lc.h1);
        rep.dimension += lc.h1;
        if (lc.h0 != 0) {
            rep.h0_vanishes = false;
        }
    }
    return rep;
}

} // namespace ribbonlab

#endif
