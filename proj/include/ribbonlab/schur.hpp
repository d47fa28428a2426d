#ifndef RIBBONLAB_SCHUR_HPP
#define RIBBONLAB_SCHUR_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <ribbonlab/error.hpp>
#include <ribbonlab/fredholm.hpp>
#include <ribbonlab/laurent.hpp>
#include <ribbonlab/linalg.hpp>
#include <ribbonlab/local2d.hpp>

namespace ribbonlab
{

/// t-filtered subspace of K^{⊕r} inside a window. Level b holds the graded
/// slice W(b, b+1) as a windowed subspace of k((u))^{⊕r}; the modeled space
/// is the graded one, so the lift t^b * v of any level vector v belongs to it.
/// Levels are authoritative. Generators are closure witnesses and must not
/// contradict the levels.
class LayeredSubspace
{
public:
    static LayeredSubspace make(const Field &field, std::size_t r, const Window2D &window,
                                std::vector<WindowedSubspace> levels, std::vector<Local2DVector> generators)
    {
        window.validate();
        if (r == 0) {
            throw error(errc::invalid_argument, "rank must be positive");
        }
        if (levels.size() != static_cast<std::size_t>(window.t_width())) {
            throw error(errc::invalid_argument, "expected one level per t-exponent in [t_lo, t_hi)");
        }
        for (const auto &lv : levels) {
            require_same_field(field, lv.field());
            if (lv.rank() != r || lv.u_lo() != window.u_lo || lv.u_hi() != window.u_hi) {
                throw error(errc::invalid_argument, "level rank or u-window disagrees with the layered subspace");
            }
        }
        LayeredSubspace L(field, r, window, std::move(levels));
        for (const auto &g : generators) {
            if (g.size() != r) {
                throw error(errc::invalid_argument, "generator rank mismatch");
            }
            for (const auto &x : g) {
                require_same_field(field, x.field());
            }
            if (is_zero(g)) {
                throw error(errc::invalid_argument, "zero generator");
            }
            if (L.membership(g) == Membership::not_in) {
                throw error(errc::invalid_argument, "generator with leading order " + std::to_string(ord_t(g)) +
                                                        " is not contained in its levels");
            }
        }
        L.generators_ = std::move(generators);
        return L;
    }

    const Field &field() const noexcept
    {
        return field_;
    }
    std::size_t rank() const noexcept
    {
        return r_;
    }
    const Window2D &window() const noexcept
    {
        return window_;
    }
    const std::vector<WindowedSubspace> &levels() const noexcept
    {
        return levels_;
    }
    const std::vector<Local2DVector> &generators() const noexcept
    {
        return generators_;
    }

    const WindowedSubspace &level(int b) const
    {
        if (b < window_.t_lo || b >= window_.t_hi) {
            throw error(errc::invalid_argument, "level " + std::to_string(b) + " outside the t-window");
        }
        return levels_[static_cast<std::size_t>(b - window_.t_lo)];
    }

    /// Three-valued membership. The t^b coefficient at the current order is
    /// tested against level b and then removed; reaching the top t-margin, or
    /// a coefficient with terms in the top u-margin, with work left over is
    /// Inconclusive because the window cannot see what lies beyond it.
    Membership membership(const Local2DVector &x) const
    {
        if (x.size() != r_) {
            throw error(errc::invalid_argument, "vector rank mismatch");
        }
        if (!supported_in(x, window_)) {
            throw error(errc::support_violation, "element leaves the window");
        }
        Local2DVector rem = x;
        while (!is_zero(rem)) {
            const int b = ord_t(rem);
            if (b >= window_.t_hi - window_.m_t) {
                return Membership::inconclusive;
            }
            LaurentVector v;
            v.reserve(r_);
            for (const auto &comp : rem) {
                v.push_back(comp.t_coefficient(b));
            }
            for (const auto &p : v) {
                if (!p.is_zero() && p.max_exponent() >= window_.u_hi - window_.m_u) {
                    return Membership::inconclusive;
                }
            }
            if (level(b).membership(v) == Membership::not_in) {
                return Membership::not_in;
            }
            Local2DVector lifted;
            for (const auto &p : v) {
                lifted.push_back(Local2DElement::lift(p, b));
            }
            rem = rem - lifted;
        }
        return Membership::in;
    }

    // Lifts t^b * row of the echelon rows of every level.
    std::vector<Local2DVector> row_lifts() const
    {
        std::vector<Local2DVector> out;
        for (int b = window_.t_lo; b < window_.t_hi; ++b) {
            for (const auto &row : level(b).rows()) {
                Local2DVector v;
                for (const auto &p : row) {
                    v.push_back(Local2DElement::lift(p, b));
                }
                out.push_back(std::move(v));
            }
        }
        return out;
    }

private:
    LayeredSubspace(Field f, std::size_t r, Window2D w, std::vector<WindowedSubspace> levels)
        : field_(f), r_(r), window_(w), levels_(std::move(levels))
    {
    }

    Field field_;
    std::size_t r_;
    Window2D window_;
    std::vector<WindowedSubspace> levels_;
    std::vector<Local2DVector> generators_;
};

inline Membership layered_membership(const LayeredSubspace &L, const Local2DVector &x)
{
    return L.membership(x);
}

// A rank-1 subalgebra A of K and a rank-r subspace W of K^{⊕r} sharing a window.
struct SchurPair {
    LayeredSubspace A;
    LayeredSubspace W;

    static SchurPair make(LayeredSubspace A, LayeredSubspace W)
    {
        if (A.rank() != 1) {
            throw error(errc::invalid_argument, "A must have rank 1");
        }
        if (!(A.window() == W.window())) {
            throw error(errc::invalid_argument, "A and W must share a window");
        }
        require_same_field(A.field(), W.field());
        if (A.window().t_lo > 0 || A.window().t_hi <= 0) {
            throw error(errc::invalid_argument, "t-window must contain level 0");
        }
        return SchurPair{std::move(A), std::move(W)};
    }

    const Window2D &window() const noexcept
    {
        return A.window();
    }
    const Field &field() const noexcept
    {
        return A.field();
    }
};

enum class Verdict { pass, fail, inconclusive };

inline const char *to_string(Verdict v)
{
    switch (v) {
        case Verdict::pass:
            return "pass";
        case Verdict::fail:
            return "fail";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    return "?";
}

// fail dominates inconclusive, which dominates pass.
inline Verdict combine(Verdict a, Verdict b)
{
    if (a == Verdict::fail || b == Verdict::fail) {
        return Verdict::fail;
    }
    if (a == Verdict::inconclusive || b == Verdict::inconclusive) {
        return Verdict::inconclusive;
    }
    return Verdict::pass;
}

struct LevelIndex {
    int b = 0;
    bool interior = false;
    std::optional<long> index_A;
    std::optional<long> index_W;
    std::string status_A = "ok";
    std::string status_W = "ok";
};

struct SchurReport {
    Verdict unit = Verdict::pass;
    Verdict subalgebra = Verdict::pass;
    Verdict module_closure = Verdict::pass;
    Verdict fredholm = Verdict::pass;
    Verdict verdict = Verdict::pass;
    bool margin_adequate = true;
    int generator_radius = 0;
    std::size_t products_checked = 0;
    std::size_t products_skipped = 0;
    std::vector<LevelIndex> levels;
    std::vector<std::string> findings;
};

namespace detail
{

// Per-level index with errors folded into a status string.
inline std::pair<std::optional<long>, std::string> level_index(const WindowedSubspace &lv, int top_margin)
{
    try {
        return {lv.fredholm_index(top_margin), "ok"};
    } catch (const error &e) {
        return {std::nullopt, std::string(to_string(e.code()))};
    }
}

inline Verdict index_verdict(const std::string &status)
{
    if (status == "ok") {
        return Verdict::pass;
    }
    if (status == "WindowTooSmall") {
        return Verdict::inconclusive;
    }
    return Verdict::fail;
}

struct Box {
    int t_lo, t_hi, u_lo, u_hi;
};

inline std::optional<Box> bounding_box(const Local2DVector &v)
{
    std::optional<Box> box;
    for (const auto &x : v) {
        for (const auto &[e, c] : x.terms()) {
            if (!box) {
                box = Box{e.t, e.t, e.u, e.u};
            } else {
                box->t_lo = std::min(box->t_lo, e.t);
                box->t_hi = std::max(box->t_hi, e.t);
                box->u_lo = std::min(box->u_lo, e.u);
                box->u_hi = std::max(box->u_hi, e.u);
            }
        }
    }
    return box;
}

// True when a product with these bounding boxes can be decided exactly:
// it stays inside the window and below both top margins.
inline bool product_decidable(const Box &a, const Box &b, const Window2D &w)
{
    return a.t_lo + b.t_lo >= w.t_lo && a.t_hi + b.t_hi < w.t_hi - w.m_t && a.u_lo + b.u_lo >= w.u_lo &&
           a.u_hi + b.u_hi < w.u_hi - w.m_u;
}

struct Witness {
    Local2DVector value;
    Box box;
    bool generator;
};

inline std::vector<Witness> witnesses(const LayeredSubspace &L)
{
    std::vector<Witness> out;
    const auto &w = L.window();
    for (const auto &g : L.generators()) {
        if (supported_in_interior(g, w)) {
            out.push_back({g, *bounding_box(g), true});
        }
    }
    for (auto &lift : L.row_lifts()) {
        if (supported_in_interior(lift, w)) {
            auto box = *bounding_box(lift);
            out.push_back({std::move(lift), box, false});
        }
    }
    return out;
}

inline std::string describe(const Local2DVector &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            if (!s.empty()) {
                s += ", ";
            }
            s += (v.size() > 1 ? "e" + std::to_string(i + 1) + ":" : std::string()) + v[i].to_string();
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace detail

/// Window-level verification of the Schur-pair conditions: 1 in A, A*A in A,
/// A*W in W, and every level of A and W Fredholm. Products of two generators
/// (both supported in the interior) are checked strictly: leaving the window
/// makes the verdict inconclusive. Membership is only asked for products
/// supported in the interior. Products involving level-row lifts are extra
/// witnesses and are only evaluated when the product is decidable.
/// Per-level Fredholm errors count toward the verdict on interior levels;
/// margin levels are reported only.
inline SchurReport check_schur_pair(const SchurPair &P)
{
    SchurReport rep;
    const auto &w = P.window();
    const auto &field = P.field();
    const auto one = scalar_vector(Local2DElement::one(field));

    if (P.A.membership(one) != Membership::in) {
        rep.unit = Verdict::fail;
        rep.findings.push_back("1 is not in A");
    }

    for (const auto &g : P.A.generators()) {
        rep.generator_radius = std::max(rep.generator_radius, support_radius(g));
    }
    rep.margin_adequate = std::min(w.m_t, w.m_u) > rep.generator_radius;

    const auto wa = detail::witnesses(P.A);
    const auto ww = detail::witnesses(P.W);

    auto run = [&](const detail::Witness &x, const detail::Witness &y, const LayeredSubspace &target, Verdict &slot,
                   const char *what) {
        const bool strict = x.generator && y.generator;
        if (!strict && !detail::product_decidable(x.box, y.box, w)) {
            ++rep.products_skipped;
            return;
        }
        const auto prod = x.value.front() * y.value;
        if (!supported_in(prod, w)) {
            slot = combine(slot, Verdict::inconclusive);
            rep.findings.push_back(std::string(what) + ": product " + detail::describe(prod) + " leaves the window");
            return;
        }
        if (!supported_in_interior(prod, w)) {
            ++rep.products_skipped;
            return;
        }
        const auto m = target.membership(prod);
        if (m == Membership::inconclusive && !strict) {
            ++rep.products_skipped;
            return;
        }
        ++rep.products_checked;
        if (m == Membership::not_in) {
            slot = Verdict::fail;
            rep.findings.push_back(std::string(what) + ": " + detail::describe(x.value) + " * " +
                                   detail::describe(y.value) + " is NotIn");
        } else if (m == Membership::inconclusive) {
            slot = combine(slot, Verdict::inconclusive);
        }
    };

    for (std::size_t i = 0; i < wa.size(); ++i) {
        for (std::size_t j = i; j < wa.size(); ++j) {
            run(wa[i], wa[j], P.A, rep.subalgebra, "subalgebra");
        }
    }
    for (const auto &a : wa) {
        for (const auto &x : ww) {
            run(a, x, P.W, rep.module_closure, "module closure");
        }
    }
    rep.subalgebra = combine(rep.subalgebra, rep.unit);

    if (!rep.margin_adequate) {
        rep.findings.push_back("margins do not exceed the generator support radius " +
                               std::to_string(rep.generator_radius));
        if (rep.subalgebra == Verdict::pass) {
            rep.subalgebra = Verdict::inconclusive;
        }
        if (rep.module_closure == Verdict::pass) {
            rep.module_closure = Verdict::inconclusive;
        }
    }

    for (int b = w.t_lo; b < w.t_hi; ++b) {
        LevelIndex li;
        li.b = b;
        li.interior = w.in_interior_t(b);
        std::tie(li.index_A, li.status_A) = detail::level_index(P.A.level(b), w.m_u);
        std::tie(li.index_W, li.status_W) = detail::level_index(P.W.level(b), w.m_u);
        if (li.interior) {
            rep.fredholm = combine(rep.fredholm, detail::index_verdict(li.status_A));
            rep.fredholm = combine(rep.fredholm, detail::index_verdict(li.status_W));
            if (li.status_A != "ok") {
                rep.findings.push_back("A level " + std::to_string(b) + ": " + li.status_A);
            }
            if (li.status_W != "ok") {
                rep.findings.push_back("W level " + std::to_string(b) + ": " + li.status_W);
            }
        }
        rep.levels.push_back(std::move(li));
    }

    rep.verdict = combine(combine(rep.subalgebra, rep.module_closure), rep.fredholm);
    return rep;
}

/// W(i, j) as a block-diagonal subspace of k((u))^{⊕r(j-i)}; block b - i is
/// level b.
inline WindowedSubspace graded_slice(const LayeredSubspace &L, int i, int j)
{
    const auto &w = L.window();
    if (!(w.t_lo <= i && i < j && j <= w.t_hi)) {
        throw error(errc::invalid_argument, "graded slice needs t_lo <= i < j <= t_hi");
    }
    const bool full_below = L.level(i).full_below();
    const auto r = L.rank();
    const auto blocks = static_cast<std::size_t>(j - i);
    std::vector<LaurentVector> rows;
    for (int b = i; b < j; ++b) {
        if (L.level(b).full_below() != full_below) {
            throw error(errc::unsupported, "levels in the slice disagree on the below-window tail");
        }
        const auto offset = static_cast<std::size_t>(b - i) * r;
        for (const auto &row : L.level(b).rows()) {
            auto v = zero_vector(L.field(), r * blocks);
            std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
            rows.push_back(std::move(v));
        }
    }
    return WindowedSubspace::echelonize(L.field(), rows, r * blocks, w.u_lo, w.u_hi, full_below);
}

namespace detail
{

// dim of (level ∩ u^{-n} k[[u]]^{⊕r}) inside the window.
inline long bounded_below_dimension(const WindowedSubspace &lv, int n, int top_margin)
{
    if (lv.u_lo() > -n) {
        throw error(errc::window_too_small, "window does not reach u^" + std::to_string(-n));
    }
    for (const auto &p : lv.pivot_profile()) {
        if (p.exponent >= lv.u_hi() - top_margin) {
            throw error(errc::window_too_small, "level pivot touches the top margin");
        }
    }
    // dim(V ∩ U_n) = dim V - rank of the projection onto exponents below -n.
    std::vector<linalg::Row> projected;
    for (const auto &row : lv.echelon().rows) {
        linalg::Row p = linalg::zero_row(lv.field(), row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (lv.slot(c).exponent < -n) {
                p[c] = row[c];
            }
        }
        projected.push_back(std::move(p));
    }
    return static_cast<long>(lv.dimension()) - static_cast<long>(linalg::rank(std::move(projected)));
}

} // namespace detail

/// dim_k(U_n(0, j) ∩ L(0, j)), the degree-n piece of the graded ring whose
/// Proj is the (j-1)-th infinitesimal neighbourhood.
inline long hilbert_function(const LayeredSubspace &L, int j, int n)
{
    const auto &w = L.window();
    if (j <= 0 || n < 0) {
        throw error(errc::invalid_argument, "hilbert function needs j > 0 and n >= 0");
    }
    if (w.t_lo > 0 || j > w.t_hi) {
        throw error(errc::window_too_small, "t-window does not contain levels 0.." + std::to_string(j - 1));
    }
    long total = 0;
    for (int b = 0; b < j; ++b) {
        total += detail::bounded_below_dimension(L.level(b), n, w.m_u);
    }
    return total;
}

struct PointIdealReport {
    std::vector<long> dims;   // h(n), n = 0..max_n
    std::vector<long> jumps;  // h(n) - h(n-1), with h(-1) = 0
    bool pass = true;
    std::optional<int> first_failure;
};

/// The degree-(n-1) part, embedded in degree n, must have colength one for
/// every n >= 1; degree 0 is compared against the empty degree -1 and is
/// consistent by convention.
inline PointIdealReport point_ideal_check(const LayeredSubspace &L, int max_n)
{
    PointIdealReport rep;
    long prev = 0;
    for (int n = 0; n <= max_n; ++n) {
        const long h = hilbert_function(L, 1, n);
        rep.dims.push_back(h);
        rep.jumps.push_back(h - prev);
        if (n >= 1 && h - prev != 1 && rep.pass) {
            rep.pass = false;
            rep.first_failure = n;
        }
        prev = h;
    }
    return rep;
}

inline bool pair_equal_in_window(const SchurPair &p, const SchurPair &q)
{
    if (!(p.window() == q.window()) || p.W.rank() != q.W.rank() || !(p.field() == q.field())) {
        throw error(errc::invalid_argument, "pairs have different windows or ranks");
    }
    return p.A.levels() == q.A.levels() && p.W.levels() == q.W.levels();
}

} // namespace ribbonlab

#endif
