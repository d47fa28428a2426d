#ifndef RIBBONLAB_GEOMETRY_HPP
#define RIBBONLAB_GEOMETRY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <ribbonlab/error.hpp>
#include <ribbonlab/fredholm.hpp>
#include <ribbonlab/linalg.hpp>
#include <ribbonlab/local2d.hpp>
#include <ribbonlab/schur.hpp>

namespace ribbonlab
{

enum class ExampleKind { p2_line, even_variant, nilpotent, nodal_cubic };

inline std::string cli_name(ExampleKind k)
{
    switch (k) {
        case ExampleKind::p2_line:
            return "p2-line";
        case ExampleKind::even_variant:
            return "even-variant";
        case ExampleKind::nilpotent:
            return "nilpotent";
        case ExampleKind::nodal_cubic:
            return "nodal-cubic";
    }
    return "?";
}

inline ExampleKind parse_example(const std::string &name)
{
    for (auto k : {ExampleKind::p2_line, ExampleKind::even_variant, ExampleKind::nilpotent, ExampleKind::nodal_cubic}) {
        if (cli_name(k) == name) {
            return k;
        }
    }
    throw error(errc::invalid_argument, "unknown example '" + name + "'");
}

/// Built-in geometric data. Coordinates are fixed per kind:
///  - p2-line: the line C = {X2 = 0} in P^2 with P = (1:0:0), u = X1/X0,
///    t = X2/X0, e_P given by X0^m on O(m). Sections of O(m) off P expand
///    to the monomials u^a t^b with a + b <= m.
///  - even-variant: synthetic; the p2-line algebra restricted to even
///    t-orders, used to exhibit an order group 2Z.
///  - nilpotent: P^1 with A = sum O_C t_j, t_0 = 1 and t_i t_j = 0 for
///    i, j != 0. Its graded pieces embed in K as k[u^{-1}] t^b but its
///    multiplication law is the nilpotent one.
///  - nodal-cubic: the affine curve y^2 = x^2(x+1); not projective, only
///    used by the non-Noetherianity demonstration.
struct GeometricDatum {
    ExampleKind kind = ExampleKind::p2_line;
    int twist = 0;
    int selfint = 1;
    bool synthetic = false;

    static GeometricDatum make(ExampleKind kind, int twist = 0)
    {
        GeometricDatum g;
        g.kind = kind;
        g.twist = twist;
        switch (kind) {
            case ExampleKind::p2_line:
                g.selfint = 1;
                break;
            case ExampleKind::even_variant:
                g.selfint = 1;
                g.synthetic = true;
                break;
            case ExampleKind::nilpotent:
                g.selfint = 0;
                break;
            case ExampleKind::nodal_cubic:
                g.selfint = 0;
                break;
        }
        return g;
    }

    bool projective() const noexcept
    {
        return kind != ExampleKind::nodal_cubic;
    }

    std::map<std::string, std::string> describe() const
    {
        switch (kind) {
            case ExampleKind::p2_line:
            case ExampleKind::even_variant:
                return {{"surface", "P^2"},
                        {"curve", "X2 = 0"},
                        {"point", "(1:0:0)"},
                        {"u", "X1/X0"},
                        {"t", "X2/X0"},
                        {"e_P", twist == 0 ? "identity" : "X0^" + std::to_string(twist)}};
            case ExampleKind::nilpotent:
                return {{"curve", "P^1"},
                        {"relations", "t_0 = 1, t_i t_j = 0 for i, j != 0"},
                        {"point", "u = 0"},
                        {"u", "affine coordinate on P^1"},
                        {"t", "t_1"},
                        {"e_P", twist == 0 ? "identity" : "O(" + std::to_string(twist) + "P)"}};
            case ExampleKind::nodal_cubic:
                return {{"curve", "y^2 = x^2(x+1)"}, {"point", "x = y = 0"}};
        }
        return {};
    }

    // Largest u-exponent at t-level b, or nullopt for an empty level.
    std::optional<int> level_cap(int b, bool module) const
    {
        const int m = module ? twist : 0;
        switch (kind) {
            case ExampleKind::p2_line:
                return m - b * selfint;
            case ExampleKind::even_variant:
                if (b % 2 != 0) {
                    return std::nullopt;
                }
                return m - b * selfint;
            case ExampleKind::nilpotent:
                return m;
            case ExampleKind::nodal_cubic:
                break;
        }
        throw error(errc::unsupported, cli_name(kind) + " has no level model");
    }

    bool contains_monomial(int a, int b, bool module) const
    {
        const auto cap = level_cap(b, module);
        return cap.has_value() && a <= *cap;
    }

    // The ribbon's own multiplication law on finite representatives.
    Local2DElement multiply(const Local2DElement &x, const Local2DElement &y) const
    {
        if (kind != ExampleKind::nilpotent) {
            return x * y;
        }
        require_same_field(x.field(), y.field());
        Local2DElement r(x.field());
        for (const auto &[ex, cx] : x.terms()) {
            for (const auto &[ey, cy] : y.terms()) {
                if (ex.t != 0 && ey.t != 0) {
                    continue;
                }
                r.add_term(ex.u + ey.u, ex.t + ey.t, cx * cy);
            }
        }
        return r;
    }

    // Small generating sets (as algebra, resp. A-module) used as witnesses.
    std::vector<Local2DElement> algebra_generators(const Field &f) const
    {
        switch (kind) {
            case ExampleKind::p2_line:
                return {Local2DElement::one(f), Local2DElement::monomial(f, -1, 0), Local2DElement::monomial(f, -1, 1),
                        Local2DElement::monomial(f, 1, -1)};
            case ExampleKind::even_variant:
                return {Local2DElement::one(f), Local2DElement::monomial(f, -1, 0), Local2DElement::monomial(f, -2, 2),
                        Local2DElement::monomial(f, 2, -2)};
            case ExampleKind::nilpotent:
                return {Local2DElement::one(f), Local2DElement::monomial(f, -1, 0), Local2DElement::monomial(f, 0, 1),
                        Local2DElement::monomial(f, 0, -1)};
            case ExampleKind::nodal_cubic:
                break;
        }
        return {};
    }

    std::vector<Local2DElement> module_generators(const Field &f) const
    {
        return {Local2DElement::monomial(f, twist, 0)};
    }
};

namespace detail
{

inline LayeredSubspace monomial_layers(const GeometricDatum &g, const Window2D &w, const Field &field, bool module,
                                       const std::vector<Local2DElement> &gens)
{
    std::vector<WindowedSubspace> levels;
    for (int b = w.t_lo; b < w.t_hi; ++b) {
        const auto cap = g.level_cap(b, module);
        std::vector<LaurentVector> rows;
        if (!cap) {
            levels.push_back(WindowedSubspace::echelonize(field, rows, 1, w.u_lo, w.u_hi, false));
            continue;
        }
        if (*cap < w.u_lo - 1) {
            throw error(errc::window_too_small, "level " + std::to_string(b) + " lies entirely below u_lo");
        }
        for (int a = w.u_lo; a <= std::min(*cap, w.u_hi - 1); ++a) {
            rows.push_back({LaurentPoly::monomial(field, a)});
        }
        levels.push_back(WindowedSubspace::echelonize(field, rows, 1, w.u_lo, w.u_hi, true));
    }
    std::vector<Local2DVector> witnesses;
    for (const auto &x : gens) {
        if (supported_in(x, w)) {
            witnesses.push_back(scalar_vector(x));
        }
    }
    return LayeredSubspace::make(field, 1, w, std::move(levels), std::move(witnesses));
}

inline void require_projective(const GeometricDatum &g)
{
    if (!g.projective()) {
        throw error(errc::unsupported,
                    cli_name(g.kind) + " is affine; the correspondence needs a projective irreducible curve");
    }
}

} // namespace detail

/// Expansion at P of the sections of A and N off P, cut to the window.
/// Each level is the monomial span u^a, a <= cap(b), with the tail below the
/// window carried by full_below.
inline SchurPair forward_krichever(const GeometricDatum &g, const Window2D &w, const Field &field = Field::rational())
{
    detail::require_projective(g);
    w.validate();
    auto A = detail::monomial_layers(g, w, field, false, g.algebra_generators(field));
    auto W = detail::monomial_layers(g, w, field, true, g.module_generators(field));
    return SchurPair::make(std::move(A), std::move(W));
}

inline std::vector<LevelIndex> level_index_table(const GeometricDatum &g, const Window2D &w,
                                                 const Field &field = Field::rational())
{
    const auto P = forward_krichever(g, w, field);
    std::vector<LevelIndex> out;
    for (int b = w.t_lo; b < w.t_hi; ++b) {
        LevelIndex li;
        li.b = b;
        li.interior = w.in_interior_t(b);
        std::tie(li.index_A, li.status_A) = detail::level_index(P.A.level(b), w.m_u);
        std::tie(li.index_W, li.status_W) = detail::level_index(P.W.level(b), w.m_u);
        out.push_back(std::move(li));
    }
    return out;
}

struct OrderGroup {
    long d = 0;
    bool window_limited = false;
    std::vector<int> orders;  // distinct orders of invertible witnesses found
    std::optional<std::pair<Local2DElement, Local2DElement>> witness;
    std::size_t candidates = 0;
};

/// Searches the window's elements of A (generators and level-row lifts) for
/// pairs with x * y = 1 under the ribbon's multiplication law; d generates
/// the subgroup of Z spanned by the t-orders of the invertible ones.
inline OrderGroup order_group(const GeometricDatum &g, const Window2D &w, const Field &field = Field::rational())
{
    const auto P = forward_krichever(g, w, field);
    std::vector<Local2DElement> cands;
    for (const auto &v : P.A.generators()) {
        cands.push_back(v.front());
    }
    for (const auto &v : P.A.row_lifts()) {
        cands.push_back(v.front());
    }
    OrderGroup out;
    out.candidates = cands.size();
    const auto one = Local2DElement::one(field);
    std::vector<int> orders;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        for (std::size_t j = i; j < cands.size(); ++j) {
            const int oi = cands[i].ord_t();
            const int oj = cands[j].ord_t();
            // Under either law a unit product has t-order oi + oj = 0.
            if (oi + oj != 0) {
                continue;
            }
            if (g.multiply(cands[i], cands[j]) != one) {
                continue;
            }
            orders.push_back(oi);
            orders.push_back(oj);
            if (oi != 0) {
                const int oi_abs = std::abs(oi);
                const bool better = !out.witness || oi_abs < std::abs(out.witness->first.ord_t());
                if (better) {
                    out.witness = oi > 0 ? std::make_pair(cands[i], cands[j]) : std::make_pair(cands[j], cands[i]);
                }
            }
        }
    }
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    out.orders = orders;
    for (const int o : orders) {
        out.d = std::gcd(out.d, static_cast<long>(std::abs(o)));
    }
    out.window_limited = out.d == 0;
    return out;
}

/// k[x,y]/(y^2 - x^2(x+1)) in the normal-form basis x^a, x^a y, truncated to
/// total degree <= D. J_Q = (x, y) is the ideal of the node.
class NodalCubicRing
{
public:
    using Key = std::pair<int, int>;  // (a, e): x^a y^e, e in {0, 1}
    using Element = std::map<Key, Scalar>;

    NodalCubicRing(Field f, int degree_bound) : field_(f), D_(degree_bound)
    {
        if (degree_bound < 1) {
            throw error(errc::invalid_argument, "degree bound must be positive");
        }
    }

    const Field &field() const noexcept
    {
        return field_;
    }
    int degree_bound() const noexcept
    {
        return D_;
    }

    static int degree(const Key &k) noexcept
    {
        return k.first + k.second;
    }

    static std::vector<Key> basis(int D)
    {
        std::vector<Key> out;
        for (int a = 0; a <= D; ++a) {
            out.emplace_back(a, 0);
            if (a + 1 <= D) {
                out.emplace_back(a, 1);
            }
        }
        return out;
    }

    Element monomial(int a, int e, long c = 1) const
    {
        Element x;
        add(x, Key{a, e}, Scalar::from_int(field_, c));
        return x;
    }

    // Product reduced by y^2 -> x^3 + x^2.
    Element multiply(const Element &x, const Element &y) const
    {
        Element r;
        for (const auto &[kx, cx] : x) {
            for (const auto &[ky, cy] : y) {
                const auto c = cx * cy;
                const int a = kx.first + ky.first;
                const int e = kx.second + ky.second;
                if (e <= 1) {
                    add(r, Key{a, e}, c);
                } else {
                    add(r, Key{a + 3, 0}, c);
                    add(r, Key{a + 2, 0}, c);
                }
            }
        }
        return r;
    }

    std::vector<Element> point_ideal_generators() const
    {
        return {monomial(1, 0), monomial(0, 1)};
    }

    std::vector<Element> point_ideal_square_generators() const
    {
        return {monomial(2, 0), monomial(1, 1), multiply(monomial(0, 1), monomial(0, 1))};
    }

    /// dim_k(I ∩ R_{<=D}) for the ideal generated by gens. The ideal is
    /// spanned (up to degree D + slack) by gens times basis monomials; the
    /// degree-<=D part is read off an echelon form whose column order puts
    /// the high-degree slots first.
    long truncated_ideal_dimension(const std::vector<Element> &gens) const
    {
        constexpr int slack = 2;
        int max_gen_degree = 0;
        for (const auto &g : gens) {
            for (const auto &[k, c] : g) {
                max_gen_degree = std::max(max_gen_degree, degree(k));
            }
        }
        const int top = D_ + slack + max_gen_degree + 1;
        auto cols = basis(top);
        std::stable_sort(cols.begin(), cols.end(), [](const Key &p, const Key &q) { return degree(p) > degree(q); });
        std::map<Key, std::size_t> index;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            index[cols[i]] = i;
        }
        std::vector<linalg::Row> rows;
        for (const auto &g : gens) {
            for (const auto &m : basis(D_ + slack)) {
                const auto prod = multiply(g, monomial(m.first, m.second));
                auto row = linalg::zero_row(field_, cols.size());
                for (const auto &[k, c] : prod) {
                    row[index.at(k)] = c;
                }
                rows.push_back(std::move(row));
            }
        }
        const auto ech = linalg::rref(std::move(rows));
        long dim = 0;
        for (const auto p : ech.pivots) {
            if (degree(cols[p]) <= D_) {
                ++dim;
            }
        }
        return dim;
    }

private:
    void add(Element &x, const Key &k, const Scalar &c) const
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = x.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                x.erase(it);
            }
        }
    }

    Field field_;
    int D_;
};

struct NoncoherentChain {
    std::vector<long> dims;  // k = 1..k_max
    long dim_point_ideal = 0;
    long dim_point_ideal_square = 0;
};

/// dim_k(J_k ∩ window) for J_k = { sum c_i t^i : c_i in J_Q, c_i in J_Q^2 for i < -k },
/// coefficients truncated to degree <= D.
inline NoncoherentChain noncoherent_chain(const NodalCubicRing &R, int k_max, const Window2D &w)
{
    if (R.degree_bound() < 3) {
        throw error(errc::window_too_small, "degree bound below 3 cannot separate J_Q from J_Q^2");
    }
    if (k_max < 1) {
        throw error(errc::invalid_argument, "k_max must be positive");
    }
    if (w.t_lo > -k_max - 1 || w.t_hi < 1) {
        throw error(errc::window_too_small, "t-window must cover [" + std::to_string(-k_max - 1) + ", 1)");
    }
    NoncoherentChain out;
    out.dim_point_ideal = R.truncated_ideal_dimension(R.point_ideal_generators());
    out.dim_point_ideal_square = R.truncated_ideal_dimension(R.point_ideal_square_generators());
    for (int k = 1; k <= k_max; ++k) {
        long total = 0;
        for (int i = w.t_lo; i < w.t_hi; ++i) {
            total += i < -k ? out.dim_point_ideal_square : out.dim_point_ideal;
        }
        out.dims.push_back(total);
    }
    return out;
}

struct RibbonAxiomReport {
    bool unit = true;
    bool filtration = true;
    bool structure_sheaf = true;
    bool torsion_free = true;
    std::vector<int> torsion_failures;
    std::size_t products_checked = 0;
    std::size_t vanishing_products = 0;
    std::vector<std::string> findings;

    bool pass() const noexcept
    {
        return unit && filtration && structure_sheaf && torsion_free;
    }
};

using MultiplicationLaw = std::function<Local2DElement(const Local2DElement &, const Local2DElement &)>;

/// Window-level ribbon axioms on a layered algebra: 1 at level 0, products of
/// level representatives at the summed level or deeper and inside A, level 0
/// with the index of O_{P^1}, every level full_below with a computable index
/// (no finite-dimensional, torsion-like level).
inline RibbonAxiomReport validate_layered_axioms(const LayeredSubspace &A, const MultiplicationLaw &law)
{
    RibbonAxiomReport rep;
    const auto &w = A.window();
    const auto &field = A.field();
    rep.unit = A.membership(scalar_vector(Local2DElement::one(field))) == Membership::in;
    if (!rep.unit) {
        rep.findings.push_back("1 is not at level 0");
    }

    std::vector<Local2DElement> reps;
    for (const auto &v : A.row_lifts()) {
        if (supported_in_interior(v, w)) {
            reps.push_back(v.front());
        }
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i; j < reps.size(); ++j) {
            const auto prod = law(reps[i], reps[j]);
            if (prod.is_zero()) {
                ++rep.vanishing_products;
                continue;
            }
            if (!supported_in(prod, w)) {
                continue;
            }
            const int want = reps[i].ord_t() + reps[j].ord_t();
            const auto m = A.membership(scalar_vector(prod));
            if (m == Membership::inconclusive) {
                continue;
            }
            ++rep.products_checked;
            if (prod.ord_t() < want || m == Membership::not_in) {
                rep.filtration = false;
                rep.findings.push_back("product of levels " + std::to_string(reps[i].ord_t()) + " and " +
                                       std::to_string(reps[j].ord_t()) + " escapes A_" + std::to_string(want));
            }
        }
    }

    if (w.t_lo <= 0 && 0 < w.t_hi) {
        const auto [idx, status] = detail::level_index(A.level(0), w.m_u);
        rep.structure_sheaf = idx.has_value() && *idx == 1;
        if (!rep.structure_sheaf) {
            rep.findings.push_back("level 0 is not the section space of O_C (status " + status + ")");
        }
    }

    for (int b = w.t_lo; b < w.t_hi; ++b) {
        const auto &lv = A.level(b);
        bool ok = lv.full_below();
        if (ok && w.in_interior_t(b)) {
            ok = detail::level_index(lv, w.m_u).first.has_value();
        }
        if (!ok) {
            rep.torsion_free = false;
            rep.torsion_failures.push_back(b);
        }
    }
    if (!rep.torsion_free) {
        rep.findings.push_back("levels without a cocompact windowed model: " +
                               std::to_string(rep.torsion_failures.size()));
    }
    return rep;
}

inline RibbonAxiomReport validate_ribbon_axioms(const GeometricDatum &g, const Window2D &w,
                                                const Field &field = Field::rational())
{
    const auto P = forward_krichever(g, w, field);
    return validate_layered_axioms(P.A, [&g](const Local2DElement &x, const Local2DElement &y) {
        return g.multiply(x, y);
    });
}

} // namespace ribbonlab

#endif
