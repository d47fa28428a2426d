#ifndef RIBBONLAB_LOCAL2D_HPP
#define RIBBONLAB_LOCAL2D_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ribbonlab/error.hpp>
#include <ribbonlab/laurent.hpp>
#include <ribbonlab/scalar.hpp>

namespace ribbonlab
{

// Exponent of a monomial u^u t^t. Ordered by t first, then u, which is the
// serialization order and puts the lowest t-order first.
struct Exp2 {
    int t = 0;
    int u = 0;

    friend auto operator<=>(const Exp2 &, const Exp2 &) = default;
};

// Finite sum of c_{a,b} u^a t^b inside K = k((u))((t)).
class Local2DElement
{
public:
    using map_type = std::map<Exp2, Scalar>;

    Local2DElement() = default;
    explicit Local2DElement(Field f) : field_(f) {}

    static Local2DElement monomial(const Field &f, int u_exp, int t_exp, long c = 1)
    {
        return monomial(f, u_exp, t_exp, Scalar::from_int(f, c));
    }

    static Local2DElement monomial(const Field &f, int u_exp, int t_exp, const Scalar &c)
    {
        Local2DElement x(f);
        x.add_term(u_exp, t_exp, c);
        return x;
    }

    static Local2DElement one(const Field &f)
    {
        return monomial(f, 0, 0, 1);
    }

    // t^t_exp * p(u).
    static Local2DElement lift(const LaurentPoly &p, int t_exp)
    {
        Local2DElement x(p.field());
        for (const auto &[e, c] : p.terms()) {
            x.terms_.emplace(Exp2{t_exp, e}, c);
        }
        return x;
    }

    const Field &field() const noexcept
    {
        return field_;
    }
    const map_type &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    void add_term(int u_exp, int t_exp, const Scalar &c)
    {
        require_same_field(field_, c.field());
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.emplace(Exp2{t_exp, u_exp}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    Scalar coeff(int u_exp, int t_exp) const
    {
        const auto it = terms_.find(Exp2{t_exp, u_exp});
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    // Minimal t-exponent carrying a nonzero term.
    int ord_t() const
    {
        if (is_zero()) {
            throw error(errc::zero_element, "ord_t of zero");
        }
        return terms_.begin()->first.t;
    }

    // The u-Laurent coefficient of t^t_exp.
    LaurentPoly t_coefficient(int t_exp) const
    {
        LaurentPoly p(field_);
        for (auto it = terms_.lower_bound(Exp2{t_exp, std::numeric_limits<int>::min()});
             it != terms_.end() && it->first.t == t_exp; ++it) {
            p.add_term(it->first.u, it->second);
        }
        return p;
    }

    // Largest |exponent| over the support, in either variable.
    int support_radius() const
    {
        int r = 0;
        for (const auto &[e, c] : terms_) {
            r = std::max({r, std::abs(e.t), std::abs(e.u)});
        }
        return r;
    }

    Local2DElement operator-() const
    {
        Local2DElement r(field_);
        for (const auto &[e, c] : terms_) {
            r.terms_.emplace_hint(r.terms_.end(), e, -c);
        }
        return r;
    }

    Local2DElement scaled(const Scalar &s) const
    {
        Local2DElement r(field_);
        if (s.is_zero()) {
            return r;
        }
        for (const auto &[e, c] : terms_) {
            r.terms_.emplace_hint(r.terms_.end(), e, c * s);
        }
        return r;
    }

    friend Local2DElement operator+(const Local2DElement &x, const Local2DElement &y)
    {
        require_same_field(x.field_, y.field_);
        Local2DElement r = x;
        for (const auto &[e, c] : y.terms_) {
            r.add_term(e.u, e.t, c);
        }
        return r;
    }

    friend Local2DElement operator-(const Local2DElement &x, const Local2DElement &y)
    {
        return x + (-y);
    }

    friend Local2DElement operator*(const Local2DElement &x, const Local2DElement &y)
    {
        require_same_field(x.field_, y.field_);
        Local2DElement r(x.field_);
        for (const auto &[ex, cx] : x.terms_) {
            for (const auto &[ey, cy] : y.terms_) {
                r.add_term(ex.u + ey.u, ex.t + ey.t, cx * cy);
            }
        }
        return r;
    }

    friend bool operator==(const Local2DElement &x, const Local2DElement &y)
    {
        return x.field_ == y.field_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const Local2DElement &x, const Local2DElement &y)
    {
        return !(x == y);
    }

    std::string to_string() const
    {
        if (is_zero()) {
            return "0";
        }
        std::string s;
        for (const auto &[e, c] : terms_) {
            if (!s.empty()) {
                s += " + ";
            }
            s += "(" + c.to_string() + ")u^" + std::to_string(e.u) + "t^" + std::to_string(e.t);
        }
        return s;
    }

private:
    Field field_;
    map_type terms_;
};

// An element of K^{⊕r}.
using Local2DVector = std::vector<Local2DElement>;

inline Local2DVector scalar_vector(const Local2DElement &x)
{
    return Local2DVector{x};
}

inline bool is_zero(const Local2DVector &v)
{
    return std::all_of(v.begin(), v.end(), [](const auto &x) { return x.is_zero(); });
}

// Minimum of the component orders.
inline int ord_t(const Local2DVector &v)
{
    std::optional<int> best;
    for (const auto &x : v) {
        if (!x.is_zero()) {
            best = best ? std::min(*best, x.ord_t()) : x.ord_t();
        }
    }
    if (!best) {
        throw error(errc::zero_element, "ord_t of the zero vector");
    }
    return *best;
}

inline int support_radius(const Local2DVector &v)
{
    int r = 0;
    for (const auto &x : v) {
        r = std::max(r, x.support_radius());
    }
    return r;
}

// a * w, componentwise.
inline Local2DVector operator*(const Local2DElement &a, const Local2DVector &w)
{
    Local2DVector out;
    out.reserve(w.size());
    for (const auto &x : w) {
        out.push_back(a * x);
    }
    return out;
}

inline Local2DVector operator-(const Local2DVector &x, const Local2DVector &y)
{
    if (x.size() != y.size()) {
        throw error(errc::invalid_argument, "rank mismatch in vector difference");
    }
    Local2DVector out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(x[i] - y[i]);
    }
    return out;
}

// Rectangular window [u_lo, u_hi) x [t_lo, t_hi) with margins. The interior
// is the window shrunk by m_t, m_u on each side.
struct Window2D {
    int t_lo = 0;
    int t_hi = 0;
    int u_lo = 0;
    int u_hi = 0;
    int m_t = 0;
    int m_u = 0;

    static Window2D make(int t_lo, int t_hi, int u_lo, int u_hi, int m_t, int m_u)
    {
        Window2D w{t_lo, t_hi, u_lo, u_hi, m_t, m_u};
        w.validate();
        return w;
    }

    void validate() const
    {
        if (!(t_lo < t_hi)) {
            throw error(errc::invalid_argument, "window requires t_lo < t_hi");
        }
        if (!(u_lo < u_hi)) {
            throw error(errc::invalid_argument, "window requires u_lo < u_hi");
        }
        if (m_t < 0 || m_u < 0) {
            throw error(errc::invalid_argument, "margins must be nonnegative");
        }
        if (2 * m_t >= t_hi - t_lo) {
            throw error(errc::invalid_argument, "t-margin must be less than half the t-width");
        }
        if (2 * m_u >= u_hi - u_lo) {
            throw error(errc::invalid_argument, "u-margin must be less than half the u-width");
        }
    }

    int t_width() const noexcept
    {
        return t_hi - t_lo;
    }
    int u_width() const noexcept
    {
        return u_hi - u_lo;
    }

    bool contains(int u, int t) const noexcept
    {
        return u_lo <= u && u < u_hi && t_lo <= t && t < t_hi;
    }

    bool interior_contains(int u, int t) const noexcept
    {
        return u_lo + m_u <= u && u < u_hi - m_u && t_lo + m_t <= t && t < t_hi - m_t;
    }

    bool in_interior_t(int t) const noexcept
    {
        return t_lo + m_t <= t && t < t_hi - m_t;
    }

    Window2D enlarged(int by) const
    {
        return Window2D{t_lo - by, t_hi + by, u_lo - by, u_hi + by, m_t, m_u};
    }

    friend bool operator==(const Window2D &, const Window2D &) = default;
};

inline bool supported_in(const Local2DElement &x, const Window2D &w)
{
    return std::all_of(x.terms().begin(), x.terms().end(),
                       [&](const auto &kv) { return w.contains(kv.first.u, kv.first.t); });
}

inline bool supported_in_interior(const Local2DElement &x, const Window2D &w)
{
    return std::all_of(x.terms().begin(), x.terms().end(),
                       [&](const auto &kv) { return w.interior_contains(kv.first.u, kv.first.t); });
}

inline bool supported_in(const Local2DVector &v, const Window2D &w)
{
    return std::all_of(v.begin(), v.end(), [&](const auto &x) { return supported_in(x, w); });
}

inline bool supported_in_interior(const Local2DVector &v, const Window2D &w)
{
    return std::all_of(v.begin(), v.end(), [&](const auto &x) { return supported_in_interior(x, w); });
}

struct Truncated {
    Local2DElement value;
    bool dropped = false;
};

inline Truncated truncate(const Local2DElement &x, const Window2D &w)
{
    Truncated out{Local2DElement(x.field()), false};
    for (const auto &[e, c] : x.terms()) {
        if (w.contains(e.u, e.t)) {
            out.value.add_term(e.u, e.t, c);
        } else {
            out.dropped = true;
        }
    }
    return out;
}

} // namespace ribbonlab

#endif
