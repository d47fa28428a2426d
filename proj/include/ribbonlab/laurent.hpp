#ifndef RIBBONLAB_LAURENT_HPP
#define RIBBONLAB_LAURENT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <ribbonlab/error.hpp>
#include <ribbonlab/scalar.hpp>

namespace ribbonlab
{

// Finitely supported element of k((u)). The coefficient map is sorted by
// exponent and never stores a zero; the zero polynomial is the empty map.
class LaurentPoly
{
public:
    using map_type = std::map<int, Scalar>;

    LaurentPoly() = default;
    explicit LaurentPoly(Field f) : field_(f) {}

    static LaurentPoly monomial(const Field &f, int exponent, const Scalar &c)
    {
        require_same_field(f, c.field());
        LaurentPoly p(f);
        if (!c.is_zero()) {
            p.coeffs_.emplace(exponent, c);
        }
        return p;
    }

    static LaurentPoly monomial(const Field &f, int exponent, long c = 1)
    {
        return monomial(f, exponent, Scalar::from_int(f, c));
    }

    static LaurentPoly constant(const Field &f, long c)
    {
        return monomial(f, 0, c);
    }

    const Field &field() const noexcept
    {
        return field_;
    }
    const map_type &terms() const noexcept
    {
        return coeffs_;
    }
    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }
    std::size_t size() const noexcept
    {
        return coeffs_.size();
    }

    Scalar coeff(int exponent) const
    {
        const auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? Scalar::zero(field_) : it->second;
    }

    // Adds c*u^e in place, keeping the map canonical.
    void add_term(int exponent, const Scalar &c)
    {
        require_same_field(field_, c.field());
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = coeffs_.emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                coeffs_.erase(it);
            }
        }
    }

    // Minimal exponent; undefined (error) for zero.
    int ord() const
    {
        if (is_zero()) {
            throw error(errc::zero_element, "ord_u of the zero Laurent polynomial");
        }
        return coeffs_.begin()->first;
    }

    int max_exponent() const
    {
        if (is_zero()) {
            throw error(errc::zero_element, "degree of the zero Laurent polynomial");
        }
        return coeffs_.rbegin()->first;
    }

    LaurentPoly operator-() const
    {
        LaurentPoly r(field_);
        for (const auto &[e, c] : coeffs_) {
            r.coeffs_.emplace_hint(r.coeffs_.end(), e, -c);
        }
        return r;
    }

    LaurentPoly scaled(const Scalar &s) const
    {
        require_same_field(field_, s.field());
        LaurentPoly r(field_);
        if (s.is_zero()) {
            return r;
        }
        for (const auto &[e, c] : coeffs_) {
            r.coeffs_.emplace_hint(r.coeffs_.end(), e, c * s);
        }
        return r;
    }

    LaurentPoly shifted(int by) const
    {
        LaurentPoly r(field_);
        for (const auto &[e, c] : coeffs_) {
            r.coeffs_.emplace_hint(r.coeffs_.end(), e + by, c);
        }
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly &x, const LaurentPoly &y)
    {
        require_same_field(x.field_, y.field_);
        LaurentPoly r = x;
        for (const auto &[e, c] : y.coeffs_) {
            r.add_term(e, c);
        }
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly &x, const LaurentPoly &y)
    {
        return x + (-y);
    }

    friend LaurentPoly operator*(const LaurentPoly &x, const LaurentPoly &y)
    {
        require_same_field(x.field_, y.field_);
        LaurentPoly r(x.field_);
        for (const auto &[ex, cx] : x.coeffs_) {
            for (const auto &[ey, cy] : y.coeffs_) {
                r.add_term(ex + ey, cx * cy);
            }
        }
        return r;
    }

    LaurentPoly &operator+=(const LaurentPoly &o)
    {
        return *this = *this + o;
    }

    friend bool operator==(const LaurentPoly &x, const LaurentPoly &y)
    {
        return x.field_ == y.field_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const LaurentPoly &x, const LaurentPoly &y)
    {
        return !(x == y);
    }

    std::string to_string() const
    {
        if (is_zero()) {
            return "0";
        }
        std::string s;
        for (const auto &[e, c] : coeffs_) {
            if (!s.empty()) {
                s += " + ";
            }
            s += "(" + c.to_string() + ")u^" + std::to_string(e);
        }
        return s;
    }

private:
    Field field_;
    map_type coeffs_;
};

// An element of k((u))^{⊕r}: one Laurent polynomial per component.
using LaurentVector = std::vector<LaurentPoly>;

inline LaurentVector zero_vector(const Field &f, std::size_t r)
{
    return LaurentVector(r, LaurentPoly(f));
}

// Vector with a single nonzero component (0-based index).
inline LaurentVector unit_vector(const Field &f, std::size_t r, std::size_t component, const LaurentPoly &p)
{
    auto v = zero_vector(f, r);
    v.at(component) = p;
    return v;
}

inline bool is_zero(const LaurentVector &v)
{
    for (const auto &p : v) {
        if (!p.is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace ribbonlab

#endif
