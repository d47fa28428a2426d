#ifndef RIBBONLAB_FREDHOLM_HPP
#define RIBBONLAB_FREDHOLM_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <ribbonlab/error.hpp>
#include <ribbonlab/laurent.hpp>
#include <ribbonlab/linalg.hpp>
#include <ribbonlab/scalar.hpp>

namespace ribbonlab
{

enum class Membership { in, not_in, inconclusive };

inline const char *to_string(Membership m)
{
    switch (m) {
        case Membership::in:
            return "In";
        case Membership::not_in:
            return "NotIn";
        case Membership::inconclusive:
            return "Inconclusive";
    }
    return "?";
}

// Leading slot of an echelon row. Components are numbered from 1.
struct Pivot {
    std::size_t component = 1;
    int exponent = 0;

    friend auto operator<=>(const Pivot &, const Pivot &) = default;
};

/// Windowed model of a subspace of k((u))^{⊕r} that is discrete with
/// linearly compact quotient relative to k[[u]]^{⊕r}.
///
/// The modeled space is the span of the stored rows plus, when full_below is
/// set, every vector supported in u-exponents below u_lo. Rows are kept in
/// reduced echelon form over the column order (component, exponent), so the
/// pivot of a row is its lowest-order slot in its first nonzero component.
class WindowedSubspace
{
public:
    static WindowedSubspace echelonize(const Field &field, const std::vector<LaurentVector> &rows, std::size_t r,
                                       int u_lo, int u_hi, bool full_below)
    {
        if (r == 0) {
            throw error(errc::invalid_argument, "rank must be positive");
        }
        if (!(u_lo < u_hi)) {
            throw error(errc::invalid_argument, "window requires u_lo < u_hi");
        }
        WindowedSubspace W(field, r, u_lo, u_hi, full_below);
        std::vector<linalg::Row> dense;
        dense.reserve(rows.size());
        for (const auto &v : rows) {
            dense.push_back(W.to_dense(v, /*absorb_below=*/full_below));
        }
        W.echelon_ = linalg::rref(std::move(dense));
        return W;
    }

    const Field &field() const noexcept
    {
        return field_;
    }
    std::size_t rank() const noexcept
    {
        return r_;
    }
    int u_lo() const noexcept
    {
        return u_lo_;
    }
    int u_hi() const noexcept
    {
        return u_hi_;
    }
    bool full_below() const noexcept
    {
        return full_below_;
    }
    std::size_t dimension() const noexcept
    {
        return echelon_.rows.size();
    }
    std::size_t width() const noexcept
    {
        return static_cast<std::size_t>(u_hi_ - u_lo_);
    }
    std::size_t columns() const noexcept
    {
        return r_ * width();
    }

    std::vector<LaurentVector> rows() const
    {
        std::vector<LaurentVector> out;
        out.reserve(echelon_.rows.size());
        for (const auto &row : echelon_.rows) {
            out.push_back(from_dense(row));
        }
        return out;
    }

    const linalg::Echelon &echelon() const noexcept
    {
        return echelon_;
    }

    Pivot slot(std::size_t column) const
    {
        return Pivot{column / width() + 1, static_cast<int>(column % width()) + u_lo_};
    }

    std::size_t column(std::size_t component0, int exponent) const
    {
        return component0 * width() + static_cast<std::size_t>(exponent - u_lo_);
    }

    std::vector<Pivot> pivot_profile() const
    {
        std::vector<Pivot> out;
        out.reserve(echelon_.pivots.size());
        for (const auto c : echelon_.pivots) {
            out.push_back(slot(c));
        }
        return out;
    }

    Membership membership(const LaurentVector &v) const
    {
        const auto rem = linalg::reduce(echelon_, to_dense(v, /*absorb_below=*/false));
        return linalg::is_zero(rem) ? Membership::in : Membership::not_in;
    }

    /// Index of the map to k((u))^r / k[[u]]^r: the number of occupied slots
    /// with exponent >= 0 minus the number of empty slots below 0. Pivots in
    /// the top margin [u_hi - top_margin, u_hi) mean the window cannot see
    /// the whole space and raise WindowTooSmall.
    long fredholm_index(int top_margin = 0) const
    {
        if (!full_below_) {
            throw error(errc::not_cocompact, "subspace without the below-window tail has non-compact quotient");
        }
        if (u_lo_ > 0 || u_hi_ <= 0) {
            throw error(errc::window_too_small, "window must straddle exponent 0");
        }
        long occupied_nonneg = 0;
        long occupied_neg = 0;
        for (const auto &p : pivot_profile()) {
            if (p.exponent >= u_hi_ - top_margin) {
                throw error(errc::window_too_small, "pivot at u^" + std::to_string(p.exponent) + " touches the top margin");
            }
            (p.exponent >= 0 ? occupied_nonneg : occupied_neg) += 1;
        }
        const long negative_slots = static_cast<long>(r_) * static_cast<long>(-u_lo_);
        return occupied_nonneg - (negative_slots - occupied_neg);
    }

    // Same modeled space seen through a wider window; the tail below the old
    // u_lo is re-materialized as explicit rows.
    WindowedSubspace enlarged(int new_u_lo, int new_u_hi) const
    {
        if (new_u_lo > u_lo_ || new_u_hi < u_hi_) {
            throw error(errc::invalid_argument, "enlarged window must contain the old one");
        }
        auto vs = rows();
        for (auto &v : vs) {
            v.resize(r_, LaurentPoly(field_));
        }
        if (full_below_) {
            for (std::size_t c = 0; c < r_; ++c) {
                for (int e = new_u_lo; e < u_lo_; ++e) {
                    vs.push_back(unit_vector(field_, r_, c, LaurentPoly::monomial(field_, e)));
                }
            }
        }
        return echelonize(field_, vs, r_, new_u_lo, new_u_hi, full_below_);
    }

    friend bool operator==(const WindowedSubspace &a, const WindowedSubspace &b)
    {
        return a.field_ == b.field_ && a.r_ == b.r_ && a.u_lo_ == b.u_lo_ && a.u_hi_ == b.u_hi_ &&
               a.full_below_ == b.full_below_ && a.echelon_.pivots == b.echelon_.pivots &&
               a.echelon_.rows == b.echelon_.rows;
    }

    linalg::Row to_dense(const LaurentVector &v, bool absorb_below) const
    {
        if (v.size() != r_) {
            throw error(errc::invalid_argument,
                        "vector has " + std::to_string(v.size()) + " components, expected " + std::to_string(r_));
        }
        auto row = linalg::zero_row(field_, columns());
        for (std::size_t c = 0; c < r_; ++c) {
            require_same_field(field_, v[c].field());
            for (const auto &[e, coef] : v[c].terms()) {
                if (e < u_lo_ && absorb_below) {
                    continue;
                }
                if (e < u_lo_ || e >= u_hi_) {
                    throw error(errc::support_violation, "u^" + std::to_string(e) + " outside window [" +
                                                             std::to_string(u_lo_) + ", " + std::to_string(u_hi_) + ")");
                }
                row[column(c, e)] = coef;
            }
        }
        return row;
    }

    LaurentVector from_dense(const linalg::Row &row) const
    {
        auto v = zero_vector(field_, r_);
        for (std::size_t col = 0; col < row.size(); ++col) {
            if (!row[col].is_zero()) {
                const auto s = slot(col);
                v[s.component - 1].add_term(s.exponent, row[col]);
            }
        }
        return v;
    }

private:
    WindowedSubspace(Field f, std::size_t r, int u_lo, int u_hi, bool full_below)
        : field_(f), r_(r), u_lo_(u_lo), u_hi_(u_hi), full_below_(full_below)
    {
    }

    Field field_;
    std::size_t r_;
    int u_lo_;
    int u_hi_;
    bool full_below_;
    linalg::Echelon echelon_;
};

// Block-diagonal sum: the components of b follow those of a.
inline WindowedSubspace direct_sum(const WindowedSubspace &a, const WindowedSubspace &b)
{
    if (a.u_lo() != b.u_lo() || a.u_hi() != b.u_hi() || a.full_below() != b.full_below()) {
        throw error(errc::invalid_argument, "direct sum needs equal windows and tail flags");
    }
    require_same_field(a.field(), b.field());
    const auto r = a.rank() + b.rank();
    std::vector<LaurentVector> rows;
    for (auto v : a.rows()) {
        v.resize(r, LaurentPoly(a.field()));
        rows.push_back(std::move(v));
    }
    for (const auto &w : b.rows()) {
        auto v = zero_vector(a.field(), a.rank());
        v.insert(v.end(), w.begin(), w.end());
        rows.push_back(std::move(v));
    }
    return WindowedSubspace::echelonize(a.field(), rows, r, a.u_lo(), a.u_hi(), a.full_below());
}

} // namespace ribbonlab

#endif
