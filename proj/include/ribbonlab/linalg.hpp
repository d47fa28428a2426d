#ifndef RIBBONLAB_LINALG_HPP
#define RIBBONLAB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <ribbonlab/scalar.hpp>

namespace ribbonlab::linalg
{

using Row = std::vector<Scalar>;

inline Row zero_row(const Field &f, std::size_t n)
{
    return Row(n, Scalar::zero(f));
}

inline std::optional<std::size_t> leading_column(const Row &row)
{
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (!row[c].is_zero()) {
            return c;
        }
    }
    return std::nullopt;
}

inline bool is_zero(const Row &row)
{
    return !leading_column(row).has_value();
}

// row -= factor * other, touching only columns >= from.
inline void axpy(Row &row, const Scalar &factor, const Row &other, std::size_t from = 0)
{
    for (std::size_t c = from; c < row.size(); ++c) {
        if (!other[c].is_zero()) {
            row[c] -= factor * other[c];
        }
    }
}

// Reduced row echelon form whose pivot is the first nonzero column of each
// row. Zero rows are dropped; rows come back sorted by pivot, pivots are 1
// and every pivot column is cleared in all other rows.
struct Echelon {
    std::vector<Row> rows;
    std::vector<std::size_t> pivots;
};

inline Echelon rref(std::vector<Row> rows)
{
    Echelon out;
    if (rows.empty()) {
        return out;
    }
    const std::size_t ncols = rows.front().size();
    std::size_t next = 0;
    for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
        std::size_t sel = next;
        while (sel < rows.size() && rows[sel][col].is_zero()) {
            ++sel;
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[sel]);
        const Scalar inv = rows[next][col].inverse();
        for (std::size_t c = col; c < ncols; ++c) {
            rows[next][c] *= inv;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && !rows[r][col].is_zero()) {
                const Scalar factor = rows[r][col];
                axpy(rows[r], factor, rows[next], col);
            }
        }
        out.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

inline std::size_t rank(std::vector<Row> rows)
{
    return rref(std::move(rows)).rows.size();
}

// Remainder of v after elimination against an echelon basis.
inline Row reduce(const Echelon &basis, Row v)
{
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        const auto col = basis.pivots[i];
        if (!v[col].is_zero()) {
            const Scalar factor = v[col];
            axpy(v, factor, basis.rows[i], col);
        }
    }
    return v;
}

} // namespace ribbonlab::linalg

#endif
