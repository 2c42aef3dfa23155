#include "fibrous/snf.hpp"

#include <utility>

#include "fibrous/checked.hpp"
#include "fibrous/errors.hpp"

namespace fibrous {

IntegerMatrix::IntegerMatrix(std::int64_t r, std::int64_t c) : rows(r), cols(c) {
    if (r < 0 || c < 0)
        throw Error("matrix dimensions cannot be negative");
    entries.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0);
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows)
        throw Error("matrix product dimension mismatch");
    IntegerMatrix out(a.rows, b.cols);
    for (std::int64_t i = 0; i < a.rows; ++i)
        for (std::int64_t k = 0; k < a.cols; ++k) {
            const std::int64_t aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::int64_t j = 0; j < b.cols; ++j)
                out.at(i, j) = checked_add(out.at(i, j), checked_mul(aik, b.at(k, j)));
        }
    return out;
}

bool is_zero(const IntegerMatrix& m) {
    for (std::int64_t v : m.entries)
        if (v != 0)
            return false;
    return true;
}

namespace {

void swap_rows(IntegerMatrix& m, std::int64_t a, std::int64_t b) {
    if (a == b)
        return;
    for (std::int64_t c = 0; c < m.cols; ++c)
        std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, std::int64_t a, std::int64_t b) {
    if (a == b)
        return;
    for (std::int64_t r = 0; r < m.rows; ++r)
        std::swap(m.at(r, a), m.at(r, b));
}

// row dst -= q * row src
void row_axpy(IntegerMatrix& m, std::int64_t dst, std::int64_t src, std::int64_t q) {
    for (std::int64_t c = 0; c < m.cols; ++c)
        m.at(dst, c) = checked_sub(m.at(dst, c), checked_mul(q, m.at(src, c)));
}

// col dst -= q * col src
void col_axpy(IntegerMatrix& m, std::int64_t dst, std::int64_t src, std::int64_t q) {
    for (std::int64_t r = 0; r < m.rows; ++r)
        m.at(r, dst) = checked_sub(m.at(r, dst), checked_mul(q, m.at(r, src)));
}

// row dst += row src
void row_add(IntegerMatrix& m, std::int64_t dst, std::int64_t src) {
    for (std::int64_t c = 0; c < m.cols; ++c)
        m.at(dst, c) = checked_add(m.at(dst, c), m.at(src, c));
}

// Smallest-magnitude nonzero entry of the trailing submatrix starting at t.
bool find_pivot(const IntegerMatrix& m, std::int64_t t, std::int64_t& pr, std::int64_t& pc) {
    pr = -1;
    pc = -1;
    std::int64_t best = 0;
    for (std::int64_t r = t; r < m.rows; ++r)
        for (std::int64_t c = t; c < m.cols; ++c) {
            const std::int64_t v = m.at(r, c);
            if (v == 0)
                continue;
            const std::int64_t mag = v < 0 ? checked_neg(v) : v;
            if (pr < 0 || mag < best) {
                best = mag;
                pr = r;
                pc = c;
            }
        }
    return pr >= 0;
}

} // namespace

SnfResult smith_normal_form(IntegerMatrix m) {
    SnfResult out;
    const std::int64_t bound = m.rows < m.cols ? m.rows : m.cols;

    for (std::int64_t t = 0; t < bound; ++t) {
        std::int64_t pr, pc;
        if (!find_pivot(m, t, pr, pc))
            break; // trailing submatrix is zero
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        for (;;) {
            bool changed = false;

            // Division steps down the pivot column; a nonzero remainder is
            // strictly smaller than the pivot and will be re-picked.
            for (std::int64_t r = t + 1; r < m.rows; ++r) {
                if (m.at(r, t) == 0)
                    continue;
                const std::int64_t q = m.at(r, t) / m.at(t, t);
                if (q != 0)
                    row_axpy(m, r, t, q);
                if (m.at(r, t) != 0)
                    changed = true;
            }
            // Same along the pivot row. Column operations only touch row t
            // here because the column below the pivot is already clear.
            if (!changed) {
                for (std::int64_t c = t + 1; c < m.cols; ++c) {
                    if (m.at(t, c) == 0)
                        continue;
                    const std::int64_t q = m.at(t, c) / m.at(t, t);
                    if (q != 0)
                        col_axpy(m, c, t, q);
                    if (m.at(t, c) != 0)
                        changed = true;
                }
            }
            if (changed) {
                std::int64_t r2, c2;
                find_pivot(m, t, r2, c2);
                swap_rows(m, t, r2);
                swap_cols(m, t, c2);
                continue;
            }

            // Pivot must divide the whole trailing submatrix so the factors
            // come out in a divisibility chain. Folding an offending row
            // into row t produces a remainder smaller than the pivot.
            bool divides = true;
            for (std::int64_t r = t + 1; r < m.rows && divides; ++r)
                for (std::int64_t c = t + 1; c < m.cols; ++c)
                    if (m.at(r, c) % m.at(t, t) != 0) {
                        row_add(m, t, r);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }

        std::int64_t d = m.at(t, t);
        out.invariant_factors.push_back(d < 0 ? checked_neg(d) : d);
    }

    out.rank = static_cast<std::int64_t>(out.invariant_factors.size());
    return out;
}

} // namespace fibrous
