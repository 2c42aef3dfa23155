#pragma once

#include <cstdint>
#include <vector>

namespace fibrous {

/// Dense exact-integer matrix. All arithmetic on entries is checked 64-bit;
/// no floating point anywhere in the homology pipeline.
struct IntegerMatrix {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<std::int64_t> entries; // row-major, rows*cols zeros by default

    IntegerMatrix() = default;
    IntegerMatrix(std::int64_t r, std::int64_t c);

    std::int64_t& at(std::int64_t r, std::int64_t c) { return entries[r * cols + c]; }
    std::int64_t at(std::int64_t r, std::int64_t c) const { return entries[r * cols + c]; }
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
bool is_zero(const IntegerMatrix& m);

/// Invariant factors d_1 | d_2 | ... | d_r (all positive) and the rank r.
struct SnfResult {
    std::vector<std::int64_t> invariant_factors;
    std::int64_t rank = 0;
};

/// Smith normal form under unimodular row/column operations, using
/// smallest-magnitude pivot selection to limit coefficient growth.
/// Zero and empty matrices are fine; overflow of the checked 64-bit
/// representation is a hard error.
SnfResult smith_normal_form(IntegerMatrix m);

} // namespace fibrous
