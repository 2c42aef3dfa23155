#pragma once

#include <cstdint>
#include <vector>

namespace fibrous {

/// Cell counts a_0..a_n of a finite CW complex; the top count is positive.
struct CwSkeleton {
    std::vector<std::int64_t> cell_counts;
};

/// Validates: non-empty, all counts >= 0, top count >= 1.
CwSkeleton make_cw_skeleton(std::vector<std::int64_t> cell_counts);

/// Alternating sum of the cell counts.
std::int64_t chi_by_cells(const CwSkeleton& k);

} // namespace fibrous
