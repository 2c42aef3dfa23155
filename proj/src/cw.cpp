#include "fibrous/cw.hpp"

#include <string>
#include <utility>

#include "fibrous/checked.hpp"
#include "fibrous/errors.hpp"

namespace fibrous {

CwSkeleton make_cw_skeleton(std::vector<std::int64_t> cell_counts) {
    if (cell_counts.empty())
        throw ComplexError("a CW skeleton needs at least one cell count");
    for (std::int64_t a : cell_counts)
        if (a < 0)
            throw ComplexError("negative cell count " + std::to_string(a));
    if (cell_counts.back() < 1)
        throw ComplexError("the top-dimensional cell count must be positive");
    return CwSkeleton{std::move(cell_counts)};
}

std::int64_t chi_by_cells(const CwSkeleton& k) {
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < k.cell_counts.size(); ++i)
        chi = i % 2 == 0 ? checked_add(chi, k.cell_counts[i])
                         : checked_sub(chi, k.cell_counts[i]);
    return chi;
}

} // namespace fibrous
