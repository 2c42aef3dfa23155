#pragma once

#include <cstdint>
#include <vector>

#include "fibrous/simplicial.hpp"

namespace fibrous {

/// Integer homology summary. betti[k] = f_k - rank d_k - rank d_{k+1};
/// torsion[k] holds the invariant factors > 1 of d_{k+1}.
struct Homology {
    std::vector<std::int64_t> betti;
    std::vector<std::vector<std::int64_t>> torsion;
};

Homology homology(const SimplicialComplex& c);

std::vector<std::int64_t> betti_numbers(const SimplicialComplex& c);

/// Alternating sum of the Betti numbers.
std::int64_t chi_by_betti(const SimplicialComplex& c);

} // namespace fibrous
