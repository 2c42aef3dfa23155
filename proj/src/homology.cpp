#include "fibrous/homology.hpp"

#include "fibrous/checked.hpp"

namespace fibrous {

Homology homology(const SimplicialComplex& c) {
    const int dim = c.dimension();
    // rank[k] = rank of d_k; d_0 and d_{dim+1} are zero maps.
    std::vector<std::int64_t> rank(static_cast<std::size_t>(dim) + 2, 0);
    std::vector<std::vector<std::int64_t>> factors(static_cast<std::size_t>(dim) + 2);
    for (int k = 1; k <= dim; ++k) {
        SnfResult snf = smith_normal_form(boundary_matrix(c, k));
        rank[static_cast<std::size_t>(k)] = snf.rank;
        factors[static_cast<std::size_t>(k)] = std::move(snf.invariant_factors);
    }

    Homology out;
    const auto& f = c.f_vector();
    for (int k = 0; k <= dim; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        out.betti.push_back(f[ku] - rank[ku] - rank[ku + 1]);
        std::vector<std::int64_t> tors;
        for (std::int64_t d : factors[ku + 1])
            if (d > 1)
                tors.push_back(d);
        out.torsion.push_back(std::move(tors));
    }
    return out;
}

std::vector<std::int64_t> betti_numbers(const SimplicialComplex& c) {
    return homology(c).betti;
}

std::int64_t chi_by_betti(const SimplicialComplex& c) {
    std::int64_t chi = 0;
    const auto betti = betti_numbers(c);
    for (std::size_t k = 0; k < betti.size(); ++k)
        chi = k % 2 == 0 ? checked_add(chi, betti[k]) : checked_sub(chi, betti[k]);
    return chi;
}

} // namespace fibrous
