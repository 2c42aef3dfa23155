#pragma once

#include <cstdint>
#include <vector>

#include "fibrous/snf.hpp"

namespace fibrous {

/// A simplex is a sorted list of distinct non-negative vertex labels.
using Simplex = std::vector<std::int64_t>;

/// Finite abstract simplicial complex stored as its full face lattice,
/// grouped by dimension and lexicographically sorted within each dimension.
class SimplicialComplex {
public:
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    /// All k-simplices, sorted. k must be in [0, dimension()].
    const std::vector<Simplex>& simplices(int k) const;

    /// f_vector()[k] is the number of k-simplices.
    const std::vector<std::int64_t>& f_vector() const { return f_; }

private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::int64_t> f_;

    friend SimplicialComplex close_and_validate(const std::vector<Simplex>& maximal);
};

/// Downward closure of the given maximal simplices. Rejects an empty input,
/// empty simplices, duplicate vertices within a simplex, and negative labels.
SimplicialComplex close_and_validate(const std::vector<Simplex>& maximal);

/// Alternating sum of the f-vector.
std::int64_t chi_by_faces(const SimplicialComplex& c);

/// Boundary operator, 1 <= k <= dimension: rows are (k-1)-simplices, columns
/// k-simplices; the face omitting the vertex at position i of a sorted column
/// simplex gets sign (-1)^i.
IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k);

} // namespace fibrous
