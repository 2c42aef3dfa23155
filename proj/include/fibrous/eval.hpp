#pragma once

#include <cstddef>
#include <cstdint>

#include "fibrous/catalog.hpp"
#include "fibrous/derivation.hpp"
#include "fibrous/term.hpp"

namespace fibrous {

/// Catalog expansion nesting deeper than this aborts evaluation; guards
/// against an entry whose recursion never reaches a base case.
inline constexpr std::size_t kDefaultExpansionDepth = 512;

/// Euler characteristic with a full derivation trace.
///
/// Finite(n) -> n; disjoint sums add; a decomposition X0(Y1)...(Yn)Xn is the
/// alternating sum chi(X0) - chi(Y1) + chi(X1) - ... - chi(Yn) + chi(Xn).
/// Catalog references evaluate through their canonical decomposition and are
/// memoized per (name, params) within the call; the trace still records an
/// expansion node for each reference.
DerivPtr chi(const TermPtr& term, const Catalog& catalog,
             std::size_t max_expansion_depth = kDefaultExpansionDepth);

/// Fibrous rank: a finite space has rank 0; a decomposition of positive
/// length has rank 1 + the maximum rank of its fibers (length 0 passes
/// through); sums and multiples take the maximum over their parts.
std::int64_t fibrous_rank(const TermPtr& term, const Catalog& catalog,
                          std::size_t max_expansion_depth = kDefaultExpansionDepth);

/// Replaces every catalog reference by its canonical decomposition,
/// recursively; the result contains only finite, sum, multiple and
/// decomposition nodes and has the same chi.
TermPtr expand(const TermPtr& term, const Catalog& catalog,
               std::size_t max_expansion_depth = kDefaultExpansionDepth);

} // namespace fibrous
