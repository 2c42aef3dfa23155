#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fibrous/term.hpp"

namespace fibrous {

enum class ChiRule {
    finite_count,
    sum_additivity,
    multiple,
    catalog_expansion,
    alternating_sum,
};

/// Stable rule names: "finite-count", "sum-additivity", "multiple",
/// "catalog-expansion", "alternating-sum".
const char* chi_rule_name(ChiRule r);

/// Level of a fiber under the function associated with its decomposition:
/// the transitional fiber X_i sits at the integer level i, the running fiber
/// Y_j sweeps the open interval (j-1, j).
struct FiberLevel {
    enum class Kind { none, transitional, running };

    Kind kind = Kind::none;
    std::int64_t index = 0;

    static FiberLevel none_level() { return {}; }
    static FiberLevel at(std::int64_t i) { return {Kind::transitional, i}; }
    static FiberLevel between(std::int64_t j) { return {Kind::running, j}; } // (j-1, j)
};

struct ChiDerivation;
using DerivPtr = std::shared_ptr<const ChiDerivation>;

struct ChiChild {
    int sign = +1; // +1 or -1
    FiberLevel level; // set only under alternating-sum nodes
    DerivPtr node;
};

/// One recursive evaluation step. For every rule except finite-count, chi
/// equals the sign-weighted sum of the children; a finite-count leaf's chi is
/// the point count of its term. Alternating-sum children come in the order
/// X0, Y1, X1, ..., Yn, Xn with signs +, -, +, ..., -, +.
struct ChiDerivation {
    TermPtr term;
    std::int64_t chi = 0;
    ChiRule rule = ChiRule::finite_count;
    std::vector<ChiChild> children;
};

/// Re-checks the whole tree: per-rule shape, the alternating sign and level
/// pattern, and every node's sign-weighted child sum. Shared nodes are
/// checked once. On failure fills `why` (when given) and returns false.
bool derivation_is_sound(const ChiDerivation& d, std::string* why = nullptr);

/// Number of distinct nodes in the tree (shared nodes counted once).
std::size_t derivation_node_count(const ChiDerivation& d);

} // namespace fibrous
