#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace fibrous {

struct SpaceTerm;

/// Terms are immutable after construction and freely shared between trees.
using TermPtr = std::shared_ptr<const SpaceTerm>;

/// A finite discrete space with `points` points; zero points is the empty space.
struct Finite {
    std::int64_t points = 0;
};

/// Disjoint topological sum of one or more spaces.
struct Sum {
    std::vector<TermPtr> parts;
};

/// `count` disjoint copies of `base`. Shorthand for a Sum of count copies.
struct Multiple {
    std::int64_t count = 1;
    TermPtr base;
};

/// Reference to a named catalog space, e.g. S^n or rosette(k).
struct CatalogRef {
    std::string name;
    std::vector<std::int64_t> params;
};

/// Ordered decomposition X0(Y1)X1...(Yn)Xn into transitional fibers X_i and
/// running fibers Y_j. Always transitional.size() == running.size() + 1; a
/// length-0 decomposition is X0 alone.
struct FibrousDecomposition {
    std::vector<TermPtr> transitional;
    std::vector<TermPtr> running;

    std::size_t length() const { return running.size(); }
};

struct SpaceTerm {
    std::variant<Finite, Sum, Multiple, CatalogRef, FibrousDecomposition> node;
};

// Validating constructors; each throws TermError on an invariant violation.
TermPtr finite_space(std::int64_t points);
TermPtr sum(std::vector<TermPtr> parts);
TermPtr multiple(std::int64_t count, TermPtr base);
TermPtr catalog_ref(std::string name, std::vector<std::int64_t> params);
TermPtr decomp(std::vector<TermPtr> transitional, std::vector<TermPtr> running);

bool structurally_equal(const SpaceTerm& a, const SpaceTerm& b);
bool structurally_equal(const TermPtr& a, const TermPtr& b);

} // namespace fibrous
