#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fibrous/cw.hpp"
#include "fibrous/simplicial.hpp"
#include "fibrous/term.hpp"

namespace fibrous {

/// A concrete model of a catalog space, used to cross-check decompositions:
/// either a triangulation or plain CW cell counts.
using Realization = std::variant<SimplicialComplex, CwSkeleton>;

using Params = std::span<const std::int64_t>;

struct CatalogEntry {
    std::string name;
    std::string display;     // "S^n", "M_g", "rosette(k)", ...
    std::string domain_text; // "n >= 0", "1 <= n <= 3", ...
    std::string scheme;      // canonical decomposition, in input-notation syntax
    std::string chi_text;    // closed form of chi
    std::string realization_text;
    int arity = 1; // -1: variadic with at least one parameter

    /// Returns false and fills `reason` when params fall outside the domain.
    std::function<bool(Params, std::string& reason)> in_domain;

    /// Canonical decomposition for in-domain params.
    std::function<TermPtr(Params)> build;

    struct AltBuilder {
        std::string label;
        std::string scheme;
        std::function<TermPtr(Params)> build;
    };
    std::vector<AltBuilder> alt_builders;

    /// Concrete model, when one exists for these params.
    std::function<std::optional<Realization>(Params)> realize;

    /// Closed-form chi, when known.
    std::function<std::int64_t(Params)> expected_chi;
};

class Catalog {
public:
    void add(CatalogEntry entry);

    /// Null when the name is not registered.
    const CatalogEntry* find(const std::string& name) const;

    /// Validates registration, arity and parameter domain; throws CatalogError.
    const CatalogEntry& resolve(const std::string& name, Params params) const;

    /// Canonical decomposition for name(params).
    TermPtr lookup(const std::string& name, Params params) const;

    std::optional<Realization> realization(const std::string& name, Params params) const;

    // brace-literal conveniences
    const CatalogEntry& resolve(const std::string& name,
                                std::initializer_list<std::int64_t> params) const {
        return resolve(name, Params(params.begin(), params.size()));
    }
    TermPtr lookup(const std::string& name, std::initializer_list<std::int64_t> params) const {
        return lookup(name, Params(params.begin(), params.size()));
    }
    std::optional<Realization> realization(const std::string& name,
                                           std::initializer_list<std::int64_t> params) const {
        return realization(name, Params(params.begin(), params.size()));
    }

    /// Name-sorted, so listings are deterministic.
    const std::map<std::string, CatalogEntry>& entries() const { return entries_; }

private:
    std::map<std::string, CatalogEntry> entries_;
};

/// The built-in catalog: S, RP, D, M, N, T, rosette, chain, cw.
const Catalog& builtin_catalog();

} // namespace fibrous
