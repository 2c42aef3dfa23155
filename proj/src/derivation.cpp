#include "fibrous/derivation.hpp"

#include <set>

#include "fibrous/checked.hpp"
#include "fibrous/errors.hpp"

namespace fibrous {

const char* chi_rule_name(ChiRule r) {
    switch (r) {
    case ChiRule::finite_count: return "finite-count";
    case ChiRule::sum_additivity: return "sum-additivity";
    case ChiRule::multiple: return "multiple";
    case ChiRule::catalog_expansion: return "catalog-expansion";
    case ChiRule::alternating_sum: return "alternating-sum";
    }
    return "?";
}

namespace {

bool fail(std::string* why, const std::string& message) {
    if (why)
        *why = message;
    return false;
}

std::int64_t sign_weighted_sum(const ChiDerivation& d) {
    std::int64_t total = 0;
    for (const auto& c : d.children)
        total = checked_add(total, c.sign > 0 ? c.node->chi : checked_neg(c.node->chi));
    return total;
}

bool check_node(const ChiDerivation& d, std::set<const ChiDerivation*>& seen, std::string* why) {
    if (!seen.insert(&d).second)
        return true;
    if (!d.term)
        return fail(why, "derivation node without a term");
    for (const auto& c : d.children) {
        if (!c.node)
            return fail(why, "null derivation child");
        if (c.sign != 1 && c.sign != -1)
            return fail(why, "child sign must be +1 or -1");
    }

    switch (d.rule) {
    case ChiRule::finite_count: {
        const auto* f = std::get_if<Finite>(&d.term->node);
        if (!f)
            return fail(why, "finite-count node whose term is not a finite space");
        if (!d.children.empty())
            return fail(why, "finite-count node with children");
        if (d.chi != f->points)
            return fail(why, "finite-count chi differs from the point count");
        break;
    }
    case ChiRule::sum_additivity: {
        const auto* s = std::get_if<Sum>(&d.term->node);
        if (!s)
            return fail(why, "sum-additivity node whose term is not a sum");
        if (d.children.size() != s->parts.size())
            return fail(why, "sum-additivity child count differs from the part count");
        for (const auto& c : d.children)
            if (c.sign != +1 || c.level.kind != FiberLevel::Kind::none)
                return fail(why, "sum-additivity child with a sign or level");
        break;
    }
    case ChiRule::multiple: {
        const auto* m = std::get_if<Multiple>(&d.term->node);
        if (!m)
            return fail(why, "multiple node whose term is not a multiple");
        if (static_cast<std::int64_t>(d.children.size()) != m->count)
            return fail(why, "multiple node must list one child per copy");
        for (const auto& c : d.children)
            if (c.sign != +1 || c.level.kind != FiberLevel::Kind::none)
                return fail(why, "multiple child with a sign or level");
        break;
    }
    case ChiRule::catalog_expansion: {
        if (!std::get_if<CatalogRef>(&d.term->node))
            return fail(why, "catalog-expansion node whose term is not a catalog reference");
        if (d.children.size() != 1 || d.children[0].sign != +1 ||
            d.children[0].level.kind != FiberLevel::Kind::none)
            return fail(why, "catalog-expansion node needs exactly one unsigned child");
        break;
    }
    case ChiRule::alternating_sum: {
        const auto* dd = std::get_if<FibrousDecomposition>(&d.term->node);
        if (!dd)
            return fail(why, "alternating-sum node whose term is not a decomposition");
        const std::size_t n = dd->length();
        if (d.children.size() != 2 * n + 1)
            return fail(why, "alternating-sum node needs 2n+1 children");
        for (std::size_t i = 0; i < d.children.size(); ++i) {
            const auto& c = d.children[i];
            if (i % 2 == 0) {
                // transitional fiber X_{i/2} at level i/2
                if (c.sign != +1 || c.level.kind != FiberLevel::Kind::transitional ||
                    c.level.index != static_cast<std::int64_t>(i / 2))
                    return fail(why, "alternating-sum transitional child out of pattern");
            } else {
                // running fiber Y_{(i+1)/2} on the interval (j-1, j)
                if (c.sign != -1 || c.level.kind != FiberLevel::Kind::running ||
                    c.level.index != static_cast<std::int64_t>((i + 1) / 2))
                    return fail(why, "alternating-sum running child out of pattern");
            }
        }
        break;
    }
    }

    if (d.rule != ChiRule::finite_count && d.chi != sign_weighted_sum(d))
        return fail(why, std::string("node chi differs from its sign-weighted child sum (rule ") +
                             chi_rule_name(d.rule) + ")");

    for (const auto& c : d.children)
        if (!check_node(*c.node, seen, why))
            return false;
    return true;
}

} // namespace

bool derivation_is_sound(const ChiDerivation& d, std::string* why) {
    std::set<const ChiDerivation*> seen;
    return check_node(d, seen, why);
}

std::size_t derivation_node_count(const ChiDerivation& d) {
    std::set<const ChiDerivation*> seen;
    std::vector<const ChiDerivation*> stack{&d};
    while (!stack.empty()) {
        const ChiDerivation* n = stack.back();
        stack.pop_back();
        if (!seen.insert(n).second)
            continue;
        for (const auto& c : n->children)
            stack.push_back(c.node.get());
    }
    return seen.size();
}

} // namespace fibrous
