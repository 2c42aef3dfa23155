#include "fibrous/term.hpp"

#include <utility>

#include "fibrous/errors.hpp"

namespace fibrous {

namespace {

TermPtr make(SpaceTerm t) {
    return std::make_shared<const SpaceTerm>(std::move(t));
}

} // namespace

TermPtr finite_space(std::int64_t points) {
    if (points < 0)
        throw TermError("a finite space cannot have a negative point count (got " +
                        std::to_string(points) + ")");
    return make({Finite{points}});
}

TermPtr sum(std::vector<TermPtr> parts) {
    if (parts.empty())
        throw TermError("a sum needs at least one part");
    for (const auto& p : parts)
        if (!p)
            throw TermError("a sum part is null");
    return make({Sum{std::move(parts)}});
}

TermPtr multiple(std::int64_t count, TermPtr base) {
    if (count < 1)
        throw TermError("a multiple needs a count of at least 1 (got " + std::to_string(count) +
                        ")");
    if (!base)
        throw TermError("a multiple's base is null");
    return make({Multiple{count, std::move(base)}});
}

TermPtr catalog_ref(std::string name, std::vector<std::int64_t> params) {
    if (name.empty())
        throw TermError("a catalog reference needs a name");
    return make({CatalogRef{std::move(name), std::move(params)}});
}

TermPtr decomp(std::vector<TermPtr> transitional, std::vector<TermPtr> running) {
    if (transitional.size() != running.size() + 1)
        throw TermError("a decomposition needs one more transitional fiber than running fibers "
                        "(got " +
                        std::to_string(transitional.size()) + " and " +
                        std::to_string(running.size()) + ")");
    for (const auto& t : transitional)
        if (!t)
            throw TermError("a transitional fiber is null");
    for (const auto& r : running)
        if (!r)
            throw TermError("a running fiber is null");
    return make({FibrousDecomposition{std::move(transitional), std::move(running)}});
}

namespace {

bool equal_lists(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!structurally_equal(a[i], b[i]))
            return false;
    return true;
}

} // namespace

bool structurally_equal(const SpaceTerm& a, const SpaceTerm& b) {
    if (a.node.index() != b.node.index())
        return false;
    if (const auto* fa = std::get_if<Finite>(&a.node))
        return fa->points == std::get<Finite>(b.node).points;
    if (const auto* sa = std::get_if<Sum>(&a.node))
        return equal_lists(sa->parts, std::get<Sum>(b.node).parts);
    if (const auto* ma = std::get_if<Multiple>(&a.node)) {
        const auto& mb = std::get<Multiple>(b.node);
        return ma->count == mb.count && structurally_equal(ma->base, mb.base);
    }
    if (const auto* ca = std::get_if<CatalogRef>(&a.node)) {
        const auto& cb = std::get<CatalogRef>(b.node);
        return ca->name == cb.name && ca->params == cb.params;
    }
    const auto& da = std::get<FibrousDecomposition>(a.node);
    const auto& db = std::get<FibrousDecomposition>(b.node);
    return equal_lists(da.transitional, db.transitional) && equal_lists(da.running, db.running);
}

bool structurally_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return structurally_equal(*a, *b);
}

} // namespace fibrous
