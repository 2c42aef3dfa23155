#include "fibrous/eval.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "fibrous/checked.hpp"
#include "fibrous/errors.hpp"

namespace fibrous {

namespace {

// A derivation's multiple node lists one child per copy; past this the trace
// itself would dominate memory.
constexpr std::int64_t kMaxMultipleFanout = 1 << 20;

using CatalogKey = std::pair<std::string, std::vector<std::int64_t>>;

struct DepthGuard {
    std::size_t& depth;
    explicit DepthGuard(std::size_t& d, std::size_t limit, const CatalogRef& ref) : depth(d) {
        if (++depth > limit)
            throw ExpansionDepthError("catalog expansion of '" + ref.name + "' exceeded depth " +
                                      std::to_string(limit) +
                                      "; the entry's recursion may not terminate");
    }
    ~DepthGuard() { --depth; }
};

class ChiEvaluator {
public:
    ChiEvaluator(const Catalog& catalog, std::size_t max_depth)
        : catalog_(catalog), max_depth_(max_depth) {}

    DerivPtr eval(const TermPtr& t) {
        if (const auto* f = std::get_if<Finite>(&t->node))
            return node(t, f->points, ChiRule::finite_count, {});

        if (const auto* s = std::get_if<Sum>(&t->node)) {
            std::int64_t total = 0;
            std::vector<ChiChild> children;
            children.reserve(s->parts.size());
            for (const auto& part : s->parts) {
                DerivPtr d = eval(part);
                total = checked_add(total, d->chi);
                children.push_back({+1, FiberLevel::none_level(), std::move(d)});
            }
            return node(t, total, ChiRule::sum_additivity, std::move(children));
        }

        if (const auto* m = std::get_if<Multiple>(&t->node)) {
            if (m->count > kMaxMultipleFanout)
                throw OverflowError("derivation for a multiple of " + std::to_string(m->count) +
                                    " copies is too large to record");
            DerivPtr base = eval(m->base);
            const std::int64_t total = checked_mul(m->count, base->chi);
            std::vector<ChiChild> children(static_cast<std::size_t>(m->count),
                                           ChiChild{+1, FiberLevel::none_level(), base});
            return node(t, total, ChiRule::multiple, std::move(children));
        }

        if (const auto* r = std::get_if<CatalogRef>(&t->node)) {
            CatalogKey key{r->name, r->params};
            if (const auto it = memo_.find(key); it != memo_.end())
                return it->second;
            const CatalogEntry& entry = catalog_.resolve(r->name, r->params);
            DepthGuard guard(depth_, max_depth_, *r);
            DerivPtr inner = eval(entry.build(r->params));
            const std::int64_t value = inner->chi;
            DerivPtr d = node(t, value, ChiRule::catalog_expansion,
                              {{+1, FiberLevel::none_level(), std::move(inner)}});
            memo_.emplace(std::move(key), d);
            return d;
        }

        const auto& dd = std::get<FibrousDecomposition>(t->node);
        std::int64_t total = 0;
        std::vector<ChiChild> children;
        children.reserve(2 * dd.length() + 1);
        for (std::size_t i = 0; i < dd.transitional.size(); ++i) {
            DerivPtr x = eval(dd.transitional[i]);
            total = checked_add(total, x->chi);
            children.push_back(
                {+1, FiberLevel::at(static_cast<std::int64_t>(i)), std::move(x)});
            if (i < dd.running.size()) {
                DerivPtr y = eval(dd.running[i]);
                total = checked_sub(total, y->chi);
                children.push_back(
                    {-1, FiberLevel::between(static_cast<std::int64_t>(i) + 1), std::move(y)});
            }
        }
        return node(t, total, ChiRule::alternating_sum, std::move(children));
    }

private:
    static DerivPtr node(TermPtr term, std::int64_t chi, ChiRule rule,
                         std::vector<ChiChild> children) {
        return std::make_shared<const ChiDerivation>(
            ChiDerivation{std::move(term), chi, rule, std::move(children)});
    }

    const Catalog& catalog_;
    std::size_t max_depth_;
    std::size_t depth_ = 0;
    std::map<CatalogKey, DerivPtr> memo_;
};

class RankEvaluator {
public:
    RankEvaluator(const Catalog& catalog, std::size_t max_depth)
        : catalog_(catalog), max_depth_(max_depth) {}

    std::int64_t eval(const TermPtr& t) {
        if (std::get_if<Finite>(&t->node))
            return 0;
        if (const auto* s = std::get_if<Sum>(&t->node)) {
            std::int64_t best = 0;
            for (const auto& part : s->parts)
                best = std::max(best, eval(part));
            return best;
        }
        if (const auto* m = std::get_if<Multiple>(&t->node))
            return eval(m->base);
        if (const auto* r = std::get_if<CatalogRef>(&t->node)) {
            CatalogKey key{r->name, r->params};
            if (const auto it = memo_.find(key); it != memo_.end())
                return it->second;
            const CatalogEntry& entry = catalog_.resolve(r->name, r->params);
            DepthGuard guard(depth_, max_depth_, *r);
            const std::int64_t rank = eval(entry.build(r->params));
            memo_.emplace(std::move(key), rank);
            return rank;
        }
        const auto& dd = std::get<FibrousDecomposition>(t->node);
        if (dd.length() == 0)
            return eval(dd.transitional[0]);
        std::int64_t best = 0;
        for (const auto& x : dd.transitional)
            best = std::max(best, eval(x));
        for (const auto& y : dd.running)
            best = std::max(best, eval(y));
        return checked_add(1, best);
    }

private:
    const Catalog& catalog_;
    std::size_t max_depth_;
    std::size_t depth_ = 0;
    std::map<CatalogKey, std::int64_t> memo_;
};

class Expander {
public:
    Expander(const Catalog& catalog, std::size_t max_depth)
        : catalog_(catalog), max_depth_(max_depth) {}

    TermPtr eval(const TermPtr& t) {
        if (std::get_if<Finite>(&t->node))
            return t;
        if (const auto* s = std::get_if<Sum>(&t->node)) {
            std::vector<TermPtr> parts;
            parts.reserve(s->parts.size());
            for (const auto& part : s->parts)
                parts.push_back(eval(part));
            return sum(std::move(parts));
        }
        if (const auto* m = std::get_if<Multiple>(&t->node))
            return multiple(m->count, eval(m->base));
        if (const auto* r = std::get_if<CatalogRef>(&t->node)) {
            CatalogKey key{r->name, r->params};
            if (const auto it = memo_.find(key); it != memo_.end())
                return it->second;
            const CatalogEntry& entry = catalog_.resolve(r->name, r->params);
            DepthGuard guard(depth_, max_depth_, *r);
            TermPtr expanded = eval(entry.build(r->params));
            memo_.emplace(std::move(key), expanded);
            return expanded;
        }
        const auto& dd = std::get<FibrousDecomposition>(t->node);
        std::vector<TermPtr> transitional, running;
        transitional.reserve(dd.transitional.size());
        running.reserve(dd.running.size());
        for (const auto& x : dd.transitional)
            transitional.push_back(eval(x));
        for (const auto& y : dd.running)
            running.push_back(eval(y));
        return decomp(std::move(transitional), std::move(running));
    }

private:
    const Catalog& catalog_;
    std::size_t max_depth_;
    std::size_t depth_ = 0;
    std::map<CatalogKey, TermPtr> memo_;
};

} // namespace

DerivPtr chi(const TermPtr& term, const Catalog& catalog, std::size_t max_expansion_depth) {
    if (!term)
        throw TermError("cannot evaluate a null term");
    return ChiEvaluator(catalog, max_expansion_depth).eval(term);
}

std::int64_t fibrous_rank(const TermPtr& term, const Catalog& catalog,
                          std::size_t max_expansion_depth) {
    if (!term)
        throw TermError("cannot evaluate a null term");
    return RankEvaluator(catalog, max_expansion_depth).eval(term);
}

TermPtr expand(const TermPtr& term, const Catalog& catalog, std::size_t max_expansion_depth) {
    if (!term)
        throw TermError("cannot expand a null term");
    return Expander(catalog, max_expansion_depth).eval(term);
}

} // namespace fibrous
