#include "fibrous/catalog.hpp"

#include <array>
#include <string>
#include <utility>

#include "fibrous/checked.hpp"
#include "fibrous/errors.hpp"

namespace fibrous {

void Catalog::add(CatalogEntry entry) {
    std::string name = entry.name;
    entries_.insert_or_assign(std::move(name), std::move(entry));
}

const CatalogEntry* Catalog::find(const std::string& name) const {
    const auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

const CatalogEntry& Catalog::resolve(const std::string& name, Params params) const {
    const CatalogEntry* e = find(name);
    if (!e)
        throw CatalogError("unknown space '" + name + "'");
    if (e->arity >= 0 && params.size() != static_cast<std::size_t>(e->arity))
        throw CatalogError("'" + name + "' expects " + std::to_string(e->arity) +
                           " parameter(s), got " + std::to_string(params.size()));
    if (e->arity < 0 && params.empty())
        throw CatalogError("'" + name + "' expects at least one parameter");
    std::string reason;
    if (!e->in_domain(params, reason))
        throw CatalogError("'" + name + "' parameter out of domain: " + reason);
    return *e;
}

TermPtr Catalog::lookup(const std::string& name, Params params) const {
    return resolve(name, params).build(params);
}

std::optional<Realization> Catalog::realization(const std::string& name, Params params) const {
    const CatalogEntry& e = resolve(name, params);
    if (!e.realize)
        return std::nullopt;
    return e.realize(params);
}

namespace {

TermPtr point() {
    return finite_space(1);
}

TermPtr sphere_ref(std::int64_t n) {
    return catalog_ref("S", {n});
}

TermPtr sphere_term(std::int64_t n) {
    if (n == 0)
        return finite_space(2);
    return decomp({point(), point()}, {sphere_ref(n - 1)});
}

// rosette(k) and chain(k) grow by attaching one more circle: X0(2p)p.
TermPtr circle_row_term(const std::string& name, std::int64_t k) {
    if (k == 0)
        return point();
    return decomp({catalog_ref(name, {k - 1}), point()}, {finite_space(2)});
}

TermPtr surface_m_term(std::int64_t g) {
    const TermPtr s1 = sphere_ref(1);
    const TermPtr row = catalog_ref("chain", {g + 1});
    return decomp({point(), row, row, point()}, {s1, multiple(g + 1, s1), s1});
}

TermPtr surface_m_alt_term(std::int64_t g) {
    TermPtr wedge = catalog_ref("rosette", {2 * g});
    return decomp({point(), std::move(wedge)}, {sphere_ref(1)});
}

TermPtr surface_n_term(std::int64_t h) {
    const TermPtr s1 = sphere_ref(1);
    if (h == 1)
        return decomp({s1, point()}, {s1});
    if (h == 2)
        return decomp({s1, s1}, {s1});
    const TermPtr copies = multiple(h - 1, s1);
    return decomp({s1, catalog_ref("chain", {h - 1}), copies}, {s1, copies});
}

TermPtr surface_n_alt_term(std::int64_t h) {
    TermPtr wedge = catalog_ref("rosette", {h});
    return decomp({point(), std::move(wedge)}, {sphere_ref(1)});
}

TermPtr projective_term(std::int64_t n) {
    if (n == 0)
        return point();
    return decomp({point(), catalog_ref("RP", {n - 1})}, {sphere_ref(n - 1)});
}

TermPtr dunce_term(std::int64_t n) {
    if (n == 0)
        return point();
    return decomp({point(), catalog_ref("D", {n - 1})}, {sphere_ref(n - 1)});
}

TermPtr torus_term(std::int64_t n) {
    if (n == 1)
        return sphere_term(1);
    if (n == 2)
        return surface_m_term(1);
    const TermPtr t2 = catalog_ref("T", {2});
    return decomp({t2, t2}, {multiple(2, t2)});
}

// cw(a0..an) peels the top dimension: an p (an*S^(n-1)) cw(a0..a(n-1)).
// A zero count contributes empty fibers.
TermPtr cw_term(Params a) {
    const std::size_t n = a.size() - 1;
    if (n == 0)
        return finite_space(a[0]);
    const std::int64_t top = a[n];
    TermPtr running = top == 0 ? finite_space(0) : multiple(top, sphere_ref(static_cast<std::int64_t>(n) - 1));
    std::vector<std::int64_t> rest(a.begin(), a.end() - 1);
    return decomp({finite_space(top), catalog_ref("cw", std::move(rest))}, {std::move(running)});
}

// ---- realizations ----------------------------------------------------

SimplicialComplex point_complex() {
    return close_and_validate({{0}});
}

// Boundary of the (n+1)-simplex: all (n+1)-subsets of {0, ..., n+1}.
SimplicialComplex sphere_complex(std::int64_t n) {
    const std::int64_t verts = n + 2;
    std::vector<Simplex> maximal;
    // enumerate subsets of size verts-1 by choosing the omitted vertex
    for (std::int64_t omit = 0; omit < verts; ++omit) {
        Simplex s;
        for (std::int64_t v = 0; v < verts; ++v)
            if (v != omit)
                s.push_back(v);
        maximal.push_back(std::move(s));
    }
    return close_and_validate(maximal);
}

// Wedge of k triangle circles sharing vertex 0.
SimplicialComplex rosette_complex(std::int64_t k) {
    if (k == 0)
        return point_complex();
    std::vector<Simplex> maximal;
    for (std::int64_t i = 0; i < k; ++i) {
        const std::int64_t a = 2 * i + 1, b = 2 * i + 2;
        maximal.push_back({0, a});
        maximal.push_back({a, b});
        maximal.push_back({0, b});
    }
    return close_and_validate(maximal);
}

// Row of k triangle circles, circle i touching circle i+1 at vertex 2i+2.
SimplicialComplex chain_complex(std::int64_t k) {
    if (k == 0)
        return point_complex();
    std::vector<Simplex> maximal;
    for (std::int64_t i = 0; i < k; ++i) {
        const std::int64_t a = 2 * i, b = 2 * i + 1, c = 2 * i + 2;
        maximal.push_back({a, b});
        maximal.push_back({b, c});
        maximal.push_back({a, c});
    }
    return close_and_validate(maximal);
}

// The 6-vertex triangulation of the projective plane (icosahedron quotient).
SimplicialComplex rp2_complex() {
    return close_and_validate({{0, 1, 3},
                               {0, 1, 4},
                               {0, 2, 3},
                               {0, 2, 5},
                               {0, 4, 5},
                               {1, 2, 4},
                               {1, 2, 5},
                               {1, 3, 5},
                               {2, 3, 4},
                               {3, 4, 5}});
}

// The 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
SimplicialComplex torus7_complex() {
    std::vector<Simplex> maximal;
    for (std::int64_t i = 0; i < 7; ++i) {
        maximal.push_back({i, (i + 1) % 7, (i + 3) % 7});
        maximal.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return close_and_validate(maximal);
}

// ---- domains ---------------------------------------------------------

CatalogEntry::AltBuilder make_alt(std::string label, std::string scheme,
                                  std::function<TermPtr(Params)> build) {
    return {std::move(label), std::move(scheme), std::move(build)};
}

bool at_least(Params p, std::int64_t lo, const char* var, std::string& reason) {
    if (p[0] >= lo)
        return true;
    reason = std::string(var) + " must be >= " + std::to_string(lo) + " (got " +
             std::to_string(p[0]) + ")";
    return false;
}

Catalog make_builtin() {
    Catalog cat;

    cat.add({
        .name = "S",
        .display = "S^n",
        .domain_text = "n >= 0",
        .scheme = "p(S^(n-1))p; S^0 = 2p",
        .chi_text = "2 for n even, 0 for n odd",
        .realization_text = "simplicial: boundary of the (n+1)-simplex",
        .arity = 1,
        .in_domain = [](Params p, std::string& r) { return at_least(p, 0, "n", r); },
        .build = [](Params p) { return sphere_term(p[0]); },
        .alt_builders = {},
        .realize = [](Params p) -> std::optional<Realization> { return sphere_complex(p[0]); },
        .expected_chi = [](Params p) -> std::int64_t { return p[0] % 2 == 0 ? 2 : 0; },
    });

    cat.add({
        .name = "rosette",
        .display = "rosette(k)",
        .domain_text = "k >= 0",
        .scheme = "rosette(k-1)(2p)p; rosette(0) = p",
        .chi_text = "1-k",
        .realization_text = "simplicial: wedge of k triangles",
        .arity = 1,
        .in_domain = [](Params p, std::string& r) { return at_least(p, 0, "k", r); },
        .build = [](Params p) { return circle_row_term("rosette", p[0]); },
        .alt_builders = {},
        .realize = [](Params p) -> std::optional<Realization> { return rosette_complex(p[0]); },
        .expected_chi = [](Params p) -> std::int64_t { return checked_sub(1, p[0]); },
    });

    cat.add({
        .name = "chain",
        .display = "chain(k)",
        .domain_text = "k >= 0",
        .scheme = "chain(k-1)(2p)p; chain(0) = p",
        .chi_text = "1-k",
        .realization_text = "simplicial: row of k touching triangles",
        .arity = 1,
        .in_domain = [](Params p, std::string& r) { return at_least(p, 0, "k", r); },
        .build = [](Params p) { return circle_row_term("chain", p[0]); },
        .alt_builders = {},
        .realize = [](Params p) -> std::optional<Realization> { return chain_complex(p[0]); },
        .expected_chi = [](Params p) -> std::int64_t { return checked_sub(1, p[0]); },
    });

    cat.add({
        .name = "M",
        .display = "M_g",
        .domain_text = "g >= 0",
        .scheme = "p(S^1)chain(g+1)((g+1)*S^1)chain(g+1)(S^1)p",
        .chi_text = "2-2g",
        .realization_text = "cw: [1, 2g, 1]",
        .arity = 1,
        .in_domain = [](Params p, std::string& r) { return at_least(p, 0, "g", r); },
        .build = [](Params p) { return surface_m_term(p[0]); },
        .alt_builders = {make_alt("rosette", "p(S^1)rosette(2g)",
                                  [](Params p) { return surface_m_alt_term(p[0]); })},
        .realize =
            [](Params p) -> std::optional<Realization> {
                return make_cw_skeleton({1, 2 * p[0], 1});
            },
        .expected_chi = [](Params p) -> std::int64_t { return checked_sub(2, checked_mul(2, p[0])); },
    });

    cat.add({
        .name = "N",
        .display = "N_h",
        .domain_text = "h >= 1",
        .scheme = "S^1(S^1)chain(h-1)((h-1)*S^1)(h-1)*S^1 for h >= 3; "
                  "N_1 = S^1(S^1)p; N_2 = S^1(S^1)S^1",
        .chi_text = "2-h",
        .realization_text = "cw: [1, h, 1]",
        .arity = 1,
        .in_domain = [](Params p, std::string& r) { return at_least(p, 1, "h", r); },
        .build = [](Params p) { return surface_n_term(p[0]); },
        .alt_builders = {make_alt("rosette", "p(S^1)rosette(h)",
                                  [](Params p) { return surface_n_alt_term(p[0]); })},
        .realize =
            [](Params p) -> std::optional<Realization> {
                return make_cw_skeleton({1, p[0], 1});
            },
        .expected_chi = [](Params p) -> std::int64_t { return checked_sub(2, p[0]); },
    });

    cat.add({
        .name = "RP",
        .display = "RP^n",
        .domain_text = "n >= 0",
        .scheme = "p(S^(n-1))RP^(n-1); RP^0 = p",
        .chi_text = "1 for n even, 0 for n odd",
        .realization_text = "simplicial for n <= 2 (6-vertex RP^2)",
        .arity = 1,
        .in_domain = [](Params p, std::string& r) { return at_least(p, 0, "n", r); },
        .build = [](Params p) { return projective_term(p[0]); },
        .alt_builders = {},
        .realize =
            [](Params p) -> std::optional<Realization> {
                if (p[0] == 0)
                    return point_complex();
                if (p[0] == 1)
                    return sphere_complex(1);
                if (p[0] == 2)
                    return rp2_complex();
                return std::nullopt;
            },
        .expected_chi = [](Params p) -> std::int64_t { return p[0] % 2 == 0 ? 1 : 0; },
    });

    cat.add({
        .name = "D",
        .display = "D^n",
        .domain_text = "n >= 0",
        .scheme = "p(S^(n-1))D^(n-1); D^0 = p",
        .chi_text = "1 for n even, 0 for n odd",
        .realization_text = "cw for n <= 2",
        .arity = 1,
        .in_domain = [](Params p, std::string& r) { return at_least(p, 0, "n", r); },
        .build = [](Params p) { return dunce_term(p[0]); },
        .alt_builders = {},
        .realize =
            [](Params p) -> std::optional<Realization> {
                if (p[0] == 0)
                    return make_cw_skeleton({1});
                if (p[0] == 1)
                    return make_cw_skeleton({1, 1});
                if (p[0] == 2)
                    return make_cw_skeleton({1, 1, 1});
                return std::nullopt;
            },
        .expected_chi = [](Params p) -> std::int64_t { return p[0] % 2 == 0 ? 1 : 0; },
    });

    cat.add({
        .name = "T",
        .display = "T^n",
        .domain_text = "1 <= n <= 3",
        .scheme = "T^2(2*T^2)T^2 for n = 3; T^1 = S^1; T^2 = M_1",
        .chi_text = "0",
        .realization_text = "simplicial for n <= 2 (7-vertex torus); cw [1, 3, 3, 1] for n = 3",
        .arity = 1,
        .in_domain =
            [](Params p, std::string& r) {
                if (p[0] >= 1 && p[0] <= 3)
                    return true;
                r = "n must be in 1..3 (got " + std::to_string(p[0]) + ")";
                return false;
            },
        .build = [](Params p) { return torus_term(p[0]); },
        .alt_builders = {},
        .realize =
            [](Params p) -> std::optional<Realization> {
                if (p[0] == 1)
                    return sphere_complex(1);
                if (p[0] == 2)
                    return torus7_complex();
                return make_cw_skeleton({1, 3, 3, 1});
            },
        .expected_chi = [](Params) -> std::int64_t { return 0; },
    });

    cat.add({
        .name = "cw",
        .display = "cw(a0,...,an)",
        .domain_text = "every count >= 0",
        .scheme = "an p(an*S^(n-1))cw(a0,...,a(n-1)); cw(a0) = a0 p",
        .chi_text = "a0 - a1 + a2 - ...",
        .realization_text = "cw: the given cell counts",
        .arity = -1,
        .in_domain =
            [](Params p, std::string& r) {
                for (std::int64_t a : p)
                    if (a < 0) {
                        r = "cell counts must be >= 0 (got " + std::to_string(a) + ")";
                        return false;
                    }
                return true;
            },
        .build = [](Params p) { return cw_term(p); },
        .alt_builders = {},
        .realize =
            [](Params p) -> std::optional<Realization> {
                // A skeleton's top count is positive; drop trailing empty
                // dimensions, and an entirely empty complex has no model.
                std::vector<std::int64_t> counts(p.begin(), p.end());
                while (!counts.empty() && counts.back() == 0)
                    counts.pop_back();
                if (counts.empty())
                    return std::nullopt;
                return make_cw_skeleton(std::move(counts));
            },
        .expected_chi =
            [](Params p) -> std::int64_t {
                std::int64_t chi = 0;
                for (std::size_t i = 0; i < p.size(); ++i)
                    chi = i % 2 == 0 ? checked_add(chi, p[i]) : checked_sub(chi, p[i]);
                return chi;
            },
    });

    return cat;
}

} // namespace

const Catalog& builtin_catalog() {
    static const Catalog cat = make_builtin();
    return cat;
}

} // namespace fibrous
