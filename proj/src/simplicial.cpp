#include "fibrous/simplicial.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fibrous/checked.hpp"
#include "fibrous/errors.hpp"

namespace fibrous {

namespace {

// Subset enumeration is exponential in the simplex size; anything past this
// is not a hand-described complex and almost certainly a mistake.
constexpr std::size_t kMaxSimplexSize = 25;

std::string simplex_text(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

} // namespace

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    if (k < 0 || k > dimension())
        throw Error("simplex dimension " + std::to_string(k) + " out of range");
    return by_dim_[static_cast<std::size_t>(k)];
}

SimplicialComplex close_and_validate(const std::vector<Simplex>& maximal) {
    if (maximal.empty())
        throw ComplexError("a complex needs at least one maximal simplex");

    std::set<Simplex> faces;
    for (Simplex s : maximal) {
        if (s.empty())
            throw ComplexError("a simplex needs at least one vertex");
        if (s.size() > kMaxSimplexSize)
            throw ComplexError("simplex with " + std::to_string(s.size()) +
                               " vertices is too large to close");
        for (std::int64_t v : s)
            if (v < 0)
                throw ComplexError("negative vertex label in simplex " + simplex_text(s));
        std::sort(s.begin(), s.end());
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] == s[i - 1])
                throw ComplexError("duplicate vertex " + std::to_string(s[i]) + " in simplex " +
                                   simplex_text(s));

        // every non-empty subset is a face
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i))
                    face.push_back(s[i]);
            faces.insert(std::move(face));
        }
    }

    SimplicialComplex out;
    for (const Simplex& f : faces) {
        const std::size_t k = f.size() - 1;
        if (out.by_dim_.size() <= k)
            out.by_dim_.resize(k + 1);
        // std::set iterates in lexicographic vector order, so each bucket
        // stays sorted.
        out.by_dim_[k].push_back(f);
    }
    out.f_.reserve(out.by_dim_.size());
    for (const auto& bucket : out.by_dim_)
        out.f_.push_back(static_cast<std::int64_t>(bucket.size()));
    return out;
}

std::int64_t chi_by_faces(const SimplicialComplex& c) {
    std::int64_t chi = 0;
    const auto& f = c.f_vector();
    for (std::size_t k = 0; k < f.size(); ++k)
        chi = k % 2 == 0 ? checked_add(chi, f[k]) : checked_sub(chi, f[k]);
    return chi;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    if (k < 1 || k > c.dimension())
        throw Error("boundary operator index " + std::to_string(k) + " out of range (1.." +
                    std::to_string(c.dimension()) + ")");
    const auto& rows = c.simplices(k - 1);
    const auto& cols = c.simplices(k);
    IntegerMatrix m(static_cast<std::int64_t>(rows.size()), static_cast<std::int64_t>(cols.size()));

    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Simplex& s = cols[j];
        Simplex face(s.size() - 1);
        for (std::size_t omit = 0; omit < s.size(); ++omit) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != omit)
                    face[w++] = s[i];
            const auto it = std::lower_bound(rows.begin(), rows.end(), face);
            const auto r = static_cast<std::int64_t>(it - rows.begin());
            m.at(r, static_cast<std::int64_t>(j)) = omit % 2 == 0 ? 1 : -1;
        }
    }
    return m;
}

} // namespace fibrous
