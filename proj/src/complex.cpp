#include "pathideal/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pathideal {

namespace {

void maximalize(std::vector<std::uint32_t>& sets) {
    std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::uint32_t> out;
    for (auto s : sets) {
        bool covered = false;
        for (auto kept : out)
            if ((s & kept) == s) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    sets = std::move(out);
}

} // namespace

SimplicialComplex SimplicialComplex::void_complex(int vertices) {
    SimplicialComplex c;
    c.n_ = vertices;
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(int vertices, std::vector<std::uint32_t> facets) {
    maximalize(facets);
    SimplicialComplex c;
    c.n_ = vertices;
    c.facets_ = std::move(facets);
    return c;
}

bool SimplicialComplex::contains(std::uint32_t face) const {
    for (auto f : facets_)
        if ((face & f) == face) return true;
    return false;
}

SimplicialComplex SimplicialComplex::restricted_to(std::uint32_t keep) const {
    if (is_void()) return void_complex(n_);
    std::vector<std::uint32_t> cut;
    cut.reserve(facets_.size());
    for (auto f : facets_) cut.push_back(f & keep);
    return from_facets(n_, std::move(cut));
}

std::uint32_t SimplicialComplex::cone_apexes() const {
    if (is_void()) return 0;
    std::uint32_t common = ~0u;
    for (auto f : facets_) common &= f;
    return common;
}

std::vector<std::vector<std::uint32_t>> SimplicialComplex::faces_by_size() const {
    if (is_void()) return {};
    std::vector<std::uint32_t> all;
    for (auto f : facets_) {
        std::uint32_t sub = f;
        while (true) {
            all.push_back(sub);
            if (!sub) break;
            sub = (sub - 1) & f;
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    int maxsz = 0;
    for (auto f : all) maxsz = std::max(maxsz, std::popcount(f));
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(maxsz) + 1);
    for (auto f : all) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    return by_size;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& i) {
    if (i.is_unit())
        throw std::invalid_argument("the unit ideal has no Stanley-Reisner complex");
    if (i.ambient() > kEngineHardCap)
        throw std::invalid_argument("ambient exceeds the exact engine's hard cap of " +
                                    std::to_string(kEngineHardCap));
    std::uint32_t full = i.ambient() >= 32 ? ~0u : (1u << i.ambient()) - 1;
    // peel each generator off the running facet list: a face may not contain
    // any generator's support
    std::vector<std::uint32_t> facets = {full};
    for (auto gen : i.gens()) {
        std::uint32_t gmask = static_cast<std::uint32_t>(gen.support);
        std::vector<std::uint32_t> next;
        for (auto f : facets) {
            if ((gmask & f) != gmask) {
                next.push_back(f);
                continue;
            }
            std::uint32_t bits = gmask;
            while (bits) {
                std::uint32_t low = bits & (~bits + 1);
                bits ^= low;
                next.push_back(f & ~low);
            }
        }
        maximalize(next);
        facets = std::move(next);
    }
    return SimplicialComplex::from_facets(i.ambient(), std::move(facets));
}

} // namespace pathideal
