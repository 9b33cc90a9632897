#pragma once

#include <cstdint>
#include <vector>

#include "pathideal/ideal.hpp"

namespace pathideal {

/// Exact-engine ceiling on ambient variables: subset loops are 2^n and face
/// masks are 32-bit, so past this the tools refuse rather than approximate.
inline constexpr int kEngineHardCap = 20;
inline constexpr int kDefaultEngineCap = 16;

/// Simplicial complex stored as its facets (maximal faces) plus a membership
/// test. The void complex (no faces at all, facets empty) is distinct from
/// the irrelevant complex {∅} (one empty facet).
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int vertices);
    /// Dedupes and drops non-maximal entries; {0} yields the irrelevant complex.
    static SimplicialComplex from_facets(int vertices, std::vector<std::uint32_t> facets);

    int vertex_count() const { return n_; }
    const std::vector<std::uint32_t>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }
    bool contains(std::uint32_t face) const;

    /// Faces lying inside `keep`, as a complex.
    SimplicialComplex restricted_to(std::uint32_t keep) const;

    /// Vertices common to every facet; nonzero means the complex is a cone
    /// (acyclic). Zero for the void and irrelevant complexes.
    std::uint32_t cone_apexes() const;

    /// Every face including ∅, grouped by cardinality: result[s] lists the
    /// faces with s vertices, each sorted ascending.
    std::vector<std::vector<std::uint32_t>> faces_by_size() const;

private:
    int n_ = 0;
    std::vector<std::uint32_t> facets_;
};

/// Stanley-Reisner complex of a proper squarefree ideal: faces are the
/// supports of squarefree monomials NOT in the ideal; the ideal's minimal
/// generators are exactly the minimal non-faces. Throws on the unit ideal.
SimplicialComplex stanley_reisner(const MonomialIdeal& i);

} // namespace pathideal
