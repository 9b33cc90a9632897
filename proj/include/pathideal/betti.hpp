#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "pathideal/complex.hpp"
#include "pathideal/field.hpp"
#include "pathideal/ideal.hpp"
#include "pathideal/steps.hpp"

namespace pathideal {

/// Graded Betti numbers of an IDEAL (not the quotient): entry (i, j) is the
/// rank of Tor_i in internal degree j; zero entries are omitted. The quotient
/// convention differs by the index shift beta_{i,j}(ideal) = beta_{i+1,j}(quotient).
class BettiTable {
public:
    explicit BettiTable(FieldSpec f) : field_(f) {}

    void add(int i, int j, long long r);
    long long rank(int i, int j) const;
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
    const FieldSpec& field() const { return field_; }
    bool empty() const { return entries_.empty(); }

    /// max{ j - i } over entries; throws on an empty table.
    int regularity() const;
    int max_homological_index() const;

    /// Sorted [i, j, rank] triples — the serialization order used everywhere.
    std::vector<std::array<long long, 3>> triples() const;
    static BettiTable from_triples(FieldSpec f, const std::vector<std::array<long long, 3>>& t);

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    FieldSpec field_;
    std::map<std::pair<int, int>, long long> entries_;
};

struct BettiOptions {
    int ambient_cap = kDefaultEngineCap; // refuse larger ambients (<= kEngineHardCap)
    bool prune_cones = true;             // skip restrictions that are cones (acyclic)
};

/// Hochster route: beta_{i,j} = sum over |W| = j of dim H~_{j-i-2} of the
/// Stanley-Reisner complex restricted to W. Ideal must be nonzero and proper.
BettiTable betti_hochster(const MonomialIdeal& i, const FieldSpec& f, const BettiOptions& opts = {});

/// Independent oracle: beta_{i,sigma} = dim H~_{i-1}(K^sigma) where
/// K^sigma = { tau ⊆ sigma : monomial on sigma∖tau lies in the ideal },
/// summed over squarefree multidegrees sigma. Must equal betti_hochster.
BettiTable betti_upper_koszul(const MonomialIdeal& i, const FieldSpec& f, const BettiOptions& opts = {});

/// Numerator of the Hilbert series of the quotient, by inclusion-exclusion
/// over subsets of minimal generators (sign by parity, degree of the lcm).
/// Coefficient vector indexed by degree 0..ambient. At most 20 generators.
std::vector<long long> hilbert_numerator(const MonomialIdeal& i);

/// Same numerator through the Stanley-Reisner face counts; no generator
/// bound. Used as the table-integrity cross-check in corpus runs.
std::vector<long long> hilbert_numerator_from_faces(const MonomialIdeal& i);

/// Checks N_j == sum_i (-1)^i beta_{i,j}(quotient) for all j, with
/// beta(quotient) read off the ideal table by the index shift.
bool consistent_with_hilbert(const BettiTable& ideal_table, const std::vector<long long>& numerator);

/// Quotient-convention view of an ideal table: beta_{i,j}(quotient) =
/// beta_{i-1,j}(ideal) for i >= 1, plus the rank-one entry at (0, 0).
BettiTable to_quotient_convention(const BettiTable& ideal_table);

int regularity(const BettiTable& t);
int regularity(const MonomialIdeal& i, const FieldSpec& f, const BettiOptions& opts = {});

/// Largest k such that Tor_i of the ideal sits in degree i + d for all
/// 1 <= i <= k (d the generating degree); INF when that holds through the
/// whole resolution. `gen_degree` must be the single generator degree.
LinearitySteps linearity_steps(const BettiTable& t, int gen_degree);
LinearitySteps linearity_steps(const MonomialIdeal& i, const FieldSpec& f, const BettiOptions& opts = {});

} // namespace pathideal
