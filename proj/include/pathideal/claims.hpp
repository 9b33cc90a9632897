#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathideal/betti.hpp"
#include "pathideal/graph.hpp"
#include "pathideal/ideal.hpp"
#include "pathideal/props.hpp"

namespace pathideal {

enum class ClaimId {
    L2_8, L2_9, T2_11, T2_12, T2_13,
    L3_1, T3_2, L3_3, L3_4, L3_5, T3_6, T3_7, L3_8, L3_9, T3_10,
};

inline constexpr std::array<ClaimId, 15> kAllClaims = {
    ClaimId::L2_8, ClaimId::L2_9, ClaimId::T2_11, ClaimId::T2_12, ClaimId::T2_13,
    ClaimId::L3_1, ClaimId::T3_2, ClaimId::L3_3, ClaimId::L3_4, ClaimId::L3_5,
    ClaimId::T3_6, ClaimId::T3_7, ClaimId::L3_8, ClaimId::L3_9, ClaimId::T3_10,
};

std::string_view claim_name(ClaimId id);                 // "L2.8", "T3.10", ...
std::optional<ClaimId> parse_claim(std::string_view s);

enum class Verdict { holds, vacuous, failed };
std::string_view verdict_name(Verdict v);

/// Verdict for one claim on one graph. `witness` is non-empty exactly when
/// the verdict is failed; `t` is set for the per-t claim families.
struct ClaimResult {
    ClaimId claim;
    std::optional<int> t;
    Verdict verdict = Verdict::vacuous;
    std::string witness;
};

/// Mutation-testing hooks: mutate an ideal's generators or a Betti table
/// before the checkers see them.
struct InjectedFault {
    enum class Kind { bump_betti, drop_generator };
    Kind kind = Kind::bump_betti;
    std::string graph6; // target graph
    int t = 2;          // target ideal (2 = edge ideal)
    int i = 0, j = 0;   // bump_betti: rank at (i, j) += 1
    int gen_index = 0;  // drop_generator: index into the sorted generators
};

/// Per-(graph, t) computation product consumed by the claim checkers and the
/// corpus records: the (possibly fault-mutated) ideal, its Betti table with
/// derived regularity/steps, and the Hilbert-numerator integrity verdict on
/// the table actually used.
struct IdealSummary {
    int t = 2;
    MonomialIdeal ideal;
    bool betti_computed = false;
    bool from_cache = false;
    std::vector<std::array<long long, 3>> betti;
    std::optional<int> reg;
    std::optional<LinearitySteps> steps;
    bool consistent = true;     // alternating sums match the Hilbert numerator
    std::string engine_error;   // non-empty when the exact engine refused
};

/// Lazy per-graph evaluation context: properties, fault-adjusted ideals and
/// Betti summaries, with an optional cache lookup for Betti triples.
class GraphContext {
public:
    GraphContext(Graph g, FieldSpec field, int engine_cap = kDefaultEngineCap,
                 std::vector<InjectedFault> faults = {});

    const Graph& graph() const { return g_; }
    const std::string& graph6() const { return g6_; }
    const PropertyFlags& props() const { return props_; }
    const FieldSpec& field() const { return field_; }
    int engine_cap() const { return cap_; }

    const MonomialIdeal& ideal(int t);     // t = 2 edge ideal, t >= 3 path ideal
    const IdealSummary& summary(int t);    // adds Betti/reg/steps/integrity

    /// Returns true and fills `triples` when a cache holds (graph6, t, field).
    std::function<bool(int t, std::vector<std::array<long long, 3>>& triples)> cache_lookup;

private:
    Graph g_;
    std::string g6_;
    PropertyFlags props_;
    FieldSpec field_;
    int cap_;
    std::vector<InjectedFault> faults_;
    std::map<int, IdealSummary> summaries_;
};

// One checker per claim; combined checkers return one result per claim id.
ClaimResult check_L28(GraphContext& ctx);
ClaimResult check_L29(GraphContext& ctx);
ClaimResult check_T211(GraphContext& ctx);
std::array<ClaimResult, 2> check_T37_T212(GraphContext& ctx); // {T3.7, T2.12}
ClaimResult check_T213(GraphContext& ctx);
ClaimResult check_L31(GraphContext& ctx);
ClaimResult check_T32(GraphContext& ctx);
ClaimResult check_L33(GraphContext& ctx);
std::array<ClaimResult, 2> check_L34_L35(GraphContext& ctx);  // {L3.4, L3.5}
ClaimResult check_T36(GraphContext& ctx);
std::array<ClaimResult, 2> check_L38_L39(GraphContext& ctx, int t); // {L3.8, L3.9}
ClaimResult check_T310(GraphContext& ctx, int t);

/// Runs the requested claims; the per-t families run for every t in [3, t_max].
/// Deterministic order: enum order, then ascending t.
std::vector<ClaimResult> evaluate_claims(GraphContext& ctx,
                                         const std::vector<ClaimId>& claims,
                                         int t_max);

} // namespace pathideal
