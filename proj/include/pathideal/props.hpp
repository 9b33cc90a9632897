#pragma once

#include <vector>

#include "pathideal/graph.hpp"
#include "pathideal/steps.hpp"

namespace pathideal {

struct PropertyFlags {
    bool gap_free = false;
    bool claw_free = false;
    bool cricket_free = false;
    bool chordal = false;
    bool complement_chordal = false;
};

/// Two vertex-disjoint edges with no edge between them; scans edge pairs.
bool is_gap_free(const Graph& g);

/// The equivalent route through the complement (no induced C4 there).
/// Must agree with is_gap_free; kept separate as a cross-check.
bool is_gap_free_via_complement(const Graph& g);
bool has_induced_c4(const Graph& g);

/// No induced K_{1,3}: no vertex with three pairwise non-adjacent neighbors.
bool is_claw_free(const Graph& g);

/// No induced cricket: a triangle plus two independent pendants on one of
/// its vertices (5 vertices, edges {w1w3,w2w3,w3w4,w3w5,w4w5}).
bool is_cricket_free(const Graph& g);

/// Maximum cardinality search + perfect elimination ordering verification.
bool is_chordal(const Graph& g);

/// All induced cycles, one entry per cycle, as canonical vertex sequences
/// (min vertex first, smaller neighbor second). DFS over induced paths
/// anchored at each cycle's minimum vertex, with chord pruning.
std::vector<std::vector<int>> induced_cycles(const Graph& g);

/// Sorted lengths of the induced cycles (each cycle counted once).
std::vector<int> induced_cycle_lengths(const Graph& g);

/// True when `seq` read cyclically is an induced cycle of g.
bool is_induced_cycle(const Graph& g, const std::vector<int>& seq);

PropertyFlags compute_properties(const Graph& g);

/// Linear-step count the complement's cycle spectrum predicts for the edge
/// ideal, in the "p-linear" counting of the classification theorem: INF when
/// the complement is chordal, otherwise (shortest non-triangle induced cycle
/// of the complement) - 3. Throws std::invalid_argument on edgeless graphs.
LinearitySteps predicted_linearity_steps(const Graph& g);

} // namespace pathideal
