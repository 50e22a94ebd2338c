#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gk/digraph.hpp"

namespace gk {

struct MgsConfig {
    // Largest component the exact branch-and-bound search accepts; bigger
    // components fall back to the greedy heuristic.
    int32_t exact_limit = 25;
    // Fallback strategy identifier; only "greedy-by-degree" is implemented.
    std::string heuristic = "greedy-by-degree";
};

struct ComponentMgs {
    std::vector<VertexId> vertices; // component members, sorted
    std::vector<VertexId> chosen;   // sorted
    bool exact = true;
    int32_t lower_bound = 0;
};

// A grounding set of minimum (exact == true) or heuristically small
// cardinality, assembled per strongly connected component. chosen is always
// a grounding set and always a subset of the grounding kernel.
struct MgsResult {
    std::vector<VertexId> chosen; // sorted
    bool exact = true;
    // Components containing at least one cycle, in condensation order.
    // Acyclic singleton components contribute nothing and are omitted.
    std::vector<ComponentMgs> per_component;
    int32_t lower_bound = 0;
    int32_t upper_bound = 0; // == |chosen|
};

// True iff removing u leaves an acyclic graph, i.e. u meets every cycle.
bool is_feedback_vertex_set(const DefGraph &g, std::span<const VertexId> u);
bool is_feedback_vertex_set(const DefGraph &g, std::span<const std::string> u);

// Enumerates every minimum-cardinality feedback vertex set by exhaustive
// subset search; each set and the list itself are sorted. Exponential by
// design: throws TooLarge beyond 15 vertices.
std::vector<std::vector<VertexId>> brute_force_min_fvs(const DefGraph &g);

// Minimum feedback vertex set of a strongly connected component by
// branch-and-bound: branch on the vertices of a shortest cycle, prune with
// a greedy packing of vertex-disjoint cycles. Among minimum sets, returns
// the lexicographically smallest. Throws TooLarge beyond exact_limit.
std::vector<VertexId> exact_min_fvs_scc(const DefGraph &component, int32_t exact_limit = 25);

// Feedback vertex set heuristic: repeatedly remove the vertex maximizing
// indegree * outdegree in the remaining graph (ties to the smaller token)
// until what is left is acyclic. Always returns a valid feedback vertex set.
std::vector<VertexId> greedy_fvs_scc(const DefGraph &component);

// Minimum grounding set via the per-component decomposition: exact search on
// components within cfg.exact_limit, greedy beyond it. Component searches
// run independently (possibly concurrently) and are merged in condensation
// order, so the result does not depend on scheduling.
MgsResult minimum_grounding_set(const DefGraph &g, const MgsConfig &cfg = {});

// (size of the chosen set, whether it is provably minimum)
std::pair<int32_t, bool> grounding_number(const DefGraph &g, const MgsConfig &cfg = {});

} // namespace gk
