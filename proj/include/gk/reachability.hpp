#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gk/digraph.hpp"

namespace gk {

// Closure of the learning operator from a seed set, with the step at which
// each word first becomes learnable. step_of[v] is -1 for unreached words,
// 0 for seeds. fixpoint_step is the smallest k after which nothing changes.
struct ReachabilityResult {
    std::vector<VertexId> reached; // sorted
    std::vector<int32_t> step_of;  // size |V|
    int32_t fixpoint_step = 0;
};

// One application of the operator: seeds plus every vertex all of whose
// in-neighbors are seeds. Result is sorted.
std::vector<VertexId> reach_step(const DefGraph &g, std::span<const VertexId> seeds);
std::vector<VertexId> reach_step(const DefGraph &g, std::span<const std::string> seeds);

// Iterates the operator to its fixpoint in O(|V| + |E|) by counting, per
// vertex, the in-neighbors not yet known. Layers are processed
// synchronously, so step_of[v] == k exactly when v first appears in the
// k-th application of the operator.
ReachabilityResult reachable_set(const DefGraph &g, std::span<const VertexId> seeds);
ReachabilityResult reachable_set(const DefGraph &g, std::span<const std::string> seeds);
ReachabilityResult reachable_set_serial(const DefGraph &g, std::span<const VertexId> seeds);
ReachabilityResult reachable_set_parallel(const DefGraph &g, std::span<const VertexId> seeds);

bool is_grounding_set(const DefGraph &g, std::span<const VertexId> seeds);
bool is_grounding_set(const DefGraph &g, std::span<const std::string> seeds);

// Relaxed operator: a vertex becomes learnable when at least r% of its
// in-neighbors are known, compared in exact integer arithmetic
// (100 * known >= r * indegree). r = 100 coincides with reach_step. A
// self-loop counts like any other in-neighbor. Throws InvalidPercent.
std::vector<VertexId> relaxed_reach_step(const DefGraph &g, std::span<const VertexId> seeds,
                                         int r);
std::vector<VertexId> relaxed_reach_step(const DefGraph &g,
                                         std::span<const std::string> seeds, int r);

ReachabilityResult relaxed_reachable_set(const DefGraph &g, std::span<const VertexId> seeds,
                                         int r);
ReachabilityResult relaxed_reachable_set(const DefGraph &g,
                                         std::span<const std::string> seeds, int r);
ReachabilityResult relaxed_reachable_set_serial(const DefGraph &g,
                                                std::span<const VertexId> seeds, int r);
ReachabilityResult relaxed_reachable_set_parallel(const DefGraph &g,
                                                  std::span<const VertexId> seeds, int r);

// Exact reduced rational, den > 0.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Fraction &) const = default;
};

// |relaxed closure| / |V| as an exact fraction. The empty graph counts as
// fully covered.
Fraction coverage_fraction(const DefGraph &g, std::span<const VertexId> seeds, int r);
Fraction coverage_fraction(const DefGraph &g, std::span<const std::string> seeds, int r);

} // namespace gk
