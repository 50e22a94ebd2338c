#pragma once

#include <cstdint>
#include <vector>

#include "gk/digraph.hpp"

namespace gk {

// The grounding kernel: the vertices that survive repeatedly removing every
// vertex that is used in no remaining definition (out-degree 0). The kernel
// is always a grounding set, so levels are total: level_of[v] is the first
// step at which v becomes learnable from the kernel, 0 for kernel members.
struct KernelResult {
    std::vector<VertexId> kernel;                      // sorted
    std::vector<std::vector<VertexId>> removal_rounds; // sorted per round
    std::vector<int32_t> level_of;                     // size |V|
};

KernelResult grounding_kernel(const DefGraph &g);
KernelResult grounding_kernel_serial(const DefGraph &g);
KernelResult grounding_kernel_parallel(const DefGraph &g);

std::vector<int32_t> word_levels(const DefGraph &g);

} // namespace gk
