#pragma once

#include <iosfwd>
#include <span>

#include "gk/digraph.hpp"

namespace gk {

// Graphviz export: one node line per word and one line per arc, both in
// lexicographic order. Highlighted vertices get shape=box.
void write_dot(std::ostream &os, const DefGraph &g,
               std::span<const VertexId> highlight = {});

} // namespace gk
