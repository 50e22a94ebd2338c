#pragma once

#include <cstdint>

#include "gk/digraph.hpp"
#include "gk/lexicon.hpp"

namespace gk {

// Deterministic generators for tests and benchmarks. Tokens are zero-padded
// so that lexicographic order matches numeric order.

// A closed dictionary of `words` entries whose definition sizes average
// roughly avg_definientes (at least 1 each).
Dictionary random_dictionary(int32_t words, double avg_definientes, uint64_t seed);

// Random digraph: every ordered pair (and, optionally, every self-loop)
// becomes an arc with probability arc_prob. Quadratic; meant for small n.
DefGraph random_digraph(int32_t vertices, double arc_prob, uint64_t seed,
                        bool self_loops = true);

// Random DAG: arcs only from lower to higher ids.
DefGraph random_dag(int32_t vertices, double arc_prob, uint64_t seed);

} // namespace gk
