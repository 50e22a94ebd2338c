#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gk/errors.hpp"

namespace gk {

class Dictionary;

using VertexId = std::int32_t;

// A directed graph over interned tokens, stored as CSR adjacency in both
// directions. Vertex ids follow the lexicographic order of the tokens and
// every neighbor list is sorted, so all iteration is deterministic.
class DefGraph {
public:
    DefGraph();

    // tokens must be sorted and unique; arcs index into tokens. Duplicate
    // arcs collapse. Self-loops are allowed.
    static DefGraph from_arcs(std::vector<std::string> tokens,
                              std::vector<std::pair<VertexId, VertexId>> arcs);

    VertexId num_vertices() const { return static_cast<VertexId>(tokens_.size()); }
    int64_t num_arcs() const { return static_cast<int64_t>(out_adj_.size()); }
    const std::vector<std::string> &tokens() const { return tokens_; }
    const std::string &token(VertexId v) const { return tokens_[static_cast<size_t>(v)]; }

    std::span<const VertexId> in_neighbors(VertexId v) const {
        return {in_adj_.data() + in_off_[static_cast<size_t>(v)],
                in_adj_.data() + in_off_[static_cast<size_t>(v) + 1]};
    }
    std::span<const VertexId> out_neighbors(VertexId v) const {
        return {out_adj_.data() + out_off_[static_cast<size_t>(v)],
                out_adj_.data() + out_off_[static_cast<size_t>(v) + 1]};
    }
    int32_t in_degree(VertexId v) const {
        return static_cast<int32_t>(in_off_[static_cast<size_t>(v) + 1] -
                                    in_off_[static_cast<size_t>(v)]);
    }
    int32_t out_degree(VertexId v) const {
        return static_cast<int32_t>(out_off_[static_cast<size_t>(v) + 1] -
                                    out_off_[static_cast<size_t>(v)]);
    }
    bool has_arc(VertexId u, VertexId v) const;

    std::optional<VertexId> find(std::string_view token) const;
    // Maps tokens to ids, sorted and deduplicated. Throws UnknownWord.
    std::vector<VertexId> resolve(std::span<const std::string> tokens) const;
    // Validates, sorts and deduplicates a list of ids. Throws UnknownWord
    // (with the offending id rendered as "#<id>") when out of range.
    std::vector<VertexId> checked_ids(std::span<const VertexId> ids) const;

private:
    std::vector<std::string> tokens_;
    std::vector<int64_t> in_off_, out_off_;
    std::vector<VertexId> in_adj_, out_adj_;
};

// The associated graph of a dictionary: one vertex per word, an arc (u, v)
// whenever u appears in the definition of v. For a closed dictionary every
// vertex has in-degree >= 1; free words of an open dictionary have none.
DefGraph build_graph(const Dictionary &d);

// Subgraph induced by `keep`: the kept vertices and every arc between them.
DefGraph induced_subgraph(const DefGraph &g, std::span<const VertexId> keep);
DefGraph induced_subgraph(const DefGraph &g, std::span<const std::string> keep);

// Strongly connected components. Component ids are topological positions of
// the condensation: an arc (u, v) crossing components always satisfies
// component_of[u] < component_of[v].
struct SccDecomposition {
    std::vector<int32_t> component_of;           // vertex -> component id
    std::vector<std::vector<VertexId>> components; // sorted members, indexed by id
    std::vector<int32_t> topo_order;             // component ids, = 0..m-1

    int32_t num_components() const { return static_cast<int32_t>(components.size()); }
};

// Iterative Tarjan, linear in |V| + |E|.
SccDecomposition scc(const DefGraph &g);

// True iff the graph has no cycle; a self-loop is a cycle.
bool is_acyclic(const DefGraph &g);

// Acyclicity of the subgraph induced by the non-excluded vertices, without
// materializing it. excluded must have num_vertices() entries.
bool is_acyclic_excluding(const DefGraph &g, std::span<const uint8_t> excluded);

} // namespace gk
