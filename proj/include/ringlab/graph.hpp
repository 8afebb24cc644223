#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/config.hpp"

namespace ringlab {

// Undirected vertex-labeled graph; loops are tracked separately from the
// simple edge list.  Edges are stored with the smaller endpoint first and the
// whole structure is kept sorted, so equal graphs have equal representations.
struct CompressedGraph {
    std::vector<std::string> vertex_labels;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j
    std::vector<std::uint32_t> loops;

    std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(vertex_labels.size()); }
    std::uint64_t edge_count() const { return edges.size(); }  // non-loop
    bool has_edge(std::uint32_t i, std::uint32_t j) const;
    bool has_loop(std::uint32_t i) const;
    void add_edge(std::uint32_t i, std::uint32_t j);  // i == j becomes a loop
    void normalize();  // sort + dedupe, validate ids

    // degree ignoring loops
    std::vector<std::uint32_t> degrees() const;
};

// K°_n: complete graph on n vertices with a loop at every vertex (n = 0 gives
// the empty graph).  Vertices are labeled "0" .. "n-1".
CompressedGraph complete_with_loops(std::uint32_t n);

// Join: disjoint union plus all edges between the two sides.  Loops carry
// over; labels are prefixed "L:" / "R:" to stay distinguishable.
CompressedGraph join_graphs(const CompressedGraph& g, const CompressedGraph& h);

// t disjoint copies of g, labels prefixed with the copy index.
CompressedGraph disjoint_union(std::uint32_t t, const CompressedGraph& g);

enum class IsoStatus { isomorphic, not_isomorphic, undecided };

struct IsoResult {
    IsoStatus status = IsoStatus::undecided;
    // g-vertex -> h-vertex, present only when isomorphic
    std::optional<std::vector<std::uint32_t>> mapping;
};

// Exact isomorphism up to cfg.iso_vertex_limit vertices (degree/loop
// refinement + backtracking); larger inputs come back `undecided`, never a
// guess.  Labels are ignored.
IsoResult isomorphic(const CompressedGraph& g, const CompressedGraph& h,
                     const Config& cfg = Config::defaults());

// True iff g is K°_n for its own vertex count (complete, all loops).
bool is_complete_with_loops(const CompressedGraph& g);

// Serialization.  JSON: {"vertices": [labels], "edges": [[i,j]...],
// "loops": [i...]} with ids sorted; DOT renders an undirected graph with
// loops as self-edges and quoted labels.  Both are byte-deterministic.
std::string emit_json(const CompressedGraph& g);
std::string emit_dot(const CompressedGraph& g);
std::string emit(const CompressedGraph& g, const std::string& format);  // "json" | "dot"
CompressedGraph parse_graph_json(const std::string& text);

}  // namespace ringlab
