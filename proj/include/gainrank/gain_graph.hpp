#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gainrank/unit_gain.hpp"

namespace gainrank {

using Vertex = std::size_t;

/// Undirected edge with the gain of the orientation u -> v.
struct Edge {
    Vertex u;
    Vertex v;
    UnitGain gain;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A simple undirected graph with a gain function satisfying phi(e_vu) = conj(phi(e_uv)).
///
/// Edges are stored once in canonical orientation u < v, sorted lexicographically;
/// the reverse gain is derived by conjugation. All gains share one mode (an edgeless
/// graph is Exact). Immutable after construction.
class GainGraph {
public:
    GainGraph() = default;

    /// Validates and canonicalizes. An edge given as (v, u) with v > u is stored as
    /// (u, v) with the conjugated gain. Throws GraphError on loops, duplicate edges,
    /// out-of-range ids, or a mix of exact and approximate gains.
    static GainGraph build(std::size_t n, std::vector<Edge> edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edges_.size(); }
    GainMode mode() const { return mode_; }
    bool is_exact() const { return mode_ == GainMode::Exact; }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

    /// Gain of the oriented edge from -> to, or nullopt when not adjacent.
    std::optional<UnitGain> gain(Vertex from, Vertex to) const;

    friend bool operator==(const GainGraph& a, const GainGraph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

private:
    std::optional<std::size_t> find_edge(Vertex a, Vertex b) const;

    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;  // sorted
    GainMode mode_ = GainMode::Exact;
};

/// An induced subgraph together with its vertex correspondence.
struct Subgraph {
    GainGraph graph;
    std::vector<Vertex> to_parent;                  // new id -> parent id
    std::vector<std::optional<Vertex>> from_parent; // parent id -> new id, nullopt if removed
};

/// Induced subgraph on the given vertices (kept in increasing parent order).
Subgraph induced_subgraph(const GainGraph& g, std::span<const Vertex> keep);

/// Induced subgraph on V \ removed. Throws GraphError on out-of-range ids.
Subgraph delete_vertices(const GainGraph& g, std::span<const Vertex> removed);

/// Connected components, each as an induced subgraph, ordered by smallest vertex.
std::vector<Subgraph> components(const GainGraph& g);

/// Component index of each vertex, numbered in order of smallest vertex.
std::vector<std::size_t> component_labels(const GainGraph& g);

std::size_t component_count(const GainGraph& g);

/// Same graph with every gain replaced by the exact gain 1.
GainGraph underlying_graph(const GainGraph& g);

/// Exact gains rendered as angles (for comparing the two arithmetic backends).
GainGraph to_approx(const GainGraph& g);

} // namespace gainrank
