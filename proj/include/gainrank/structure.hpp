#pragma once

#include <cstddef>
#include <vector>

#include "gainrank/gain_graph.hpp"

namespace gainrank {

/// Combinatorial invariants of the underlying graph.
struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t omega = 0;       // connected components
    std::size_t c = 0;           // cyclomatic number m - n + omega
    std::size_t alpha = 0;       // independence number
    std::size_t matching = 0;    // matching number
    std::size_t pendant_count = 0;
};

GraphStats graph_stats(const GainGraph& g);

/// c(G) = |E| - |V| + omega(G).
std::size_t cyclomatic_number(const GainGraph& g);

struct IndependentSet {
    std::size_t size = 0;
    std::vector<Vertex> vertices;  // sorted witness
};

/// Exact maximum independent set. Components are solved separately; inside each,
/// vertices of degree <= 1 are taken greedily and the rest is searched by branching
/// on a maximum-degree vertex, pruned by a greedy clique-cover bound.
IndependentSet maximum_independent_set(const GainGraph& g);

std::size_t independence_number(const GainGraph& g);

/// alpha of an acyclic graph by repeatedly taking a leaf and discarding its neighbour.
/// Throws GraphError when g contains a cycle.
std::size_t forest_independence_number(const GainGraph& g);

/// Maximum cardinality matching of the underlying graph (Edmonds).
std::size_t matching_number(const GainGraph& g);

struct PendantClassification {
    std::vector<Vertex> pendant;        // degree one
    std::vector<Vertex> quasi_pendant;  // adjacent to a pendant vertex, not itself pendant
};

PendantClassification pendant_classification(const GainGraph& g);

/// A biconnected block: a bridge (2 vertices, 1 edge) or a 2-connected piece.
struct Block {
    std::vector<Vertex> vertices;  // sorted
    std::size_t edge_count = 0;

    /// A 2-connected block with as many edges as vertices is a single induced cycle.
    bool is_cycle() const { return vertices.size() >= 3 && edge_count == vertices.size(); }
    bool is_bridge() const { return vertices.size() == 2; }
};

/// Blocks of the graph (isolated vertices belong to no block).
std::vector<Block> biconnected_blocks(const GainGraph& g);

/// Per-vertex count of non-bridge blocks containing it. A vertex lies on some cycle
/// iff its count is positive.
std::vector<std::size_t> cyclic_block_membership(const GainGraph& g);

/// True iff v lies on some cycle of g.
bool on_cycle(const GainGraph& g, Vertex v);

/// True iff v lies on exactly one cycle of g: it belongs to exactly one non-bridge
/// block and that block is itself a cycle.
bool on_unique_cycle(const GainGraph& g, Vertex v);

struct CycleSet {
    /// Traversal order of each cycle, starting at its smallest vertex and stepping to
    /// the smaller of its two cycle neighbours. Empty when !disjoint.
    std::vector<std::vector<Vertex>> cycles;
    bool disjoint = true;
};

/// Decides whether all cycles are pairwise vertex-disjoint, which holds iff every
/// non-bridge block is a cycle and no vertex lies on two of them; when so, lists them.
CycleSet find_cycles(const GainGraph& g);

/// T_G node provenance: either an original (non-cyclic) vertex or a contracted cycle.
struct ContractedNode {
    enum class Kind { Vertex, Cycle };
    Kind kind;
    std::size_t index;  // original vertex id, or index into ContractionResult::cycles

    friend bool operator==(const ContractedNode&, const ContractedNode&) = default;
};

struct ContractionResult {
    GainGraph t_graph;                    // T_G, all gains 1
    std::vector<Vertex> cyclic_vertices;  // O_G as T_G ids, in cycle order
    GainGraph t_bracket;                  // [T_G] = T_G - O_G
    std::vector<ContractedNode> origin;   // per T_G vertex
    std::vector<std::vector<Vertex>> cycles;
};

/// Contracts each cycle to one vertex, keeping external adjacencies. Throws GraphError
/// when the cycles are not pairwise vertex-disjoint.
ContractionResult contract_cycles(const GainGraph& g);

} // namespace gainrank
