#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gainrank/cycle_analysis.hpp"
#include "gainrank/gain_graph.hpp"

namespace gainrank {

enum class GainDomain {
    FourthRoots,       // {1, -1, i, -i}
    PythagoreanExact,  // exact unit Gaussian rationals (a + bi)/c with a^2 + b^2 = c^2
    RandomAngle,       // e^{i theta}, theta uniform in [0, 2 pi)
};

std::string_view to_string(GainDomain d);

/// Accepts "FourthRoots", "PythagoreanExact", "RandomAngle" (case-insensitive, also
/// "fourth-roots" etc.). Throws ParameterError otherwise.
GainDomain parse_gain_domain(std::string_view text);

using Rng = std::mt19937_64;

/// One gain drawn uniformly from the domain.
UnitGain random_gain(GainDomain domain, Rng& rng);

/// Underlying simple graph without gains.
struct EdgeList {
    std::size_t n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
};

/// Attaches independent random gains from the domain to every edge.
GainGraph with_random_gains(const EdgeList& shape, GainDomain domain, Rng& rng);

/// Erdos-Renyi G(n, p) with gains from the domain. Deterministic per seed.
/// Throws ParameterError unless 0 <= p <= 1.
GainGraph random_gain_graph(std::size_t n, double p, GainDomain domain, std::uint64_t seed);

/// Uniform random labelled tree (Pruefer sequence) on n vertices with random gains.
GainGraph random_gain_tree(std::size_t n, GainDomain domain, std::uint64_t seed);

/// C_l on vertices 0..l-1 (in order) whose gain product satisfies the defining
/// predicate of t exactly. Edge gains are random exact units, the last one chosen so
/// that the product comes out right. Throws ParameterError on a parity mismatch.
GainGraph cycle_of_type(std::size_t length, CycleType t, std::uint64_t seed);

struct LowerOptimalSpec {
    std::vector<std::size_t> cycle_lengths;  // each >= 3; even cycles get Type A, odd Type E
    std::size_t growth_steps = 0;            // pendant pairs to attach
    std::size_t isolated_vertices = 0;
};

/// Builds disjoint Type A / Type E cycles plus isolated vertices, then repeatedly adds
/// a pendant pair u - v where the new vertex v is joined to at most one vertex of each
/// existing component (so v lies on no cycle), which preserves lower-optimality.
/// Vertex ids are shuffled at the end. Certifies the result by rank and throws
/// CertificationError if it is not lower-optimal.
GainGraph lower_optimal_instance(const LowerOptimalSpec& spec, std::uint64_t seed);

/// Deliberate violations of one structural condition, for adversarial testing.
enum class Defect {
    SharedCycleVertex,  // two cycles overlap (condition i)
    WrongCycleType,     // a cycle of Type B, C or D (condition ii)
    QuasiPendantCycle,  // a pendant vertex hung directly on a cycle (condition iii)
};

inline constexpr Defect kAllDefects[] = {Defect::SharedCycleVertex, Defect::WrongCycleType, Defect::QuasiPendantCycle};

std::string_view to_string(Defect d);

/// A lower-optimal-style instance with exactly the requested kind of defect injected.
GainGraph near_miss_instance(Defect defect, std::uint64_t seed);

/// Pairwise non-isomorphic graphs on exactly n vertices (all of them, or only the
/// connected ones). Practical up to n = 7 or 8.
std::vector<EdgeList> nonisomorphic_graphs(std::size_t n, bool connected_only);

/// Derives a well-mixed 64-bit seed for sub-task k of a run (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k);

} // namespace gainrank
