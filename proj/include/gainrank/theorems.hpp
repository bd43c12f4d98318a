#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gainrank/cycle_analysis.hpp"
#include "gainrank/gain_graph.hpp"
#include "gainrank/linalg.hpp"
#include "gainrank/structure.hpp"

namespace gainrank {

/// 2n - 2c - 2alpha <= r <= 2n - 2alpha. The lower end can be negative.
struct BoundsCheck {
    std::int64_t lower = 0;
    std::size_t rank = 0;
    std::int64_t upper = 0;
    bool holds = true;
};

BoundsCheck check_bounds(const GainGraph& g, double tol = kDefaultTolerance);

/// Bounds from precomputed invariants.
BoundsCheck make_bounds(std::size_t n, std::size_t c, std::size_t alpha, std::size_t rank);

struct RankVerdict {
    bool lower_optimal = false;
    /// False when the rank came from the floating-point backend; the verdict is then
    /// only as reliable as the eigenvalue threshold.
    bool exact = true;
};

/// r(G, phi) == 2n - 2c(G) - 2alpha(G).
RankVerdict is_lower_optimal_by_rank(const GainGraph& g, double tol = kDefaultTolerance);

/// The three structural conditions for attaining the lower bound.
struct StructuralVerdict {
    bool disjoint_cycles = false;                // (i) cycles pairwise vertex-disjoint
    std::optional<bool> cycle_types_extremal;    // (ii) every cycle of Type A or E; n/a when (i) fails
    std::optional<bool> contraction_alpha;       // (iii) alpha(T_G) == alpha([T_G]) + c(G); n/a when (i) fails
    std::size_t alpha_t_graph = 0;
    std::size_t alpha_t_bracket = 0;
    std::size_t cyclomatic = 0;
    std::vector<CycleRecord> cycles;
    bool lower_optimal = false;                  // conjunction
};

/// Evaluates the structural characterisation. alpha of T_G and [T_G] is taken from
/// forest_independence_number, a code path independent of the branch-and-bound search.
/// Throws AmbiguityError when an approximate cycle product cannot be classified.
StructuralVerdict is_lower_optimal_by_structure(const GainGraph& g, double tol = kDefaultTolerance);

struct AnalysisReport {
    GraphStats stats;
    bool exact = true;
    std::size_t rank = 0;
    Inertia inertia;
    std::vector<CycleRecord> cycles;
    bool disjoint_cycles = true;
    BoundsCheck bounds;
    RankVerdict lower_optimal_by_rank;
    std::optional<StructuralVerdict> structure;  // absent on classification ambiguity
    std::optional<std::string> structure_error;
    std::vector<Vertex> independent_set;

    /// Bounds hold, the exact rank matches p+ + n-, and when both verdicts exist they agree.
    bool consistent() const;
};

AnalysisReport analyze(const GainGraph& g, double tol = kDefaultTolerance);

} // namespace gainrank
