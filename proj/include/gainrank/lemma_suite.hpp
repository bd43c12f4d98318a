#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "gainrank/gain_graph.hpp"
#include "gainrank/linalg.hpp"

namespace gainrank {

/// Consequences of the lower-bound characterisation, each checked by computing both
/// sides independently on concrete sub-instances of a graph.
enum class LemmaId {
    CutVertexRankSplit,        // u cut vertex, H component of G-u, r(H)=r(H+u) => r(G)=r(H)+r(G-H)
    PendantOddCycleRank,       // pendant odd cycle of Type E => r(G) = r(G') + l - 1
    CycleVertexDeletion,       // lower-optimal G, u on a cycle => r, alpha kept; c drops by 1; ...
    ComponentwiseOptimality,   // G lower-optimal <=> every component is
    PendantPairReduction,      // u pendant at v: G l.o. <=> v off all cycles and G-{u,v} l.o.
    PendantCycleBookkeeping,   // lower-optimal G = C + K joined by one edge: rank/alpha split
    IndependenceContraction,   // lower-optimal G: alpha(G) = alpha(T_G) + sum floor(|C|/2) - c(G)
};

inline constexpr std::array<LemmaId, 7> kAllLemmas = {
    LemmaId::CutVertexRankSplit,     LemmaId::PendantOddCycleRank,  LemmaId::CycleVertexDeletion,
    LemmaId::ComponentwiseOptimality, LemmaId::PendantPairReduction, LemmaId::PendantCycleBookkeeping,
    LemmaId::IndependenceContraction,
};

std::string_view to_string(LemmaId id);

enum class LemmaStatus { Pass, Fail, Skipped };

std::string_view to_string(LemmaStatus s);

struct LemmaCheck {
    LemmaId id;
    std::string instantiation;  // which vertex / cycle / component was used, or skip reason
    LemmaStatus status;
    std::string detail;         // both sides on failure
};

/// Runs every applicable sub-check. A lemma with no applicable instance produces one
/// Skipped entry carrying the reason.
std::vector<LemmaCheck> lemma_suite(const GainGraph& g, double tol = kDefaultTolerance);

} // namespace gainrank
