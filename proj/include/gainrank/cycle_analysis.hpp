#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gainrank/gain_graph.hpp"
#include "gainrank/linalg.hpp"
#include "gainrank/unit_gain.hpp"

namespace gainrank {

/// Five-way classification of a gain cycle C of length l with gain product z.
///
///   A: l even, z == (-1)^{l/2}
///   B: l even, z != (-1)^{l/2}
///   C: l odd,  Re((-1)^{(l-1)/2} z) > 0
///   D: l odd,  Re((-1)^{(l-1)/2} z) < 0
///   E: l odd,  Re((-1)^{(l-1)/2} z) == 0
enum class CycleType { A, B, C, D, E };

std::string_view to_string(CycleType t);

/// Parses "A".."E"; throws ParameterError otherwise.
CycleType parse_cycle_type(std::string_view text);

/// Types compatible with the parity of l.
bool parity_matches(std::size_t length, CycleType t);

/// Types A (even) and E (odd): the cycles that attain the lower rank bound.
inline bool is_extremal_type(CycleType t) { return t == CycleType::A || t == CycleType::E; }

struct CycleRecord {
    std::vector<Vertex> vertices;
    UnitGain gain_product;
    std::optional<CycleType> type;  // absent when an approximate product is ambiguous

    std::size_t length() const { return vertices.size(); }
};

/// phi(v1 v2) phi(v2 v3) ... phi(vl v1). Throws GraphError unless the sequence is a
/// cycle of g (length >= 3, distinct vertices, consecutive pairs adjacent).
UnitGain cycle_gain(const GainGraph& g, std::span<const Vertex> cycle);

/// Exact products classify exactly. Approximate products throw AmbiguityError when
/// |Re((-1)^{(l-1)/2} z)| < tol (odd l) or |z - (-1)^{l/2}| < tol (even l), since only
/// exact arithmetic may assert the equalities defining Types A and E.
/// Throws ParameterError for l < 3.
CycleType classify_cycle(std::size_t length, const UnitGain& product, double tol = kDefaultTolerance);

/// (p+, n-, zero) of a gain cycle of the given length and type. Throws ParameterError
/// on a parity mismatch or l < 3.
Inertia cycle_inertia_closed_form(std::size_t length, CycleType t);

/// Rank of a gain path on l vertices: l - 1 for odd l, l for even l. Throws
/// ParameterError for l == 0.
std::size_t path_rank(std::size_t length);

/// Gain product and classification of a cycle of g; type left empty on ambiguity.
CycleRecord make_cycle_record(const GainGraph& g, std::vector<Vertex> cycle, double tol = kDefaultTolerance);

} // namespace gainrank
