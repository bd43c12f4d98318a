#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gainrank/gain_graph.hpp"
#include "gainrank/lemma_suite.hpp"
#include "gainrank/theorems.hpp"

namespace gainrank {

/// Graph file format:
///
///   {"n": 3, "edges": [{"u": 0, "v": 1, "gain": {"re": "3/5", "im": "4/5"}},
///                      {"u": 1, "v": 2, "gain": {"angle_deg": 90.0}}]}
///
/// Exact ("re"/"im" rational strings, integers also accepted) and angle gains must not
/// be mixed. Throws GraphError / GainError on malformed input.
GainGraph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const GainGraph& g);

GainGraph load_graph(const std::filesystem::path& path);
void save_graph(const GainGraph& g, const std::filesystem::path& path);

nlohmann::json gain_to_json(const UnitGain& gain);
nlohmann::json report_to_json(const AnalysisReport& report);
nlohmann::json lemmas_to_json(const std::vector<LemmaCheck>& checks);

/// Human-readable rendering of a report, including the substituted bound chain.
std::string report_to_text(const AnalysisReport& report);

} // namespace gainrank
