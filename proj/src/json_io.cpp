#include "gainrank/json_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gainrank/errors.hpp"

namespace gainrank {

using nlohmann::json;

namespace {

mpq_class rational_field(const json& gain, const char* key)
{
    if (!gain.contains(key))
        return 0;
    const json& v = gain.at(key);
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return mpq_class(std::to_string(v.get<long long>()));
    throw GainError(std::string("gain field '") + key + "' must be a rational string like \"3/5\" or an integer");
}

std::size_t index_field(const json& obj, const char* key)
{
    if (!obj.contains(key) || !obj.at(key).is_number_integer() || obj.at(key).get<long long>() < 0)
        throw GraphError(std::string("field '") + key + "' must be a non-negative integer");
    return obj.at(key).get<std::size_t>();
}

UnitGain gain_from_json(const json& gain)
{
    if (!gain.is_object())
        throw GainError("gain must be an object");
    const bool angle = gain.contains("angle_deg");
    const bool exact = gain.contains("re") || gain.contains("im");
    if (angle && exact)
        throw GainError("gain mixes angle_deg with re/im");
    if (angle) {
        if (!gain.at("angle_deg").is_number())
            throw GainError("angle_deg must be a number");
        return UnitGain::from_angle(gain.at("angle_deg").get<double>() * std::numbers::pi / 180.0);
    }
    if (!exact)
        throw GainError("gain needs either re/im or angle_deg");
    return UnitGain::exact(rational_field(gain, "re"), rational_field(gain, "im"));
}

json optional_bool(const std::optional<bool>& b)
{
    return b ? json(*b) : json(nullptr);
}

} // namespace

GainGraph graph_from_json(const json& doc)
{
    if (!doc.is_object())
        throw GraphError("graph document must be a JSON object");
    const std::size_t n = index_field(doc, "n");
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc.at("edges").is_array())
            throw GraphError("'edges' must be an array");
        for (const auto& e : doc.at("edges")) {
            if (!e.is_object() || !e.contains("gain"))
                throw GraphError("each edge needs u, v and gain");
            edges.push_back({index_field(e, "u"), index_field(e, "v"), gain_from_json(e.at("gain"))});
        }
    }
    return GainGraph::build(n, std::move(edges));
}

json gain_to_json(const UnitGain& gain)
{
    if (gain.is_exact())
        return {{"re", rational_to_string(gain.exact_value().real())}, {"im", rational_to_string(gain.exact_value().imag())}};
    return {{"angle_deg", gain.angle() * 180.0 / std::numbers::pi}};
}

json graph_to_json(const GainGraph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"u", e.u}, {"v", e.v}, {"gain", gain_to_json(e.gain)}});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

GainGraph load_graph(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw GraphError("cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw GraphError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return graph_from_json(doc);
}

void save_graph(const GainGraph& g, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path.string());
    out << graph_to_json(g).dump(2) << '\n';
}

json report_to_json(const AnalysisReport& r)
{
    json cycles = json::array();
    for (const auto& c : r.cycles) {
        cycles.push_back({{"vertices", c.vertices},
                          {"length", c.length()},
                          {"gain_product", gain_to_json(c.gain_product)},
                          {"type", c.type ? json(std::string(to_string(*c.type))) : json(nullptr)}});
    }

    json out = {
        {"exact", r.exact},
        {"stats",
         {{"n", r.stats.n},
          {"m", r.stats.m},
          {"omega", r.stats.omega},
          {"c", r.stats.c},
          {"alpha", r.stats.alpha},
          {"matching", r.stats.matching},
          {"pendant_count", r.stats.pendant_count}}},
        {"rank", r.rank},
        {"inertia", {{"p_plus", r.inertia.p_plus}, {"n_minus", r.inertia.n_minus}, {"zero", r.inertia.zero}}},
        {"cycles", std::move(cycles)},
        {"disjoint_cycles", r.disjoint_cycles},
        {"bounds", {{"lower", r.bounds.lower}, {"rank", r.bounds.rank}, {"upper", r.bounds.upper}, {"holds", r.bounds.holds}}},
        {"lower_optimal_by_rank", r.lower_optimal_by_rank.lower_optimal},
        {"rank_exact", r.lower_optimal_by_rank.exact},
        {"lower_optimal_by_structure", r.structure ? json(r.structure->lower_optimal) : json(nullptr)},
        {"witnesses", {{"independent_set", r.independent_set}}},
        {"consistent", r.consistent()},
    };
    if (r.structure) {
        out["witnesses"]["structure"] = {
            {"condition_i_disjoint_cycles", r.structure->disjoint_cycles},
            {"condition_ii_cycle_types", optional_bool(r.structure->cycle_types_extremal)},
            {"condition_iii_contraction_alpha", optional_bool(r.structure->contraction_alpha)},
            {"alpha_t_graph", r.structure->cycle_types_extremal ? json(r.structure->alpha_t_graph) : json(nullptr)},
            {"alpha_t_bracket", r.structure->cycle_types_extremal ? json(r.structure->alpha_t_bracket) : json(nullptr)},
        };
    } else {
        out["witnesses"]["structure"] = nullptr;
    }
    if (r.structure_error)
        out["structure_error"] = *r.structure_error;
    return out;
}

json lemmas_to_json(const std::vector<LemmaCheck>& checks)
{
    json out = json::array();
    for (const auto& c : checks) {
        json item = {{"lemma", std::string(to_string(c.id))}, {"instance", c.instantiation}, {"status", std::string(to_string(c.status))}};
        if (!c.detail.empty())
            item["detail"] = c.detail;
        out.push_back(std::move(item));
    }
    return out;
}

std::string report_to_text(const AnalysisReport& r)
{
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    auto tri = [&](const std::optional<bool>& b) -> std::string { return b ? yes_no(*b) : "n/a"; };

    std::ostringstream out;
    out << "vertices n = " << r.stats.n << ", edges m = " << r.stats.m << ", components = " << r.stats.omega << '\n';
    out << "cyclomatic number c = " << r.stats.c << '\n';
    out << "independence number alpha = " << r.stats.alpha << ", matching number = " << r.stats.matching << '\n';
    out << "rank r = " << r.rank << (r.exact ? " (exact)" : " (floating point)") << ", inertia (p+, n-, 0) = (" << r.inertia.p_plus
        << ", " << r.inertia.n_minus << ", " << r.inertia.zero << ")\n";
    out << "2n−2c−2α ≤ r ≤ 2n−2α: " << r.bounds.lower << " ≤ " << r.bounds.rank << " ≤ " << r.bounds.upper
        << (r.bounds.holds ? "  [holds]" : "  [VIOLATED]") << '\n';
    if (!r.disjoint_cycles) {
        out << "cycles: not pairwise vertex-disjoint\n";
    } else {
        out << "cycles: " << r.cycles.size() << '\n';
        for (const auto& c : r.cycles) {
            out << "  [";
            for (std::size_t k = 0; k < c.vertices.size(); ++k)
                out << (k ? " " : "") << c.vertices[k];
            out << "] length " << c.length() << ", gain product " << c.gain_product.to_string() << ", Type "
                << (c.type ? std::string(to_string(*c.type)) : std::string("ambiguous")) << '\n';
        }
    }
    out << "lower-optimal (rank): " << yes_no(r.lower_optimal_by_rank.lower_optimal) << (r.exact ? "" : " (floating-point rank)") << '\n';
    if (r.structure) {
        out << "lower-optimal (structure): " << yes_no(r.structure->lower_optimal) << "  [disjoint cycles: " << yes_no(r.structure->disjoint_cycles)
            << ", cycle types A/E: " << tri(r.structure->cycle_types_extremal) << ", alpha(T_G) = alpha([T_G]) + c: " << tri(r.structure->contraction_alpha)
            << "]\n";
    } else {
        out << "lower-optimal (structure): undetermined (" << r.structure_error.value_or("unknown") << ")\n";
    }
    out << "consistent: " << yes_no(r.consistent()) << '\n';
    return out.str();
}

} // namespace gainrank
