#include "gainrank/theorems.hpp"

#include "gainrank/errors.hpp"

namespace gainrank {

BoundsCheck make_bounds(std::size_t n, std::size_t c, std::size_t alpha, std::size_t rank)
{
    BoundsCheck b;
    const auto n2 = 2 * static_cast<std::int64_t>(n);
    const auto a2 = 2 * static_cast<std::int64_t>(alpha);
    b.lower = n2 - 2 * static_cast<std::int64_t>(c) - a2;
    b.upper = n2 - a2;
    b.rank = rank;
    const auto r = static_cast<std::int64_t>(rank);
    b.holds = b.lower <= r && r <= b.upper;
    return b;
}

BoundsCheck check_bounds(const GainGraph& g, double tol)
{
    return make_bounds(g.order(), cyclomatic_number(g), independence_number(g), graph_rank(g, tol));
}

RankVerdict is_lower_optimal_by_rank(const GainGraph& g, double tol)
{
    const BoundsCheck b = check_bounds(g, tol);
    return {static_cast<std::int64_t>(b.rank) == b.lower, g.is_exact()};
}

StructuralVerdict is_lower_optimal_by_structure(const GainGraph& g, double tol)
{
    StructuralVerdict v;
    v.cyclomatic = cyclomatic_number(g);
    CycleSet cs = find_cycles(g);
    v.disjoint_cycles = cs.disjoint;
    if (!cs.disjoint)
        return v;

    bool types_ok = true;
    for (auto& cyc : cs.cycles) {
        CycleRecord rec{cyc, cycle_gain(g, cyc), std::nullopt};
        rec.type = classify_cycle(rec.length(), rec.gain_product, tol);  // may throw AmbiguityError
        types_ok = types_ok && is_extremal_type(*rec.type);
        v.cycles.push_back(std::move(rec));
    }
    v.cycle_types_extremal = types_ok;

    const ContractionResult tg = contract_cycles(g);
    v.alpha_t_graph = forest_independence_number(tg.t_graph);
    v.alpha_t_bracket = forest_independence_number(tg.t_bracket);
    v.contraction_alpha = v.alpha_t_graph == v.alpha_t_bracket + v.cyclomatic;

    v.lower_optimal = v.disjoint_cycles && *v.cycle_types_extremal && *v.contraction_alpha;
    return v;
}

bool AnalysisReport::consistent() const
{
    if (!bounds.holds)
        return false;
    if (exact && rank != inertia.rank())
        return false;
    if (structure && structure->lower_optimal != lower_optimal_by_rank.lower_optimal)
        return false;
    return true;
}

AnalysisReport analyze(const GainGraph& g, double tol)
{
    AnalysisReport rep;
    rep.exact = g.is_exact();
    rep.stats = graph_stats(g);
    const IndependentSet mis = maximum_independent_set(g);
    rep.independent_set = mis.vertices;

    const HermitianMatrix a = adjacency_matrix(g);
    rep.rank = rank(a, tol);
    rep.inertia = inertia(a, tol);

    CycleSet cs = find_cycles(g);
    rep.disjoint_cycles = cs.disjoint;
    for (auto& cyc : cs.cycles)
        rep.cycles.push_back(make_cycle_record(g, std::move(cyc), tol));

    rep.bounds = make_bounds(rep.stats.n, rep.stats.c, rep.stats.alpha, rep.rank);
    rep.lower_optimal_by_rank = {static_cast<std::int64_t>(rep.rank) == rep.bounds.lower, rep.exact};

    try {
        rep.structure = is_lower_optimal_by_structure(g, tol);
    } catch (const AmbiguityError& e) {
        rep.structure_error = e.what();
    }
    return rep;
}

} // namespace gainrank
