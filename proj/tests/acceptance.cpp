// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gainrank/cycle_analysis.hpp"
#include "gainrank/fuzz.hpp"
#include "gainrank/generators.hpp"
#include "gainrank/lemma_suite.hpp"
#include "gainrank/linalg.hpp"
#include "gainrank/structure.hpp"
#include "gainrank/theorems.hpp"
#include "support/oracles.hpp"

using namespace gainrank;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Graphs seen by the earlier criteria, re-used by the independence check.
std::vector<GainGraph> g_corpus;

void remember(const GainGraph& g)
{
    if (g.order() <= 15)
        g_corpus.push_back(g);
}

std::vector<EdgeList> connected_shapes_up_to(std::size_t n_max)
{
    std::vector<EdgeList> out;
    for (std::size_t n = 1; n <= n_max; ++n)
        for (auto& s : nonisomorphic_graphs(n, true))
            out.push_back(std::move(s));
    return out;
}

const std::vector<EdgeList>& exhaustive_shapes()
{
    static const std::vector<EdgeList> shapes = connected_shapes_up_to(7);
    return shapes;
}

GainGraph delete_set(const GainGraph& g, std::initializer_list<Vertex> vs)
{
    const std::vector<Vertex> d(vs);
    return delete_vertices(g, d).graph;
}

std::string first_line(const std::string& prefix, std::size_t seed_or_index, const GainGraph& g)
{
    std::ostringstream s;
    s << prefix << " at #" << seed_or_index << " (n=" << g.order() << ", m=" << g.size() << ")";
    return s.str();
}

Outcome bounds_exhaustive()
{
    Rng rng(0xB0B);
    std::size_t checked = 0;
    for (std::size_t k = 0; k < exhaustive_shapes().size(); ++k) {
        for (int t = 0; t < 25; ++t) {
            const GainGraph g = with_random_gains(exhaustive_shapes()[k], GainDomain::FourthRoots, rng);
            ++checked;
            if (!check_bounds(g).holds)
                return {false, first_line("bound violated", k, g)};
            if (t == 0)
                remember(g);
        }
    }
    return {true, std::to_string(exhaustive_shapes().size()) + " graphs, " + std::to_string(checked) + " gain assignments, 0 violations"};
}

Outcome equivalence()
{
    std::size_t checked = 0, positives = 0, discrepancies = 0;
    std::string first;
    auto check = [&](const GainGraph& g, const std::string& label, std::size_t k) {
        ++checked;
        const bool by_rank = is_lower_optimal_by_rank(g).lower_optimal;
        const bool by_structure = is_lower_optimal_by_structure(g).lower_optimal;
        positives += by_rank;
        if (by_rank != by_structure && discrepancies++ == 0)
            first = first_line(label + " discrepancy", k, g);
    };

    Rng rng(0xE9);
    for (std::size_t k = 0; k < exhaustive_shapes().size(); ++k)
        for (int t = 0; t < 25; ++t)
            check(with_random_gains(exhaustive_shapes()[k], GainDomain::FourthRoots, rng), "exhaustive", k);

    FuzzOptions opt;
    opt.n_max = 12;
    for (std::uint64_t k = 0; k < 10000; ++k) {
        opt.domain = k % 2 ? GainDomain::PythagoreanExact : GainDomain::FourthRoots;
        const GainGraph g = fuzz_instance(opt, derive_seed(0xAC2, k));
        check(g, "random", k);
        remember(g);
    }

    std::size_t certified_failures = 0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        Rng spec_rng(derive_seed(0xCE7, k));
        LowerOptimalSpec spec;
        const std::size_t cycles = std::uniform_int_distribution<std::size_t>(0, 3)(spec_rng);
        for (std::size_t j = 0; j < cycles; ++j)
            spec.cycle_lengths.push_back(std::uniform_int_distribution<std::size_t>(3, 8)(spec_rng));
        spec.growth_steps = std::uniform_int_distribution<std::size_t>(cycles == 0 ? 1 : 0, 5)(spec_rng);
        spec.isolated_vertices = std::uniform_int_distribution<std::size_t>(0, 2)(spec_rng);
        const GainGraph g = lower_optimal_instance(spec, spec_rng());
        certified_failures += !is_lower_optimal_by_rank(g).lower_optimal;
        check(g, "certified", k);
        remember(g);
    }

    std::ostringstream s;
    s << checked << " instances (" << positives << " lower-optimal), " << discrepancies << " discrepancies";
    if (certified_failures)
        s << ", " << certified_failures << " certified outputs not lower-optimal";
    if (!first.empty())
        s << "; first " << first;
    return {discrepancies == 0 && certified_failures == 0, s.str()};
}

Outcome cycle_closed_forms()
{
    const UnitGain products[] = {UnitGain::one(), UnitGain::minus_one(), UnitGain::i(), UnitGain::minus_i()};
    Rng rng(0xC7C);
    std::size_t checked = 0;
    for (std::size_t l = 3; l <= 12; ++l) {
        std::set<CycleType> reached;
        for (const UnitGain& product : products) {
            for (int trial = 0; trial < 20; ++trial) {
                // Random exact gains on l-1 edges, the closing edge fixes the product.
                std::vector<Edge> es;
                UnitGain acc = UnitGain::one();
                for (Vertex v = 0; v + 1 < l; ++v) {
                    const UnitGain z = random_gain(GainDomain::PythagoreanExact, rng);
                    acc *= z;
                    es.push_back({v, v + 1, z});
                }
                es.push_back({static_cast<Vertex>(l - 1), 0, product * acc.conj()});
                const GainGraph c = GainGraph::build(l, std::move(es));
                const CycleType t = classify_cycle(l, product);
                reached.insert(t);
                const Inertia got = inertia(adjacency_matrix(c));
                ++checked;
                if (got != cycle_inertia_closed_form(l, t) || got != testing::cycle_spectrum_inertia(l, product.angle()))
                    return {false, "l=" + std::to_string(l) + " Type " + std::string(to_string(t)) + " inertia mismatch"};
            }
        }
        const std::set<CycleType> expected = l % 2 == 0 ? std::set<CycleType>{CycleType::A, CycleType::B}
                                                        : std::set<CycleType>{CycleType::C, CycleType::D, CycleType::E};
        if (reached != expected)
            return {false, "l=" + std::to_string(l) + " did not reach every Type of its parity"};
    }
    return {true, std::to_string(checked) + " cycles, l = 3..12, every Type of each parity reached"};
}

Outcome tree_identities()
{
    for (std::uint64_t k = 0; k < 500; ++k) {
        const std::uint64_t seed = derive_seed(0x7EE, k);
        const std::size_t n = 1 + seed % 20;
        const GainDomain domain = k % 2 ? GainDomain::PythagoreanExact : GainDomain::FourthRoots;
        const GainGraph t = random_gain_tree(n, domain, seed);
        remember(t);
        std::vector<Edge> plain;
        for (const Edge& e : t.edges())
            plain.push_back({e.u, e.v, UnitGain::one()});
        const std::size_t r = rank_exact(adjacency_matrix(t));
        const std::size_t r_plain = rank_exact(adjacency_matrix(GainGraph::build(n, std::move(plain))));
        const std::size_t m = matching_number(t);
        const std::size_t alpha = independence_number(t);
        if (r != r_plain || r != 2 * m || r + 2 * alpha != 2 * n || forest_independence_number(t) != alpha)
            return {false, first_line("tree identity broken", k, t)};
    }
    return {true, "500 gain trees, n <= 20"};
}

Outcome pendant_and_deletion()
{
    std::size_t pendant_checks = 0, deletion_checks = 0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const std::uint64_t seed = derive_seed(0x9E7, k);
        Rng rng(seed);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
        const double mean_degree = std::uniform_real_distribution<double>(0.5, 4.0)(rng);
        const double p = std::min(1.0, mean_degree / static_cast<double>(n - 1));
        const GainGraph g = random_gain_graph(n, p, k % 2 ? GainDomain::PythagoreanExact : GainDomain::FourthRoots, rng());
        remember(g);
        const std::size_t r = graph_rank(g);
        for (Vertex x = 0; x < n; ++x) {
            const std::size_t rx = graph_rank(delete_set(g, {x}));
            ++deletion_checks;
            if (rx > r || r - rx > 2)
                return {false, first_line("deletion bound broken at vertex " + std::to_string(x), k, g)};
            if (g.degree(x) == 1) {
                const Vertex y = g.neighbors(x)[0];
                ++pendant_checks;
                if (r != graph_rank(delete_set(g, {x, y})) + 2)
                    return {false, first_line("pendant reduction broken at vertex " + std::to_string(x), k, g)};
            }
        }
    }
    return {true, "1000 graphs, " + std::to_string(pendant_checks) + " pendant reductions, " + std::to_string(deletion_checks) + " single-vertex deletions"};
}

Outcome lemma_suite_gate()
{
    std::map<LemmaId, std::size_t> applicable;
    std::size_t graphs = 0, failures = 0;
    std::string first;
    auto run = [&](const GainGraph& g) {
        ++graphs;
        std::set<LemmaId> hit;
        for (const LemmaCheck& c : lemma_suite(g)) {
            if (c.status == LemmaStatus::Fail && failures++ == 0)
                first = std::string(to_string(c.id)) + " [" + c.instantiation + "]: " + c.detail;
            if (c.status != LemmaStatus::Skipped)
                hit.insert(c.id);
        }
        for (LemmaId id : hit)
            ++applicable[id];
    };

    FuzzOptions opt;
    opt.n_max = 12;
    for (std::uint64_t k = 0; k < 2000; ++k)
        run(fuzz_instance(opt, derive_seed(0x1E3, k)));
    // Targeted: lower-optimal graphs with cycles and pendant growth, so cycle lemmas apply.
    for (std::uint64_t k = 0; k < 400; ++k) {
        LowerOptimalSpec spec{{3 + k % 6}, 1 + k % 4, k % 3 == 0 ? 1U : 0U};
        if (k % 5 == 0)
            spec.cycle_lengths.push_back(3 + (k / 5) % 4);
        run(lower_optimal_instance(spec, derive_seed(0x1E4, k)));
    }

    std::ostringstream s;
    s << graphs << " graphs, " << failures << " failures; applicable:";
    bool enough = true;
    for (LemmaId id : kAllLemmas) {
        s << ' ' << to_string(id) << '=' << applicable[id];
        enough = enough && applicable[id] >= 50;
    }
    if (!first.empty())
        s << "; first failure " << first;
    return {failures == 0 && enough, s.str()};
}

Outcome rank_backends()
{
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const std::uint64_t seed = derive_seed(0x4A7, k);
        Rng rng(seed);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const GainGraph g = random_gain_graph(n, p, k % 2 ? GainDomain::PythagoreanExact : GainDomain::FourthRoots, rng());
        remember(g);
        const std::size_t exact = rank_exact(adjacency_matrix(g));
        const std::size_t approx = rank_approx(adjacency_matrix(to_approx(g)), 1e-9);
        if (exact != approx)
            return {false, first_line("rank_exact " + std::to_string(exact) + " != rank_approx " + std::to_string(approx), k, g)};
    }
    return {true, "1000 exact graphs, n <= 12, tol 1e-9"};
}

Outcome independence_oracle()
{
    std::size_t largest = 0;
    for (std::size_t k = 0; k < g_corpus.size(); ++k) {
        const GainGraph& g = g_corpus[k];
        largest = std::max(largest, g.order());
        const std::size_t bb = independence_number(g);
        const std::size_t brute = testing::brute_force_alpha(g);
        if (bb != brute)
            return {false, first_line("alpha " + std::to_string(bb) + " != exhaustive " + std::to_string(brute), k, g)};
        const IndependentSet w = maximum_independent_set(g);
        bool independent = w.vertices.size() == bb;
        for (std::size_t a = 0; a < w.vertices.size() && independent; ++a)
            for (std::size_t b = a + 1; b < w.vertices.size() && independent; ++b)
                independent = !g.adjacent(w.vertices[a], w.vertices[b]);
        if (!independent)
            return {false, first_line("witness is not an independent set of size alpha", k, g)};
    }
    return {true, std::to_string(g_corpus.size()) + " corpus graphs, largest n = " + std::to_string(largest)};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "rank bounds, all connected graphs n <= 7, 25 gain assignments each", bounds_exhaustive},
        {2, "lower-optimal by rank <=> by structure", equivalence},
        {3, "cycle inertia equals the closed form", cycle_closed_forms},
        {4, "gain tree rank and independence identities", tree_identities},
        {5, "pendant reduction and vertex deletion bounds", pendant_and_deletion},
        {6, "lemma suite: no failures, each lemma applicable >= 50 times", lemma_suite_gate},
        {7, "rank_exact equals rank_approx", rank_backends},
        {8, "branch-and-bound alpha equals exhaustive alpha, corpus n <= 15", independence_oracle},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
