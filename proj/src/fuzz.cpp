#include "gainrank/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "gainrank/errors.hpp"
#include "gainrank/json_io.hpp"
#include "gainrank/lemma_suite.hpp"
#include "gainrank/structure.hpp"
#include "gainrank/theorems.hpp"

namespace gainrank {

namespace {

constexpr const char* kBounds = "bounds";
constexpr const char* kRankInertia = "rank_equals_inertia";
constexpr const char* kEquivalence = "lower_optimal_equivalence";

void record(FuzzSummary& s, const std::string& property, bool skipped, std::optional<std::string> failure, std::uint64_t seed,
            const GainGraph& g)
{
    auto& t = s.tallies[property];
    if (skipped) {
        ++t.skipped;
        return;
    }
    ++t.checked;
    if (failure) {
        ++t.failed;
        s.failures.push_back({seed, property, *failure, graph_to_json(g)});
    }
}

void merge(FuzzSummary& into, FuzzSummary&& from)
{
    into.instances += from.instances;
    for (const auto& [name, t] : from.tallies) {
        auto& dst = into.tallies[name];
        dst.checked += t.checked;
        dst.skipped += t.skipped;
        dst.failed += t.failed;
    }
    for (auto& f : from.failures)
        into.failures.push_back(std::move(f));
}

// Runs job(k, summary) for k in [0, count) on worker threads; merges in index order.
template <typename Job>
FuzzSummary parallel_run(std::size_t count, unsigned threads, Job job)
{
    std::vector<FuzzSummary> parts(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < count; k = next++)
            job(k, parts[k]);
    };
    const unsigned n_threads = std::max(1U, std::min<unsigned>(threads ? threads : std::thread::hardware_concurrency(), static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    FuzzSummary total;
    for (auto& p : parts)
        merge(total, std::move(p));
    return total;
}

} // namespace

GainGraph fuzz_instance(const FuzzOptions& options, std::uint64_t instance_seed)
{
    Rng rng(instance_seed);
    const std::size_t n_max = std::max<std::size_t>(options.n_max, 1);
    const auto roll = std::uniform_int_distribution<int>(0, 9)(rng);
    const std::uint64_t sub_seed = rng();

    if (options.domain == GainDomain::RandomAngle || roll < 6) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, n_max)(rng);
        // Sparse-leaning densities so that trees, unicyclic and near-extremal graphs occur.
        const double mean_degree = std::uniform_real_distribution<double>(0.5, 3.5)(rng);
        const double p = n > 1 ? std::min(1.0, mean_degree / static_cast<double>(n - 1)) : 0.0;
        return random_gain_graph(n, p, options.domain, sub_seed);
    }
    if (roll < 8) {
        LowerOptimalSpec spec;
        std::size_t budget = n_max;
        const std::size_t cycles = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        for (std::size_t k = 0; k < cycles && budget >= 3; ++k) {
            const std::size_t l = std::uniform_int_distribution<std::size_t>(3, std::min<std::size_t>(budget, 6))(rng);
            spec.cycle_lengths.push_back(l);
            budget -= l;
        }
        spec.growth_steps = std::uniform_int_distribution<std::size_t>(0, budget / 2)(rng);
        spec.isolated_vertices = (budget - 2 * spec.growth_steps) > 0 ? std::uniform_int_distribution<int>(0, 1)(rng) : 0;
        return lower_optimal_instance(spec, sub_seed);
    }
    const Defect d = kAllDefects[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
    for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
        GainGraph g = near_miss_instance(d, derive_seed(sub_seed, attempt));
        if (g.order() <= n_max)
            return g;
    }
    return random_gain_graph(n_max, 0.3, options.domain, sub_seed);
}

void check_instance(const GainGraph& g, std::uint64_t seed, const FuzzOptions& options, FuzzSummary& summary)
{
    ++summary.instances;
    const std::size_t n = g.order();
    const std::size_t c = cyclomatic_number(g);
    const std::size_t alpha = independence_number(g);
    const HermitianMatrix a = adjacency_matrix(g);
    const std::size_t r = options.rank_hook ? options.rank_hook(g) : rank(a, options.tol);

    const BoundsCheck b = make_bounds(n, c, alpha, r);
    std::optional<std::string> bound_failure;
    if (!b.holds) {
        std::ostringstream msg;
        msg << "2n-2c-2alpha <= r <= 2n-2alpha violated: " << b.lower << " <= " << b.rank << " <= " << b.upper;
        bound_failure = msg.str();
    }
    record(summary, kBounds, false, bound_failure, seed, g);

    if (g.is_exact()) {
        const Inertia in = inertia(a, options.tol);
        const std::size_t r_exact = rank_exact(a);
        std::optional<std::string> mismatch;
        if (r_exact != in.rank())
            mismatch = "rank " + std::to_string(r_exact) + " != p+ + n- = " + std::to_string(in.rank());
        record(summary, kRankInertia, false, mismatch, seed, g);

        const bool by_rank = static_cast<std::int64_t>(r) == b.lower;
        const StructuralVerdict sv = is_lower_optimal_by_structure(g, options.tol);
        std::optional<std::string> disagreement;
        if (by_rank != sv.lower_optimal) {
            std::ostringstream msg;
            msg << "rank says " << (by_rank ? "lower-optimal" : "not lower-optimal") << ", structure says "
                << (sv.lower_optimal ? "lower-optimal" : "not lower-optimal") << " (i=" << sv.disjoint_cycles
                << ", ii=" << (sv.cycle_types_extremal ? std::to_string(*sv.cycle_types_extremal) : "n/a")
                << ", iii=" << (sv.contraction_alpha ? std::to_string(*sv.contraction_alpha) : "n/a") << ")";
            disagreement = msg.str();
        }
        record(summary, kEquivalence, false, disagreement, seed, g);
    } else {
        record(summary, kRankInertia, true, std::nullopt, seed, g);
        record(summary, kEquivalence, true, std::nullopt, seed, g);
    }

    if (!options.lemmas)
        return;
    const auto checks = lemma_suite(g, options.tol);
    for (LemmaId id : kAllLemmas) {
        bool applicable = false;
        std::optional<std::string> failure;
        for (const auto& chk : checks) {
            if (chk.id != id || chk.status == LemmaStatus::Skipped)
                continue;
            applicable = true;
            if (chk.status == LemmaStatus::Fail && !failure)
                failure = chk.instantiation + ": " + chk.detail;
        }
        record(summary, "lemma:" + std::string(to_string(id)), !applicable, failure, seed, g);
    }
}

FuzzSummary run_fuzz(const FuzzOptions& options)
{
    FuzzSummary summary = parallel_run(options.trials, options.threads, [&](std::size_t k, FuzzSummary& part) {
        const std::uint64_t s = derive_seed(options.seed, k);
        check_instance(fuzz_instance(options, s), s, options, part);
    });

    if (options.exhaustive_n) {
        std::vector<EdgeList> shapes;
        for (std::size_t n = 1; n <= *options.exhaustive_n; ++n)
            for (auto& e : nonisomorphic_graphs(n, true))
                shapes.push_back(std::move(e));
        const std::size_t per = std::max<std::size_t>(options.gains_per_graph, 1);
        const GainDomain domain = options.domain;
        merge(summary, parallel_run(shapes.size() * per, options.threads, [&](std::size_t k, FuzzSummary& part) {
                  const std::uint64_t s = derive_seed(~options.seed, k);
                  Rng rng(s);
                  check_instance(with_random_gains(shapes[k / per], domain, rng), s, options, part);
              }));
    }

    std::stable_sort(summary.failures.begin(), summary.failures.end(),
                     [](const FuzzFailure& a, const FuzzFailure& b) { return std::tie(a.seed, a.property) < std::tie(b.seed, b.property); });
    return summary;
}

nlohmann::json summary_to_json(const FuzzSummary& s)
{
    nlohmann::json tallies = nlohmann::json::object();
    for (const auto& [name, t] : s.tallies)
        tallies[name] = {{"checked", t.checked}, {"skipped", t.skipped}, {"failed", t.failed}};
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : s.failures)
        failures.push_back({{"seed", f.seed}, {"property", f.property}, {"detail", f.detail}, {"graph", f.graph}});
    return {{"instances", s.instances}, {"properties", std::move(tallies)}, {"failures", std::move(failures)}, {"ok", s.ok()}};
}

std::string summary_to_text(const FuzzSummary& s)
{
    std::ostringstream out;
    out << "instances: " << s.instances << '\n';
    for (const auto& [name, t] : s.tallies)
        out << "  " << name << ": checked " << t.checked << ", skipped " << t.skipped << ", failed " << t.failed << '\n';
    for (const auto& f : s.failures)
        out << "FAIL seed=" << f.seed << " property=" << f.property << ": " << f.detail << "\n  graph: " << f.graph.dump() << '\n';
    out << (s.ok() ? "OK: no violations\n" : "VIOLATIONS FOUND\n");
    return out.str();
}

} // namespace gainrank
