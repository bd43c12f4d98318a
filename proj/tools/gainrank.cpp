// gainrank command-line front end.
//
// Exit codes: 0 success, 1 input or parameter error, 2 a mathematical check failed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gainrank/errors.hpp"
#include "gainrank/fuzz.hpp"
#include "gainrank/generators.hpp"
#include "gainrank/json_io.hpp"
#include "gainrank/lemma_suite.hpp"
#include "gainrank/linalg.hpp"
#include "gainrank/structure.hpp"
#include "gainrank/theorems.hpp"

namespace {

using namespace gainrank;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;

struct AnalyzeArgs {
    std::string path;
    double tol = kDefaultTolerance;
    bool json = false;
    bool text = false;
    bool lemmas = false;
};

struct FuzzArgs {
    FuzzOptions opt;
    std::string domain = "FourthRoots";
    std::size_t exhaustive_n = 0;
    bool no_lemmas = false;
    bool json = false;
    std::optional<std::uint64_t> replay;
    long rank_offset = 0;  // hidden fault injection for testing the harness itself
};

struct GenerateArgs {
    std::uint64_t seed = 1;
    std::string out;
    // random
    std::size_t n = 8;
    double p = 0.3;
    std::string domain = "FourthRoots";
    // cycle
    std::size_t length = 0;
    std::string type;
    // lower-optimal
    std::vector<std::size_t> cycles;
    std::size_t growth = 0;
    std::size_t isolated = 0;
};

int run_analyze(const AnalyzeArgs& a)
{
    const GainGraph g = load_graph(a.path);
    const AnalysisReport rep = analyze(g, a.tol);
    if (a.json) {
        nlohmann::json doc = report_to_json(rep);
        if (a.lemmas)
            doc["lemmas"] = lemmas_to_json(lemma_suite(g, a.tol));
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << report_to_text(rep);
        if (a.lemmas) {
            for (const auto& c : lemma_suite(g, a.tol)) {
                std::cout << "lemma " << to_string(c.id) << " [" << c.instantiation << "]: " << to_string(c.status);
                if (!c.detail.empty())
                    std::cout << " (" << c.detail << ")";
                std::cout << '\n';
            }
        }
    }
    return rep.consistent() ? kOk : kViolation;
}

int run_fuzz_cmd(FuzzArgs& a)
{
    a.opt.domain = parse_gain_domain(a.domain);
    a.opt.lemmas = !a.no_lemmas;
    if (a.exhaustive_n > 0)
        a.opt.exhaustive_n = a.exhaustive_n;
    if (a.rank_offset != 0) {
        const long offset = a.rank_offset;
        const double tol = a.opt.tol;
        a.opt.rank_hook = [offset, tol](const GainGraph& g) {
            return static_cast<std::size_t>(static_cast<long>(graph_rank(g, tol)) + offset);
        };
    }

    if (a.replay) {
        const GainGraph g = fuzz_instance(a.opt, *a.replay);
        std::cerr << "replaying instance seed " << *a.replay << '\n';
        std::cout << graph_to_json(g).dump() << '\n';
        FuzzSummary one;
        check_instance(g, *a.replay, a.opt, one);
        std::cout << (a.json ? summary_to_json(one).dump(2) + "\n" : summary_to_text(one));
        return one.ok() ? kOk : kViolation;
    }

    const FuzzSummary s = run_fuzz(a.opt);
    std::cout << (a.json ? summary_to_json(s).dump(2) + "\n" : summary_to_text(s));
    return s.ok() ? kOk : kViolation;
}

void emit(const GainGraph& g, const std::string& out)
{
    if (out.empty())
        std::cout << graph_to_json(g).dump(2) << '\n';
    else
        save_graph(g, out);
}

int run_generate_random(const GenerateArgs& a)
{
    emit(random_gain_graph(a.n, a.p, parse_gain_domain(a.domain), a.seed), a.out);
    return kOk;
}

int run_generate_cycle(const GenerateArgs& a)
{
    const GainGraph g = cycle_of_type(a.length, parse_cycle_type(a.type), a.seed);
    emit(g, a.out);
    return kOk;
}

int run_generate_lower_optimal(const GenerateArgs& a)
{
    LowerOptimalSpec spec{a.cycles, a.growth, a.isolated};
    const GainGraph g = lower_optimal_instance(spec, a.seed);
    emit(g, a.out);
    const BoundsCheck b = check_bounds(g);
    // Certification goes to stderr when the graph itself is written to stdout.
    std::ostream& log = a.out.empty() ? std::cerr : std::cout;
    log << "certified lower-optimal: n = " << g.order() << ", c = " << cyclomatic_number(g) << ", alpha = " << independence_number(g)
        << ", r = " << b.rank << " = 2n-2c-2alpha = " << b.lower << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rank, inertia and lower-bound analysis of complex unit gain graphs"};
    app.require_subcommand(1);
    int status = kOk;

    AnalyzeArgs an;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a graph file");
    analyze_cmd->add_option("file", an.path, "Graph JSON file")->required();
    analyze_cmd->add_option("--tol", an.tol, "Relative eigenvalue threshold for floating-point gains")->check(CLI::PositiveNumber);
    auto* json_flag = analyze_cmd->add_flag("--json", an.json, "Emit the report as JSON");
    analyze_cmd->add_flag("--text", an.text, "Emit a human-readable report (default)")->excludes(json_flag);
    analyze_cmd->add_flag("--lemmas", an.lemmas, "Also run the lemma suite");
    analyze_cmd->callback([&] { status = run_analyze(an); });

    FuzzArgs fz;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Check the theorems on generated instances");
    fuzz_cmd->add_option("--n-max", fz.opt.n_max, "Largest order of random instances")->capture_default_str();
    fuzz_cmd->add_option("--trials", fz.opt.trials, "Number of random instances")->capture_default_str();
    fuzz_cmd->add_option("--seed", fz.opt.seed, "Base seed")->envname("GAINRANK_SEED")->capture_default_str();
    fuzz_cmd->add_option("--gain-domain", fz.domain, "FourthRoots, PythagoreanExact or RandomAngle")->capture_default_str();
    fuzz_cmd->add_option("--exhaustive-n", fz.exhaustive_n, "Also sweep every connected graph up to this order");
    fuzz_cmd->add_option("--gains-per-graph", fz.opt.gains_per_graph, "Random gain assignments per graph in the sweep")->capture_default_str();
    fuzz_cmd->add_option("--threads", fz.opt.threads, "Worker threads (0: all cores)");
    fuzz_cmd->add_option("--tol", fz.opt.tol, "Relative eigenvalue threshold")->check(CLI::PositiveNumber);
    fuzz_cmd->add_flag("--no-lemmas", fz.no_lemmas, "Skip the lemma suite");
    fuzz_cmd->add_flag("--json", fz.json, "Emit the summary as JSON");
    fuzz_cmd->add_option("--replay", fz.replay, "Re-run the single random instance with this instance seed");
    fuzz_cmd->add_option("--inject-rank-offset", fz.rank_offset)->group("");
    fuzz_cmd->callback([&] { status = run_fuzz_cmd(fz); });

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph as JSON");
    generate_cmd->require_subcommand(1);
    auto common = [&gen](CLI::App* sub) {
        sub->add_option("--seed", gen.seed, "Seed")->envname("GAINRANK_SEED");
        sub->add_option("--out", gen.out, "Output file (default: stdout)");
    };

    auto* random_cmd = generate_cmd->add_subcommand("random", "Erdos-Renyi gain graph");
    random_cmd->add_option("--n", gen.n, "Order")->capture_default_str();
    random_cmd->add_option("--p", gen.p, "Edge probability")->capture_default_str();
    random_cmd->add_option("--domain", gen.domain, "FourthRoots, PythagoreanExact or RandomAngle")->capture_default_str();
    common(random_cmd);
    random_cmd->callback([&] { status = run_generate_random(gen); });

    auto* cycle_cmd = generate_cmd->add_subcommand("cycle", "Cycle with a prescribed gain Type");
    cycle_cmd->add_option("--length", gen.length, "Cycle length")->required();
    cycle_cmd->add_option("--type", gen.type, "A, B, C, D or E")->required();
    common(cycle_cmd);
    cycle_cmd->callback([&] { status = run_generate_cycle(gen); });

    auto* lo_cmd = generate_cmd->add_subcommand("lower-optimal", "Certified instance attaining the lower bound");
    lo_cmd->add_option("--cycles", gen.cycles, "Comma-separated cycle lengths")->delimiter(',');
    lo_cmd->add_option("--growth", gen.growth, "Pendant pairs to attach");
    lo_cmd->add_option("--isolated", gen.isolated, "Isolated starting vertices");
    common(lo_cmd);
    lo_cmd->callback([&] { status = run_generate_lower_optimal(gen); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    } catch (const CertificationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return status;
}
