#include "gainrank/generators.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>

#include "gainrank/errors.hpp"
#include "gainrank/theorems.hpp"

namespace gainrank {

namespace {

const std::vector<UnitGain>& fourth_roots()
{
    static const std::vector<UnitGain> roots = {UnitGain::one(), UnitGain::minus_one(), UnitGain::i(), UnitGain::minus_i()};
    return roots;
}

// Reduced triples with hypotenuse up to 25, all sign and swap variants, plus +-1, +-i.
const std::vector<UnitGain>& pythagorean_units()
{
    static const std::vector<UnitGain> units = [] {
        std::vector<UnitGain> out = fourth_roots();
        for (long m = 2; m <= 4; ++m) {
            for (long k = 1; k < m; ++k) {
                if (std::gcd(m, k) != 1 || (m - k) % 2 == 0)
                    continue;
                const long a = m * m - k * k;
                const long b = 2 * m * k;
                const long c = m * m + k * k;
                for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
                    for (long sx : {1L, -1L})
                        for (long sy : {1L, -1L})
                            out.push_back(UnitGain::exact(mpq_class(sx * x, c), mpq_class(sy * y, c)));
            }
        }
        return out;
    }();
    return units;
}

template <typename T>
const T& pick(const std::vector<T>& pool, Rng& rng)
{
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    return pool[d(rng)];
}

bool coin(Rng& rng, double p = 0.5)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::size_t uniform_index(Rng& rng, std::size_t bound)
{
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

// Exact unit product satisfying the defining predicate of the type.
GaussianRational product_for_type(std::size_t l, CycleType t, Rng& rng)
{
    if (l % 2 == 0) {
        const GaussianRational target((l / 2) % 2 == 0 ? 1L : -1L);
        if (t == CycleType::A)
            return target;
        while (true) {
            const auto& z = pick(pythagorean_units(), rng).exact_value();
            if (!(z == target))
                return z;
        }
    }
    const GaussianRational sign(((l - 1) / 2) % 2 == 0 ? 1L : -1L);
    if (t == CycleType::E)
        return sign * (coin(rng) ? GaussianRational::i() : -GaussianRational::i());
    const int want = t == CycleType::C ? 1 : -1;
    while (true) {
        const auto& w = pick(pythagorean_units(), rng).exact_value();
        if (sgn(w.real()) == want)
            return sign * w;
    }
}

// Incremental builder shared by the certified and the adversarial constructions.
class Builder {
public:
    explicit Builder(Rng& rng) : rng_(rng), tree_domain_(coin(rng) ? GainDomain::FourthRoots : GainDomain::PythagoreanExact) {}

    Vertex add_vertex()
    {
        parent_.push_back(parent_.size());
        return n_++;
    }

    void add_edge(Vertex a, Vertex b, UnitGain gain)
    {
        edges_.push_back({a, b, std::move(gain)});
        parent_[find(a)] = find(b);
    }

    void add_edge(Vertex a, Vertex b) { add_edge(a, b, random_gain(tree_domain_, rng_)); }

    // A cycle of the given type through `first` (if provided) and fresh vertices.
    std::vector<Vertex> add_cycle(std::size_t l, CycleType t, std::optional<Vertex> first = std::nullopt)
    {
        std::vector<Vertex> cyc;
        cyc.push_back(first ? *first : add_vertex());
        for (std::size_t k = 1; k < l; ++k)
            cyc.push_back(add_vertex());
        const GaussianRational target = product_for_type(l, t, rng_);
        GaussianRational acc(1L);
        for (std::size_t k = 0; k + 1 < l; ++k) {
            const UnitGain g = random_gain(tree_domain_, rng_);
            acc *= g.exact_value();
            add_edge(cyc[k], cyc[k + 1], g);
        }
        add_edge(cyc[l - 1], cyc[0], UnitGain::exact(target * acc.conj()));
        return cyc;
    }

    // New pendant pair u - v; v is joined to one vertex in each of a random nonempty
    // selection of the existing components, so v lies on no cycle. Once the graph is
    // disconnected the pair may also stay a component of its own.
    void grow_pendant_pair()
    {
        std::vector<std::vector<Vertex>> comps;
        {
            std::vector<std::size_t> root_index(n_, static_cast<std::size_t>(-1));
            for (Vertex w = 0; w < n_; ++w) {
                const Vertex r = find(w);
                if (root_index[r] == static_cast<std::size_t>(-1)) {
                    root_index[r] = comps.size();
                    comps.emplace_back();
                }
                comps[root_index[r]].push_back(w);
            }
        }
        const Vertex v = add_vertex();
        const Vertex u = add_vertex();
        add_edge(u, v);
        if (comps.empty() || (comps.size() > 1 && coin(rng_, 0.15)))
            return;
        const std::size_t must = uniform_index(rng_, comps.size());
        for (std::size_t k = 0; k < comps.size(); ++k)
            if (k == must || coin(rng_, 0.25))
                add_edge(v, pick(comps[k], rng_));
    }

    void grow(std::size_t steps)
    {
        for (std::size_t k = 0; k < steps; ++k)
            grow_pendant_pair();
    }

    GainGraph finish(bool shuffle = true)
    {
        std::vector<Vertex> perm(n_);
        std::iota(perm.begin(), perm.end(), 0);
        if (shuffle)
            std::shuffle(perm.begin(), perm.end(), rng_);
        std::vector<Edge> edges;
        for (const auto& e : edges_)
            edges.push_back({perm[e.u], perm[e.v], e.gain});
        return GainGraph::build(n_, std::move(edges));
    }

private:
    Vertex find(Vertex x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    Rng& rng_;
    GainDomain tree_domain_;
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Vertex> parent_;
};

CycleType extremal_type_for(std::size_t l)
{
    return l % 2 == 0 ? CycleType::A : CycleType::E;
}

CycleType non_extremal_type_for(std::size_t l, Rng& rng)
{
    if (l % 2 == 0)
        return CycleType::B;
    return coin(rng) ? CycleType::C : CycleType::D;
}

// ---- isomorphism-class enumeration ------------------------------------------------

using AdjMasks = std::vector<std::uint32_t>;

std::uint64_t encode(const AdjMasks& adj, const std::vector<std::size_t>& order)
{
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            code = (code << 1) | ((adj[order[i]] >> order[j]) & 1U);
    return code;
}

// Smallest code over all labellings that keep vertices sorted by an isomorphism
// invariant (degree, then sorted neighbour degrees).
std::uint64_t canonical_code(const AdjMasks& adj)
{
    const std::size_t n = adj.size();
    std::vector<std::vector<std::size_t>> invariant(n);
    for (std::size_t v = 0; v < n; ++v) {
        invariant[v].push_back(static_cast<std::size_t>(std::popcount(adj[v])));
        std::vector<std::size_t> nd;
        for (std::size_t w = 0; w < n; ++w)
            if ((adj[v] >> w) & 1U)
                nd.push_back(static_cast<std::size_t>(std::popcount(adj[w])));
        std::sort(nd.begin(), nd.end());
        invariant[v].insert(invariant[v].end(), nd.begin(), nd.end());
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return std::pair(invariant[a], a) < std::pair(invariant[b], b); });
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && invariant[order[j]] == invariant[order[i]])
            ++j;
        groups.emplace_back(i, j);
        i = j;
    }

    std::uint64_t best = ~std::uint64_t{0};
    auto recurse = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            best = std::min(best, encode(adj, order));
            return;
        }
        const auto [b, e] = groups[gi];
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(b), order.begin() + static_cast<std::ptrdiff_t>(e));
        do {
            self(self, gi + 1);
        } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(b), order.begin() + static_cast<std::ptrdiff_t>(e)));
    };
    recurse(recurse, 0);
    return best;
}

bool connected(const AdjMasks& adj)
{
    if (adj.empty())
        return false;
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::size_t v = 0; v < adj.size(); ++v)
            if ((frontier >> v) & 1U)
                next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (adj.size() == 32 ? ~0U : ((1U << adj.size()) - 1U));
}

EdgeList to_edge_list(const AdjMasks& adj)
{
    EdgeList out{adj.size(), {}};
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (std::size_t j = i + 1; j < adj.size(); ++j)
            if ((adj[i] >> j) & 1U)
                out.edges.emplace_back(i, j);
    return out;
}

} // namespace

std::string_view to_string(GainDomain d)
{
    switch (d) {
    case GainDomain::FourthRoots: return "FourthRoots";
    case GainDomain::PythagoreanExact: return "PythagoreanExact";
    case GainDomain::RandomAngle: return "RandomAngle";
    }
    return "unknown";
}

GainDomain parse_gain_domain(std::string_view text)
{
    std::string key;
    for (char c : text)
        if (c != '-' && c != '_')
            key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (key == "fourthroots")
        return GainDomain::FourthRoots;
    if (key == "pythagoreanexact" || key == "pythagorean")
        return GainDomain::PythagoreanExact;
    if (key == "randomangle" || key == "angle")
        return GainDomain::RandomAngle;
    throw ParameterError("unknown gain domain '" + std::string(text) + "'");
}

std::string_view to_string(Defect d)
{
    switch (d) {
    case Defect::SharedCycleVertex: return "shared_cycle_vertex";
    case Defect::WrongCycleType: return "wrong_cycle_type";
    case Defect::QuasiPendantCycle: return "quasi_pendant_cycle";
    }
    return "unknown";
}

UnitGain random_gain(GainDomain domain, Rng& rng)
{
    switch (domain) {
    case GainDomain::FourthRoots: return pick(fourth_roots(), rng);
    case GainDomain::PythagoreanExact: return pick(pythagorean_units(), rng);
    case GainDomain::RandomAngle:
        return UnitGain::from_angle(std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng));
    }
    return UnitGain::one();
}

GainGraph with_random_gains(const EdgeList& shape, GainDomain domain, Rng& rng)
{
    std::vector<Edge> edges;
    edges.reserve(shape.edges.size());
    for (const auto& [a, b] : shape.edges)
        edges.push_back({a, b, random_gain(domain, rng)});
    return GainGraph::build(shape.n, std::move(edges));
}

GainGraph random_gain_graph(std::size_t n, double p, GainDomain domain, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw ParameterError("edge probability must lie in [0, 1]");
    Rng rng(seed);
    EdgeList shape{n, {}};
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng, p))
                shape.edges.emplace_back(a, b);
    return with_random_gains(shape, domain, rng);
}

GainGraph random_gain_tree(std::size_t n, GainDomain domain, std::uint64_t seed)
{
    Rng rng(seed);
    EdgeList shape{n, {}};
    if (n == 2)
        shape.edges.emplace_back(0, 1);
    if (n > 2) {
        std::vector<Vertex> code(n - 2);
        for (auto& c : code)
            c = uniform_index(rng, n);
        std::vector<std::size_t> degree(n, 1);
        for (Vertex c : code)
            ++degree[c];
        for (Vertex c : code) {
            for (Vertex leaf = 0; leaf < n; ++leaf) {
                if (degree[leaf] == 1) {
                    shape.edges.emplace_back(leaf, c);
                    --degree[leaf];
                    --degree[c];
                    break;
                }
            }
        }
        std::vector<Vertex> last;
        for (Vertex v = 0; v < n; ++v)
            if (degree[v] == 1)
                last.push_back(v);
        shape.edges.emplace_back(last[0], last[1]);
    }
    return with_random_gains(shape, domain, rng);
}

GainGraph cycle_of_type(std::size_t length, CycleType t, std::uint64_t seed)
{
    if (length < 3)
        throw ParameterError("cycle length must be at least 3");
    if (!parity_matches(length, t))
        throw ParameterError("parity error: Type " + std::string(to_string(t)) + " needs an " +
                             (length % 2 == 0 ? "odd" : "even") + " length, got " + std::to_string(length));
    Rng rng(seed);
    Builder b(rng);
    b.add_cycle(length, t);
    return b.finish(/*shuffle=*/false);
}

GainGraph lower_optimal_instance(const LowerOptimalSpec& spec, std::uint64_t seed)
{
    for (std::size_t l : spec.cycle_lengths)
        if (l < 3)
            throw ParameterError("cycle lengths must be at least 3");
    Rng rng(seed);
    Builder b(rng);
    for (std::size_t l : spec.cycle_lengths)
        b.add_cycle(l, extremal_type_for(l));
    for (std::size_t k = 0; k < spec.isolated_vertices; ++k)
        b.add_vertex();
    b.grow(spec.growth_steps);
    GainGraph g = b.finish();
    if (!is_lower_optimal_by_rank(g).lower_optimal)
        throw CertificationError("lower_optimal_instance produced a graph that misses the lower bound (seed " +
                                 std::to_string(seed) + ")");
    return g;
}

GainGraph near_miss_instance(Defect defect, std::uint64_t seed)
{
    Rng rng(seed);
    Builder b(rng);
    auto length = [&] { return 3 + uniform_index(rng, 4); };

    const std::size_t extra_cycles = uniform_index(rng, 2);
    switch (defect) {
    case Defect::SharedCycleVertex: {
        const std::size_t l1 = length();
        const auto first = b.add_cycle(l1, extremal_type_for(l1));
        const std::size_t l2 = length();
        if (coin(rng)) {
            b.add_cycle(l2, extremal_type_for(l2), first[uniform_index(rng, first.size())]);
        } else {
            // Second path between two cycle vertices (theta graph).
            const Vertex a = first[0];
            const Vertex c = first[1 + uniform_index(rng, first.size() - 1)];
            Vertex prev = a;
            for (std::size_t k = 0; k + 2 < l2; ++k) {
                const Vertex w = b.add_vertex();
                b.add_edge(prev, w);
                prev = w;
            }
            b.add_edge(prev, c);
        }
        break;
    }
    case Defect::WrongCycleType: {
        const std::size_t l = length();
        b.add_cycle(l, non_extremal_type_for(l, rng));
        break;
    }
    case Defect::QuasiPendantCycle: {
        const std::size_t l = length();
        const auto cyc = b.add_cycle(l, extremal_type_for(l));
        const Vertex leaf = b.add_vertex();
        b.add_edge(cyc[uniform_index(rng, cyc.size())], leaf);
        break;
    }
    }
    for (std::size_t k = 0; k < extra_cycles; ++k) {
        const std::size_t l = length();
        b.add_cycle(l, extremal_type_for(l));
    }
    b.grow(uniform_index(rng, 4));
    return b.finish();
}

std::vector<EdgeList> nonisomorphic_graphs(std::size_t n, bool connected_only)
{
    if (n > 10)
        throw ParameterError("isomorphism-class enumeration is limited to n <= 10");
    if (n == 0)
        return connected_only ? std::vector<EdgeList>{} : std::vector<EdgeList>{EdgeList{}};

    std::vector<AdjMasks> level = {AdjMasks{0}};
    for (std::size_t k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<AdjMasks> next;
        for (const auto& g : level) {
            for (std::uint32_t s = 0; s < (1U << (k - 1)); ++s) {
                AdjMasks h = g;
                h.push_back(s);
                for (std::size_t v = 0; v + 1 < k; ++v)
                    if ((s >> v) & 1U)
                        h[v] |= 1U << (k - 1);
                if (seen.insert(canonical_code(h)).second)
                    next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    std::vector<EdgeList> out;
    for (const auto& g : level)
        if (!connected_only || connected(g))
            out.push_back(to_edge_list(g));
    return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k)
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace gainrank
