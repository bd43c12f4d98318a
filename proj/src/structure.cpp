#include "gainrank/structure.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include <boost/dynamic_bitset.hpp>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "gainrank/errors.hpp"

namespace gainrank {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const GainGraph& g) : adj_(g.order(), Bits(g.order())), current_(g.order()), best_set_(g.order())
    {
        for (const auto& e : g.edges()) {
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
        }
    }

    Bits solve()
    {
        Bits all(adj_.size());
        all.set();
        search(all, 0);
        return best_set_;
    }

private:
    void search(Bits cand, std::size_t size)
    {
        // Vertices of degree <= 1 within the candidates belong to some maximum set.
        Bits forced(adj_.size());
        for (bool changed = true; changed;) {
            changed = false;
            for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
                if ((adj_[v] & cand).count() <= 1) {
                    forced.set(v);
                    current_.set(v);
                    ++size;
                    cand -= adj_[v];
                    cand.reset(v);
                    changed = true;
                }
            }
        }

        if (cand.none()) {
            if (size > best_) {
                best_ = size;
                best_set_ = current_;
            }
        } else if (size + clique_cover_bound(cand) > best_) {
            std::size_t pick = Bits::npos;
            std::size_t pick_degree = 0;
            for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
                const std::size_t d = (adj_[v] & cand).count();
                if (pick == Bits::npos || d > pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            }
            current_.set(pick);
            Bits with = cand - adj_[pick];
            with.reset(pick);
            search(std::move(with), size + 1);
            current_.reset(pick);

            cand.reset(pick);
            search(std::move(cand), size);
        }
        current_ -= forced;
    }

    // Greedy partition into cliques; an independent set meets each clique at most once.
    std::size_t clique_cover_bound(const Bits& cand) const
    {
        std::vector<Bits> cliques;
        for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
            bool placed = false;
            for (auto& clique : cliques) {
                if (clique.is_subset_of(adj_[v])) {
                    clique.set(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cliques.emplace_back(adj_.size());
                cliques.back().set(v);
            }
        }
        return cliques.size();
    }

    std::vector<Bits> adj_;
    Bits current_;
    Bits best_set_;
    std::size_t best_ = 0;
};

bool is_acyclic(const GainGraph& g)
{
    return g.size() + component_count(g) == g.order();
}

} // namespace

std::size_t cyclomatic_number(const GainGraph& g)
{
    return g.size() + component_count(g) - g.order();
}

IndependentSet maximum_independent_set(const GainGraph& g)
{
    IndependentSet result;
    for (const auto& comp : components(g)) {
        const Bits best = IndependentSetSearch(comp.graph).solve();
        for (auto v = best.find_first(); v != Bits::npos; v = best.find_next(v))
            result.vertices.push_back(comp.to_parent[v]);
    }
    std::sort(result.vertices.begin(), result.vertices.end());
    result.size = result.vertices.size();
    return result;
}

std::size_t independence_number(const GainGraph& g)
{
    return maximum_independent_set(g).size;
}

std::size_t forest_independence_number(const GainGraph& g)
{
    if (!is_acyclic(g))
        throw GraphError("forest_independence_number requires an acyclic graph");
    const std::size_t n = g.order();
    std::vector<std::size_t> degree(n);
    std::vector<bool> removed(n, false);
    std::deque<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= 1)
            leaves.push_back(v);
    }

    auto remove = [&](Vertex v) {
        removed[v] = true;
        for (Vertex w : g.neighbors(v)) {
            if (!removed[w] && --degree[w] <= 1)
                leaves.push_back(w);
        }
    };

    std::size_t alpha = 0;
    while (!leaves.empty()) {
        const Vertex leaf = leaves.front();
        leaves.pop_front();
        if (removed[leaf])
            continue;
        ++alpha;
        removed[leaf] = true;
        // The leaf has at most one live neighbour; it is excluded from the set.
        for (Vertex w : g.neighbors(leaf))
            if (!removed[w])
                remove(w);
    }
    return alpha;
}

std::size_t matching_number(const GainGraph& g)
{
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.order());
    for (const auto& e : g.edges())
        boost::add_edge(e.u, e.v, bg);
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.order());
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    return boost::matching_size(bg, &mate[0]);
}

PendantClassification pendant_classification(const GainGraph& g)
{
    PendantClassification out;
    std::vector<bool> quasi(g.order(), false);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) {
            out.pendant.push_back(v);
            const Vertex w = g.neighbors(v).front();
            if (g.degree(w) != 1)
                quasi[w] = true;
        }
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (quasi[v])
            out.quasi_pendant.push_back(v);
    return out;
}

GraphStats graph_stats(const GainGraph& g)
{
    GraphStats s;
    s.n = g.order();
    s.m = g.size();
    s.omega = component_count(g);
    s.c = s.m + s.omega - s.n;
    s.alpha = independence_number(g);
    s.matching = matching_number(g);
    s.pendant_count = pendant_classification(g).pendant.size();
    return s;
}

std::vector<Block> biconnected_blocks(const GainGraph& g)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    const std::size_t n = g.order();
    std::vector<std::size_t> disc(n, unset);
    std::vector<std::size_t> low(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<Block> blocks;
    std::size_t timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> frames;

    auto emit_block = [&](Vertex p, Vertex v) {
        Block b;
        while (true) {
            const auto [a, c] = edge_stack.back();
            edge_stack.pop_back();
            ++b.edge_count;
            b.vertices.push_back(a);
            b.vertices.push_back(c);
            if (a == p && c == v)
                break;
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        blocks.push_back(std::move(b));
    };

    for (Vertex s = 0; s < n; ++s) {
        if (disc[s] != unset || g.degree(s) == 0)
            continue;
        disc[s] = low[s] = timer++;
        frames.push_back({s, unset, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const Vertex v = f.v;
            const auto nbrs = g.neighbors(v);
            if (f.next < nbrs.size()) {
                const Vertex w = nbrs[f.next++];
                if (disc[w] == unset) {
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, v, 0});
                } else if (w != f.parent && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const Vertex p = frames.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p])
                    emit_block(p, v);
            }
        }
    }
    return blocks;
}

std::vector<std::size_t> cyclic_block_membership(const GainGraph& g)
{
    std::vector<std::size_t> count(g.order(), 0);
    for (const auto& b : biconnected_blocks(g))
        if (!b.is_bridge())
            for (Vertex v : b.vertices)
                ++count[v];
    return count;
}

bool on_cycle(const GainGraph& g, Vertex v)
{
    return cyclic_block_membership(g).at(v) > 0;
}

bool on_unique_cycle(const GainGraph& g, Vertex v)
{
    std::size_t containing = 0;
    bool cycle_block = false;
    for (const auto& b : biconnected_blocks(g)) {
        if (b.is_bridge() || !std::binary_search(b.vertices.begin(), b.vertices.end(), v))
            continue;
        ++containing;
        cycle_block = b.is_cycle();
    }
    return containing == 1 && cycle_block;
}

CycleSet find_cycles(const GainGraph& g)
{
    CycleSet out;
    const auto blocks = biconnected_blocks(g);
    std::vector<std::size_t> membership(g.order(), 0);
    for (const auto& b : blocks) {
        if (b.is_bridge())
            continue;
        if (!b.is_cycle()) {
            out.disjoint = false;
            return out;
        }
        for (Vertex v : b.vertices) {
            if (++membership[v] > 1) {
                out.disjoint = false;
                return out;
            }
        }
    }

    for (const auto& b : blocks) {
        if (!b.is_cycle())
            continue;
        auto in_block = [&](Vertex w) { return std::binary_search(b.vertices.begin(), b.vertices.end(), w); };
        std::vector<Vertex> cycle{b.vertices.front()};
        Vertex prev = b.vertices.front();
        Vertex cur = prev;
        for (Vertex w : g.neighbors(cur)) {
            if (in_block(w)) {
                cur = w;
                break;
            }
        }
        while (cur != cycle.front()) {
            cycle.push_back(cur);
            Vertex next = cur;
            for (Vertex w : g.neighbors(cur)) {
                if (w != prev && in_block(w)) {
                    next = w;
                    break;
                }
            }
            prev = cur;
            cur = next;
        }
        out.cycles.push_back(std::move(cycle));
    }
    std::sort(out.cycles.begin(), out.cycles.end());
    return out;
}

ContractionResult contract_cycles(const GainGraph& g)
{
    CycleSet cs = find_cycles(g);
    if (!cs.disjoint)
        throw GraphError("T_G is only defined when the cycles are pairwise vertex-disjoint");

    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> cycle_of(g.order(), unset);
    for (std::size_t k = 0; k < cs.cycles.size(); ++k)
        for (Vertex v : cs.cycles[k])
            cycle_of[v] = k;

    ContractionResult out;
    std::vector<Vertex> node_of(g.order(), unset);
    std::vector<Vertex> cycle_node(cs.cycles.size(), unset);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (cycle_of[v] == unset) {
            node_of[v] = out.origin.size();
            out.origin.push_back({ContractedNode::Kind::Vertex, v});
        } else {
            auto& node = cycle_node[cycle_of[v]];
            if (node == unset) {
                node = out.origin.size();
                out.origin.push_back({ContractedNode::Kind::Cycle, cycle_of[v]});
            }
            node_of[v] = node;
        }
    }

    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        const Vertex a = node_of[e.u];
        const Vertex b = node_of[e.v];
        if (a != b)
            edges.push_back({a, b, UnitGain::one()});
    }
    out.t_graph = GainGraph::build(out.origin.size(), std::move(edges));
    out.cyclic_vertices = cycle_node;
    out.t_bracket = delete_vertices(out.t_graph, out.cyclic_vertices).graph;
    out.cycles = std::move(cs.cycles);
    return out;
}

} // namespace gainrank
