#include "gainrank/gain_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gainrank/errors.hpp"

namespace gainrank {

GainGraph GainGraph::build(std::size_t n, std::vector<Edge> edges)
{
    GainGraph g;
    g.adjacency_.resize(n);

    std::optional<GainMode> mode;
    for (auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") references a vertex outside 0.." +
                             std::to_string(n == 0 ? 0 : n - 1));
        if (e.u == e.v)
            throw GraphError("loop at vertex " + std::to_string(e.u));
        if (mode && *mode != e.gain.mode())
            throw GraphError("exact and approximate gains cannot be mixed in one graph");
        mode = e.gain.mode();
        if (e.u > e.v) {
            std::swap(e.u, e.v);
            e.gain = e.gain.conj();
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t k = 1; k < edges.size(); ++k) {
        if (edges[k].u == edges[k - 1].u && edges[k].v == edges[k - 1].v)
            throw GraphError("duplicate edge (" + std::to_string(edges[k].u) + ", " + std::to_string(edges[k].v) + ")");
    }

    for (const auto& e : edges) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    g.mode_ = mode.value_or(GainMode::Exact);
    g.edges_ = std::move(edges);
    return g;
}

std::optional<std::size_t> GainGraph::find_edge(Vertex a, Vertex b) const
{
    if (a > b)
        std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(a, b),
                               [](const Edge& e, const std::pair<Vertex, Vertex>& key) { return std::pair(e.u, e.v) < key; });
    if (it == edges_.end() || it->u != a || it->v != b)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<UnitGain> GainGraph::gain(Vertex from, Vertex to) const
{
    const auto idx = find_edge(from, to);
    if (!idx)
        return std::nullopt;
    const auto& e = edges_[*idx];
    return from == e.u ? e.gain : e.gain.conj();
}

Subgraph induced_subgraph(const GainGraph& g, std::span<const Vertex> keep)
{
    Subgraph sub;
    sub.from_parent.assign(g.order(), std::nullopt);
    for (Vertex v : keep) {
        if (v >= g.order())
            throw GraphError("vertex " + std::to_string(v) + " out of range");
        sub.from_parent[v] = 0;  // mark
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (sub.from_parent[v]) {
            sub.from_parent[v] = sub.to_parent.size();
            sub.to_parent.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (sub.from_parent[e.u] && sub.from_parent[e.v])
            edges.push_back({*sub.from_parent[e.u], *sub.from_parent[e.v], e.gain});
    }
    sub.graph = GainGraph::build(sub.to_parent.size(), std::move(edges));
    return sub;
}

Subgraph delete_vertices(const GainGraph& g, std::span<const Vertex> removed)
{
    std::vector<bool> gone(g.order(), false);
    for (Vertex v : removed) {
        if (v >= g.order())
            throw GraphError("vertex " + std::to_string(v) + " out of range");
        gone[v] = true;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[v])
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::vector<std::size_t> component_labels(const GainGraph& g)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.order(), unset);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] != unset)
            continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (label[w] == unset) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

std::size_t component_count(const GainGraph& g)
{
    const auto labels = component_labels(g);
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<Subgraph> components(const GainGraph& g)
{
    const auto labels = component_labels(g);
    const std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<Vertex>> members(count);
    for (Vertex v = 0; v < g.order(); ++v)
        members[labels[v]].push_back(v);
    std::vector<Subgraph> out;
    out.reserve(count);
    for (const auto& m : members)
        out.push_back(induced_subgraph(g, m));
    return out;
}

GainGraph underlying_graph(const GainGraph& g)
{
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v, UnitGain::one()});
    return GainGraph::build(g.order(), std::move(edges));
}

GainGraph to_approx(const GainGraph& g)
{
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v, UnitGain::from_angle(e.gain.angle())});
    return GainGraph::build(g.order(), std::move(edges));
}

} // namespace gainrank
