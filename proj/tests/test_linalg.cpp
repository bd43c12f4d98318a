#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "gainrank/errors.hpp"
#include "gainrank/generators.hpp"
#include "gainrank/hermitian_matrix.hpp"
#include "gainrank/linalg.hpp"
#include "gainrank/structure.hpp"
#include "support/oracles.hpp"

using namespace gainrank;
using namespace gainrank::testing;

namespace {

GainGraph relabel(const GainGraph& g, const std::vector<Vertex>& perm)
{
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        es.push_back({perm[e.u], perm[e.v], e.gain});
    return GainGraph::build(g.order(), std::move(es));
}

HermitianMatrix zero_matrix(std::size_t n)
{
    return HermitianMatrix::from_entries(n, HermitianMatrix::ExactStorage(n * n));
}

} // namespace

TEST(RankExact, Examples)
{
    EXPECT_EQ(rank_exact(adjacency_matrix(path_graph(5))), 4U);
    EXPECT_EQ(rank_exact(adjacency_matrix(cycle_with_product(4, UnitGain::one()))), 2U);
    EXPECT_EQ(rank_exact(zero_matrix(4)), 0U);
    EXPECT_EQ(rank_exact(zero_matrix(0)), 0U);
}

TEST(RankExact, RejectsApproximateMatrix)
{
    const GainGraph g = to_approx(path_graph(3));
    EXPECT_THROW(rank_exact(adjacency_matrix(g)), ModeError);
}

TEST(RankExact, MatchesPrincipalMinorOracle)
{
    for (const auto& g : property_corpus(300, 8, 21, GainDomain::PythagoreanExact))
        EXPECT_EQ(rank_exact(adjacency_matrix(g)), minor_rank(g)) << g.order();
    for (const auto& g : property_corpus(300, 8, 22, GainDomain::FourthRoots))
        EXPECT_EQ(rank_exact(adjacency_matrix(g)), minor_rank(g)) << g.order();
}

TEST(RankApprox, Examples)
{
    const GainGraph c3 = GainGraph::build(3, {{0, 1, UnitGain::one()}, {1, 2, UnitGain::one()}, {2, 0, UnitGain::i()}});
    EXPECT_EQ(rank_approx(adjacency_matrix(c3)), 2U);
    EXPECT_EQ(rank_approx(adjacency_matrix(to_approx(c3))), 2U);
    EXPECT_EQ(rank_approx(zero_matrix(3)), 0U);
    EXPECT_EQ(rank_approx(zero_matrix(0)), 0U);
}

TEST(RankApprox, RejectsBadToleranceAndNonFiniteEntries)
{
    const HermitianMatrix a = adjacency_matrix(path_graph(3));
    EXPECT_THROW(rank_approx(a, 0.0), MatrixError);
    EXPECT_THROW(rank_approx(a, -1.0), MatrixError);
    HermitianMatrix::ApproxStorage bad(4, {0.0, 0.0});
    bad[1] = {std::numeric_limits<double>::infinity(), 0.0};
    bad[2] = bad[1];
    EXPECT_THROW(rank_approx(HermitianMatrix::from_entries(2, bad)), MatrixError);
}

TEST(RankApprox, AgreesWithExactRank)
{
    for (const auto& g : property_corpus(300, 12, 31, GainDomain::PythagoreanExact)) {
        const std::size_t r = rank_exact(adjacency_matrix(g));
        EXPECT_EQ(rank_approx(adjacency_matrix(g)), r);
        EXPECT_EQ(rank_approx(adjacency_matrix(to_approx(g))), r);
    }
}

TEST(Inertia, Examples)
{
    EXPECT_EQ(inertia(adjacency_matrix(complete_graph(3))), (Inertia{1, 2, 0}));
    EXPECT_EQ(inertia(adjacency_matrix(cycle_with_product(6, UnitGain::minus_one()))), (Inertia{2, 2, 2}));
    EXPECT_EQ(inertia(zero_matrix(3)), (Inertia{0, 0, 3}));
}

TEST(Inertia, ApproximateMatchesExact)
{
    EXPECT_EQ(inertia(adjacency_matrix(to_approx(complete_graph(3)))), (Inertia{1, 2, 0}));
    EXPECT_EQ(inertia(adjacency_matrix(to_approx(cycle_with_product(6, UnitGain::minus_one())))), (Inertia{2, 2, 2}));
    for (const auto& g : property_corpus(200, 10, 41, GainDomain::PythagoreanExact))
        EXPECT_EQ(inertia(adjacency_matrix(to_approx(g))), inertia(adjacency_matrix(g)));
}

TEST(Inertia, RejectsNonHermitian)
{
    HermitianMatrix::ExactStorage e(4);
    e[1] = GaussianRational(1L);
    EXPECT_THROW(inertia(HermitianMatrix::from_entries(2, e)), MatrixError);
    HermitianMatrix::ExactStorage d(4);
    d[0] = GaussianRational::i();
    EXPECT_THROW(inertia(HermitianMatrix::from_entries(2, d)), MatrixError);
}

TEST(Inertia, CongruenceHandlesZeroDiagonalPivots)
{
    // Every adjacency matrix has a zero diagonal, so the first pivot is always a 2x2 block.
    const GainGraph k2 = GainGraph::build(2, {{0, 1, UnitGain::exact(GaussianRational(parse_rational("3/5"), parse_rational("4/5")))}});
    EXPECT_EQ(inertia(adjacency_matrix(k2)), (Inertia{1, 1, 0}));
    EXPECT_EQ(inertia(adjacency_matrix(star_graph(4))), (Inertia{1, 1, 3}));
    EXPECT_EQ(inertia(adjacency_matrix(complete_graph(5))), (Inertia{1, 4, 0}));
}

TEST(LinalgProperties, RankEqualsPositivePlusNegativeInertia)
{
    for (const auto& g : property_corpus(400, 12, 51, GainDomain::PythagoreanExact)) {
        const HermitianMatrix a = adjacency_matrix(g);
        const Inertia in = inertia(a);
        EXPECT_EQ(in.dim(), g.order());
        EXPECT_EQ(in.rank(), rank_exact(a));
        EXPECT_EQ(in.zero, g.order() - rank_exact(a));
    }
}

TEST(LinalgProperties, RankIsInvariantUnderRelabelling)
{
    Rng rng(61);
    for (const auto& g : property_corpus(200, 12, 61)) {
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const GainGraph h = relabel(g, perm);
        EXPECT_EQ(graph_rank(h), graph_rank(g));
        EXPECT_EQ(inertia(adjacency_matrix(h)), inertia(adjacency_matrix(g)));
    }
}

TEST(LinalgProperties, InducedSubgraphRankIsMonotone)
{
    Rng rng(71);
    for (const auto& g : property_corpus(200, 12, 71)) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.order(); ++v)
            if (std::bernoulli_distribution(0.6)(rng))
                keep.push_back(v);
        EXPECT_LE(graph_rank(induced_subgraph(g, keep).graph), graph_rank(g));
    }
}

TEST(LinalgProperties, RankIsAdditiveOverComponents)
{
    for (const auto& g : property_corpus(200, 12, 81)) {
        std::size_t sum = 0;
        for (const auto& s : components(g))
            sum += graph_rank(s.graph);
        EXPECT_EQ(sum, graph_rank(g));
    }
}

TEST(LinalgProperties, VertexDeletionChangesRankByAtMostTwo)
{
    for (const auto& g : property_corpus(150, 11, 91)) {
        const std::size_t r = graph_rank(g);
        for (Vertex x = 0; x < g.order(); ++x) {
            const Vertex drop[] = {x};
            const std::size_t rx = graph_rank(delete_vertices(g, drop).graph);
            EXPECT_LE(rx, r);
            EXPECT_LE(r, rx + 2);
        }
    }
}

TEST(LinalgProperties, PendantDeletionDropsRankByTwo)
{
    for (const auto& g : property_corpus(150, 11, 101)) {
        const std::size_t r = graph_rank(g);
        for (Vertex y = 0; y < g.order(); ++y) {
            if (g.degree(y) != 1)
                continue;
            const Vertex pair[] = {y, g.neighbors(y)[0]};
            EXPECT_EQ(graph_rank(delete_vertices(g, pair).graph) + 2, r);
        }
    }
}

TEST(LinalgProperties, GainTreeRankIgnoresGains)
{
    for (std::uint64_t s = 0; s < 100; ++s) {
        const std::size_t n = 1 + s % 18;
        const GainGraph t = random_gain_tree(n, s % 2 ? GainDomain::PythagoreanExact : GainDomain::RandomAngle, s);
        EXPECT_EQ(graph_rank(t), rank_exact(adjacency_matrix(underlying_graph(t))));
    }
}
