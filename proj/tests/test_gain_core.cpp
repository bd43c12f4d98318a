#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gainrank/errors.hpp"
#include "gainrank/gain_graph.hpp"
#include "gainrank/gaussian_rational.hpp"
#include "gainrank/hermitian_matrix.hpp"
#include "gainrank/unit_gain.hpp"
#include "support/oracles.hpp"

using namespace gainrank;
using namespace gainrank::testing;

namespace {

GaussianRational q(const char* re, const char* im = "0")
{
    return {parse_rational(re), parse_rational(im)};
}

} // namespace

TEST(GaussianRational, ArithmeticAndNormalisation)
{
    const GaussianRational a = q("3/5", "4/5");
    EXPECT_EQ(a * a.conj(), GaussianRational(1L));
    EXPECT_EQ(a.norm(), 1);
    EXPECT_EQ(a * a.inverse(), GaussianRational(1L));
    EXPECT_EQ(q("2/4"), q("1/2"));
    EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1L));
    EXPECT_EQ((a + a.conj()), q("6/5"));
    EXPECT_EQ((a - a.conj()), q("0", "8/5"));
    EXPECT_EQ(a / GaussianRational::i(), q("4/5", "-3/5"));
    EXPECT_EQ(q("1", "1") / q("1", "-1"), GaussianRational::i());
}

TEST(GaussianRational, ZeroInverseThrows)
{
    EXPECT_THROW(GaussianRational().inverse(), std::domain_error);
    GaussianRational x(1L);
    EXPECT_THROW(x /= GaussianRational(), std::domain_error);
}

TEST(GaussianRational, Printing)
{
    EXPECT_EQ(q("3/5", "4/5").to_string(), "3/5+4/5i");
    EXPECT_EQ(q("0", "-1").to_string(), "-1i");
    EXPECT_EQ(q("-7/3").to_string(), "-7/3");
    EXPECT_EQ(GaussianRational().to_string(), "0");
}

TEST(ParseRational, AcceptsAndRejects)
{
    EXPECT_EQ(parse_rational("-6/8"), mpq_class(-3, 4));
    EXPECT_EQ(parse_rational("+5"), mpq_class(5));
    EXPECT_EQ(parse_rational("0"), mpq_class(0));
    EXPECT_THROW(parse_rational("1/0"), GainError);
    EXPECT_THROW(parse_rational(""), GainError);
    EXPECT_THROW(parse_rational("1/-2"), GainError);
    EXPECT_THROW(parse_rational("0.5"), GainError);
    EXPECT_THROW(parse_rational("a/b"), GainError);
}

TEST(UnitGain, ExactRequiresUnitModulus)
{
    EXPECT_NO_THROW(UnitGain::exact(q("3/5", "-4/5")));
    try {
        UnitGain::exact(q("1/2", "1/2"));
        FAIL() << "expected GainError";
    } catch (const GainError& e) {
        EXPECT_NE(std::string(e.what()).find("gain not unit modulus"), std::string::npos);
    }
    EXPECT_THROW(UnitGain::exact(GaussianRational()), GainError);
}

TEST(UnitGain, ConjugateTimesSelfIsOne)
{
    for (const UnitGain& g : {UnitGain::one(), UnitGain::minus_one(), UnitGain::i(), UnitGain::minus_i(), UnitGain::exact(q("5/13", "12/13"))})
        EXPECT_EQ(g * g.conj(), UnitGain::one());
    const UnitGain a = UnitGain::from_angle(1.234);
    EXPECT_NEAR(std::abs((a * a.conj()).to_complex() - std::complex<double>(1.0, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a.to_complex()), 1.0, 1e-15);
}

TEST(UnitGain, AnglesWrapIntoHalfOpenInterval)
{
    EXPECT_NEAR(UnitGain::from_angle(3 * std::numbers::pi).angle(), std::numbers::pi, 1e-12);
    EXPECT_NEAR(UnitGain::from_angle(-std::numbers::pi).angle(), std::numbers::pi, 1e-12);
    EXPECT_NEAR(UnitGain::i().angle(), std::numbers::pi / 2, 1e-15);
    EXPECT_THROW(UnitGain::from_angle(std::nan("")), GainError);
}

TEST(UnitGain, ModesDoNotMix)
{
    EXPECT_THROW(UnitGain::one() * UnitGain::from_angle(0.5), ModeError);
    EXPECT_THROW(UnitGain::from_angle(0.5).exact_value(), ModeError);
    EXPECT_TRUE(UnitGain::one().is_exact());
    EXPECT_FALSE(UnitGain::from_angle(0.0).is_exact());
}

TEST(BuildGraph, ReversedEdgeIsStoredConjugated)
{
    const GainGraph g = GainGraph::build(2, {{1, 0, UnitGain::i()}});
    ASSERT_EQ(g.size(), 1U);
    EXPECT_EQ(g.edges()[0].u, 0U);
    EXPECT_EQ(g.edges()[0].v, 1U);
    EXPECT_EQ(g.edges()[0].gain, UnitGain::minus_i());
    EXPECT_EQ(*g.gain(1, 0), UnitGain::i());
    EXPECT_EQ(*g.gain(0, 1), UnitGain::minus_i());
    EXPECT_FALSE(g.gain(0, 0).has_value());
}

TEST(BuildGraph, TriangleAndSingleVertex)
{
    const GainGraph tri = complete_graph(3);
    EXPECT_EQ(tri.order(), 3U);
    EXPECT_EQ(tri.size(), 3U);
    for (const auto& e : tri.edges())
        EXPECT_EQ(e.gain, UnitGain::one());
    const GainGraph one = GainGraph::build(1, {});
    EXPECT_EQ(one.order(), 1U);
    EXPECT_EQ(one.size(), 0U);
    EXPECT_TRUE(one.is_exact());
    EXPECT_EQ(GainGraph::build(0, {}).order(), 0U);
}

TEST(BuildGraph, RejectsInvalidInput)
{
    EXPECT_THROW(GainGraph::build(2, {{0, 0, UnitGain::one()}}), GraphError);
    EXPECT_THROW(GainGraph::build(2, {{0, 1, UnitGain::one()}, {1, 0, UnitGain::one()}}), GraphError);
    EXPECT_THROW(GainGraph::build(2, {{0, 2, UnitGain::one()}}), GraphError);
    EXPECT_THROW(GainGraph::build(3, {{0, 1, UnitGain::one()}, {1, 2, UnitGain::from_angle(0.1)}}), GraphError);
}

TEST(BuildGraph, NeighboursAreSorted)
{
    const GainGraph g = make_graph(5, {{4, 0}, {0, 2}, {3, 0}, {1, 0}});
    const auto nb = g.neighbors(0);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(g.degree(0), 4U);
    EXPECT_TRUE(g.adjacent(3, 0));
    EXPECT_FALSE(g.adjacent(3, 4));
}

TEST(AdjacencyMatrix, AllOnesGainsGiveZeroOneMatrix)
{
    const HermitianMatrix a = adjacency_matrix(complete_graph(3));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            EXPECT_EQ(a.exact(r, c), GaussianRational(r == c ? 0L : 1L));
}

TEST(AdjacencyMatrix, EntriesAreHermitian)
{
    const HermitianMatrix a = adjacency_matrix(GainGraph::build(2, {{0, 1, UnitGain::i()}}));
    EXPECT_EQ(a.exact(0, 1), GaussianRational::i());
    EXPECT_EQ(a.exact(1, 0), -GaussianRational::i());
    EXPECT_TRUE(a.is_hermitian());
}

TEST(AdjacencyMatrix, EmptyGraphIsZero)
{
    const HermitianMatrix a = adjacency_matrix(GainGraph::build(3, {}));
    EXPECT_EQ(a.dim(), 3U);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            EXPECT_TRUE(a.exact(r, c).is_zero());
}

TEST(AdjacencyMatrix, ApproxGraphGivesApproxMatrix)
{
    const GainGraph g = GainGraph::build(2, {{0, 1, UnitGain::from_angle(std::numbers::pi / 3)}});
    const HermitianMatrix a = adjacency_matrix(g);
    EXPECT_FALSE(a.is_exact());
    EXPECT_NEAR(a.approx(0, 1).imag(), std::sin(std::numbers::pi / 3), 1e-15);
    EXPECT_NEAR(a.approx(1, 0).imag(), -std::sin(std::numbers::pi / 3), 1e-15);
    EXPECT_THROW(a.exact(0, 1), ModeError);
}

TEST(HermitianMatrix, SizeMismatchRejected)
{
    EXPECT_THROW(HermitianMatrix::from_entries(2, HermitianMatrix::ExactStorage(3)), MatrixError);
}

TEST(DeleteVertices, TriangleMinusVertexKeepsGain)
{
    const GainGraph tri = GainGraph::build(3, {{0, 1, UnitGain::one()}, {1, 2, UnitGain::i()}, {0, 2, UnitGain::one()}});
    const Vertex drop[] = {0};
    const Subgraph s = delete_vertices(tri, drop);
    ASSERT_EQ(s.graph.order(), 2U);
    ASSERT_EQ(s.graph.size(), 1U);
    EXPECT_EQ(s.graph.edges()[0].gain, UnitGain::i());
    EXPECT_EQ(s.to_parent, (std::vector<Vertex>{1, 2}));
    EXPECT_FALSE(s.from_parent[0].has_value());
    EXPECT_EQ(*s.from_parent[2], 1U);
}

TEST(DeleteVertices, EmptyDeletionIsIdentity)
{
    const GainGraph g = GainGraph::build(4, {{0, 1, UnitGain::i()}, {2, 3, UnitGain::minus_one()}, {1, 2, UnitGain::exact(q("3/5", "4/5"))}});
    EXPECT_EQ(delete_vertices(g, {}).graph, g);
}

TEST(DeleteVertices, CycleMinusVertexIsPath)
{
    const GainGraph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Vertex drop[] = {2};
    const GainGraph p = delete_vertices(c4, drop).graph;
    EXPECT_EQ(p.size(), 2U);
    EXPECT_EQ(component_count(p), 1U);
    EXPECT_THROW(delete_vertices(c4, std::vector<Vertex>{7}), GraphError);
}

TEST(Components, CountsAndSizes)
{
    EXPECT_EQ(components(make_graph(4, {{0, 1}, {2, 3}})).size(), 2U);
    EXPECT_EQ(components(complete_graph(4)).size(), 1U);
    const auto singles = components(GainGraph::build(4, {}));
    EXPECT_EQ(singles.size(), 4U);
    for (const auto& s : singles)
        EXPECT_EQ(s.graph.order(), 1U);
    EXPECT_EQ(component_count(GainGraph::build(0, {})), 0U);
}

TEST(Components, PartitionTheVertexSet)
{
    for (const auto& g : property_corpus(200, 12, 11)) {
        std::size_t total = 0;
        std::vector<int> hits(g.order(), 0);
        for (const auto& s : components(g)) {
            total += s.graph.order();
            for (Vertex v : s.to_parent)
                ++hits[v];
            EXPECT_EQ(component_count(s.graph), 1U);
        }
        EXPECT_EQ(total, g.order());
        EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
}

TEST(GainCoreProperties, MatrixRoundTripsEdgeList)
{
    for (const auto& g : property_corpus(200, 10, 3, GainDomain::PythagoreanExact)) {
        const HermitianMatrix a = adjacency_matrix(g);
        std::vector<Edge> back;
        for (std::size_t r = 0; r < a.dim(); ++r)
            for (std::size_t c = r + 1; c < a.dim(); ++c)
                if (!a.exact(r, c).is_zero()) {
                    back.push_back({r, c, UnitGain::exact(a.exact(r, c))});
                    EXPECT_EQ(a.exact(r, c) * a.exact(c, r), GaussianRational(1L));
                }
        EXPECT_EQ(GainGraph::build(g.order(), back), g);
        for (std::size_t r = 0; r < a.dim(); ++r)
            EXPECT_TRUE(a.exact(r, r).is_zero());
    }
}

TEST(GainCoreProperties, UnderlyingGraphHasUnitGains)
{
    for (const auto& g : property_corpus(50, 10, 5)) {
        const GainGraph u = underlying_graph(g);
        EXPECT_EQ(u.size(), g.size());
        for (const auto& e : u.edges())
            EXPECT_EQ(e.gain, UnitGain::one());
        const GainGraph a = to_approx(g);
        EXPECT_FALSE(a.size() > 0 && a.is_exact());
    }
}
