#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "convexdim/critical.hpp"
#include "support.hpp"

using namespace convexdim;
using testing_support::six_points;
using testing_support::four_elements;

namespace {

using Labeled = std::pair<std::string, std::string>;

std::set<Labeled> labeled_pairs(const ConvexGeometry& g, const Lattice& l, const std::vector<NodePair>& pairs) {
    std::set<Labeled> out;
    for (auto [a, b] : pairs) out.insert({g.ground().format(l[a]), g.ground().format(l[b])});
    return out;
}

std::vector<NodePair> node_pairs(const std::vector<CriticalPair>& pairs) {
    std::vector<NodePair> out;
    for (const auto& p : pairs) out.emplace_back(p.a, p.b);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t pair_index(const ConvexGeometry& g, const Lattice& l, const std::vector<CriticalPair>& pairs,
                       const std::string& attach, const std::vector<std::string>& copoint) {
    const ElementSet b = g.ground().subset(copoint);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (l[pairs[i].b] == b && g.ground().label(pairs[i].attach) == attach) return i;
    ADD_FAILURE() << "no pair (" << attach << ", " << g.ground().format(b) << ")";
    return 0;
}

CriticalDigraph digraph_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [i, j] : edges) adj[i][j] = 1;
    return CriticalDigraph(std::vector<CriticalPair>(n), adj);
}

std::set<std::vector<std::size_t>> vertex_sets(const CycleHypergraph& h) {
    std::set<std::vector<std::size_t>> out;
    for (const auto& e : h.edges) out.insert(e.vertices);
    return out;
}

}  // namespace

TEST(CriticalPairs, ChainHasNone) {
    const Lattice l = Lattice::of(testing_support::chain_geometry(4));
    EXPECT_TRUE(critical_pairs_definitional(l).empty());
}

TEST(CriticalPairs, FourElementDefinitional) {
    const ConvexGeometry g = four_elements();
    const Lattice l = Lattice::of(g);
    const std::set<Labeled> expected{{"{2,4}", "{1,2,3}"}, {"{1}", "{2,3,4}"}, {"{3}", "{1,2}"},
                                     {"{3}", "{2,4}"},     {"{2}", "{1}"},     {"{2}", "{3}"}};
    EXPECT_EQ(labeled_pairs(g, l, critical_pairs_definitional(l)), expected);
    const auto pairs = critical_pairs(g, l);
    EXPECT_EQ(labeled_pairs(g, l, node_pairs(pairs)), expected);
}

TEST(CriticalPairs, SixPointOnePerCopoint) {
    const ConvexGeometry g = from_planar(six_points());
    const Lattice l = Lattice::of(g);
    const auto pairs = critical_pairs(g, l);
    EXPECT_EQ(pairs.size(), g.copoints().size());
    EXPECT_EQ(pairs.size(), 12U);
    for (const auto& p : pairs) EXPECT_EQ(l[p.a], ElementSet::single(p.attach));
    pair_index(g, l, pairs, "z", {"u", "w", "v"});
    EXPECT_EQ(node_pairs(pairs), critical_pairs_definitional(l));
}

TEST(CriticalPairs, PairsAreIncomparable) {
    const ConvexGeometry g = four_elements();
    const Lattice l = Lattice::of(g);
    for (const auto& p : critical_pairs(g, l)) {
        EXPECT_FALSE(l.leq(p.a, p.b));
        EXPECT_FALSE(l.leq(p.b, p.a));
    }
}

TEST(CriticalDigraphTest, SixPointEdge) {
    const ConvexGeometry g = from_planar(six_points());
    const Lattice l = Lattice::of(g);
    const auto pairs = critical_pairs(g, l);
    const CriticalDigraph d = critical_digraph(l, pairs);
    const auto from = pair_index(g, l, pairs, "z", {"u", "w", "v"});
    const auto to = pair_index(g, l, pairs, "v", {"x", "y", "u"});
    EXPECT_TRUE(d.edge(from, to));
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_FALSE(d.edge(i, i));
}

TEST(CriticalDigraphTest, ChainIsEmpty) {
    const Lattice l = Lattice::of(testing_support::chain_geometry(3));
    EXPECT_EQ(critical_digraph(l, {}).size(), 0U);
}

TEST(CriticalDigraphTest, MutualEdgesAreCopointGraphEdges) {
    for (const ConvexGeometry& g : {four_elements(), from_planar(six_points())}) {
        const Lattice l = Lattice::of(g);
        const auto pairs = critical_pairs(g, l);
        const CriticalDigraph d = critical_digraph(l, pairs);
        const CopointGraph cg = copoint_graph(g);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs.size(); ++j)
                if (i != j) {
                    EXPECT_EQ(d.edge(i, j) && d.edge(j, i), cg.adjacent(pairs[i].copoint, pairs[j].copoint));
                }
    }
}

TEST(MinimalCycles, TwoCycle) {
    const auto h = minimal_cycles(digraph_from_edges(2, {{0, 1}, {1, 0}}));
    EXPECT_EQ(vertex_sets(h), (std::set<std::vector<std::size_t>>{{0, 1}}));
    EXPECT_TRUE(h.complete);
}

TEST(MinimalCycles, ChordedTriangleKeepsOnlyTheTwoCycle) {
    const auto h = minimal_cycles(digraph_from_edges(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}}));
    EXPECT_EQ(vertex_sets(h), (std::set<std::vector<std::size_t>>{{0, 2}}));
}

TEST(MinimalCycles, ChordedSquare) {
    const auto h = minimal_cycles(digraph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}));
    EXPECT_EQ(vertex_sets(h), (std::set<std::vector<std::size_t>>{{0, 1, 3}}));
    ASSERT_EQ(h.edges.size(), 1U);
    EXPECT_EQ(h.edges[0].cycle, (std::vector<std::size_t>{0, 1, 3}));
}

TEST(MinimalCycles, CapClearsCompleteness) {
    const auto d = digraph_from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    const auto capped = minimal_cycles(d, 2);
    EXPECT_TRUE(capped.edges.empty());
    EXPECT_FALSE(capped.complete);
    const auto full = minimal_cycles(d, 3);
    EXPECT_EQ(full.edges.size(), 1U);
    EXPECT_TRUE(full.complete);
}

TEST(MinimalCycles, SixPointThreeCycles) {
    const ConvexGeometry g = from_planar(six_points());
    const Lattice l = Lattice::of(g);
    const auto pairs = critical_pairs(g, l);
    const auto h = minimal_cycles(critical_digraph(l, pairs));
    const auto sets = vertex_sets(h);
    auto cycle = [&](std::vector<std::size_t> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_TRUE(sets.count(cycle({pair_index(g, l, pairs, "z", {"u", "w", "v"}), pair_index(g, l, pairs, "v", {"x", "y", "u"}),
                                  pair_index(g, l, pairs, "y", {"x", "w", "z"})})));
    EXPECT_TRUE(sets.count(cycle({pair_index(g, l, pairs, "z", {"x", "y", "w"}), pair_index(g, l, pairs, "y", {"x", "v", "u"}),
                                  pair_index(g, l, pairs, "v", {"u", "w", "z"})})));
    EXPECT_EQ(h.count_of_size(3), 2U);
    EXPECT_EQ(h.max_edge_size(), 3U);
}

TEST(CopointGraphTest, Examples) {
    const ConvexGeometry f1 = from_planar(six_points());
    const CopointGraph g1 = copoint_graph(f1);
    auto find = [](const ConvexGeometry& g, const CopointGraph& cg, const std::vector<std::string>& set,
                   const std::string& attach) {
        for (std::size_t i = 0; i < cg.vertices.size(); ++i)
            if (cg.vertices[i].set == g.ground().subset(set) && g.ground().label(cg.vertices[i].attach) == attach) return i;
        ADD_FAILURE() << "missing copoint";
        return std::size_t{0};
    };
    EXPECT_TRUE(g1.adjacent(find(f1, g1, {"x", "y", "u", "v"}, "z"), find(f1, g1, {"u", "w", "z", "v"}, "y")));

    const ConvexGeometry f2 = four_elements();
    const CopointGraph g2 = copoint_graph(f2);
    EXPECT_TRUE(g2.adjacent(find(f2, g2, {"1", "2"}, "3"), find(f2, g2, {"3"}, "2")));

    const CopointGraph tri = copoint_graph(from_planar(testing_support::triangle()));
    EXPECT_EQ(tri.edges.size(), 3U);
}

TEST(CopointGraphTest, IsomorphicToTwoCyclesWhenTwoEdgeConnected) {
    for (const ConvexGeometry& g : {four_elements(), from_planar(six_points())}) {
        const Lattice l = Lattice::of(g);
        const auto pairs = critical_pairs(g, l);
        const auto h = minimal_cycles(critical_digraph(l, pairs));
        EXPECT_FALSE(copoint_graph_isomorphism_violation(copoint_graph(g), pairs, h).has_value());
    }
}
