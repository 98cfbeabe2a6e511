#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "nnograph/chordal.hpp"
#include "nnograph/fixtures.hpp"
#include "nnograph/oracle.hpp"

using namespace nno;

TEST_CASE("tree decomposition of F2") {
    Graph g = fixtures::f2();
    auto d = nno_decompose(g);
    auto td = tree_decomposition(g, d);
    CHECK(verify_tree_decomposition(g, td).ok);
    CHECK(td.width == 4);
    // the root bag is the core side plus the covering prefix
    std::vector<std::string> root = g.names_of(td.bags[0]);
    std::sort(root.begin(), root.end());
    CHECK(root == std::vector<std::string>{"x1", "x2", "x3", "y1", "y2"});
}

TEST_CASE("wide both-sided shape hits the expected width") {
    // 5x5 core with two degree-3 satellites per side: width 7, root bag of 8
    Graph g = fixtures::biclique(5, 5);
    for (auto u : {"u1", "u2"})
        for (auto y : {"y1", "y2", "y3"}) g.add_edge(u, y);
    for (auto v : {"v1", "v2"})
        for (auto x : {"x1", "x2", "x3"}) g.add_edge(v, x);
    auto d = nno_decompose(g);
    CHECK(d.i() == 5);
    CHECK(d.d_up(g) == 3);
    auto td = tree_decomposition(g, d);
    CHECK(verify_tree_decomposition(g, td).ok);
    CHECK(td.width == 7);
    CHECK(td.bags[0].size() == 8);
}

TEST_CASE("treewidth closed form matches the exhaustive value") {
    CHECK(treewidth(fixtures::f2(), nno_decompose(fixtures::f2())) == 4);
    CHECK(treewidth(fixtures::f1(), nno_decompose(fixtures::f1())) == 3);
    CHECK(oracle::brute_treewidth(fixtures::f2()) == 4);
    CHECK(oracle::brute_treewidth(fixtures::f1()) == 3);
    for (const auto& e : tests::corpus(9, 1)) {
        auto d = nno_decompose(e.graph);
        INFO("seed " << e.spec.seed);
        CHECK(treewidth(e.graph, d) == oracle::brute_treewidth(e.graph));
    }
}

TEST_CASE("pathwidth equals treewidth and the chain verifies") {
    for (const Graph& g :
         {fixtures::f1(), fixtures::f2(), fixtures::f5(), fixtures::single_edge()}) {
        auto d = nno_decompose(g);
        CHECK(pathwidth(g, d) == treewidth(g, d));
        auto pd = path_decomposition(g, d);
        CHECK(verify_tree_decomposition(g, pd).ok);
        // a path decomposition is a chain: bag k joins bag k+1
        for (size_t k = 0; k + 1 < pd.bags.size(); ++k)
            CHECK(pd.tree_edges[k] ==
                  std::make_pair(static_cast<int>(k) + 1, static_cast<int>(k) + 2));
    }
    Graph k2 = fixtures::single_edge();
    CHECK(pathwidth(k2, nno_decompose(k2)) == 1);
}

TEST_CASE("minimum fill-in of F2") {
    Graph g = fixtures::f2();
    auto fill = minimum_fill_in(g, nno_decompose(g));
    REQUIRE(fill.added_edges.size() == 4);
    std::vector<std::pair<std::string, std::string>> named;
    for (auto [u, v] : fill.added_edges) {
        auto a = g.name(u), b = g.name(v);
        if (b < a) std::swap(a, b);
        named.emplace_back(a, b);
    }
    std::sort(named.begin(), named.end());
    CHECK(named == std::vector<std::pair<std::string, std::string>>{
                       {"x1", "x2"}, {"x1", "x3"}, {"x2", "x3"}, {"y1", "y2"}});
    std::vector<std::string> clique = g.names_of(fill.clique_side);
    std::sort(clique.begin(), clique.end());
    CHECK(clique == std::vector<std::string>{"x1", "x2", "x3", "y1", "y2"});
    CHECK(is_chordal(fill.embedding).chordal);
    CHECK(is_split(fill.embedding).split);
}

TEST_CASE("fill-in edge counts") {
    CHECK(minimum_fill_in(fixtures::f1(), nno_decompose(fixtures::f1())).added_edges.size() == 3);
    Graph k2 = fixtures::single_edge();
    CHECK(minimum_fill_in(k2, nno_decompose(k2)).added_edges.empty());
    for (const auto& e : tests::corpus(9, 1)) {
        auto d = nno_decompose(e.graph);
        auto fill = minimum_fill_in(e.graph, d);
        INFO("seed " << e.spec.seed);
        CHECK(static_cast<int>(fill.added_edges.size()) == oracle::brute_min_fill_in(e.graph));
        CHECK(static_cast<int>(fill.clique_side.size()) == treewidth(e.graph, d) + 1);
    }
}

TEST_CASE("chordality check") {
    CHECK(is_chordal(fixtures::triangle()).chordal);
    auto c4 = is_chordal(fixtures::cycle(4));
    REQUIRE_FALSE(c4.chordal);
    CHECK(c4.chordless_cycle.size() == 4);
    Graph f2 = fixtures::f2();
    CHECK(is_chordal(minimum_fill_in(f2, nno_decompose(f2)).embedding).chordal);
    CHECK_FALSE(is_chordal(fixtures::f1()).chordal);  // contains a 4-cycle
}

TEST_CASE("split check") {
    Graph f2 = fixtures::f2();
    auto rep = is_split(minimum_fill_in(f2, nno_decompose(f2)).embedding);
    REQUIRE(rep.split);
    CHECK(rep.clique.size() == 5);
    CHECK(rep.stable.size() == 3);
    CHECK_FALSE(is_split(fixtures::cycle(4)).split);
    Graph k4;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            k4.add_edge("k" + std::to_string(a), "k" + std::to_string(b));
    auto k4rep = is_split(k4);
    CHECK(k4rep.split);
    CHECK(k4rep.clique.size() == 4);
    CHECK(k4rep.stable.empty());
}
