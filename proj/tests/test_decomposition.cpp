#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "nnograph/decomposition.hpp"
#include "nnograph/fixtures.hpp"
#include "nnograph/recognition.hpp"

using namespace nno;

namespace {

std::vector<std::string> names(const Graph& g, const std::vector<int>& vs) {
    return g.names_of(vs);
}

bool has_biclique(const Graph& g, const std::vector<MaximalBiclique>& bs,
                  std::vector<std::string> xs, std::vector<std::string> ys) {
    auto to_ids = [&](std::vector<std::string>& ns) {
        std::vector<int> ids;
        for (auto& n : ns) ids.push_back(g.index_of(n));
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    auto x = to_ids(xs), y = to_ids(ys);
    for (const auto& b : bs)
        if ((b.x == x && b.y == y) || (b.x == y && b.y == x)) return true;
    return false;
}

}  // namespace

TEST_CASE("maximal bicliques of K33") {
    Graph g = fixtures::f1();
    auto bs = maximal_bicliques(g, find_bipartition(g).parts);
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].x.size() == 3);
    CHECK(bs[0].y.size() == 3);
}

TEST_CASE("maximal bicliques of F2 include the three expected ones") {
    Graph g = fixtures::f2();
    auto bs = maximal_bicliques(g, find_bipartition(g).parts);
    CHECK(has_biclique(g, bs, {"x1", "x2", "x3"}, {"y1", "y2", "y3"}));
    CHECK(has_biclique(g, bs, {"x1", "x2", "x3", "u1"}, {"y1", "y2"}));
    CHECK(has_biclique(g, bs, {"x1", "x2"}, {"y1", "y2", "y3", "v1"}));
}

TEST_CASE("maximal biclique of a star is the whole graph") {
    Graph g = fixtures::star(3);
    auto bs = maximal_bicliques(g, find_bipartition(g).parts);
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].x.size() + bs[0].y.size() == 4);
}

TEST_CASE("decomposition of K33") {
    Graph g = fixtures::f1();
    auto d = nno_decompose(g);
    CHECK(d.i() == 3);
    CHECK(d.j() == 3);
    CHECK(d.p() == 0);
    CHECK(d.q() == 0);
    CHECK(d.d_up(g) == 1);
    CHECK(d.d_vq(g) == 1);
}

TEST_CASE("decomposition of F2") {
    Graph g = fixtures::f2();
    auto d = nno_decompose(g);
    CHECK(names(g, d.a1) == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(names(g, d.b1) == std::vector<std::string>{"y1", "y2", "y3"});
    CHECK(names(g, d.a2) == std::vector<std::string>{"u1"});
    CHECK(names(g, d.b2) == std::vector<std::string>{"v1"});
    CHECK(d.d_up(g) == 2);
    CHECK(d.d_vq(g) == 2);
}

TEST_CASE("decomposition of F4 sorts satellites by degree then input index") {
    Graph g = fixtures::f4();
    auto d = nno_decompose(g);
    CHECK(names(g, d.a2) == std::vector<std::string>{"u2", "u3", "u1"});
    CHECK(g.degree(d.a2[0]) == 1);
    CHECK(g.degree(d.a2[1]) == 1);
    CHECK(g.degree(d.a2[2]) == 2);
}

TEST_CASE("decomposition of F3 uses the plus-one sides") {
    Graph g = fixtures::f3();
    auto d = nno_decompose(g);
    CHECK(d.side_a_size() == 5);
    CHECK(d.side_b_size() == 4);
    CHECK(names(g, d.a2) == std::vector<std::string>{"u2", "u1"});
    CHECK(names(g, d.b1) == std::vector<std::string>{"y1", "y2", "y3"});
}

TEST_CASE("prefix ordering matches satellite neighborhoods exactly") {
    Graph g = fixtures::f5();
    auto d = nno_decompose(g);
    REQUIRE(names(g, d.a2) == std::vector<std::string>{"u1", "u2"});
    // N(u1) is the first two b1 entries, N(u2) the first three
    CHECK(g.adjacent(d.a2[0], d.b1[0]));
    CHECK(g.adjacent(d.a2[0], d.b1[1]));
    CHECK_FALSE(g.adjacent(d.a2[0], d.b1[2]));
    CHECK(g.adjacent(d.a2[1], d.b1[2]));
}

TEST_CASE("verify_nno rejects a reversed satellite order") {
    Graph g = fixtures::f5();
    auto d = nno_decompose(g);
    std::swap(d.a2[0], d.a2[1]);
    auto res = verify_nno(g, d);
    CHECK_FALSE(res.ok);
    CHECK(res.failure.find("a2") != std::string::npos);
}

TEST_CASE("verify_nno rejects a core vertex demoted to satellite") {
    Graph g = fixtures::f2();
    auto d = nno_decompose(g);
    // move y3 from b1 to b2: its neighborhood equals a1, not a proper subset
    d.b1.erase(std::find(d.b1.begin(), d.b1.end(), g.index_of("y3")));
    d.b2.insert(d.b2.begin(), g.index_of("y3"));
    CHECK_FALSE(verify_nno(g, d).ok);
}

TEST_CASE("verify_nno rejects the swapped orientation when sides differ") {
    Graph g = fixtures::f3();
    auto d = nno_decompose(g);
    CHECK_FALSE(verify_nno(g, d.swapped()).ok);
}

TEST_CASE("single vertex and single edge decompose") {
    auto d1 = nno_decompose(fixtures::single_vertex());
    CHECK(d1.i() == 1);
    CHECK(d1.j() == 0);
    Graph k2 = fixtures::single_edge();
    auto d2 = nno_decompose(k2);
    CHECK(d2.i() == 1);
    CHECK(d2.j() == 1);
}

TEST_CASE("every generated instance verifies") {
    for (const auto& e : tests::corpus(10, 1)) {
        auto d = nno_decompose(e.graph);
        auto res = verify_nno(e.graph, d);
        INFO("seed " << e.spec.seed);
        CHECK(res.ok);
    }
}

TEST_CASE("json emission lists the four parts in stored order") {
    Graph g = fixtures::f2();
    auto d = nno_decompose(g);
    auto j = d.to_json(g);
    CHECK(j["a1"] == nlohmann::json({"x1", "x2", "x3"}));
    CHECK(j["b2"] == nlohmann::json({"v1"}));
}
