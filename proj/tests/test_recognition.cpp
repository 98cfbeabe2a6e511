#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "nnograph/decomposition.hpp"
#include "nnograph/fixtures.hpp"
#include "nnograph/recognition.hpp"

using namespace nno;

namespace {

bool witness_is_induced_path(const Graph& g, const std::vector<int>& w) {
    if (w.size() != 5) return false;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b)
            if (g.adjacent(w[a], w[b]) != (b == a + 1)) return false;
    return true;
}

bool witness_is_chordless_cycle(const Graph& g, const std::vector<int>& w) {
    if (w.size() < 6) return false;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b) {
            bool want = (b == a + 1) || (a == 0 && b == w.size() - 1);
            if (g.adjacent(w[a], w[b]) != want) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("P5 detection") {
    Graph p5 = fixtures::path(5);
    std::vector<int> w;
    CHECK_FALSE(is_p5_free(p5, &w));
    CHECK(witness_is_induced_path(p5, w));

    CHECK(is_p5_free(fixtures::f1()));
    CHECK(is_p5_free(fixtures::f4()));
    CHECK(is_p5_free(fixtures::f7()));
}

TEST_CASE("long induced cycle detection") {
    Graph c6 = fixtures::cycle(6);
    std::vector<int> w;
    CHECK_FALSE(is_chordal_bipartite(c6, &w));
    CHECK(witness_is_chordless_cycle(c6, w));

    // a chord splitting C6 into two 4-cycles makes it chordal bipartite
    Graph split = fixtures::cycle(6);
    split.add_edge(split.index_of("p1"), split.index_of("p4"));
    CHECK(is_chordal_bipartite(split));

    CHECK(is_chordal_bipartite(fixtures::f2()));
    CHECK_THROWS_AS(is_chordal_bipartite(fixtures::triangle()), NotBipartiteError);
}

TEST_CASE("recognize reports the first failure in fixed order") {
    CHECK(recognize(fixtures::f1()).is_member);

    auto c6 = recognize(fixtures::cycle(6));
    CHECK_FALSE(c6.is_member);
    CHECK(c6.failure == RecognitionReport::Failure::LongInducedCycle);

    auto p5 = recognize(fixtures::path(5));
    CHECK_FALSE(p5.is_member);
    CHECK(p5.failure == RecognitionReport::Failure::InducedP5);

    auto tri = recognize(fixtures::triangle());
    CHECK(tri.failure == RecognitionReport::Failure::NotBipartite);

    Graph two;
    two.add_edge("a", "b");
    two.add_edge("c", "d");
    CHECK(recognize(two).failure == RecognitionReport::Failure::NotConnected);

    Graph empty;
    CHECK_FALSE(recognize(empty).is_member);
}

TEST_CASE("bisplit triple on fixture decompositions") {
    for (const Graph& g : {fixtures::f1(), fixtures::f2(), fixtures::f4()}) {
        auto d = nno_decompose(g);
        CHECK(is_bisplit(g, d));
    }
}

TEST_CASE("generated members are accepted, mutations rejected with witnesses") {
    uint64_t seed = 900;
    for (int i = 2; i <= 4; ++i)
        for (int p = 1; p <= 2; ++p)
            for (int q = 1; q <= 2; ++q) {
                gen::GenSpec s{i, i, p, q, seed++};
                CHECK(recognize(gen::generate(s)).is_member);
                Graph bad = gen::mutate_break_class(s);
                auto rep = recognize(bad);
                REQUIRE_FALSE(rep.is_member);
                if (rep.failure == RecognitionReport::Failure::InducedP5)
                    CHECK(witness_is_induced_path(bad, rep.witness));
                else if (rep.failure == RecognitionReport::Failure::LongInducedCycle)
                    CHECK(witness_is_chordless_cycle(bad, rep.witness));
                else
                    FAIL("unexpected failure kind");
            }
}
