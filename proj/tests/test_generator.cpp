#include <catch2/catch_amalgamated.hpp>

#include "nnograph/decomposition.hpp"
#include "nnograph/generator.hpp"
#include "nnograph/recognition.hpp"

using namespace nno;
using nno::gen::GenSpec;

TEST_CASE("generation is deterministic") {
    GenSpec s{4, 3, 2, 1, 42};
    CHECK(gen::generate(s).serialize() == gen::generate(s).serialize());
    GenSpec other{4, 3, 2, 1, 43};
    CHECK(gen::generate(s).serialize() != gen::generate(other).serialize());
}

TEST_CASE("satellite-free specs give complete bipartite graphs") {
    Graph g = gen::generate({3, 3, 0, 0, 1});
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 9);
    Graph e = gen::generate({1, 1, 0, 0, 1});
    CHECK(e.edge_count() == 1);
}

TEST_CASE("seed 1 on the F2 shape draws both degree-2 satellites") {
    Graph g = gen::generate({3, 3, 1, 1, 1});
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 13);
    auto d = nno_decompose(g);
    CHECK(d.p() == 1);
    CHECK(d.q() == 1);
    CHECK(d.d_up(g) == 2);
    CHECK(d.d_vq(g) == 2);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(gen::generate({0, 1, 0, 0, 1}), gen::InvalidSpec);
    CHECK_THROWS_AS(gen::generate({1, 1, 1, 0, 1}), gen::InvalidSpec);  // p needs j >= 2
    CHECK_THROWS_AS(gen::generate({1, 2, 0, 1, 1}), gen::InvalidSpec);  // q needs i >= 2
    CHECK_THROWS_AS(gen::generate({2, 2, -1, 0, 1}), gen::InvalidSpec);
}

TEST_CASE("every generated instance is a class member") {
    uint64_t seed = 500;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            for (int p : {0, 2})
                for (int q : {0, 3}) {
                    if ((p > 0 && j < 2) || (q > 0 && i < 2)) continue;
                    GenSpec s{i, j, p, q, seed++};
                    Graph g = gen::generate(s);
                    INFO("spec " << i << "," << j << "," << p << "," << q << " seed " << s.seed);
                    CHECK(recognize(g).is_member);
                    CHECK(verify_nno(g, nno_decompose(g)).ok);
                }
}

TEST_CASE("mutations leave the class") {
    GenSpec s{3, 3, 2, 2, 77};
    Graph bad = gen::mutate_break_class(s);
    CHECK_FALSE(recognize(bad).is_member);
    CHECK_THROWS_AS(gen::mutate_break_class({3, 3, 0, 1, 7}), gen::NoSatellites);
    CHECK_THROWS_AS(gen::mutate_break_class({3, 3, 0, 0, 7}), gen::NoSatellites);
}

TEST_CASE("mutation determinism") {
    GenSpec s{4, 4, 3, 2, 9};
    CHECK(gen::mutate_break_class(s).serialize() == gen::mutate_break_class(s).serialize());
}
