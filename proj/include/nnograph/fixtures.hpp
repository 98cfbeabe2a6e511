#ifndef NNOGRAPH_FIXTURES_HPP
#define NNOGRAPH_FIXTURES_HPP

#include "nnograph/graph.hpp"

// Canonical small instances used across the test suites and docs. F1..F7 are
// members of the target class; the rest are rejection cases.

namespace nno::fixtures {

inline Graph biclique(int i, int j, const std::string& a = "x", const std::string& b = "y") {
    Graph g;
    for (int s = 1; s <= i; ++s)
        for (int t = 1; t <= j; ++t)
            g.add_edge(a + std::to_string(s), b + std::to_string(t));
    return g;
}

/// K(3,3) on {x1..x3} x {y1..y3}.
inline Graph f1() { return biclique(3, 3); }

/// F1 plus u1~{y1,y2} and v1~{x1,x2}.
inline Graph f2() {
    Graph g = f1();
    g.add_edge("u1", "y1");
    g.add_edge("u1", "y2");
    g.add_edge("v1", "x1");
    g.add_edge("v1", "x2");
    return g;
}

/// F2 plus the pendant u2~y1.
inline Graph f3() {
    Graph g = f2();
    g.add_edge("u2", "y1");
    return g;
}

/// F3 plus the pendant u3~y1.
inline Graph f4() {
    Graph g = f3();
    g.add_edge("u3", "y1");
    return g;
}

/// K(4,4) plus u1~{y1,y2} and u2~{y1,y2,y3}.
inline Graph f5() {
    Graph g = biclique(4, 4);
    g.add_edge("u1", "y1");
    g.add_edge("u1", "y2");
    g.add_edge("u2", "y1");
    g.add_edge("u2", "y2");
    g.add_edge("u2", "y3");
    return g;
}

/// F1 plus pendants u1~y1, u2~y1 and v1~{x1,x2}.
inline Graph f6() {
    Graph g = f1();
    g.add_edge("u1", "y1");
    g.add_edge("u2", "y1");
    g.add_edge("v1", "x1");
    g.add_edge("v1", "x2");
    return g;
}

/// F6 plus the pendant v2~x1.
inline Graph f7() {
    Graph g = f6();
    g.add_edge("v2", "x1");
    return g;
}

inline Graph path(int n) {
    Graph g;
    for (int k = 1; k < n; ++k)
        g.add_edge("p" + std::to_string(k), "p" + std::to_string(k + 1));
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge("p" + std::to_string(n), "p1");
    return g;
}

inline Graph star(int leaves) { return biclique(leaves, 1); }

inline Graph triangle() {
    Graph g;
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    g.add_edge("c", "a");
    return g;
}

inline Graph single_vertex() {
    Graph g;
    g.add_vertex("v");
    return g;
}

inline Graph single_edge() { return biclique(1, 1); }

}  // namespace nno::fixtures

#endif
