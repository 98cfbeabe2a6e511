#ifndef NNOGRAPH_COMPLEMENT_RESULTS_HPP
#define NNOGRAPH_COMPLEMENT_RESULTS_HPP

#include <json.hpp>

#include "nnograph/decomposition.hpp"
#include "nnograph/hamiltonicity.hpp"

namespace nno {

struct PeoCheck {
    bool ok = true;
    int failing_position = 0;  // 1-based
};

/// True iff every position of `order` is simplicial among the later ones.
inline PeoCheck verify_peo(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("not a permutation");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;
    for (int k = 0; k < n; ++k) {
        int v = order[k];
        std::vector<int> later;
        for (int w : g.neighbors(v))
            if (pos[w] > k) later.push_back(w);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b])) return {false, k + 1};
    }
    return {};
}

/// Elimination order that is perfect for the complement graph:
/// b1 in prefix order, then b2 and a2 by descending degree, then a1
/// reversed. (Ascending satellite order does not stay simplicial once two
/// satellites on a side have different degrees.)
inline std::vector<int> complement_peo(const NNODecomposition& d) {
    std::vector<int> order = d.b1;
    for (auto it = d.b2.rbegin(); it != d.b2.rend(); ++it) order.push_back(*it);
    for (auto it = d.a2.rbegin(); it != d.a2.rend(); ++it) order.push_back(*it);
    for (auto it = d.a1.rbegin(); it != d.a1.rend(); ++it) order.push_back(*it);
    return order;
}

struct ComplementCycleResult {
    bool applicable = false;
    std::string reason;  // set when not applicable
    std::vector<int> cycle;

    nlohmann::json to_json(const Graph& g) const {
        if (!applicable) return {{"applicable", false}, {"reason", reason}};
        return {{"applicable", true}, {"cycle", g.names_of(cycle)}};
    }
};

/// Builds a Hamiltonian cycle of the complement when both satellite sets are
/// non-empty and g itself is Hamiltonian: walk the A side as a clique path
/// ending at the heaviest A2 vertex, cross to a b1 vertex it misses, walk
/// the B side, and close over an a1 vertex missed by the heaviest B2 vertex.
inline ComplementCycleResult complement_hamiltonian_cycle(const Graph& g,
                                                          const NNODecomposition& d) {
    ComplementCycleResult res;
    if (d.p() == 0 || d.q() == 0) {
        res.reason = "requires non-empty A2 and B2";
        return res;
    }
    if (!hamiltonian_cycle(g, d).found()) {
        res.reason = "graph is not Hamiltonian";
        return res;
    }
    int up = d.a2.back();
    int vq = d.b2.back();
    int b_star = -1;
    for (int y : d.b1)
        if (!g.adjacent(up, y)) {
            b_star = y;
            break;
        }
    int a_star = -1;
    for (int x : d.a1)
        if (!g.adjacent(vq, x)) {
            a_star = x;
            break;
        }
    if (b_star < 0 || a_star < 0) {
        res.reason = "no missed core vertex available";  // impossible on verified input
        return res;
    }
    std::vector<int> cycle{a_star};
    for (int x : d.a1)
        if (x != a_star) cycle.push_back(x);
    for (int u : d.a2)
        if (u != up) cycle.push_back(u);
    cycle.push_back(up);
    cycle.push_back(b_star);
    for (int y : d.b1)
        if (y != b_star) cycle.push_back(y);
    for (int v : d.b2)
        if (v != vq) cycle.push_back(v);
    cycle.push_back(vq);
    Graph comp = g.complement();
    if (!valid_cycle(comp, cycle))
        throw StructureViolation("complement cycle construction failed validation");
    res.applicable = true;
    res.cycle = cycle;
    return res;
}

struct ChvatalErdosReport {
    int connectivity = 0;
    int independence = 0;
    bool implies_hamiltonian = false;
};

/// Exhaustive vertex connectivity and independence number; desk scale only.
inline ChvatalErdosReport chvatal_erdos_check(const Graph& g, int max_vertices = 16) {
    int n = g.vertex_count();
    if (n > max_vertices) throw std::invalid_argument("chvatal_erdos_check: graph too large");
    ChvatalErdosReport rep;
    if (n == 0) return rep;

    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= 1u << w;

    auto connected_within = [&](uint32_t alive) {
        if (!alive) return true;
        uint32_t comp = 1u << std::countr_zero(alive);
        uint32_t frontier = comp;
        while (frontier) {
            uint32_t grow = 0;
            for (uint32_t m = frontier; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                grow |= adj[u] & alive & ~comp;
            }
            comp |= grow;
            frontier = grow;
        }
        return comp == alive;
    };

    // vertex connectivity: smallest separator size; n-1 for complete graphs
    if (!connected_within(full)) {
        rep.connectivity = 0;
    } else {
        int best = n - 1;
        for (uint32_t s = 1; s < full; ++s) {
            int size = std::popcount(s);
            if (size >= best) continue;
            uint32_t alive = full & ~s;
            if (std::popcount(alive) < 2) continue;
            if (!connected_within(alive)) best = size;
        }
        rep.connectivity = best;
    }
    for (uint32_t s = 1; s <= full; ++s) {
        int size = std::popcount(s);
        if (size <= rep.independence) continue;
        bool stable = true;
        for (uint32_t m = s; m && stable;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (adj[u] & s) stable = false;
        }
        if (stable) rep.independence = size;
    }
    rep.implies_hamiltonian = n >= 3 && rep.connectivity >= rep.independence;
    return rep;
}

}  // namespace nno

#endif
