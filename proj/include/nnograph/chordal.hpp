#ifndef NNOGRAPH_CHORDAL_HPP
#define NNOGRAPH_CHORDAL_HPP

#include <json.hpp>

#include "nnograph/decomposition.hpp"

namespace nno {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;         // bag id = index + 1
    std::vector<std::pair<int, int>> tree_edges;  // pairs of bag ids
    int width = 0;

    nlohmann::json to_json(const Graph& g) const {
        nlohmann::json bs = nlohmann::json::array();
        for (size_t k = 0; k < bags.size(); ++k)
            bs.push_back({{"id", k + 1}, {"vertices", g.names_of(bags[k])}});
        nlohmann::json es = nlohmann::json::array();
        for (auto [a, b] : tree_edges) es.push_back({a, b});
        return {{"bags", bs}, {"edges", es}, {"width", width}};
    }
};

/// Checks the three decomposition properties plus tree-ness.
inline VerifyResult verify_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    auto fail = [](std::string m) { return VerifyResult{false, std::move(m)}; };
    int n = g.vertex_count();
    int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return fail("no bags");
    // tree on bag ids
    if (static_cast<int>(td.tree_edges.size()) != nb - 1) return fail("edge count is not bags-1");
    {
        std::vector<std::vector<int>> adj(nb);
        for (auto [a, b] : td.tree_edges) {
            if (a < 1 || a > nb || b < 1 || b > nb || a == b) return fail("bad tree edge");
            adj[a - 1].push_back(b - 1);
            adj[b - 1].push_back(a - 1);
        }
        std::vector<char> seen(nb, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++cnt;
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (cnt != nb) return fail("bag graph is disconnected");
    }
    // coverage
    std::vector<std::vector<int>> holding(n);
    for (int b = 0; b < nb; ++b)
        for (int v : td.bags[b]) holding[v].push_back(b);
    for (int v = 0; v < n; ++v)
        if (holding[v].empty()) return fail("vertex " + g.name(v) + " is in no bag");
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int b : holding[u]) {
            const auto& bag = td.bags[b];
            if (std::find(bag.begin(), bag.end(), v) != bag.end()) {
                covered = true;
                break;
            }
        }
        if (!covered) return fail("edge " + g.name(u) + "-" + g.name(v) + " is in no bag");
    }
    // subtree connectivity per vertex
    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : td.tree_edges) {
        adj[a - 1].push_back(b - 1);
        adj[b - 1].push_back(a - 1);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<char> inbag(nb, 0);
        for (int b : holding[v]) inbag[b] = 1;
        std::vector<char> seen(nb, 0);
        std::vector<int> stack{holding[v][0]};
        seen[holding[v][0]] = 1;
        size_t cnt = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++cnt;
            for (int w : adj[u])
                if (inbag[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (cnt != holding[v].size())
            return fail("bags of vertex " + g.name(v) + " do not induce a subtree");
    }
    // width
    int w = 0;
    for (const auto& bag : td.bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    if (w != td.width) return fail("stored width mismatch");
    return VerifyResult{};
}

/// Closed-form width of the produced decomposition.
inline int treewidth(const Graph& g, const NNODecomposition& d) {
    return std::min(d.i() + d.d_up(g), d.j() + d.d_vq(g)) - 1;
}

/// Branches on the cheaper side; the root bag is the core side plus the
/// opposite prefix covering the heaviest satellite, followed by a chain over
/// the remaining core vertices and one bag per satellite.
inline TreeDecomposition tree_decomposition(const Graph& g, const NNODecomposition& dc) {
    TreeDecomposition td;
    if (g.vertex_count() == 1) {
        td.bags.push_back({0});
        td.width = 0;
        return td;
    }
    // mirror by swapping roles when the B branch is cheaper
    bool a_branch = dc.i() + dc.d_up(g) <= dc.j() + dc.d_vq(g);
    NNODecomposition d = a_branch ? dc : dc.swapped();
    int dup = d.a2.empty() ? 1 : g.degree(d.a2.back());

    auto add_bag = [&](std::vector<int> bag, int attach_to) {
        td.bags.push_back(std::move(bag));
        int id = static_cast<int>(td.bags.size());
        if (attach_to > 0) td.tree_edges.push_back({attach_to, id});
        return id;
    };

    std::vector<int> root = d.a1;
    for (int k = 0; k < dup; ++k) root.push_back(d.b1[k]);
    int root_id = add_bag(std::move(root), 0);

    int tail = root_id;
    for (int k = dup; k < d.j(); ++k) {
        std::vector<int> bag = d.a1;
        bag.push_back(d.b1[k]);
        tail = add_bag(std::move(bag), tail);
    }
    for (int h = d.q() - 1; h >= 0; --h) {
        std::vector<int> bag{d.b2[h]};
        for (int w : g.neighbors(d.b2[h])) bag.push_back(w);
        tail = add_bag(std::move(bag), tail);
    }
    int utail = root_id;
    for (int k = d.p() - 1; k >= 0; --k) {
        std::vector<int> bag{d.a2[k]};
        for (int w : g.neighbors(d.a2[k])) bag.push_back(w);
        utail = add_bag(std::move(bag), utail);
    }
    for (const auto& bag : td.bags) td.width = std::max(td.width, static_cast<int>(bag.size()) - 1);
    auto check = verify_tree_decomposition(g, td);
    if (!check.ok) throw StructureViolation("tree decomposition invalid: " + check.failure);
    if (td.width != treewidth(g, dc))
        throw StructureViolation("tree decomposition width disagrees with the closed form");
    return td;
}

/// Same bags rearranged into a path: satellite chain of the core side,
/// the root, the opposite core chain, then the opposite satellite chain.
inline TreeDecomposition path_decomposition(const Graph& g, const NNODecomposition& dc) {
    TreeDecomposition chain = tree_decomposition(g, dc);
    if (chain.bags.size() <= 1) return chain;
    bool a_branch = dc.i() + dc.d_up(g) <= dc.j() + dc.d_vq(g);
    NNODecomposition d = a_branch ? dc : dc.swapped();
    int dup = d.a2.empty() ? 1 : g.degree(d.a2.back());

    TreeDecomposition td;
    // ascending satellite bags end at the root, mirroring the chain layout
    for (int k = 0; k < d.p(); ++k) {
        std::vector<int> bag{d.a2[k]};
        for (int w : g.neighbors(d.a2[k])) bag.push_back(w);
        td.bags.push_back(std::move(bag));
    }
    std::vector<int> root = d.a1;
    for (int k = 0; k < dup; ++k) root.push_back(d.b1[k]);
    td.bags.push_back(std::move(root));
    for (int k = dup; k < d.j(); ++k) {
        std::vector<int> bag = d.a1;
        bag.push_back(d.b1[k]);
        td.bags.push_back(std::move(bag));
    }
    for (int h = d.q() - 1; h >= 0; --h) {
        std::vector<int> bag{d.b2[h]};
        for (int w : g.neighbors(d.b2[h])) bag.push_back(w);
        td.bags.push_back(std::move(bag));
    }
    for (size_t k = 0; k + 1 < td.bags.size(); ++k)
        td.tree_edges.push_back({static_cast<int>(k) + 1, static_cast<int>(k) + 2});
    for (const auto& bag : td.bags) td.width = std::max(td.width, static_cast<int>(bag.size()) - 1);
    auto check = verify_tree_decomposition(g, td);
    if (!check.ok) throw StructureViolation("path decomposition invalid: " + check.failure);
    return td;
}

inline int pathwidth(const Graph& g, const NNODecomposition& d) { return treewidth(g, d); }

struct FillInResult {
    std::vector<std::pair<int, int>> added_edges;  // each pair ordered by index
    Graph embedding;
    std::vector<int> clique_side;

    nlohmann::json to_json(const Graph& g) const {
        nlohmann::json edges = nlohmann::json::array();
        std::vector<std::pair<std::string, std::string>> named;
        for (auto [u, v] : added_edges) {
            std::string a = g.name(u), b = g.name(v);
            if (b < a) std::swap(a, b);
            named.emplace_back(a, b);
        }
        std::sort(named.begin(), named.end());
        for (auto& [a, b] : named) edges.push_back({a, b});
        return {{"added_edges", edges},
                {"count", added_edges.size()},
                {"clique_side", g.names_of(clique_side)}};
    }
};

/// Completes the cheaper side: clique on the core side plus clique on the
/// opposite prefix covering the heaviest satellite. The embedding is chordal
/// and split; the added-edge count matches the closed-form minimum.
inline FillInResult minimum_fill_in(const Graph& g, const NNODecomposition& dc) {
    auto half = [](long k) { return k * (k - 1) / 2; };
    long cost_a = half(dc.i()) + half(dc.d_up(g));
    long cost_b = half(dc.j()) + half(dc.d_vq(g));
    bool pick_a = cost_a != cost_b ? cost_a < cost_b
                                   : dc.i() + dc.d_up(g) <= dc.j() + dc.d_vq(g);
    NNODecomposition d = pick_a ? dc : dc.swapped();

    FillInResult res;
    res.embedding = g;
    auto add = [&](int u, int v) {
        if (!g.adjacent(u, v) && u != v && !res.embedding.adjacent(u, v)) {
            res.embedding.add_edge(u, v);
            res.added_edges.emplace_back(u, v);
        }
    };
    for (size_t a = 0; a < d.a1.size(); ++a)
        for (size_t b = a + 1; b < d.a1.size(); ++b) add(d.a1[a], d.a1[b]);
    int dup = d.a2.empty() ? 1 : g.degree(d.a2.back());
    for (int a = 0; a < dup; ++a)
        for (int b = a + 1; b < dup; ++b) add(d.b1[a], d.b1[b]);
    res.clique_side = d.a1;
    for (int k = 0; k < dup && k < d.j(); ++k) res.clique_side.push_back(d.b1[k]);
    return res;
}

/// Perfect elimination order by repeated simplicial removal; on failure a
/// chordless cycle of length >= 4 is produced instead.
struct ChordalityReport {
    bool chordal = false;
    std::vector<int> peo;
    std::vector<int> chordless_cycle;
};

inline ChordalityReport is_chordal(const Graph& g) {
    ChordalityReport rep;
    int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    auto simplicial = [&](int v) {
        std::vector<int> nb;
        for (int w : g.neighbors(v))
            if (!gone[w]) nb.push_back(w);
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b)
                if (!g.adjacent(nb[a], nb[b])) return false;
        return true;
    };
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && simplicial(v)) {
                pick = v;
                break;
            }
        if (pick < 0) break;
        rep.peo.push_back(pick);
        gone[pick] = 1;
    }
    if (static_cast<int>(rep.peo.size()) == n) {
        rep.chordal = true;
        return rep;
    }
    // residual graph has no simplicial vertex; extract a chordless cycle
    for (int v = 0; v < n && rep.chordless_cycle.empty(); ++v) {
        if (gone[v]) continue;
        std::vector<int> nb;
        for (int w : g.neighbors(v))
            if (!gone[w]) nb.push_back(w);
        for (size_t ai = 0; ai < nb.size() && rep.chordless_cycle.empty(); ++ai) {
            for (size_t bi = ai + 1; bi < nb.size(); ++bi) {
                int a = nb[ai], b = nb[bi];
                if (g.adjacent(a, b)) continue;
                // shortest a-b path in the residual graph avoiding N[v]
                std::vector<int> par(n, -2);
                std::queue<int> q;
                q.push(a);
                par[a] = -1;
                bool found = false;
                while (!q.empty() && !found) {
                    int u = q.front();
                    q.pop();
                    for (int w : g.neighbors(u)) {
                        if (gone[w] || par[w] != -2) continue;
                        if (w != b && (w == v || g.adjacent(v, w))) continue;
                        par[w] = u;
                        if (w == b) {
                            found = true;
                            break;
                        }
                        q.push(w);
                    }
                }
                if (!found) continue;
                std::vector<int> path;
                for (int x = b; x != -1; x = par[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());
                path.insert(path.begin(), v);
                rep.chordless_cycle = path;
                break;
            }
        }
    }
    return rep;
}

/// Hammer-Simeone degree test with an explicit verified partition.
struct SplitReport {
    bool split = false;
    std::vector<int> clique;
    std::vector<int> stable;
};

inline SplitReport is_split(const Graph& g) {
    SplitReport rep;
    int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    int m = 0;
    while (m < n && g.degree(order[m]) >= m) ++m;
    long lhs = 0, rhs = static_cast<long>(m) * (m - 1), tail = 0;
    for (int k = 0; k < m; ++k) lhs += g.degree(order[k]);
    for (int k = m; k < n; ++k) tail += g.degree(order[k]);
    if (lhs != rhs + tail) return rep;
    std::vector<int> clique(order.begin(), order.begin() + m);
    std::vector<int> stable(order.begin() + m, order.end());
    for (size_t a = 0; a < clique.size(); ++a)
        for (size_t b = a + 1; b < clique.size(); ++b)
            if (!g.adjacent(clique[a], clique[b])) return rep;
    for (size_t a = 0; a < stable.size(); ++a)
        for (size_t b = a + 1; b < stable.size(); ++b)
            if (g.adjacent(stable[a], stable[b])) return rep;
    rep.split = true;
    std::sort(clique.begin(), clique.end());
    std::sort(stable.begin(), stable.end());
    rep.clique = std::move(clique);
    rep.stable = std::move(stable);
    return rep;
}

}  // namespace nno

#endif
