#ifndef NNOGRAPH_ORACLE_HPP
#define NNOGRAPH_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#include "nnograph/graph.hpp"

// Exhaustive reference implementations. Everything here is ground truth for
// the constructive modules and is only expected to run at desk scale; each
// entry point refuses inputs above its bound. Nothing in this header calls
// the constructive code.

namespace nno::oracle {

struct OracleBounds {
    int max_vertices_hamiltonicity = 14;
    int max_vertices_widths = 10;
    int max_vertices_fillin = 9;
    int max_vertices_chvatal = 14;
    int max_vertices_paths = 12;  // longest/steiner/path-cover searches
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

using Mask = uint32_t;

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw TooLarge(msg);
}

inline std::vector<Mask> adjacency_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Mask> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= Mask(1) << w;
    return adj;
}

// dp[mask] = set of vertices that can end a simple path visiting exactly
// `mask`, with any start vertex.
inline std::vector<Mask> free_path_dp(const std::vector<Mask>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<Mask> dp(Mask(1) << n, 0);
    for (int v = 0; v < n; ++v) dp[Mask(1) << v] = Mask(1) << v;
    for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
        Mask ends = dp[mask];
        if (!ends) continue;
        for (Mask e = ends; e;) {
            int last = std::countr_zero(e);
            e &= e - 1;
            Mask ext = adj[last] & ~mask;
            for (Mask x = ext; x;) {
                int w = std::countr_zero(x);
                x &= x - 1;
                dp[mask | (Mask(1) << w)] |= Mask(1) << w;
            }
        }
    }
    return dp;
}

// dp[mask] = set of possible path ends where the path starts at the lowest
// set bit of mask. Extensions only use vertices above the anchor, so every
// cycle is enumerated exactly once (anchored at its minimum vertex).
inline std::vector<Mask> anchored_path_dp(const std::vector<Mask>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<Mask> dp(Mask(1) << n, 0);
    for (int v = 0; v < n; ++v) dp[Mask(1) << v] = Mask(1) << v;
    for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
        Mask ends = dp[mask];
        if (!ends) continue;
        int anchor = std::countr_zero(mask);
        for (Mask e = ends; e;) {
            int last = std::countr_zero(e);
            e &= e - 1;
            Mask ext = adj[last] & ~mask & ~((Mask(1) << (anchor + 1)) - 1);
            for (Mask x = ext; x;) {
                int w = std::countr_zero(x);
                x &= x - 1;
                dp[mask | (Mask(1) << w)] |= Mask(1) << w;
            }
        }
    }
    return dp;
}

// Rebuilds one path visiting `mask` ending at `last` from a free/anchored dp
// table (works for both; for anchored tables pass the same table).
inline std::vector<int> reconstruct_path(const std::vector<Mask>& adj, const std::vector<Mask>& dp,
                                         Mask mask, int last) {
    std::vector<int> rev{last};
    while (mask != (Mask(1) << last)) {
        Mask prev_mask = mask ^ (Mask(1) << last);
        Mask cands = dp[prev_mask] & adj[last];
        int prev = std::countr_zero(cands);
        rev.push_back(prev);
        mask = prev_mask;
        last = prev;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

inline std::optional<std::vector<int>> brute_hamiltonian_path(const Graph& g,
                                                              const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_hamiltonicity, "brute_hamiltonian_path: graph too large");
    if (n == 0) return std::nullopt;
    auto adj = adjacency_masks(g);
    auto dp = free_path_dp(adj);
    Mask full = (Mask(1) << n) - 1;
    if (!dp[full]) return std::nullopt;
    int last = std::countr_zero(dp[full]);
    return reconstruct_path(adj, dp, full, last);
}

inline std::optional<std::vector<int>> brute_hamiltonian_cycle(const Graph& g,
                                                               const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_hamiltonicity, "brute_hamiltonian_cycle: graph too large");
    if (n < 3) return std::nullopt;
    auto adj = adjacency_masks(g);
    auto dp = anchored_path_dp(adj);
    Mask full = (Mask(1) << n) - 1;
    Mask closers = dp[full] & adj[0] & ~Mask(1);
    if (!closers) return std::nullopt;
    int last = std::countr_zero(closers);
    return reconstruct_path(adj, dp, full, last);
}

/// Hamiltonian path with both endpoints fixed.
inline bool brute_st_hamiltonian_path(const Graph& g, int s, int t, const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_hamiltonicity, "brute_st_hamiltonian_path: graph too large");
    if (s == t) return n == 1;
    auto adj = adjacency_masks(g);
    std::vector<Mask> dp(Mask(1) << n, 0);
    dp[Mask(1) << s] = Mask(1) << s;
    for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
        Mask ends = dp[mask];
        if (!ends || !(mask & (Mask(1) << s))) continue;
        for (Mask e = ends; e;) {
            int last = std::countr_zero(e);
            e &= e - 1;
            Mask ext = adj[last] & ~mask;
            for (Mask x = ext; x;) {
                int w = std::countr_zero(x);
                x &= x - 1;
                dp[mask | (Mask(1) << w)] |= Mask(1) << w;
            }
        }
    }
    Mask full = (Mask(1) << n) - 1;
    return (dp[full] >> t) & 1;
}

inline bool brute_hamiltonian_path_from(const Graph& g, int s, const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_hamiltonicity, "brute_hamiltonian_path_from: graph too large");
    auto adj = adjacency_masks(g);
    std::vector<Mask> dp(Mask(1) << n, 0);
    dp[Mask(1) << s] = Mask(1) << s;
    for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
        Mask ends = dp[mask];
        if (!ends) continue;
        for (Mask e = ends; e;) {
            int last = std::countr_zero(e);
            e &= e - 1;
            Mask ext = adj[last] & ~mask;
            for (Mask x = ext; x;) {
                int w = std::countr_zero(x);
                x &= x - 1;
                dp[mask | (Mask(1) << w)] |= Mask(1) << w;
            }
        }
    }
    return dp[(Mask(1) << n) - 1] != 0;
}

inline std::vector<int> brute_longest_path(const Graph& g, const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_paths, "brute_longest_path: graph too large");
    if (n == 0) return {};
    auto adj = adjacency_masks(g);
    auto dp = free_path_dp(adj);
    Mask best_mask = 1;
    int best_pop = 1;
    for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
        if (!dp[mask]) continue;
        int pop = std::popcount(mask);
        if (pop > best_pop) {
            best_pop = pop;
            best_mask = mask;
        }
    }
    int last = std::countr_zero(dp[best_mask]);
    return reconstruct_path(adj, dp, best_mask, last);
}

inline std::optional<std::vector<int>> brute_longest_cycle(const Graph& g,
                                                           const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_paths, "brute_longest_cycle: graph too large");
    auto adj = adjacency_masks(g);
    auto dp = anchored_path_dp(adj);
    Mask best_mask = 0;
    int best_last = -1, best_pop = 0;
    for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
        Mask ends = dp[mask];
        if (!ends) continue;
        int pop = std::popcount(mask);
        if (pop < 3 || pop <= best_pop) continue;
        int anchor = std::countr_zero(mask);
        Mask closers = ends & adj[anchor] & ~(Mask(1) << anchor);
        if (closers) {
            best_pop = pop;
            best_mask = mask;
            best_last = std::countr_zero(closers);
        }
    }
    if (best_last < 0) return std::nullopt;
    return reconstruct_path(adj, dp, best_mask, best_last);
}

/// All cycle lengths realizable in g (as a sorted list).
inline std::vector<int> brute_cycle_lengths(const Graph& g, const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_paths, "brute_cycle_lengths: graph too large");
    auto adj = adjacency_masks(g);
    auto dp = anchored_path_dp(adj);
    std::vector<char> seen(n + 1, 0);
    for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
        Mask ends = dp[mask];
        if (!ends) continue;
        int pop = std::popcount(mask);
        if (pop < 3 || seen[pop]) continue;
        int anchor = std::countr_zero(mask);
        if (ends & adj[anchor] & ~(Mask(1) << anchor)) seen[pop] = 1;
    }
    std::vector<int> lens;
    for (int l = 3; l <= n; ++l)
        if (seen[l]) lens.push_back(l);
    return lens;
}

struct SteinerAnswer {
    bool found = false;
    std::vector<int> sequence;
    int steiner_vertices = 0;
};

/// Reusable dp tables for repeated Steiner queries on one graph.
struct PathTables {
    std::vector<Mask> adj, free_dp, anchored_dp;
};

inline PathTables build_path_tables(const Graph& g) {
    PathTables t;
    t.adj = adjacency_masks(g);
    t.free_dp = free_path_dp(t.adj);
    t.anchored_dp = anchored_path_dp(t.adj);
    return t;
}

inline SteinerAnswer brute_steiner_path(const Graph& g, const std::vector<int>& terminals,
                                        const PathTables& tables) {
    int n = g.vertex_count();
    SteinerAnswer ans;
    Mask req = 0;
    for (int t : terminals) req |= Mask(1) << t;
    if (!req) return ans;
    const auto& dp = tables.free_dp;
    int best_extra = std::numeric_limits<int>::max();
    Mask best_mask = 0;
    for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
        if ((mask & req) != req || !dp[mask]) continue;
        int extra = std::popcount(mask & ~req);
        if (extra < best_extra) {
            best_extra = extra;
            best_mask = mask;
            if (extra == 0) break;
        }
    }
    if (!best_mask) return ans;
    ans.found = true;
    ans.steiner_vertices = best_extra;
    ans.sequence =
        reconstruct_path(tables.adj, dp, best_mask, std::countr_zero(dp[best_mask]));
    return ans;
}

inline SteinerAnswer brute_steiner_path(const Graph& g, const std::vector<int>& terminals,
                                        const OracleBounds& b = {}) {
    require(g.vertex_count() <= b.max_vertices_paths, "brute_steiner_path: graph too large");
    return brute_steiner_path(g, terminals, build_path_tables(g));
}

inline SteinerAnswer brute_steiner_cycle(const Graph& g, const std::vector<int>& terminals,
                                         const PathTables& tables) {
    int n = g.vertex_count();
    SteinerAnswer ans;
    Mask req = 0;
    for (int t : terminals) req |= Mask(1) << t;
    if (!req) return ans;
    const auto& dp = tables.anchored_dp;
    int best_extra = std::numeric_limits<int>::max();
    Mask best_mask = 0;
    int best_last = -1;
    for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
        if ((mask & req) != req || !dp[mask]) continue;
        if (std::popcount(mask) < 3) continue;
        int extra = std::popcount(mask & ~req);
        if (extra >= best_extra) continue;
        int anchor = std::countr_zero(mask);
        Mask closers = dp[mask] & tables.adj[anchor] & ~(Mask(1) << anchor);
        if (closers) {
            best_extra = extra;
            best_mask = mask;
            best_last = std::countr_zero(closers);
        }
    }
    if (best_last < 0) return ans;
    ans.found = true;
    ans.steiner_vertices = best_extra;
    ans.sequence = reconstruct_path(tables.adj, dp, best_mask, best_last);
    return ans;
}

inline SteinerAnswer brute_steiner_cycle(const Graph& g, const std::vector<int>& terminals,
                                         const OracleBounds& b = {}) {
    require(g.vertex_count() <= b.max_vertices_paths, "brute_steiner_cycle: graph too large");
    return brute_steiner_cycle(g, terminals, build_path_tables(g));
}

/// Minimum number of vertex-disjoint simple paths covering V (single
/// vertices count as paths).
inline int brute_min_path_cover(const Graph& g, const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_paths, "brute_min_path_cover: graph too large");
    if (n == 0) return 0;
    auto adj = adjacency_masks(g);
    auto dp = free_path_dp(adj);
    Mask full = (Mask(1) << n) - 1;
    std::vector<int> cover(full + 1, std::numeric_limits<int>::max());
    cover[0] = 0;
    for (Mask mask = 1; mask <= full; ++mask) {
        int low = std::countr_zero(mask);
        Mask rest = mask ^ (Mask(1) << low);
        // enumerate submasks of mask containing `low`
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            Mask piece = sub | (Mask(1) << low);
            if (dp[piece] && cover[mask ^ piece] != std::numeric_limits<int>::max())
                cover[mask] = std::min(cover[mask], cover[mask ^ piece] + 1);
            if (sub == 0) break;
        }
    }
    return cover[full];
}

// Treewidth via elimination-order dynamic programming over subsets. The
// elimination degree of v after removing T is the number of vertices outside
// T reachable from v through T.
inline int brute_treewidth(const Graph& g, const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_widths, "brute_treewidth: graph too large");
    if (n == 0) return 0;
    auto adj = adjacency_masks(g);
    Mask full = (Mask(1) << n) - 1;
    auto elim_degree = [&](int v, Mask gone) {
        Mask frontier = adj[v] & gone;
        Mask visited = frontier;
        Mask outside = adj[v] & ~gone;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            Mask nb = adj[u];
            outside |= nb & ~gone;
            Mask fresh = (nb & gone) & ~visited;
            visited |= fresh;
            frontier |= fresh;
        }
        outside &= ~(Mask(1) << v);
        return std::popcount(outside);
    };
    std::vector<int> f(full + 1, std::numeric_limits<int>::max());
    f[0] = 0;
    for (Mask s = 1; s <= full; ++s) {
        for (Mask m = s; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            Mask prev = s ^ (Mask(1) << v);
            int cand = std::max(f[prev], elim_degree(v, prev));
            f[s] = std::min(f[s], cand);
        }
    }
    return f[full];
}

namespace detail {

inline bool adj_chordal(const std::vector<Mask>& adj) {
    // repeated simplicial elimination on a mutable copy
    int n = static_cast<int>(adj.size());
    std::vector<Mask> a = adj;
    Mask alive = (Mask(1) << n) - 1;
    bool progress = true;
    while (alive && progress) {
        progress = false;
        for (int v = 0; v < n && alive; ++v) {
            if (!((alive >> v) & 1)) continue;
            Mask nb = a[v] & alive;
            bool simplicial = true;
            for (Mask m = nb; m && simplicial;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                if ((nb & ~a[u] & ~(Mask(1) << u)) != 0) simplicial = false;
            }
            if (simplicial) {
                alive &= ~(Mask(1) << v);
                progress = true;
            }
        }
    }
    return alive == 0;
}

// Finds a shortest chordless cycle of length >= 4, returned as vertex list.
inline std::vector<int> find_chordless_cycle(const std::vector<Mask>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> best;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nbrs;
        for (Mask m = adj[v]; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            nbrs.push_back(u);
        }
        for (size_t ai = 0; ai < nbrs.size(); ++ai) {
            for (size_t bi = ai + 1; bi < nbrs.size(); ++bi) {
                int a = nbrs[ai], b = nbrs[bi];
                if ((adj[a] >> b) & 1) continue;
                // shortest a-b path avoiding N[v] except at the endpoints
                Mask forbidden = (adj[v] | (Mask(1) << v)) & ~(Mask(1) << a) & ~(Mask(1) << b);
                std::vector<int> par(n, -2);
                std::queue<int> q;
                q.push(a);
                par[a] = -1;
                bool found = false;
                while (!q.empty() && !found) {
                    int u = q.front();
                    q.pop();
                    for (Mask m = adj[u] & ~forbidden; m;) {
                        int w = std::countr_zero(m);
                        m &= m - 1;
                        if (par[w] != -2) continue;
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
                path.push_back(v);  // cycle v-a-...-b-v
                std::rotate(path.begin(), path.end() - 1, path.end());
                if (best.empty() || path.size() < best.size()) best = path;
                if (best.size() == 4) return best;
            }
        }
    }
    return best;
}

inline bool fillin_search(std::vector<Mask>& adj, int budget) {
    auto cyc = find_chordless_cycle(adj);
    if (cyc.empty()) return true;
    if (budget == 0) return false;
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;  // cycle edge
            int a = cyc[i], b = cyc[j];
            if ((adj[a] >> b) & 1) continue;
            adj[a] |= Mask(1) << b;
            adj[b] |= Mask(1) << a;
            bool ok = fillin_search(adj, budget - 1);
            adj[a] &= ~(Mask(1) << b);
            adj[b] &= ~(Mask(1) << a);
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace detail

/// Minimum number of edges whose addition makes g chordal. Iterative
/// deepening over chord choices of chordless cycles.
inline int brute_min_fill_in(const Graph& g, const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_fillin, "brute_min_fill_in: graph too large");
    auto adj = adjacency_masks(g);
    if (detail::adj_chordal(adj)) return 0;
    for (int budget = 1;; ++budget) {
        auto work = adj;
        if (detail::fillin_search(work, budget)) return budget;
    }
}

/// Minimum leaf count over all spanning trees, by exhaustive enumeration
/// (include/exclude recursion over the edge list with connectivity pruning).
inline int brute_min_leaf_spanning_tree(const Graph& g, const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_widths, "brute_min_leaf_spanning_tree: graph too large");
    if (n == 1) return 0;
    if (brute_hamiltonian_path(g, b)) return 2;  // a spanning path is optimal
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    int best = n;
    std::vector<int> parent(n), rank_(n, 0), deg(n, 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::function<void(int, int)> rec = [&](int idx, int chosen) {
        if (chosen == n - 1) {
            int leaves = 0;
            for (int v = 0; v < n; ++v)
                if (deg[v] == 1) ++leaves;
            best = std::min(best, leaves);
            return;
        }
        if (idx == m || m - idx < n - 1 - chosen || best == 3) return;
        auto [u, v] = edges[idx];
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            auto saved_parent = parent;
            auto saved_rank = rank_;
            if (rank_[ru] < rank_[rv]) std::swap(ru, rv);
            parent[rv] = ru;
            if (rank_[ru] == rank_[rv]) ++rank_[ru];
            ++deg[u];
            ++deg[v];
            rec(idx + 1, chosen + 1);
            --deg[u];
            --deg[v];
            parent = saved_parent;
            rank_ = saved_rank;
        }
        rec(idx + 1, chosen);
    };
    rec(0, 0);
    return best;
}

struct ChvatalAnswer {
    bool holds = true;
    std::vector<int> worst_separator;  // maximizes c(G-S) - |S|; empty when trivial
    int worst_components = 0;
};

namespace detail {

inline ChvatalAnswer chvatal_scan(const Graph& g, int slack, const OracleBounds& b) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_chvatal, "brute_chvatal: graph too large");
    auto adj = adjacency_masks(g);
    Mask full = (Mask(1) << n) - 1;
    ChvatalAnswer ans;
    int best_gap = std::numeric_limits<int>::min();
    Mask best = 0;
    int best_c = 0;
    for (Mask s = 1; s < full; ++s) {
        Mask alive = full & ~s;
        int comps = 0;
        Mask left = alive;
        while (left) {
            ++comps;
            Mask frontier = Mask(1) << std::countr_zero(left);
            Mask comp = frontier;
            while (frontier) {
                Mask grow = 0;
                for (Mask m = frontier; m;) {
                    int u = std::countr_zero(m);
                    m &= m - 1;
                    grow |= adj[u] & alive & ~comp;
                }
                comp |= grow;
                frontier = grow;
            }
            left &= ~comp;
        }
        int gap = comps - std::popcount(s);
        if (gap > best_gap || (gap == best_gap && std::popcount(s) < std::popcount(best))) {
            best_gap = gap;
            best = s;
            best_c = comps;
        }
    }
    if (best_gap > slack) {
        ans.holds = false;
        ans.worst_components = best_c;
        for (int v = 0; v < n; ++v)
            if ((best >> v) & 1) ans.worst_separator.push_back(v);
    }
    return ans;
}

}  // namespace detail

/// Checks c(G-S) <= |S| for every non-empty proper S.
inline ChvatalAnswer brute_chvatal_cycle(const Graph& g, const OracleBounds& b = {}) {
    return detail::chvatal_scan(g, 0, b);
}

/// Checks c(G-S) <= |S| + 1 for every non-empty proper S.
inline ChvatalAnswer brute_chvatal_path(const Graph& g, const OracleBounds& b = {}) {
    return detail::chvatal_scan(g, 1, b);
}

inline std::vector<int> brute_min_connected_dominating_set(const Graph& g,
                                                           const OracleBounds& b = {}) {
    int n = g.vertex_count();
    require(n <= b.max_vertices_paths, "brute_min_connected_dominating_set: graph too large");
    if (n == 1) return {0};
    auto adj = adjacency_masks(g);
    Mask full = (Mask(1) << n) - 1;
    std::vector<Mask> by_size;
    for (Mask s = 1; s <= full; ++s) by_size.push_back(s);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](Mask a, Mask c) { return std::popcount(a) < std::popcount(c); });
    for (Mask s : by_size) {
        Mask closed = s;
        for (Mask m = s; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            closed |= adj[v];
        }
        if (closed != full) continue;
        // connectivity inside s
        Mask comp = Mask(1) << std::countr_zero(s);
        Mask frontier = comp;
        while (frontier) {
            Mask grow = 0;
            for (Mask m = frontier; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                grow |= adj[u] & s & ~comp;
            }
            comp |= grow;
            frontier = grow;
        }
        if (comp == s) {
            std::vector<int> out;
            for (int v = 0; v < n; ++v)
                if ((s >> v) & 1) out.push_back(v);
            return out;
        }
    }
    return {};  // unreachable for connected graphs
}

}  // namespace nno::oracle

#endif
