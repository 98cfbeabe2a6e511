#ifndef NNOGRAPH_EXTREMAL_HPP
#define NNOGRAPH_EXTREMAL_HPP

#include <json.hpp>

#include "nnograph/hamiltonicity.hpp"
#include "nnograph/oracle.hpp"

namespace nno {

enum class PruneMode { Path, Cycle };

struct PruneRecord {
    int vertex;
    int position;  // 1-based position at removal time
    int degree;
};

struct PruneTrace {
    std::vector<PruneRecord> removed_a2, removed_b2;
    PruneMode mode = PruneMode::Path;
};

struct PruneOutcome {
    PruneTrace trace;
    NNODecomposition reduced;
};

/// Iteratively removes the first satellite whose degree falls below its
/// (relabeled) position: d < pos in path mode, d <= pos in cycle mode.
inline PruneOutcome prune(const Graph& g, const NNODecomposition& d, PruneMode mode) {
    PruneOutcome out;
    out.trace.mode = mode;
    out.reduced = d;
    auto sweep = [&](std::vector<int>& sats, std::vector<PruneRecord>& removed) {
        bool again = true;
        while (again) {
            again = false;
            for (size_t k = 0; k < sats.size(); ++k) {
                int deg = g.degree(sats[k]);
                int pos = static_cast<int>(k) + 1;
                bool bad = mode == PruneMode::Path ? deg < pos : deg <= pos;
                if (bad) {
                    removed.push_back({sats[k], pos, deg});
                    sats.erase(sats.begin() + k);
                    again = true;
                    break;
                }
            }
        }
    };
    sweep(out.reduced.a2, out.trace.removed_a2);
    sweep(out.reduced.b2, out.trace.removed_b2);
    return out;
}

namespace detail {

// side surplus drops: satellite tail first, then the core tail
inline void drop_from_a(NNODecomposition& d, int count, std::vector<int>& dropped) {
    while (count-- > 0) {
        if (!d.a2.empty()) {
            dropped.push_back(d.a2.back());
            d.a2.pop_back();
        } else {
            dropped.push_back(d.a1.back());
            d.a1.pop_back();
        }
    }
}

inline int effective_b2_degree(const Graph& g, const NNODecomposition& d, int v) {
    return std::min(g.degree(v), d.i());  // neighborhoods are a1 prefixes
}

inline std::vector<int> all_vertices(const NNODecomposition& d) {
    std::vector<int> vs = d.a1;
    vs.insert(vs.end(), d.b1.begin(), d.b1.end());
    vs.insert(vs.end(), d.a2.begin(), d.a2.end());
    vs.insert(vs.end(), d.b2.begin(), d.b2.end());
    return vs;
}

inline void check_covers(const Graph& g, const std::vector<int>& seq,
                         const NNODecomposition& d, bool cycle) {
    std::vector<int> want = all_vertices(d);
    std::sort(want.begin(), want.end());
    std::vector<int> got = seq;
    std::sort(got.begin(), got.end());
    bool shape_ok = cycle ? valid_cycle(g, seq, false) : valid_path(g, seq, false);
    if (!shape_ok || got != want)
        throw StructureViolation("pruned construction failed validation");
}

}  // namespace detail

struct LongestPathResult {
    std::vector<int> path;
    std::vector<int> excluded;  // pruned then dropped, in removal order
    PruneTrace trace;
};

/// Longest path: path-mode pruning, side equalization to |A| = |B| or
/// |A| = |B|+1 (dropping surplus from the satellite tail, then the core
/// tail), and the Hamiltonian-path construction on what is left.
inline LongestPathResult longest_path(const Graph& g, const NNODecomposition& d) {
    LongestPathResult res;
    if (g.vertex_count() == 1) {
        res.path = {d.a1[0]};
        return res;
    }
    auto pruned = prune(g, d, PruneMode::Path);
    res.trace = pruned.trace;
    NNODecomposition cur = std::move(pruned.reduced);
    for (const auto& r : res.trace.removed_a2) res.excluded.push_back(r.vertex);
    for (const auto& r : res.trace.removed_b2) res.excluded.push_back(r.vertex);
    if (cur.side_a_size() < cur.side_b_size()) cur = cur.swapped();

    int f = cur.side_a_size() - cur.side_b_size() - 1;
    if (f > 0) detail::drop_from_a(cur, f, res.excluded);
    bool equal_mode = cur.side_a_size() == cur.side_b_size();
    if (!equal_mode) {
        // one spare A vertex; a b2 vertex whose effective degree equals its
        // position blocks the plus-one construction, so drop one more
        bool blocked = false;
        for (int h = 0; h < cur.q(); ++h)
            if (detail::effective_b2_degree(g, cur, cur.b2[h]) == h + 1) {
                blocked = true;
                break;
            }
        if (blocked) {
            detail::drop_from_a(cur, 1, res.excluded);
            equal_mode = true;
        }
    }
    res.path = equal_mode ? hamiltonian_path_order_equal(cur) : hamiltonian_path_order_plus_one(cur);
    detail::check_covers(g, res.path, cur, false);
    return res;
}

struct LongestCycleResult {
    bool acyclic = false;
    std::vector<int> cycle;
    std::vector<int> excluded;
    PruneTrace trace;
};

inline LongestCycleResult longest_cycle(const Graph& g, const NNODecomposition& d) {
    LongestCycleResult res;
    if (g.edge_count() < g.vertex_count()) {  // connected, so this means a tree
        res.acyclic = true;
        return res;
    }
    auto pruned = prune(g, d, PruneMode::Cycle);
    res.trace = pruned.trace;
    NNODecomposition cur = std::move(pruned.reduced);
    for (const auto& r : res.trace.removed_a2) res.excluded.push_back(r.vertex);
    for (const auto& r : res.trace.removed_b2) res.excluded.push_back(r.vertex);
    if (cur.side_a_size() < cur.side_b_size()) cur = cur.swapped();
    int f = cur.side_a_size() - cur.side_b_size();
    if (f > 0) detail::drop_from_a(cur, f, res.excluded);
    res.cycle = hamiltonian_cycle_order(cur);
    detail::check_covers(g, res.cycle, cur, true);
    return res;
}

struct SpanningTreeResult {
    std::vector<std::pair<int, int>> edges;
    int leaf_count = 0;
    std::vector<int> spine;  // the longest path used as the trunk
};

/// Longest path plus every excluded vertex attached as a leaf to an interior
/// neighbor of the path.
inline SpanningTreeResult min_leaf_spanning_tree(const Graph& g, const NNODecomposition& d) {
    auto lp = longest_path(g, d);
    SpanningTreeResult res;
    res.spine = lp.path;
    for (size_t k = 0; k + 1 < lp.path.size(); ++k) res.edges.emplace_back(lp.path[k], lp.path[k + 1]);
    std::vector<char> interior(g.vertex_count(), 0);
    for (size_t k = 1; k + 1 < lp.path.size(); ++k) interior[lp.path[k]] = 1;
    for (int w : lp.excluded) {
        int host = -1;
        for (int nb : g.neighbors(w))
            if (interior[nb]) {
                host = nb;
                break;
            }
        if (host < 0) throw StructureViolation("excluded vertex has no interior attachment");
        res.edges.emplace_back(host, w);
    }
    std::vector<int> deg(g.vertex_count(), 0);
    for (auto [u, v] : res.edges) {
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[v] == 1) ++res.leaf_count;
    return res;
}

/// {x1, y1} in prefix order, or the single hub when one side is a lone
/// vertex with no satellites.
inline std::vector<int> min_connected_dominating_set(const Graph& g, const NNODecomposition& d) {
    if (g.vertex_count() == 1) return {d.a1[0]};
    if (d.j() == 1 && d.q() == 0) return {d.b1[0]};
    return {d.a1[0], d.b1[0]};
}

// ---------------------------------------------------------------------------
// Steiner paths and cycles

struct SteinerResult {
    enum class Status { Found, NoSolution, UnsupportedPattern };
    Status status = Status::NoSolution;
    std::vector<int> sequence;
    int steiner_vertices = 0;
    bool from_fallback = false;
    std::string witness;  // violated condition for lemma-certified negatives

    nlohmann::json to_json(const Graph& g) const {
        nlohmann::json out;
        out["found"] = status == Status::Found;
        if (status == Status::Found) {
            out["sequence"] = g.names_of(sequence);
            out["steiner_vertices"] = steiner_vertices;
        }
        if (status == Status::UnsupportedPattern) out["unsupported_pattern"] = true;
        if (!witness.empty()) out["witness"] = witness;
        out["source"] = from_fallback ? "fallback" : "lemma";
        return out;
    }
};

namespace steiner_detail {

struct Sides {
    std::vector<int> in_a1, in_b1, in_a2, in_b2;  // in stored part order
};

inline Sides classify(const NNODecomposition& d, const std::vector<int>& terminals) {
    Sides s;
    auto member = [&](const std::vector<int>& part, int v) {
        return std::find(part.begin(), part.end(), v) != part.end();
    };
    for (int v : d.a1)
        if (member(terminals, v)) s.in_a1.push_back(v);
    for (int v : d.b1)
        if (member(terminals, v)) s.in_b1.push_back(v);
    for (int v : d.a2)
        if (member(terminals, v)) s.in_a2.push_back(v);
    for (int v : d.b2)
        if (member(terminals, v)) s.in_b2.push_back(v);
    return s;
}

// R inside a2: interleave with the b1 prefix. Existence is exactly the
// ladder condition d(w_k) >= k for k < r.
inline SteinerResult pure_satellite_path(const Graph& g, const NNODecomposition& d,
                                         const std::vector<int>& terms) {
    SteinerResult res;
    int r = static_cast<int>(terms.size());
    for (int k = 0; k + 1 < r; ++k) {
        if (g.degree(terms[k]) < k + 1) {
            res.status = SteinerResult::Status::NoSolution;
            res.witness = "terminal " + g.name(terms[k]) + " has degree " +
                          std::to_string(g.degree(terms[k])) + " < position " + std::to_string(k + 1);
            return res;
        }
    }
    res.status = SteinerResult::Status::Found;
    for (int k = 0; k < r; ++k) {
        res.sequence.push_back(terms[k]);
        if (k + 1 < r) res.sequence.push_back(d.b1[k]);
    }
    res.steiner_vertices = r - 1;
    return res;
}

inline SteinerResult pure_satellite_cycle(const Graph& g, const NNODecomposition& d,
                                          const std::vector<int>& terms) {
    SteinerResult res;
    int r = static_cast<int>(terms.size());
    for (int k = 0; k + 1 < r; ++k) {
        if (g.degree(terms[k]) <= k + 1) {
            res.witness = "terminal " + g.name(terms[k]) + " has degree " +
                          std::to_string(g.degree(terms[k])) + " <= position " + std::to_string(k + 1);
            return res;
        }
    }
    if (g.degree(terms[r - 1]) < r) {  // closing edge back to b1[0]
        res.witness = "terminal " + g.name(terms[r - 1]) + " cannot close the cycle";
        return res;
    }
    res.status = SteinerResult::Status::Found;
    for (int k = 0; k < r; ++k) {
        res.sequence.push_back(d.b1[k]);
        res.sequence.push_back(terms[k]);
    }
    res.steiner_vertices = r;
    return res;
}

// positions (1-based) of core terminals in the stored a1 order
inline std::vector<int> core_positions(const NNODecomposition& d, const std::vector<int>& terms) {
    std::vector<int> pos;
    for (int t : terms)
        pos.push_back(static_cast<int>(std::find(d.a1.begin(), d.a1.end(), t) - d.a1.begin()) + 1);
    return pos;
}

// R inside a1. Low gaps take b2 connectors when the b1 supply runs out.
inline SteinerResult pure_core_path(const Graph& g, const NNODecomposition& d,
                                    const std::vector<int>& terms) {
    SteinerResult res;
    int r = static_cast<int>(terms.size());
    auto pos = core_positions(d, terms);
    int k = r - 1 - d.j();
    if (k <= 0) {
        res.status = SteinerResult::Status::Found;
        for (int t = 0; t < r; ++t) {
            res.sequence.push_back(terms[t]);
            if (t + 1 < r) res.sequence.push_back(d.b1[t]);
        }
        res.steiner_vertices = r - 1;
        return res;
    }
    if (d.q() < k) {
        res.witness = "needs " + std::to_string(k) + " b2 connectors, only " +
                      std::to_string(d.q()) + " exist";
        return res;
    }
    std::vector<int> chosen(d.b2.end() - k, d.b2.end());  // k largest degrees, ascending
    for (int h = 0; h < k; ++h) {
        if (g.degree(chosen[h]) < pos[h + 1]) {
            res.witness = "no b2 connector reaches " + g.name(terms[h + 1]);
            return res;
        }
    }
    res.status = SteinerResult::Status::Found;
    for (int t = 0; t < r; ++t) {
        res.sequence.push_back(terms[t]);
        if (t < k)
            res.sequence.push_back(chosen[t]);
        else if (t + 1 < r)
            res.sequence.push_back(d.b1[t - k]);
    }
    res.steiner_vertices = r - 1;
    return res;
}

inline SteinerResult pure_core_cycle(const Graph& g, const NNODecomposition& d,
                                     const std::vector<int>& terms) {
    SteinerResult res;
    int r = static_cast<int>(terms.size());
    auto pos = core_positions(d, terms);
    int k = r - d.j();
    if (k <= 0) {
        res.status = SteinerResult::Status::Found;
        for (int t = 0; t < r; ++t) {
            res.sequence.push_back(terms[t]);
            res.sequence.push_back(d.b1[t]);
        }
        res.steiner_vertices = r;
        return res;
    }
    if (d.q() < k) {
        res.witness = "needs " + std::to_string(k) + " b2 connectors, only " +
                      std::to_string(d.q()) + " exist";
        return res;
    }
    std::vector<int> chosen(d.b2.end() - k, d.b2.end());
    for (int h = 0; h < k; ++h) {
        if (g.degree(chosen[h]) < pos[h + 1]) {
            res.witness = "no b2 connector reaches " + g.name(terms[h + 1]);
            return res;
        }
    }
    res.status = SteinerResult::Status::Found;
    for (int t = 0; t < r; ++t) {
        res.sequence.push_back(terms[t]);
        if (t < k)
            res.sequence.push_back(chosen[t]);
        else
            res.sequence.push_back(d.b1[t - k]);
    }
    res.steiner_vertices = r;
    return res;
}

// R meeting a1 and b2: satellites double as connectors between core
// terminals. Conditions failing here fall back to exhaustive search, the
// arrangement below is only claimed optimal when it applies.
inline std::optional<SteinerResult> mixed_path(const Graph& g, const NNODecomposition& d,
                                               const std::vector<int>& core,
                                               const std::vector<int>& sats) {
    SteinerResult res;
    int m = static_cast<int>(core.size()), l = static_cast<int>(sats.size());
    auto pos = core_positions(d, core);
    auto deg = [&](int v) { return g.degree(v); };
    if (l <= m - 1) {
        for (int t = 0; t < l; ++t)
            if (deg(sats[t]) < pos[t + 1]) return std::nullopt;
        int rest = m - 1 - l;  // gaps still needing a connector
        int k = rest - d.j();
        std::vector<int> extra;
        if (k > 0) {
            if (d.q() - l < k) return std::nullopt;  // not enough unused b2
            std::vector<int> unused;
            for (int v : d.b2)
                if (std::find(sats.begin(), sats.end(), v) == sats.end()) unused.push_back(v);
            if (static_cast<int>(unused.size()) < k) return std::nullopt;
            extra.assign(unused.end() - k, unused.end());
            for (int h = 0; h < k; ++h)
                if (deg(extra[h]) < pos[l + h + 1]) return std::nullopt;
        }
        res.status = SteinerResult::Status::Found;
        int used_extra = 0, used_y = 0;
        for (int t = 0; t < m; ++t) {
            res.sequence.push_back(core[t]);
            if (t + 1 == m) break;
            if (t < l)
                res.sequence.push_back(sats[t]);
            else if (used_extra < static_cast<int>(extra.size()))
                res.sequence.push_back(extra[used_extra++]);
            else
                res.sequence.push_back(d.b1[used_y++]);
        }
        res.steiner_vertices = m - 1 - l;
        return res;
    }
    if (l == m || l == m + 1) {
        for (int t = 0; t < m; ++t)
            if (deg(sats[t]) < pos[t]) return std::nullopt;
        if (l == m + 1 && deg(sats[m]) < pos[m - 1]) return std::nullopt;
        res.status = SteinerResult::Status::Found;
        for (int t = 0; t < m; ++t) {
            res.sequence.push_back(sats[t]);
            res.sequence.push_back(core[t]);
        }
        if (l == m + 1) res.sequence.push_back(sats[m]);
        res.steiner_vertices = 0;
        return res;
    }
    // l > m+1: chain the lightest satellites through spare core vertices
    int extras = l - m - 1;
    std::vector<std::pair<int, int>> spare;  // (a1 position, vertex), ascending
    for (int idx = 0; idx < d.i(); ++idx)
        if (std::find(core.begin(), core.end(), d.a1[idx]) == core.end())
            spare.emplace_back(idx + 1, d.a1[idx]);
    std::vector<int> chain_x;
    {
        size_t next = 0;
        for (int t = 0; t < extras; ++t) {
            if (next >= spare.size() || spare[next].first > deg(sats[t])) return std::nullopt;
            chain_x.push_back(spare[next++].second);
        }
    }
    if (deg(sats[extras]) < pos[0]) return std::nullopt;
    for (int t = 0; t < m; ++t)
        if (deg(sats[extras + 1 + t]) < pos[std::min(t + 1, m - 1)]) return std::nullopt;
    res.status = SteinerResult::Status::Found;
    for (int t = 0; t < extras; ++t) {
        res.sequence.push_back(sats[t]);
        res.sequence.push_back(chain_x[t]);
    }
    res.sequence.push_back(sats[extras]);
    for (int t = 0; t < m; ++t) {
        res.sequence.push_back(core[t]);
        res.sequence.push_back(sats[extras + 1 + t]);
    }
    res.steiner_vertices = extras;
    return res;
}

inline std::optional<SteinerResult> mixed_cycle(const Graph& g, const NNODecomposition& d,
                                                const std::vector<int>& core,
                                                const std::vector<int>& sats) {
    SteinerResult res;
    int m = static_cast<int>(core.size()), l = static_cast<int>(sats.size());
    auto pos = core_positions(d, core);
    auto deg = [&](int v) { return g.degree(v); };
    if (m < 2) return std::nullopt;  // the alternating cycle needs 4 vertices
    if (l > m) return std::nullopt;  // handled by fallback (needs spare-core chaining)
    // wrap gap takes the largest satellite or a free connector
    if (l == m) {
        for (int t = 0; t + 1 < m; ++t)
            if (deg(sats[t]) < pos[t + 1]) return std::nullopt;
        if (deg(sats[l - 1]) < pos[m - 1]) return std::nullopt;  // wrap to the last core terminal
        res.status = SteinerResult::Status::Found;
        for (int t = 0; t < m; ++t) {
            res.sequence.push_back(core[t]);
            if (t + 1 < m)
                res.sequence.push_back(sats[t]);
        }
        res.sequence.push_back(sats[l - 1]);
        res.steiner_vertices = 0;
        return res;
    }
    for (int t = 0; t < l; ++t)
        if (deg(sats[t]) < pos[t + 1]) return std::nullopt;
    int rest = m - l;  // remaining gaps including the wrap
    int k = rest - d.j();
    std::vector<int> extra;
    if (k > 0) {
        std::vector<int> unused;
        for (int v : d.b2)
            if (std::find(sats.begin(), sats.end(), v) == sats.end()) unused.push_back(v);
        if (static_cast<int>(unused.size()) < k) return std::nullopt;
        extra.assign(unused.end() - k, unused.end());
        for (int h = 0; h < k; ++h)
            if (deg(extra[h]) < pos[l + h + 1]) return std::nullopt;
    }
    res.status = SteinerResult::Status::Found;
    int used_extra = 0, used_y = 0;
    for (int t = 0; t < m; ++t) {
        res.sequence.push_back(core[t]);
        if (t < l)
            res.sequence.push_back(sats[t]);
        else if (used_extra < static_cast<int>(extra.size()))
            res.sequence.push_back(extra[used_extra++]);
        else
            res.sequence.push_back(d.b1[used_y++]);
    }
    res.steiner_vertices = m - l;
    return res;
}

inline SteinerResult fallback(const Graph& g, const std::vector<int>& terminals, bool cycle,
                              const oracle::OracleBounds& bounds,
                              const oracle::PathTables* tables) {
    SteinerResult res;
    res.from_fallback = true;
    if (g.vertex_count() > bounds.max_vertices_paths) {
        res.status = SteinerResult::Status::UnsupportedPattern;
        return res;
    }
    auto ans = tables ? (cycle ? oracle::brute_steiner_cycle(g, terminals, *tables)
                               : oracle::brute_steiner_path(g, terminals, *tables))
                      : (cycle ? oracle::brute_steiner_cycle(g, terminals, bounds)
                               : oracle::brute_steiner_path(g, terminals, bounds));
    if (ans.found) {
        res.status = SteinerResult::Status::Found;
        res.sequence = ans.sequence;
        res.steiner_vertices = ans.steiner_vertices;
    }
    return res;
}

}  // namespace steiner_detail

inline SteinerResult steiner_path(const Graph& g, const NNODecomposition& d,
                                  const std::vector<int>& terminals,
                                  const oracle::OracleBounds& bounds = {},
                                  const oracle::PathTables* tables = nullptr) {
    using namespace steiner_detail;
    if (terminals.empty()) throw std::invalid_argument("steiner_path: empty terminal set");
    if (terminals.size() == 1) {
        SteinerResult res;
        res.status = SteinerResult::Status::Found;
        res.sequence = {terminals[0]};
        return res;
    }
    auto sides = classify(d, terminals);
    size_t total = sides.in_a1.size() + sides.in_b1.size() + sides.in_a2.size() + sides.in_b2.size();
    if (total != terminals.size()) throw std::invalid_argument("steiner_path: unknown terminal");
    auto finish = [&](SteinerResult res) {
        if (res.status == SteinerResult::Status::Found &&
            !valid_path(g, res.sequence, false))
            throw StructureViolation("steiner path failed validation");
        return res;
    };
    bool only_a = sides.in_b1.empty() && sides.in_b2.empty();
    bool only_b = sides.in_a1.empty() && sides.in_a2.empty();
    if (only_a && sides.in_a1.empty()) return finish(pure_satellite_path(g, d, sides.in_a2));
    if (only_b && sides.in_b1.empty())
        return finish(pure_satellite_path(g, d.swapped(), sides.in_b2));
    if (only_a && sides.in_a2.empty()) return finish(pure_core_path(g, d, sides.in_a1));
    if (only_b && sides.in_b2.empty())
        return finish(pure_core_path(g, d.swapped(), sides.in_b1));
    if (sides.in_a2.empty() && sides.in_b1.empty()) {
        if (auto r = mixed_path(g, d, sides.in_a1, sides.in_b2)) return finish(*r);
        return fallback(g, terminals, false, bounds, tables);
    }
    if (sides.in_b2.empty() && sides.in_a1.empty()) {
        if (auto r = mixed_path(g, d.swapped(), sides.in_b1, sides.in_a2)) return finish(*r);
        return fallback(g, terminals, false, bounds, tables);
    }
    return fallback(g, terminals, false, bounds, tables);
}

inline SteinerResult steiner_cycle(const Graph& g, const NNODecomposition& d,
                                   const std::vector<int>& terminals,
                                   const oracle::OracleBounds& bounds = {},
                                   const oracle::PathTables* tables = nullptr) {
    using namespace steiner_detail;
    if (terminals.empty()) throw std::invalid_argument("steiner_cycle: empty terminal set");
    auto sides = classify(d, terminals);
    size_t total = sides.in_a1.size() + sides.in_b1.size() + sides.in_a2.size() + sides.in_b2.size();
    if (total != terminals.size()) throw std::invalid_argument("steiner_cycle: unknown terminal");
    auto finish = [&](SteinerResult res) {
        if (res.status == SteinerResult::Status::Found && !valid_cycle(g, res.sequence, false))
            throw StructureViolation("steiner cycle failed validation");
        return res;
    };
    if (terminals.size() == 1) return fallback(g, terminals, true, bounds, tables);
    bool only_a = sides.in_b1.empty() && sides.in_b2.empty();
    bool only_b = sides.in_a1.empty() && sides.in_a2.empty();
    if (only_a && sides.in_a1.empty()) return finish(pure_satellite_cycle(g, d, sides.in_a2));
    if (only_b && sides.in_b1.empty())
        return finish(pure_satellite_cycle(g, d.swapped(), sides.in_b2));
    if (only_a && sides.in_a2.empty()) return finish(pure_core_cycle(g, d, sides.in_a1));
    if (only_b && sides.in_b2.empty())
        return finish(pure_core_cycle(g, d.swapped(), sides.in_b1));
    if (sides.in_a2.empty() && sides.in_b1.empty()) {
        if (auto r = mixed_cycle(g, d, sides.in_a1, sides.in_b2)) return finish(*r);
        return fallback(g, terminals, true, bounds, tables);
    }
    if (sides.in_b2.empty() && sides.in_a1.empty()) {
        if (auto r = mixed_cycle(g, d.swapped(), sides.in_b1, sides.in_a2)) return finish(*r);
        return fallback(g, terminals, true, bounds, tables);
    }
    return fallback(g, terminals, true, bounds, tables);
}

}  // namespace nno

#endif
