#ifndef NNOGRAPH_VARIANTS_HPP
#define NNOGRAPH_VARIANTS_HPP

#include <json.hpp>
#include <map>

#include "nnograph/hamiltonicity.hpp"

namespace nno {

struct CycleFamily {
    bool hamiltonian = false;
    std::map<int, std::vector<int>> cycles;  // even length -> cycle

    nlohmann::json to_json(const Graph& g) const {
        if (!hamiltonian) return {{"bipancyclic", false}, {"reason", "not_hamiltonian"}};
        nlohmann::json cs;
        for (const auto& [len, cyc] : cycles) cs[std::to_string(len)] = g.names_of(cyc);
        return {{"bipancyclic", true}, {"cycles", cs}};
    }
};

/// Every even cycle length 4..|V| as a prefix of the Hamiltonian order: the
/// vertex at each even position is on the A side and adjacent to b1[0].
inline CycleFamily bipancyclic_cycles(const Graph& g, const NNODecomposition& d) {
    CycleFamily fam;
    auto hc = hamiltonian_cycle(g, d);
    if (!hc.found()) return fam;
    fam.hamiltonian = true;
    const auto& order = hc.sequence;
    for (int len = 4; len <= g.vertex_count(); len += 2) {
        std::vector<int> cyc(order.begin(), order.begin() + len);
        if (!valid_cycle(g, cyc, false))
            throw StructureViolation("bipancyclic prefix failed validation");
        fam.cycles[len] = std::move(cyc);
    }
    return fam;
}

struct TraceabilityReport {
    bool traceable = false;
    std::string reason;
    std::vector<std::pair<int, std::vector<int>>> paths;  // start vertex -> path

    nlohmann::json to_json(const Graph& g) const {
        if (!traceable) return {{"homogeneously_traceable", false}, {"reason", reason}};
        nlohmann::json ps;
        for (const auto& [v, path] : paths) ps[g.name(v)] = g.names_of(path);
        return {{"homogeneously_traceable", true}, {"paths", ps}};
    }
};

/// Hamiltonian members are homogeneously traceable via cycle rotations; the
/// two-vertex graph is traceable outright. Everything else is not.
inline TraceabilityReport homogeneously_traceable(const Graph& g, const NNODecomposition& d) {
    TraceabilityReport rep;
    int n = g.vertex_count();
    if (n <= 2) {
        rep.traceable = true;
        for (int v = 0; v < n; ++v) {
            std::vector<int> p{v};
            for (int w = 0; w < n; ++w)
                if (w != v) p.push_back(w);
            rep.paths.emplace_back(v, std::move(p));
        }
        return rep;
    }
    auto hc = hamiltonian_cycle(g, d);
    if (!hc.found()) {
        rep.reason = "not_hamiltonian";
        return rep;
    }
    rep.traceable = true;
    const auto& cyc = hc.sequence;
    for (size_t s = 0; s < cyc.size(); ++s) {
        std::vector<int> p;
        for (size_t k = 0; k < cyc.size(); ++k) p.push_back(cyc[(s + k) % cyc.size()]);
        rep.paths.emplace_back(cyc[s], std::move(p));
    }
    return rep;
}

struct PathCoverReport {
    enum class Kind { OnePath, TwoPaths, MoreThanTwo };
    Kind kind = Kind::MoreThanTwo;
    std::vector<std::vector<int>> paths;
    std::string source;  // which rule produced the two-path cover

    nlohmann::json to_json(const Graph& g) const {
        nlohmann::json out;
        out["cover"] = kind == Kind::OnePath ? 1 : kind == Kind::TwoPaths ? 2 : -1;
        nlohmann::json ps = nlohmann::json::array();
        for (const auto& p : paths) ps.push_back(g.names_of(p));
        out["paths"] = ps;
        if (!source.empty()) out["source"] = source;
        return out;
    }
};

namespace detail {

// positions (1-based) violating d >= pos (non-strict mode) or d > pos
inline std::vector<int> violations(const Graph& g, const std::vector<int>& sats, bool strict) {
    std::vector<int> out;
    for (size_t k = 0; k < sats.size(); ++k) {
        int deg = g.degree(sats[k]);
        int pos = static_cast<int>(k) + 1;
        if (strict ? deg <= pos : deg < pos) out.push_back(pos);
    }
    return out;
}

// split of the equal-sides path construction at the a2 position r
inline std::vector<std::vector<int>> split_equal_at_a2(const NNODecomposition& d, int r) {
    std::vector<int> p1, p2;
    for (int k = 0; k < r - 1; ++k) {
        p1.push_back(d.a2[k]);
        p1.push_back(d.b1[k]);
    }
    p1.push_back(d.a2[r - 1]);
    p2.push_back(d.b1[r - 1]);
    for (int k = r; k < d.p(); ++k) {
        p2.push_back(d.a2[k]);
        p2.push_back(d.b1[k]);
    }
    for (int l = d.q(), k = d.p(); l < d.i(); ++l, ++k) {
        p2.push_back(d.a1[l]);
        p2.push_back(d.b1[k]);
    }
    for (int h = d.q() - 1; h >= 0; --h) {
        p2.push_back(d.a1[h]);
        p2.push_back(d.b2[h]);
    }
    return {p1, p2};
}

// split of the plus-one path construction at the a2 position r
inline std::vector<std::vector<int>> split_plus_one_at_a2(const NNODecomposition& d, int r) {
    std::vector<int> p1, p2;
    for (int k = 0; k < r - 1; ++k) {
        p1.push_back(d.a2[k]);
        p1.push_back(d.b1[k]);
    }
    p1.push_back(d.a2[r - 1]);
    p2.push_back(d.b1[r - 1]);
    for (int k = r; k < d.p(); ++k) {
        p2.push_back(d.a2[k]);
        p2.push_back(d.b1[k]);
    }
    for (int l = d.q() + 1, k = d.p(); l < d.i(); ++l, ++k) {
        p2.push_back(d.a1[l]);
        p2.push_back(d.b1[k]);
    }
    p2.push_back(d.a1[d.q()]);
    for (int h = d.q() - 1; h >= 0; --h) {
        p2.push_back(d.b2[h]);
        p2.push_back(d.a1[h]);
    }
    return {p1, p2};
}

// split of the equal-sides construction at the b2 position r
inline std::vector<std::vector<int>> split_equal_at_b2(const NNODecomposition& d, int r) {
    std::vector<int> p1, p2;
    for (int k = 0; k < d.p(); ++k) {
        p1.push_back(d.a2[k]);
        p1.push_back(d.b1[k]);
    }
    for (int l = d.q(), k = d.p(); l < d.i(); ++l, ++k) {
        p1.push_back(d.a1[l]);
        p1.push_back(d.b1[k]);
    }
    for (int h = d.q() - 1; h >= r - 1; --h) {
        p1.push_back(d.a1[h]);
        if (h > r - 1) p1.push_back(d.b2[h]);
    }
    p2.push_back(d.b2[r - 1]);
    for (int h = r - 2; h >= 0; --h) {
        p2.push_back(d.a1[h]);
        p2.push_back(d.b2[h]);
    }
    return {p1, p2};
}

// split of the plus-one construction at the b2 position r
inline std::vector<std::vector<int>> split_plus_one_at_b2(const NNODecomposition& d, int r) {
    std::vector<int> p1, p2;
    for (int k = 0; k < d.p(); ++k) {
        p1.push_back(d.a2[k]);
        p1.push_back(d.b1[k]);
    }
    for (int l = d.q() + 1, k = d.p(); l < d.i(); ++l, ++k) {
        p1.push_back(d.a1[l]);
        p1.push_back(d.b1[k]);
    }
    p1.push_back(d.a1[d.q()]);
    for (int h = d.q() - 1; h >= r; --h) {
        p1.push_back(d.b2[h]);
        p1.push_back(d.a1[h]);
    }
    p2.push_back(d.b2[r - 1]);
    for (int h = r - 1; h >= 1; --h) {
        p2.push_back(d.a1[h]);
        p2.push_back(d.b2[h - 1]);
    }
    p2.push_back(d.a1[0]);
    return {p1, p2};
}

}  // namespace detail

inline bool has_hamiltonian_path_after_removal(const Graph& g, int w);

/// Decides whether V splits into exactly two disjoint simple paths. The four
/// unique-violation cases split the Hamiltonian-path construction in two;
/// beyond those, a cover of the form (single vertex, Hamiltonian path of the
/// rest) is searched over all single removals.
inline PathCoverReport exactly_two_path_cover(const Graph& g, const NNODecomposition& d) {
    PathCoverReport rep;
    auto hp = hamiltonian_path(g, d);
    if (hp.found()) {
        rep.kind = PathCoverReport::Kind::OnePath;
        rep.paths = {hp.sequence};
        return rep;
    }
    int diff = d.side_a_size() - d.side_b_size();
    auto finish_two = [&](std::vector<std::vector<int>> paths, std::string source) {
        size_t covered = 0;
        for (const auto& p : paths) {
            if (!valid_path(g, p, false))
                throw StructureViolation("path cover construction failed validation");
            covered += p.size();
        }
        std::vector<char> seen(g.vertex_count(), 0);
        for (const auto& p : paths)
            for (int v : p) {
                if (seen[v]) throw StructureViolation("path cover overlaps");
                seen[v] = 1;
            }
        if (static_cast<int>(covered) != g.vertex_count())
            throw StructureViolation("path cover misses vertices");
        rep.kind = PathCoverReport::Kind::TwoPaths;
        rep.paths = std::move(paths);
        rep.source = std::move(source);
        return rep;
    };

    if (diff == 0 || diff == 1) {
        auto va = detail::violations(g, d.a2, false);
        auto vb_weak = detail::violations(g, d.b2, false);
        auto vb_strict = detail::violations(g, d.b2, true);
        if (diff == 0) {
            if (va.size() == 1 && vb_weak.empty())
                return finish_two(detail::split_equal_at_a2(d, va[0]), "unique_a2_violation");
            if (va.empty() && vb_weak.size() == 1)
                return finish_two(detail::split_equal_at_b2(d, vb_weak[0]), "unique_b2_violation");
        } else {
            if (va.size() == 1 && vb_strict.empty())
                return finish_two(detail::split_plus_one_at_a2(d, va[0]), "unique_a2_violation");
            if (va.empty() && vb_strict.size() == 1)
                return finish_two(detail::split_plus_one_at_b2(d, vb_strict[0]),
                                  "unique_b2_violation");
        }
    }
    // single vertex + Hamiltonian path of the remainder
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (has_hamiltonian_path_after_removal(g, w)) {
            Graph h = g.without_vertex(w);
            auto hd = nno_decompose(h);
            auto rest = hamiltonian_path(h, hd);
            std::vector<int> mapped;
            for (int v : rest.sequence) mapped.push_back(g.index_of(h.name(v)));
            return finish_two({mapped, {w}}, "vertex_removal");
        }
    }
    return rep;  // MoreThanTwo
}

inline bool has_hamiltonian_path_after_removal(const Graph& g, int w) {
    Graph h = g.without_vertex(w);
    if (h.vertex_count() == 0) return false;
    if (!h.connected()) return false;
    auto hd = nno_decompose(h);  // class membership is hereditary given connectivity
    return hamiltonian_path(h, hd).found();
}

struct ConnectedReport {
    bool degenerate_connected = false;  // one or two vertices: trivially connected
    std::pair<int, int> witness{-1, -1};
    std::string reason;

    nlohmann::json to_json(const Graph& g) const {
        if (degenerate_connected) return {{"hamiltonian_connected", true}, {"degenerate", true}};
        return {{"hamiltonian_connected", false},
                {"witness", {g.name(witness.first), g.name(witness.second)}},
                {"reason", reason}};
    }
};

/// Members on three or more vertices are never Hamiltonian connected: for
/// balanced sides a same-side pair cannot be joined (parity), for |A|=|B|+1
/// a cross pair cannot, and without any Hamiltonian path every pair works.
inline ConnectedReport hamiltonian_connected(const Graph& g, const NNODecomposition& d) {
    ConnectedReport rep;
    if (g.vertex_count() <= 2) {
        rep.degenerate_connected = true;
        return rep;
    }
    int diff = d.side_a_size() - d.side_b_size();
    if (diff == 0) {
        if (d.p() >= 2)
            rep.witness = {d.a2[0], d.a2[1]};
        else if (d.i() >= 2)
            rep.witness = {d.a1[0], d.a1[1]};
        else
            rep.witness = {d.a1[0], d.a2[0]};
        rep.reason = "same_side_parity";
    } else if (diff == 1) {
        rep.witness = {d.a1[0], d.b1[0]};
        rep.reason = "cross_side_parity";
    } else {
        rep.witness = {d.a1[0], d.b1[0]};
        rep.reason = "no_hamiltonian_path";
    }
    return rep;
}

struct HypoPathReport {
    enum class Status { NotApplicable, Witness, EmptyWitnessPool };
    Status status = Status::NotApplicable;
    int witness = -1;  // G - witness still has no Hamiltonian path

    nlohmann::json to_json(const Graph& g) const {
        switch (status) {
            case Status::NotApplicable:
                return {{"path_hypohamiltonian", false}, {"reason", "has_hamiltonian_path"}};
            case Status::Witness:
                return {{"path_hypohamiltonian", false}, {"witness", g.name(witness)}};
            default:
                return {{"path_hypohamiltonian", false}, {"reason", "empty_witness_pool"}};
        }
    }
};

/// Refutes path-hypohamiltonicity: finds w with no Hamiltonian path in G-w,
/// verified by re-running the pipeline on the reduced graph. Preferred
/// witnesses follow the case analysis; a full scan backs them up.
inline HypoPathReport path_hypohamiltonian(const Graph& g, const NNODecomposition& d) {
    HypoPathReport rep;
    if (hamiltonian_path(g, d).found()) return rep;
    std::vector<int> candidates;
    int diff = d.side_a_size() - d.side_b_size();
    if (diff == 0) {
        if (d.q() >= 1) candidates.push_back(d.b2[0]);
        if (d.p() >= 1) candidates.push_back(d.a2[0]);
    } else {
        candidates.push_back(d.b1.back());
    }
    for (int v = 0; v < g.vertex_count(); ++v) candidates.push_back(v);
    std::vector<char> tried(g.vertex_count(), 0);
    for (int w : candidates) {
        if (tried[w]) continue;
        tried[w] = 1;
        if (!has_hamiltonian_path_after_removal(g, w)) {
            rep.status = HypoPathReport::Status::Witness;
            rep.witness = w;
            return rep;
        }
    }
    rep.status = HypoPathReport::Status::EmptyWitnessPool;
    return rep;
}

}  // namespace nno

#endif
