#ifndef NNOGRAPH_RECOGNITION_HPP
#define NNOGRAPH_RECOGNITION_HPP

#include <functional>

#include "nnograph/graph.hpp"

// Membership test for "connected P5-free chordal bipartite" with explicit
// witnesses. Detection is exhaustive; intended for desk-scale inputs.

namespace nno {

struct RecognitionReport {
    enum class Failure { None, NotConnected, NotBipartite, LongInducedCycle, InducedP5 };
    bool is_member = false;
    Failure failure = Failure::None;
    std::vector<int> witness;  // induced path / chordless cycle / odd cycle

    static const char* failure_name(Failure f) {
        switch (f) {
            case Failure::NotConnected: return "NotConnected";
            case Failure::NotBipartite: return "NotBipartite";
            case Failure::LongInducedCycle: return "LongInducedCycle";
            case Failure::InducedP5: return "InducedP5";
            default: return "None";
        }
    }
};

/// Searches for an induced path on five vertices. Returns it in path order,
/// or nullopt when none exists. DFS over induced path extensions, vertices
/// tried in input order.
inline std::optional<std::vector<int>> find_induced_p5(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::optional<std::vector<int>> hit;

    auto extendable = [&](int w) {
        if (used[w]) return false;
        // adjacent to the tail, non-adjacent to everything before it
        if (!g.adjacent(path.back(), w)) return false;
        for (size_t k = 0; k + 1 < path.size(); ++k)
            if (g.adjacent(path[k], w)) return false;
        return true;
    };
    std::function<bool()> grow = [&]() {
        if (path.size() == 5) {
            hit = path;
            return true;
        }
        for (int w = 0; w < n; ++w) {
            if (!extendable(w)) continue;
            path.push_back(w);
            used[w] = 1;
            if (grow()) return true;
            used[w] = 0;
            path.pop_back();
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        if (grow()) return hit;
    }
    return std::nullopt;
}

inline bool is_p5_free(const Graph& g, std::vector<int>* witness = nullptr) {
    auto p5 = find_induced_p5(g);
    if (p5 && witness) *witness = *p5;
    return !p5;
}

/// Searches for a chordless cycle of length >= 6 in a bipartite graph.
/// Enumerates induced paths; a closing edge back to the start yields an
/// induced cycle since no other internal adjacency exists.
inline std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::optional<std::vector<int>> hit;

    std::function<bool()> grow = [&]() {
        int tail = path.back(), head = path.front();
        for (int w = 0; w < n; ++w) {
            if (used[w] || !g.adjacent(tail, w)) continue;
            if (path.size() >= 2) {
                bool chord = false;
                for (size_t k = 1; k + 1 < path.size(); ++k)
                    if (g.adjacent(path[k], w)) {
                        chord = true;
                        break;
                    }
                if (chord) continue;
                bool closes = g.adjacent(head, w);
                if (closes && path.size() >= 5) {
                    path.push_back(w);
                    hit = path;
                    return true;
                }
                if (closes) continue;  // would be a chord in any longer cycle
            }
            path.push_back(w);
            used[w] = 1;
            if (grow()) return true;
            used[w] = 0;
            path.pop_back();
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        if (grow()) return hit;
    }
    return std::nullopt;
}

struct NotBipartiteError : std::runtime_error {
    std::vector<int> odd_cycle;
    explicit NotBipartiteError(std::vector<int> cyc)
        : std::runtime_error("graph is not bipartite"), odd_cycle(std::move(cyc)) {}
};

/// Pre: g bipartite (throws NotBipartiteError otherwise).
inline bool is_chordal_bipartite(const Graph& g, std::vector<int>* witness = nullptr) {
    auto bip = find_bipartition(g);
    if (bip.status == BipartitionResult::Status::OddCycle) throw NotBipartiteError(bip.odd_cycle);
    auto cyc = find_long_induced_cycle(g);
    if (cyc && witness) *witness = *cyc;
    return !cyc;
}

/// Fixed check order: connectivity, bipartite, chordal bipartite, P5-free.
/// Reports the first failure only.
inline RecognitionReport recognize(const Graph& g) {
    RecognitionReport rep;
    if (g.vertex_count() == 0 || !g.connected()) {
        rep.failure = RecognitionReport::Failure::NotConnected;
        return rep;
    }
    auto bip = find_bipartition(g);
    if (bip.status == BipartitionResult::Status::OddCycle) {
        rep.failure = RecognitionReport::Failure::NotBipartite;
        rep.witness = bip.odd_cycle;
        return rep;
    }
    if (auto cyc = find_long_induced_cycle(g)) {
        rep.failure = RecognitionReport::Failure::LongInducedCycle;
        rep.witness = *cyc;
        return rep;
    }
    if (auto p5 = find_induced_p5(g)) {
        rep.failure = RecognitionReport::Failure::InducedP5;
        rep.witness = *p5;
        return rep;
    }
    rep.is_member = true;
    return rep;
}

}  // namespace nno

#endif
