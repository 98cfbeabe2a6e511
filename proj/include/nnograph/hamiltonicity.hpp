#ifndef NNOGRAPH_HAMILTONICITY_HPP
#define NNOGRAPH_HAMILTONICITY_HPP

#include <json.hpp>

#include "nnograph/decomposition.hpp"

namespace nno {

inline bool valid_path(const Graph& g, const std::vector<int>& seq, bool spanning = true) {
    if (seq.empty()) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : seq) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    if (spanning && static_cast<int>(seq.size()) != g.vertex_count()) return false;
    for (size_t k = 0; k + 1 < seq.size(); ++k)
        if (!g.adjacent(seq[k], seq[k + 1])) return false;
    return true;
}

inline bool valid_cycle(const Graph& g, const std::vector<int>& seq, bool spanning = true) {
    if (seq.size() < 3) return false;
    if (!valid_path(g, seq, spanning)) return false;
    return g.adjacent(seq.back(), seq.front());
}

struct HamiltonicityCertificate {
    enum class Kind { Cycle, Path, Violation };
    enum class ViolationKind { None, TooSmall, SizeMismatch, DegreeA, DegreeB };

    Kind kind = Kind::Violation;
    std::vector<int> sequence;  // closed implicitly for cycles

    ViolationKind vkind = ViolationKind::None;
    int failing_vertex = -1;   // satellite that breaks the degree condition
    int failing_position = 0;  // 1-based position in its ordering
    int actual_degree = -1;
    std::vector<int> separator;  // S with c(G-S) exceeding the bound
    int component_count = 0;     // c(G-S), recounted
    int required_bound = 0;      // |S| (cycle case) or |S|+1 (path case)

    bool found() const { return kind != Kind::Violation; }

    nlohmann::json to_json(const Graph& g) const {
        nlohmann::json out;
        out["kind"] = kind == Kind::Cycle ? "cycle" : kind == Kind::Path ? "path" : "violation";
        if (kind != Kind::Violation) {
            out["sequence"] = g.names_of(sequence);
        } else {
            nlohmann::json v;
            switch (vkind) {
                case ViolationKind::TooSmall: v["reason"] = "too_small"; break;
                case ViolationKind::SizeMismatch: v["reason"] = "size_mismatch"; break;
                case ViolationKind::DegreeA: v["reason"] = "degree_condition_a2"; break;
                case ViolationKind::DegreeB: v["reason"] = "degree_condition_b2"; break;
                default: v["reason"] = "none"; break;
            }
            if (failing_vertex >= 0) {
                v["failing_vertex"] = g.name(failing_vertex);
                v["position"] = failing_position;
                v["actual_degree"] = actual_degree;
            }
            if (!separator.empty()) {
                v["separator"] = g.names_of(separator);
                v["component_count"] = component_count;
                v["required_bound"] = required_bound;
            }
            out["violation"] = v;
        }
        return out;
    }
};

namespace detail {

// first 1-based position with d(sat) <= pos (strict mode) or < pos
inline int first_bad_position(const Graph& g, const std::vector<int>& sats, bool strict) {
    for (size_t k = 0; k < sats.size(); ++k) {
        int d = g.degree(sats[k]);
        int pos = static_cast<int>(k) + 1;
        if (strict ? d <= pos : d < pos) return pos;
    }
    return 0;
}

inline HamiltonicityCertificate degree_violation(const Graph& g, const NNODecomposition& d,
                                                 bool on_a_side, int pos, int slack) {
    HamiltonicityCertificate cert;
    cert.kind = HamiltonicityCertificate::Kind::Violation;
    cert.vkind = on_a_side ? HamiltonicityCertificate::ViolationKind::DegreeA
                           : HamiltonicityCertificate::ViolationKind::DegreeB;
    int sat = on_a_side ? d.a2[pos - 1] : d.b2[pos - 1];
    cert.failing_vertex = sat;
    cert.failing_position = pos;
    cert.actual_degree = g.degree(sat);
    cert.separator = g.neighbors(sat);
    cert.component_count = g.component_count_without(cert.separator);
    cert.required_bound = static_cast<int>(cert.separator.size()) + slack;
    return cert;
}

inline HamiltonicityCertificate size_violation(const Graph& g, const NNODecomposition& d,
                                               int slack) {
    HamiltonicityCertificate cert;
    cert.kind = HamiltonicityCertificate::Kind::Violation;
    cert.vkind = HamiltonicityCertificate::ViolationKind::SizeMismatch;
    cert.separator = d.b1;
    cert.separator.insert(cert.separator.end(), d.b2.begin(), d.b2.end());
    cert.component_count = g.component_count_without(cert.separator);
    cert.required_bound = static_cast<int>(cert.separator.size()) + slack;
    return cert;
}

inline HamiltonicityCertificate too_small(const Graph&) {
    HamiltonicityCertificate cert;
    cert.kind = HamiltonicityCertificate::Kind::Violation;
    cert.vkind = HamiltonicityCertificate::ViolationKind::TooSmall;
    return cert;
}

}  // namespace detail

/// The full cyclic order (y1,u1,...,yp,up,y_{p+1},x1,v1,...,xq,vq,x_{q+1},
/// y_{p+2},x_{q+2},...,yj,xi); valid whenever |A|=|B| and both satellite
/// orderings satisfy the strict degree condition.
inline std::vector<int> hamiltonian_cycle_order(const NNODecomposition& d) {
    std::vector<int> seq;
    for (int k = 0; k < d.p(); ++k) {
        seq.push_back(d.b1[k]);
        seq.push_back(d.a2[k]);
    }
    seq.push_back(d.b1[d.p()]);
    for (int h = 0; h < d.q(); ++h) {
        seq.push_back(d.a1[h]);
        seq.push_back(d.b2[h]);
    }
    seq.push_back(d.a1[d.q()]);
    for (int k = d.p() + 1, l = d.q() + 1; k < d.j(); ++k, ++l) {
        seq.push_back(d.b1[k]);
        seq.push_back(d.a1[l]);
    }
    return seq;
}

inline HamiltonicityCertificate hamiltonian_cycle(const Graph& g, const NNODecomposition& d) {
    if (g.vertex_count() <= 2) return detail::too_small(g);
    if (d.side_a_size() != d.side_b_size()) return detail::size_violation(g, d, 0);
    if (int pos = detail::first_bad_position(g, d.a2, true))
        return detail::degree_violation(g, d, true, pos, 0);
    if (int pos = detail::first_bad_position(g, d.b2, true))
        return detail::degree_violation(g, d, false, pos, 0);
    HamiltonicityCertificate cert;
    cert.kind = HamiltonicityCertificate::Kind::Cycle;
    cert.sequence = hamiltonian_cycle_order(d);
    if (!valid_cycle(g, cert.sequence))
        throw StructureViolation("hamiltonian cycle construction failed validation");
    return cert;
}

/// Spanning path order for equal sides: satellites first, core alternation,
/// then the opposite satellites interleaved backwards.
inline std::vector<int> hamiltonian_path_order_equal(const NNODecomposition& d) {
    std::vector<int> seq;
    for (int k = 0; k < d.p(); ++k) {
        seq.push_back(d.a2[k]);
        seq.push_back(d.b1[k]);
    }
    for (int l = d.q(), k = d.p(); l < d.i(); ++l, ++k) {
        seq.push_back(d.a1[l]);
        seq.push_back(d.b1[k]);
    }
    for (int h = d.q() - 1; h >= 0; --h) {
        seq.push_back(d.a1[h]);
        seq.push_back(d.b2[h]);
    }
    return seq;
}

/// Spanning path order when the A side is one larger; both endpoints land
/// on the A side and the b2 chain needs the strict degree condition.
inline std::vector<int> hamiltonian_path_order_plus_one(const NNODecomposition& d) {
    std::vector<int> seq;
    for (int k = 0; k < d.p(); ++k) {
        seq.push_back(d.a2[k]);
        seq.push_back(d.b1[k]);
    }
    for (int l = d.q() + 1, k = d.p(); l < d.i(); ++l, ++k) {
        seq.push_back(d.a1[l]);
        seq.push_back(d.b1[k]);
    }
    seq.push_back(d.a1[d.q()]);
    for (int h = d.q() - 1; h >= 0; --h) {
        seq.push_back(d.b2[h]);
        seq.push_back(d.a1[h]);
    }
    return seq;
}

inline HamiltonicityCertificate hamiltonian_path(const Graph& g, const NNODecomposition& d) {
    int diff = d.side_a_size() - d.side_b_size();
    HamiltonicityCertificate cert;
    if (diff == 0) {
        if (int pos = detail::first_bad_position(g, d.a2, false))
            return detail::degree_violation(g, d, true, pos, 1);
        if (int pos = detail::first_bad_position(g, d.b2, false))
            return detail::degree_violation(g, d, false, pos, 1);
        cert.sequence = hamiltonian_path_order_equal(d);
    } else if (diff == 1) {
        if (int pos = detail::first_bad_position(g, d.a2, false))
            return detail::degree_violation(g, d, true, pos, 1);
        if (int pos = detail::first_bad_position(g, d.b2, true)) {
            // S = B1 plus the B2 tail above the failing position
            HamiltonicityCertificate v;
            v.kind = HamiltonicityCertificate::Kind::Violation;
            v.vkind = HamiltonicityCertificate::ViolationKind::DegreeB;
            v.failing_vertex = d.b2[pos - 1];
            v.failing_position = pos;
            v.actual_degree = g.degree(v.failing_vertex);
            v.separator = d.b1;
            for (int h = pos; h < d.q(); ++h) v.separator.push_back(d.b2[h]);
            v.component_count = g.component_count_without(v.separator);
            v.required_bound = static_cast<int>(v.separator.size()) + 1;
            return v;
        }
        cert.sequence = hamiltonian_path_order_plus_one(d);
    } else {
        return detail::size_violation(g, d, 1);
    }
    cert.kind = HamiltonicityCertificate::Kind::Path;
    if (!valid_path(g, cert.sequence))
        throw StructureViolation("hamiltonian path construction failed validation");
    return cert;
}

struct ChvatalVerdict {
    bool holds = true;
    std::vector<int> separator;  // violating S when holds is false
    int component_count = 0;
    nlohmann::json to_json(const Graph& g) const {
        nlohmann::json out{{"holds", holds}};
        if (!holds) {
            out["separator"] = g.names_of(separator);
            out["component_count"] = component_count;
        }
        return out;
    }
};

/// Evaluates the degree characterization equivalent to the cycle-toughness
/// condition c(G-S) <= |S| over all non-empty proper S; on failure returns
/// an explicit violating S.
inline ChvatalVerdict chvatal_cycle_condition(const Graph& g, const NNODecomposition& d) {
    ChvatalVerdict verdict;
    if (g.vertex_count() <= 1) return verdict;  // no non-empty proper subset
    HamiltonicityCertificate probe;
    if (d.side_a_size() != d.side_b_size()) {
        probe = detail::size_violation(g, d, 0);
    } else if (int pos = detail::first_bad_position(g, d.a2, true)) {
        probe = detail::degree_violation(g, d, true, pos, 0);
    } else if (int pos = detail::first_bad_position(g, d.b2, true)) {
        probe = detail::degree_violation(g, d, false, pos, 0);
    } else {
        return verdict;
    }
    verdict.holds = false;
    verdict.separator = probe.separator;
    verdict.component_count = probe.component_count;
    return verdict;
}

/// Path analogue with the |S|+1 bound.
inline ChvatalVerdict chvatal_path_condition(const Graph& g, const NNODecomposition& d) {
    ChvatalVerdict verdict;
    if (g.vertex_count() <= 1) return verdict;
    auto probe = hamiltonian_path(g, d);
    if (probe.kind != HamiltonicityCertificate::Kind::Violation) return verdict;
    verdict.holds = false;
    verdict.separator = probe.separator;
    verdict.component_count = probe.component_count;
    return verdict;
}

}  // namespace nno

#endif
