// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every constructive answer is compared against the exhaustive
// reference at the stated size bound with zero tolerance.

#include <chrono>
#include <iostream>

#include "corpus.hpp"
#include "nnograph/verify.hpp"

using namespace nno;
using Clock = std::chrono::steady_clock;

namespace {

struct Entry {
    gen::GenSpec spec;
    Graph g;
    NNODecomposition d;
};

std::vector<Entry> prepared;
oracle::OracleBounds bounds;

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& stats,
            double seconds) {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << idx << "  " << name << "  ("
              << stats << ", " << static_cast<int>(seconds * 1000) << " ms)" << std::endl;
    if (!pass) ++failures;
}

template <typename F>
void criterion(int idx, const std::string& name, F body) {
    auto t0 = Clock::now();
    std::string stats;
    bool pass = false;
    try {
        pass = body(stats);
    } catch (const std::exception& e) {
        stats = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(idx, name, pass, stats, dt);
}

bool separator_recounts(const Graph& g, const HamiltonicityCertificate& c, int slack) {
    if (c.kind != HamiltonicityCertificate::Kind::Violation) return true;
    if (c.separator.empty())
        return g.vertex_count() <= 2;  // only the tiny graphs lack a witness
    return g.component_count_without(c.separator) == c.component_count &&
           c.component_count > static_cast<int>(c.separator.size()) + slack;
}

}  // namespace

// 1. Hamiltonian cycle/path characterization vs brute force, |V| <= 14.
static bool crit_hamiltonicity(std::string& stats) {
    int n_checked = 0, bad = 0;
    for (const auto& e : prepared) {
        auto hc = hamiltonian_cycle(e.g, e.d);
        auto hp = hamiltonian_path(e.g, e.d);
        bool ok = hc.found() == oracle::brute_hamiltonian_cycle(e.g, bounds).has_value() &&
                  hp.found() == oracle::brute_hamiltonian_path(e.g, bounds).has_value();
        if (hc.found()) ok = ok && valid_cycle(e.g, hc.sequence);
        if (hp.found()) ok = ok && valid_path(e.g, hp.sequence);
        ok = ok && separator_recounts(e.g, hc, 0) && separator_recounts(e.g, hp, 1);
        ++n_checked;
        if (!ok) {
            ++bad;
            std::cout << "  hamiltonicity mismatch at seed " << e.spec.seed << "\n";
        }
    }
    stats = std::to_string(n_checked) + " instances, " + std::to_string(bad) + " mismatches";
    return bad == 0 && n_checked >= 500;
}

// 2. Toughness-style condition equals its exhaustive evaluation, |V| <= 14.
static bool crit_chvatal(std::string& stats) {
    int n_checked = 0, bad = 0;
    for (const auto& e : prepared) {
        auto cc = chvatal_cycle_condition(e.g, e.d);
        auto cp = chvatal_path_condition(e.g, e.d);
        bool ok = cc.holds == oracle::brute_chvatal_cycle(e.g, bounds).holds &&
                  cp.holds == oracle::brute_chvatal_path(e.g, bounds).holds;
        if (!cc.holds)
            ok = ok && e.g.component_count_without(cc.separator) >
                           static_cast<int>(cc.separator.size());
        if (!cp.holds)
            ok = ok && e.g.component_count_without(cp.separator) >
                           static_cast<int>(cp.separator.size()) + 1;
        ++n_checked;
        if (!ok) {
            ++bad;
            std::cout << "  chvatal mismatch at seed " << e.spec.seed << "\n";
        }
    }
    stats = std::to_string(n_checked) + " instances, " + std::to_string(bad) + " mismatches";
    return bad == 0;
}

// 3. Width formula vs exhaustive treewidth (|V| <= 10); decomposition and
// path variant verify on every instance.
static bool crit_treewidth(std::string& stats) {
    int n_exact = 0, n_all = 0, bad = 0;
    for (const auto& e : prepared) {
        ++n_all;
        bool ok = true;
        auto td = tree_decomposition(e.g, e.d);
        ok = ok && verify_tree_decomposition(e.g, td).ok;
        auto pd = path_decomposition(e.g, e.d);
        ok = ok && verify_tree_decomposition(e.g, pd).ok;
        ok = ok && pathwidth(e.g, e.d) == treewidth(e.g, e.d) && td.width == treewidth(e.g, e.d);
        if (e.g.vertex_count() <= bounds.max_vertices_widths) {
            ++n_exact;
            ok = ok && treewidth(e.g, e.d) == oracle::brute_treewidth(e.g, bounds);
        }
        if (!ok) {
            ++bad;
            std::cout << "  treewidth mismatch at seed " << e.spec.seed << "\n";
        }
    }
    stats = std::to_string(n_all) + " verified, " + std::to_string(n_exact) + " exact, " +
            std::to_string(bad) + " mismatches";
    return bad == 0;
}

// 4. Fill-in vs exhaustive minimum at |V| <= 9 (where the cheaper side is
// also the narrower side); chordal plus split embedding everywhere.
static bool crit_fillin(std::string& stats) {
    int n_exact = 0, n_all = 0, bad = 0;
    for (const auto& e : prepared) {
        ++n_all;
        auto fill = minimum_fill_in(e.g, e.d);
        bool ok = is_chordal(fill.embedding).chordal && is_split(fill.embedding).split;
        if (e.g.vertex_count() <= bounds.max_vertices_fillin) {
            ++n_exact;
            ok = ok &&
                 static_cast<int>(fill.added_edges.size()) == oracle::brute_min_fill_in(e.g, bounds);
            ok = ok && static_cast<int>(fill.clique_side.size()) == treewidth(e.g, e.d) + 1;
        }
        if (!ok) {
            ++bad;
            std::cout << "  fill-in mismatch at seed " << e.spec.seed << "\n";
        }
    }
    stats = std::to_string(n_all) + " embeddings, " + std::to_string(n_exact) + " exact, " +
            std::to_string(bad) + " mismatches";
    return bad == 0;
}

// 5. Longest path/cycle lengths (|V| <= 12) and spanning-tree leaf counts
// (|V| <= 10) against the exhaustive optima.
static bool crit_longest(std::string& stats) {
    int n_checked = 0, bad = 0;
    for (const auto& e : prepared) {
        int n = e.g.vertex_count();
        if (n > bounds.max_vertices_paths) continue;
        ++n_checked;
        bool ok = true;
        auto lp = longest_path(e.g, e.d);
        ok = ok && lp.path.size() == oracle::brute_longest_path(e.g, bounds).size();
        auto lc = longest_cycle(e.g, e.d);
        auto olc = oracle::brute_longest_cycle(e.g, bounds);
        ok = ok && (lc.acyclic ? !olc.has_value() : olc && lc.cycle.size() == olc->size());
        auto mlst = min_leaf_spanning_tree(e.g, e.d);
        ok = ok && static_cast<int>(mlst.edges.size()) == n - 1;
        if (n >= 2)
            ok = ok && mlst.leaf_count == 2 + n - static_cast<int>(mlst.spine.size());
        if (n <= bounds.max_vertices_widths)
            ok = ok && mlst.leaf_count == oracle::brute_min_leaf_spanning_tree(e.g, bounds);
        if (!ok) {
            ++bad;
            std::cout << "  longest/mlst mismatch at seed " << e.spec.seed << "\n";
        }
    }
    stats = std::to_string(n_checked) + " instances, " + std::to_string(bad) + " mismatches";
    return bad == 0;
}

// 6. Steiner path/cycle existence and optimal connector counts against the
// exhaustive search, >= 200 terminal draws per pattern class.
static bool crit_steiner(std::string& stats) {
    std::map<std::string, int> per_pattern;
    int bad = 0;
    auto classify = [](const NNODecomposition& d, const std::vector<int>& terms) {
        bool a1 = false, b1 = false, a2 = false, b2 = false;
        auto in = [&](const std::vector<int>& part, int v) {
            return std::find(part.begin(), part.end(), v) != part.end();
        };
        for (int t : terms) {
            a1 = a1 || in(d.a1, t);
            b1 = b1 || in(d.b1, t);
            a2 = a2 || in(d.a2, t);
            b2 = b2 || in(d.b2, t);
        }
        if (a2 && !a1 && !b1 && !b2) return "pure_a2";
        if (b2 && !a1 && !b1 && !a2) return "pure_b2";
        if (a1 && !a2 && !b1 && !b2) return "pure_a1";
        if (b1 && !a1 && !a2 && !b2) return "pure_b1";
        if (a1 && b2 && !a2 && !b1) return "a1_b2";
        if (b1 && a2 && !a1 && !b2) return "b1_a2";
        return "other";
    };
    for (const auto& e : prepared) {
        if (e.g.vertex_count() > bounds.max_vertices_paths) continue;
        auto tables = oracle::build_path_tables(e.g);
        gen::SplitMix64 rng(e.spec.seed * 0x9e37u + 17);
        auto draw_from = [&](const std::vector<int>& pool, int want) {
            want = std::min(want, static_cast<int>(pool.size()));
            std::vector<int> terms;
            while (static_cast<int>(terms.size()) < want) {
                int v = pool[rng.next() % pool.size()];
                if (std::find(terms.begin(), terms.end(), v) == terms.end()) terms.push_back(v);
            }
            std::sort(terms.begin(), terms.end());
            return terms;
        };
        std::vector<std::vector<int>> draws;
        std::vector<int> all(e.g.vertex_count());
        std::iota(all.begin(), all.end(), 0);
        // pattern-directed draws plus uniform ones
        for (const std::vector<int>* pool :
             {&e.d.a2, &e.d.b2, &e.d.a1, &e.d.b1}) {
            if (pool->empty()) continue;
            int want = 1 + static_cast<int>(rng.next() % std::min<size_t>(4, pool->size()));
            draws.push_back(draw_from(*pool, want));
        }
        auto mix = [&](const std::vector<int>& p1, const std::vector<int>& p2) {
            if (p1.empty() || p2.empty()) return;
            std::vector<int> pool = p1;
            pool.insert(pool.end(), p2.begin(), p2.end());
            int want = 2 + static_cast<int>(rng.next() % std::min<size_t>(3, pool.size() - 1));
            auto t = draw_from(pool, want);
            draws.push_back(t);
        };
        mix(e.d.a1, e.d.b2);
        mix(e.d.b1, e.d.a2);
        mix(e.d.a2, e.d.b2);
        for (int k = 0; k < 3; ++k)
            draws.push_back(
                draw_from(all, 1 + static_cast<int>(rng.next() % std::min(5, e.g.vertex_count()))));
        for (const auto& terms : draws) {
            ++per_pattern[classify(e.d, terms)];
            auto sp = steiner_path(e.g, e.d, terms, bounds, &tables);
            auto op = oracle::brute_steiner_path(e.g, terms, tables);
            bool ok = (sp.status == SteinerResult::Status::Found) == op.found;
            if (ok && op.found) ok = sp.steiner_vertices == op.steiner_vertices;
            if (ok && op.found) ok = valid_path(e.g, sp.sequence, false);
            auto sc = steiner_cycle(e.g, e.d, terms, bounds, &tables);
            auto oc = oracle::brute_steiner_cycle(e.g, terms, tables);
            bool okc = (sc.status == SteinerResult::Status::Found) == oc.found;
            if (okc && oc.found) okc = sc.steiner_vertices == oc.steiner_vertices;
            if (!(ok && okc)) {
                ++bad;
                std::cout << "  steiner mismatch at seed " << e.spec.seed << "\n";
            }
        }
    }
    int least = std::numeric_limits<int>::max();
    std::string counts;
    for (const auto& [name, count] : per_pattern) {
        counts += name + "=" + std::to_string(count) + " ";
        least = std::min(least, count);
    }
    stats = counts + "- " + std::to_string(bad) + " mismatches";
    return bad == 0 && least >= 200;
}

// 7. Variant classifications against exhaustive path/cycle computations.
static bool crit_variants(std::string& stats) {
    int n_checked = 0, bad = 0;
    for (const auto& e : prepared) {
        int n = e.g.vertex_count();
        if (n > bounds.max_vertices_paths) continue;
        ++n_checked;
        bool ok = true;

        auto fam = bipancyclic_cycles(e.g, e.d);
        auto lens = oracle::brute_cycle_lengths(e.g, bounds);
        bool oracle_bip = n >= 4 && n % 2 == 0;
        for (int l = 4; l <= n && oracle_bip; l += 2)
            oracle_bip = std::find(lens.begin(), lens.end(), l) != lens.end();
        ok = ok && fam.hamiltonian == oracle_bip;
        if (fam.hamiltonian)
            for (int l = 4; l <= n; l += 2)
                ok = ok && fam.cycles.count(l) == 1 &&
                     static_cast<int>(fam.cycles.at(l).size()) == l &&
                     valid_cycle(e.g, fam.cycles.at(l), false);

        auto ht = homogeneously_traceable(e.g, e.d);
        bool oracle_ht = true;
        for (int v = 0; v < n && oracle_ht; ++v)
            oracle_ht = oracle::brute_hamiltonian_path_from(e.g, v, bounds);
        ok = ok && ht.traceable == oracle_ht;

        auto cover = exactly_two_path_cover(e.g, e.d);
        int mine = cover.kind == PathCoverReport::Kind::OnePath    ? 1
                   : cover.kind == PathCoverReport::Kind::TwoPaths ? 2
                                                                   : 3;
        ok = ok && mine == std::min(oracle::brute_min_path_cover(e.g, bounds), 3);

        auto conn = hamiltonian_connected(e.g, e.d);
        if (conn.degenerate_connected)
            ok = ok && n <= 2;
        else
            ok = ok && !oracle::brute_st_hamiltonian_path(e.g, conn.witness.first,
                                                          conn.witness.second, bounds);

        auto hypo = path_hypohamiltonian(e.g, e.d);
        if (hypo.status == HypoPathReport::Status::NotApplicable) {
            ok = ok && oracle::brute_hamiltonian_path(e.g, bounds).has_value();
        } else if (hypo.status == HypoPathReport::Status::Witness) {
            Graph reduced = e.g.without_vertex(hypo.witness);
            ok = ok && (!reduced.connected() ||
                        !oracle::brute_hamiltonian_path(reduced, bounds).has_value());
        } else {
            ok = false;
        }
        if (!ok) {
            ++bad;
            std::cout << "  variants mismatch at seed " << e.spec.seed << "\n";
        }
    }
    stats = std::to_string(n_checked) + " instances, " + std::to_string(bad) + " mismatches";
    return bad == 0;
}

// 8. Complement results: elimination order, complement Hamiltonicity,
// independence bound.
static bool crit_complement(std::string& stats) {
    int n_checked = 0, bad = 0;
    for (const auto& e : prepared) {
        ++n_checked;
        bool ok = verify_peo(e.g.complement(), complement_peo(e.d)).ok;
        if (e.g.vertex_count() <= bounds.max_vertices_paths) {
            auto res = complement_hamiltonian_cycle(e.g, e.d);
            Graph comp = e.g.complement();
            bool oracle_has =
                comp.vertex_count() <= bounds.max_vertices_hamiltonicity &&
                oracle::brute_hamiltonian_cycle(comp, bounds).has_value();
            if (res.applicable) ok = ok && valid_cycle(comp, res.cycle) && oracle_has;
            if (e.d.p() >= 1 && e.d.q() >= 1 && e.g.vertex_count() <= 16)
                ok = ok && chvatal_erdos_check(comp).independence <= 2;
        }
        if (!ok) {
            ++bad;
            std::cout << "  complement mismatch at seed " << e.spec.seed << "\n";
        }
    }
    stats = std::to_string(n_checked) + " instances, " + std::to_string(bad) + " mismatches";
    return bad == 0;
}

// 9. Generator duality: members accepted, mutations rejected with witnesses
// that re-verify against adjacency.
static bool crit_generator(std::string& stats) {
    int accepted = 0, rejected = 0, total = 0, mut_total = 0, bad = 0;
    for (const auto& e : prepared) {
        ++total;
        if (recognize(e.g).is_member)
            ++accepted;
        else {
            ++bad;
            std::cout << "  generated instance rejected at seed " << e.spec.seed << "\n";
        }
        if (e.spec.p >= 1 && e.spec.q >= 1) {
            ++mut_total;
            Graph m = gen::mutate_break_class(e.spec);
            auto rep = recognize(m);
            bool ok = !rep.is_member;
            if (ok && rep.failure == RecognitionReport::Failure::InducedP5) {
                ok = rep.witness.size() == 5;
                for (size_t a = 0; a < rep.witness.size() && ok; ++a)
                    for (size_t b = a + 1; b < rep.witness.size() && ok; ++b)
                        ok = m.adjacent(rep.witness[a], rep.witness[b]) == (b == a + 1);
            } else if (ok && rep.failure == RecognitionReport::Failure::LongInducedCycle) {
                size_t L = rep.witness.size();
                ok = L >= 6;
                for (size_t a = 0; a < L && ok; ++a)
                    for (size_t b = a + 1; b < L && ok; ++b)
                        ok = m.adjacent(rep.witness[a], rep.witness[b]) ==
                             ((b == a + 1) || (a == 0 && b == L - 1));
            }
            if (ok)
                ++rejected;
            else {
                ++bad;
                std::cout << "  mutation escaped at seed " << e.spec.seed << "\n";
            }
        }
    }
    stats = std::to_string(accepted) + "/" + std::to_string(total) + " accepted, " +
            std::to_string(rejected) + "/" + std::to_string(mut_total) + " rejected";
    return bad == 0;
}

int main() {
    auto t0 = Clock::now();
    for (auto& e : tests::corpus()) {
        Entry entry{e.spec, e.graph, nno_decompose(e.graph)};
        prepared.push_back(std::move(entry));
    }
    std::cout << "corpus: " << prepared.size() << " generated instances (seeds 1.."
              << prepared.back().spec.seed << ")" << std::endl;

    criterion(1, "hamiltonian cycle/path characterization", crit_hamiltonicity);
    criterion(2, "toughness condition equivalence", crit_chvatal);
    criterion(3, "treewidth and pathwidth", crit_treewidth);
    criterion(4, "minimum fill-in", crit_fillin);
    criterion(5, "longest path/cycle and spanning-tree leaves", crit_longest);
    criterion(6, "steiner path/cycle", crit_steiner);
    criterion(7, "hamiltonicity variants", crit_variants);
    criterion(8, "complement results", crit_complement);
    criterion(9, "recognition/generator duality", crit_generator);

    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "  (total " << static_cast<int>(dt) << " s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
