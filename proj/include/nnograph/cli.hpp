#ifndef NNOGRAPH_CLI_HPP
#define NNOGRAPH_CLI_HPP

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "nnograph/verify.hpp"

namespace nno::cli {

constexpr int kVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct DomainError : std::runtime_error {
    nlohmann::json payload;
    DomainError(std::string kind, std::string detail, nlohmann::json extra = {})
        : std::runtime_error(detail), payload{{"kind", std::move(kind)}, {"detail", detail}} {
        if (!extra.is_null() && !extra.empty()) payload["extra"] = std::move(extra);
    }
};

inline std::string read_input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
        std::ostringstream buf;
        buf << stdin_stream.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw DomainError("io", "cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Graph load_graph(const std::string& path, std::istream& stdin_stream) {
    try {
        return Graph::parse(read_input(path, stdin_stream));
    } catch (const ParseError& e) {
        throw DomainError("parse", e.what());
    }
}

struct Pipeline {
    Graph g;
    NNODecomposition d;
};

/// Recognition gate shared by every decomposition-based command.
inline Pipeline load_member(const std::string& path, std::istream& stdin_stream) {
    Pipeline p;
    p.g = load_graph(path, stdin_stream);
    auto rec = recognize(p.g);
    if (!rec.is_member) {
        throw DomainError("not_in_class",
                          std::string("input graph is not a connected P5-free chordal "
                                      "bipartite graph: ") +
                              RecognitionReport::failure_name(rec.failure),
                          {{"failure", RecognitionReport::failure_name(rec.failure)},
                           {"witness", p.g.names_of(rec.witness)}});
    }
    p.d = nno_decompose(p.g);
    return p;
}

inline std::vector<int> parse_terminals(const Graph& g, const std::string& csv) {
    std::vector<int> terms;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = g.index_of(tok);
        if (v < 0) throw DomainError("terminals", "unknown vertex: " + tok);
        terms.push_back(v);
    }
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    if (terms.empty()) throw DomainError("terminals", "empty terminal set");
    return terms;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& stdin_stream = std::cin) {
    CLI::App app{"structural toolkit for P5-free chordal bipartite graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string terminals_csv;
    int oracle_bound = -1;
    bool json_flag = true;
    bool mutate = false;
    gen::GenSpec spec;
    long long seed_arg = -1;

    std::string command;
    nlohmann::json result;
    std::string plain;  // non-JSON output (generate)

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "edge-list file, or - for stdin");
        sub->add_flag("--json", json_flag, "emit JSON (default)");
    };

    struct Cmd {
        CLI::App* sub;
        std::function<void()> action;
    };
    std::vector<Cmd> cmds;
    auto member_cmd = [&](const std::string& name, const std::string& desc,
                          std::function<nlohmann::json(const Pipeline&)> fn) {
        CLI::App* sub = app.add_subcommand(name, desc);
        add_input(sub);
        cmds.push_back({sub, [&, name, fn]() {
                            command = name;
                            auto p = load_member(input, stdin_stream);
                            result = fn(p);
                        }});
        return sub;
    };

    {
        CLI::App* sub = app.add_subcommand("recognize", "class membership with witnesses");
        add_input(sub);
        cmds.push_back({sub, [&]() {
                            command = "recognize";
                            Graph g = load_graph(input, stdin_stream);
                            auto rec = recognize(g);
                            result = {{"member", rec.is_member}};
                            if (!rec.is_member) {
                                result["failure"] = RecognitionReport::failure_name(rec.failure);
                                result["witness"] = g.names_of(rec.witness);
                            }
                        }});
    }

    member_cmd("decompose", "nested-neighborhood decomposition",
               [](const Pipeline& p) { return p.d.to_json(p.g); });
    member_cmd("hc", "Hamiltonian cycle or violation certificate",
               [](const Pipeline& p) { return hamiltonian_cycle(p.g, p.d).to_json(p.g); });
    member_cmd("hp", "Hamiltonian path or violation certificate",
               [](const Pipeline& p) { return hamiltonian_path(p.g, p.d).to_json(p.g); });
    member_cmd("chvatal", "toughness-style cycle/path conditions", [](const Pipeline& p) {
        return nlohmann::json{{"cycle", chvatal_cycle_condition(p.g, p.d).to_json(p.g)},
                              {"path", chvatal_path_condition(p.g, p.d).to_json(p.g)}};
    });
    member_cmd("bipancyclic", "cycles of every even length",
               [](const Pipeline& p) { return bipancyclic_cycles(p.g, p.d).to_json(p.g); });
    member_cmd("variants", "all Hamiltonicity variant results", [](const Pipeline& p) {
        return nlohmann::json{
            {"bipancyclic", bipancyclic_cycles(p.g, p.d).to_json(p.g)},
            {"homogeneously_traceable", homogeneously_traceable(p.g, p.d).to_json(p.g)},
            {"two_path_cover", exactly_two_path_cover(p.g, p.d).to_json(p.g)},
            {"hamiltonian_connected", hamiltonian_connected(p.g, p.d).to_json(p.g)},
            {"path_hypohamiltonian", path_hypohamiltonian(p.g, p.d).to_json(p.g)}};
    });
    member_cmd("longest-path", "longest path via pruning", [](const Pipeline& p) {
        auto lp = longest_path(p.g, p.d);
        return nlohmann::json{{"path", p.g.names_of(lp.path)},
                              {"length", lp.path.size()},
                              {"excluded", p.g.names_of(lp.excluded)}};
    });
    member_cmd("longest-cycle", "longest cycle via pruning", [](const Pipeline& p) {
        auto lc = longest_cycle(p.g, p.d);
        if (lc.acyclic) return nlohmann::json{{"acyclic", true}};
        return nlohmann::json{{"cycle", p.g.names_of(lc.cycle)},
                              {"length", lc.cycle.size()},
                              {"excluded", p.g.names_of(lc.excluded)}};
    });
    member_cmd("mlst", "minimum-leaf spanning tree", [](const Pipeline& p) {
        auto t = min_leaf_spanning_tree(p.g, p.d);
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : t.edges) edges.push_back({p.g.name(u), p.g.name(v)});
        return nlohmann::json{{"edges", edges}, {"leaf_count", t.leaf_count}};
    });
    member_cmd("cds", "minimum connected dominating set", [](const Pipeline& p) {
        auto s = min_connected_dominating_set(p.g, p.d);
        return nlohmann::json{{"set", p.g.names_of(s)}, {"size", s.size()}};
    });
    member_cmd("treewidth", "exact treewidth",
               [](const Pipeline& p) { return nlohmann::json{{"treewidth", treewidth(p.g, p.d)}}; });
    member_cmd("pathwidth", "exact pathwidth with a path decomposition", [](const Pipeline& p) {
        return nlohmann::json{{"pathwidth", pathwidth(p.g, p.d)},
                              {"decomposition", path_decomposition(p.g, p.d).to_json(p.g)}};
    });
    member_cmd("treedecomp", "tree decomposition",
               [](const Pipeline& p) { return tree_decomposition(p.g, p.d).to_json(p.g); });
    member_cmd("fillin", "minimum chordal completion",
               [](const Pipeline& p) { return minimum_fill_in(p.g, p.d).to_json(p.g); });
    member_cmd("complement-peo", "perfect elimination order of the complement",
               [](const Pipeline& p) {
                   auto peo = complement_peo(p.d);
                   Graph comp = p.g.complement();
                   return nlohmann::json{{"peo", p.g.names_of(peo)},
                                         {"verified", verify_peo(comp, peo).ok}};
               });
    member_cmd("complement-hc", "Hamiltonian cycle of the complement", [](const Pipeline& p) {
        nlohmann::json out{{"cycle_result", complement_hamiltonian_cycle(p.g, p.d).to_json(p.g)}};
        if (p.g.vertex_count() <= 16) {
            auto ce = chvatal_erdos_check(p.g.complement());
            out["chvatal_erdos"] = {{"connectivity", ce.connectivity},
                                    {"independence", ce.independence},
                                    {"implies_hamiltonian", ce.implies_hamiltonian}};
        }
        return out;
    });

    {
        CLI::App* sub = app.add_subcommand("steiner-path", "minimum Steiner path");
        add_input(sub);
        sub->add_option("--terminals", terminals_csv, "comma-separated vertex names")->required();
        cmds.push_back({sub, [&]() {
                            command = "steiner-path";
                            auto p = load_member(input, stdin_stream);
                            auto terms = parse_terminals(p.g, terminals_csv);
                            result = steiner_path(p.g, p.d, terms).to_json(p.g);
                        }});
    }
    {
        CLI::App* sub = app.add_subcommand("steiner-cycle", "minimum Steiner cycle");
        add_input(sub);
        sub->add_option("--terminals", terminals_csv, "comma-separated vertex names")->required();
        cmds.push_back({sub, [&]() {
                            command = "steiner-cycle";
                            auto p = load_member(input, stdin_stream);
                            auto terms = parse_terminals(p.g, terminals_csv);
                            result = steiner_cycle(p.g, p.d, terms).to_json(p.g);
                        }});
    }
    {
        CLI::App* sub = app.add_subcommand("generate", "emit a class member as an edge list");
        sub->add_option("--i", spec.i, "core side A size")->required();
        sub->add_option("--j", spec.j, "core side B size")->required();
        sub->add_option("--p", spec.p, "A-side satellite count");
        sub->add_option("--q", spec.q, "B-side satellite count");
        sub->add_option("--seed", seed_arg, "generator seed")->required();
        sub->add_flag("--mutate", mutate, "add one class-breaking satellite edge");
        cmds.push_back({sub, [&]() {
                            command = "generate";
                            spec.seed = static_cast<uint64_t>(seed_arg);
                            try {
                                Graph g = mutate ? gen::mutate_break_class(spec) : gen::generate(spec);
                                plain = g.serialize();
                            } catch (const std::logic_error& e) {
                                throw DomainError("generate", e.what());
                            }
                        }});
    }
    {
        CLI::App* sub = app.add_subcommand("verify", "cross-check against exhaustive oracles");
        add_input(sub);
        sub->add_option("--oracle-bound", oracle_bound, "override every oracle size bound");
        cmds.push_back({sub, [&]() {
                            command = "verify";
                            auto p = load_member(input, stdin_stream);
                            oracle::OracleBounds bounds;
                            if (oracle_bound >= 0) {
                                bounds.max_vertices_hamiltonicity = oracle_bound;
                                bounds.max_vertices_widths = oracle_bound;
                                bounds.max_vertices_fillin = oracle_bound;
                                bounds.max_vertices_chvatal = oracle_bound;
                                bounds.max_vertices_paths = oracle_bound;
                            }
                            auto rep = verify_graph(p.g, p.d, bounds);
                            result = {{"problems", rep.problems}, {"all_agree", rep.all_agree}};
                            if (!rep.all_agree)
                                throw DomainError("verify", "constructive/oracle disagreement",
                                                  result);
                        }});
    }

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs{"nnograph"};
        for (const auto& a : argv) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << std::endl;
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << std::endl;
        return kExitUsage;
    }

    try {
        for (auto& c : cmds)
            if (c.sub->parsed()) {
                c.action();
                break;
            }
        if (!plain.empty()) {
            out << plain;
        } else {
            nlohmann::json envelope{
                {"version", kVersion}, {"command", command}, {"ok", true}, {"result", result}};
            out << envelope.dump(2) << std::endl;
        }
        return kExitOk;
    } catch (const DomainError& e) {
        nlohmann::json envelope{
            {"version", kVersion}, {"command", command}, {"ok", false}, {"error", e.payload}};
        out << envelope.dump(2) << std::endl;
        return kExitDomain;
    } catch (const std::exception& e) {
        nlohmann::json envelope{{"version", kVersion},
                                {"command", command},
                                {"ok", false},
                                {"error", {{"kind", "internal"}, {"detail", e.what()}}}};
        out << envelope.dump(2) << std::endl;
        return kExitDomain;
    }
}

}  // namespace nno::cli

#endif
