#ifndef NNOGRAPH_GRAPH_HPP
#define NNOGRAPH_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nno {

/// Thrown when an edge-list document is malformed.
struct ParseError : std::runtime_error {
    enum class Kind { MalformedLine, SelfLoop, DuplicateEdge };
    Kind kind;
    int line_no;
    ParseError(Kind k, int line, const std::string& msg)
        : std::runtime_error(msg), kind(k), line_no(line) {}
};

/// Undirected simple graph with named vertices. Vertices are indexed by
/// first-appearance order; all deterministic tie-breaks in the library use
/// that index. Instances are treated as immutable values once built.
class Graph {
public:
    Graph() = default;

    int add_vertex(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        adj_.emplace_back();
        return id;
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::logic_error("self loop");
        if (adjacent(u, v)) throw std::logic_error("duplicate edge");
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++edge_count_;
    }

    void add_edge(const std::string& u, const std::string& v) {
        int a = add_vertex(u), b = add_vertex(v);
        add_edge(a, b);
    }

    static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
        Graph g;
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    /// Parses the edge-list format: one "<u> <v>" pair per line, '#' starts a
    /// comment line, blank lines ignored. Duplicate pairs and loops are errors.
    static Graph parse(const std::string& text) {
        Graph g;
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::string_view sv(line);
            size_t start = sv.find_first_not_of(" \t\r");
            if (start == std::string_view::npos) continue;
            if (sv[start] == '#') continue;
            std::istringstream ls(line);
            std::string a, b, extra;
            if (!(ls >> a >> b) || (ls >> extra)) {
                throw ParseError(ParseError::Kind::MalformedLine, line_no,
                                 "line " + std::to_string(line_no) + ": expected exactly two tokens");
            }
            if (a == b)
                throw ParseError(ParseError::Kind::SelfLoop, line_no,
                                 "line " + std::to_string(line_no) + ": self loop on '" + a + "'");
            int u = g.add_vertex(a), v = g.add_vertex(b);
            if (g.adjacent(u, v))
                throw ParseError(ParseError::Kind::DuplicateEdge, line_no,
                                 "line " + std::to_string(line_no) + ": duplicate edge " + a + " " + b);
            g.add_edge(u, v);
        }
        return g;
    }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return edge_count_; }

    const std::string& name(int v) const { return names_[v]; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const {
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(edge_count_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    /// Edge present iff absent here; same vertex set and order.
    Graph complement() const {
        Graph g;
        for (const auto& n : names_) g.add_vertex(n);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v = u + 1; v < vertex_count(); ++v)
                if (!adjacent(u, v)) g.add_edge(u, v);
        return g;
    }

    /// Subgraph induced on `keep` (indices into this graph). Vertex order in
    /// the result follows ascending original index.
    Graph induced(std::vector<int> keep) const {
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        Graph g;
        for (int v : keep) g.add_vertex(names_[v]);
        for (size_t a = 0; a < keep.size(); ++a)
            for (size_t b = a + 1; b < keep.size(); ++b)
                if (adjacent(keep[a], keep[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        return g;
    }

    Graph without_vertex(int drop) const {
        std::vector<int> keep;
        keep.reserve(vertex_count() - 1);
        for (int v = 0; v < vertex_count(); ++v)
            if (v != drop) keep.push_back(v);
        return induced(keep);
    }

    /// Connected components as vertex-index lists, each ascending, ordered by
    /// smallest member.
    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(vertex_count(), 0);
        for (int s = 0; s < vertex_count(); ++s) {
            if (seen[s]) continue;
            std::vector<int> comp;
            std::queue<int> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                comp.push_back(u);
                for (int w : adj_[u])
                    if (!seen[w]) {
                        seen[w] = 1;
                        q.push(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    /// Component count of the graph with `removed` deleted (indices).
    int component_count_without(const std::vector<int>& removed) const {
        std::vector<char> gone(vertex_count(), 0);
        for (int v : removed) gone[v] = 1;
        std::vector<char> seen(vertex_count(), 0);
        int count = 0;
        for (int s = 0; s < vertex_count(); ++s) {
            if (gone[s] || seen[s]) continue;
            ++count;
            std::queue<int> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : adj_[u])
                    if (!gone[w] && !seen[w]) {
                        seen[w] = 1;
                        q.push(w);
                    }
            }
        }
        return count;
    }

    bool connected() const { return vertex_count() == 0 || components().size() == 1; }

    std::string serialize() const {
        std::ostringstream out;
        for (auto [u, v] : edges()) out << names_[u] << ' ' << names_[v] << '\n';
        return out.str();
    }

    std::vector<std::string> names_of(const std::vector<int>& vs) const {
        std::vector<std::string> out;
        out.reserve(vs.size());
        for (int v : vs) out.push_back(names_[v]);
        return out;
    }

private:
    static void insert_sorted(std::vector<int>& xs, int v) {
        xs.insert(std::upper_bound(xs.begin(), xs.end(), v), v);
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

struct Bipartition {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

/// Result of 2-coloring a connected graph. On failure `odd_cycle` holds a
/// closed odd walk witness (simple cycle, first vertex not repeated).
struct BipartitionResult {
    enum class Status { Ok, OddCycle, Disconnected };
    Status status = Status::Ok;
    Bipartition parts;
    std::vector<int> odd_cycle;
    bool ok() const { return status == Status::Ok; }
};

/// Deterministic 2-coloring by BFS from vertex 0; side A is the side of the
/// first vertex in input order.
inline BipartitionResult find_bipartition(const Graph& g) {
    BipartitionResult res;
    int n = g.vertex_count();
    if (n == 0) return res;
    std::vector<int> color(n, -1), parent(n, -1);
    color[0] = 0;
    std::queue<int> q;
    q.push(0);
    int visited = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (color[w] == -1) {
                color[w] = 1 - color[u];
                parent[w] = u;
                ++visited;
                q.push(w);
            } else if (color[w] == color[u]) {
                // walk both parents up to the meeting point
                std::vector<int> pu{u}, pw{w};
                std::vector<char> on_pu(n, 0);
                for (int x = u; x != -1; x = parent[x]) {
                    on_pu[x] = 1;
                    if (x != u) pu.push_back(x);
                }
                int meet = w;
                while (!on_pu[meet]) {
                    meet = parent[meet];
                    pw.push_back(meet);
                }
                res.status = BipartitionResult::Status::OddCycle;
                std::vector<int> cyc;
                for (int x = u; x != meet; x = parent[x]) cyc.push_back(x);
                cyc.push_back(meet);
                std::vector<int> back;
                for (int x = w; x != meet; x = parent[x]) back.push_back(x);
                std::reverse(back.begin(), back.end());
                for (int x : back) cyc.push_back(x);
                res.odd_cycle = cyc;
                return res;
            }
        }
    }
    if (visited != n) {
        res.status = BipartitionResult::Status::Disconnected;
        return res;
    }
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? res.parts.side_a : res.parts.side_b).push_back(v);
    return res;
}

}  // namespace nno

#endif
