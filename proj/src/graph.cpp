#include "msr/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace msr {

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(vertex_count + 1) {
    if (vertex_count < 0) throw Error("negative vertex count");
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw Error("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void Graph::add_edge(int u, int v) {
    if (!has_vertex(u) || !has_vertex(v))
        throw Error("edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw Error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool separates(const Graph& g, int s, int t, const std::vector<int>& S) {
    std::vector<char> blocked(g.vertex_count() + 1, 0);
    for (int v : S) blocked[v] = 1;
    std::vector<char> seen(g.vertex_count() + 1, 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (seen[w] || blocked[w]) continue;
            if (w == t) return false;
            seen[w] = 1;
            q.push(w);
        }
    }
    return true;
}

namespace {

// Unit-capacity max-flow on the vertex-split digraph. Every internal vertex v
// becomes an arc in(v) -> out(v) of capacity 1; each undirected edge {u,v}
// becomes out(u) -> in(v) and out(v) -> in(u). Source is out(s), sink in(t),
// so terminals carry no capacity bound.
class SplitFlow {
public:
    explicit SplitFlow(const Graph& g, int s, int t)
        : g_(g),
          s_(s),
          t_(t),
          node_count_(2 * g.vertex_count() + 2),
          adj_(node_count_),
          edge_arcs_(g.vertex_count() + 1) {
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (v != s && v != t) add_arc(node_in(v), node_out(v), 1);
        for (int u = 1; u <= g.vertex_count(); ++u)
            for (int v : g.neighbors(u)) {
                edge_arcs_[u].push_back(static_cast<int>(arcs_.size()));
                add_arc(node_out(u), node_in(v), 1);
            }
    }

    int run() {
        int flow = 0;
        while (augment()) ++flow;
        return flow;
    }

    // Vertex successors carrying one unit of flow, sorted ascending.
    std::vector<std::vector<int>> flow_successors() const {
        std::vector<std::vector<int>> succ(g_.vertex_count() + 1);
        for (int u = 1; u <= g_.vertex_count(); ++u) {
            for (int id : edge_arcs_[u])
                if (arcs_[id ^ 1].cap > 0)  // a unit was pushed through this edge arc
                    succ[u].push_back(vertex_of_in(arcs_[id].to));
            std::sort(succ[u].begin(), succ[u].end());
        }
        return succ;
    }

private:
    struct Arc {
        int to;
        int cap;
    };

    static int node_in(int v) { return 2 * v; }
    static int node_out(int v) { return 2 * v + 1; }
    static int vertex_of_in(int node) { return node / 2; }

    void add_arc(int from, int to, int cap) {
        adj_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        adj_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    bool augment() {
        const int source = node_out(s_), sink = node_in(t_);
        std::vector<int> via(node_count_, -1);
        std::vector<char> seen(node_count_, 0);
        std::queue<int> q;
        q.push(source);
        seen[source] = 1;
        while (!q.empty() && !seen[sink]) {
            int v = q.front();
            q.pop();
            for (int id : adj_[v]) {
                const Arc& a = arcs_[id];
                if (a.cap <= 0 || seen[a.to]) continue;
                seen[a.to] = 1;
                via[a.to] = id;
                q.push(a.to);
            }
        }
        if (!seen[sink]) return false;
        for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
            arcs_[via[v]].cap -= 1;
            arcs_[via[v] ^ 1].cap += 1;
        }
        return true;
    }

    const Graph& g_;
    int s_, t_;
    int node_count_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> edge_arcs_;  // edge arcs grouped by tail vertex
};

}  // namespace

DisjointPaths disjoint_paths(const Graph& g, int s, int t) {
    if (!g.has_vertex(s) || !g.has_vertex(t) || s == t)
        throw Error("invalid terminals");
    SplitFlow flow(g, s, t);
    int k = flow.run();
    auto succ = flow.flow_successors();
    std::vector<int> next_choice(g.vertex_count() + 1, 0);

    DisjointPaths dp;
    for (int i = 0; i < k; ++i) {
        std::vector<int> path{s};
        int cur = s;
        while (cur != t) {
            cur = succ[cur][next_choice[cur]++];
            path.push_back(cur);
        }
        dp.paths.push_back(std::move(path));
    }
    return dp;
}

DisjointPaths max_disjoint_paths(const Instance& inst) {
    return disjoint_paths(inst.graph, inst.s, inst.t);
}

int min_separator_size(const Instance& inst) {
    return max_disjoint_paths(inst).count();
}

bool is_separator(const Instance& inst, const std::vector<int>& S) {
    for (int v : S) {
        if (!inst.graph.has_vertex(v))
            throw InvalidSet("set contains vertex " + std::to_string(v) + " outside the graph");
        if (v == inst.s || v == inst.t)
            throw InvalidSet("set contains terminal " + std::to_string(v));
    }
    return separates(inst.graph, inst.s, inst.t, S);
}

namespace {

std::vector<int> checked_set(const Graph& g, int s, int t, std::vector<int> S, const char* name) {
    std::sort(S.begin(), S.end());
    if (std::adjacent_find(S.begin(), S.end()) != S.end())
        throw InvalidSet(std::string(name) + " contains a repeated vertex");
    for (int v : S) {
        if (!g.has_vertex(v))
            throw InvalidSet(std::string(name) + " contains vertex " + std::to_string(v) + " outside the graph");
        if (v == s || v == t)
            throw InvalidSet(std::string(name) + " contains a terminal");
    }
    return S;
}

}  // namespace

Instance make_instance(Graph graph, int s, int t, std::vector<int> A, std::vector<int> B) {
    if (!graph.has_vertex(s) || !graph.has_vertex(t))
        throw Error("terminal out of range");
    if (s == t) throw Error("s and t coincide");
    if (graph.has_edge(s, t)) throw TerminalsAdjacent();

    Instance inst;
    inst.graph = std::move(graph);
    inst.s = s;
    inst.t = t;
    inst.A = checked_set(inst.graph, s, t, std::move(A), "A");
    inst.B = checked_set(inst.graph, s, t, std::move(B), "B");

    if (!separates(inst.graph, s, t, inst.A)) throw NotSeparator("A");
    if (!separates(inst.graph, s, t, inst.B)) throw NotSeparator("B");

    int k = min_separator_size(inst);
    if (static_cast<int>(inst.A.size()) != k)
        throw NotMinimum("A has " + std::to_string(inst.A.size()) +
                         " vertices but the minimum separator size is " + std::to_string(k));
    if (static_cast<int>(inst.B.size()) != k)
        throw NotMinimum("B has " + std::to_string(inst.B.size()) +
                         " vertices but the minimum separator size is " + std::to_string(k));
    return inst;
}

namespace {

struct Line {
    int no;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ls(raw);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty() || toks[0][0] == '#') continue;
        lines.push_back({no, std::move(toks)});
    }
    return lines;
}

int parse_id(const Line& line, const std::string& tok, int n) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw SyntaxError(line.no, "expected a vertex id, got '" + tok + "'");
    }
    if (used != tok.size()) throw SyntaxError(line.no, "expected a vertex id, got '" + tok + "'");
    if (value < 1 || value > n)
        throw SyntaxError(line.no, "vertex id " + tok + " outside 1.." + std::to_string(n));
    return value;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    auto lines = tokenize(text);
    size_t at = 0;
    auto need = [&](const char* what) -> const Line& {
        if (at >= lines.size()) throw SyntaxError(lines.empty() ? 1 : lines.back().no, std::string("missing ") + what);
        return lines[at];
    };

    const Line& header = need("problem line");
    if (header.tokens.size() != 4 || header.tokens[0] != "p" || header.tokens[1] != "msr")
        throw SyntaxError(header.no, "expected 'p msr <n> <m>'");
    int n = 0, m = 0;
    try {
        n = std::stoi(header.tokens[2]);
        m = std::stoi(header.tokens[3]);
    } catch (const std::exception&) {
        throw SyntaxError(header.no, "expected 'p msr <n> <m>'");
    }
    if (n < 0 || m < 0) throw SyntaxError(header.no, "negative counts in problem line");
    ++at;

    Graph g(n);
    for (int i = 0; i < m; ++i) {
        const Line& line = need("edge line");
        if (line.tokens.size() != 3 || line.tokens[0] != "e")
            throw SyntaxError(line.no, "expected 'e <u> <v>'");
        int u = parse_id(line, line.tokens[1], n);
        int v = parse_id(line, line.tokens[2], n);
        if (u == v) throw SyntaxError(line.no, "self-loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v)) throw SyntaxError(line.no, "duplicate edge");
        g.add_edge(u, v);
        ++at;
    }

    auto read_terminal = [&](const char* tag) {
        const Line& line = need(tag);
        if (line.tokens.size() != 2 || line.tokens[0] != tag)
            throw SyntaxError(line.no, std::string("expected '") + tag + " <id>'");
        int v = parse_id(line, line.tokens[1], n);
        ++at;
        return v;
    };
    int s = read_terminal("s");
    int t = read_terminal("t");

    auto read_set = [&](const char* tag) {
        const Line& line = need(tag);
        if (line.tokens.empty() || line.tokens[0] != tag)
            throw SyntaxError(line.no, std::string("expected '") + tag + " <ids...>'");
        std::vector<int> S;
        for (size_t i = 1; i < line.tokens.size(); ++i) S.push_back(parse_id(line, line.tokens[i], n));
        std::vector<int> sorted = S;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw SyntaxError(line.no, std::string(tag) + " contains a repeated vertex");
        ++at;
        return S;
    };
    std::vector<int> A = read_set("A");
    std::vector<int> B = read_set("B");

    if (at != lines.size()) throw SyntaxError(lines[at].no, "unexpected trailing line");
    return make_instance(std::move(g), s, t, std::move(A), std::move(B));
}

std::string format_instance(const Instance& inst) {
    std::ostringstream out;
    auto es = inst.graph.edges();
    out << "p msr " << inst.graph.vertex_count() << " " << es.size() << "\n";
    for (auto [u, v] : es) out << "e " << u << " " << v << "\n";
    out << "s " << inst.s << "\n";
    out << "t " << inst.t << "\n";
    out << "A";
    for (int v : inst.A) out << " " << v;
    out << "\n";
    out << "B";
    for (int v : inst.B) out << " " << v;
    out << "\n";
    return out.str();
}

}  // namespace msr
