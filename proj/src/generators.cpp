#include "msr/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

namespace msr {

PlainGraph parse_plain_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    PlainGraph g;
    bool have_n = false;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ls(raw);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (!have_n) {
            try {
                g.vertex_count = std::stoi(first);
            } catch (const std::exception&) {
                throw SyntaxError(line_no, "expected the vertex count");
            }
            if (g.vertex_count < 0) throw SyntaxError(line_no, "negative vertex count");
            std::string extra;
            if (ls >> extra) throw SyntaxError(line_no, "expected only the vertex count");
            have_n = true;
            continue;
        }
        int u = 0, v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw SyntaxError(line_no, "expected 'u v'");
        }
        if (!(ls >> v)) throw SyntaxError(line_no, "expected 'u v'");
        if (u < 1 || u > g.vertex_count || v < 1 || v > g.vertex_count)
            throw SyntaxError(line_no, "vertex id outside 1.." + std::to_string(g.vertex_count));
        if (u == v) throw SyntaxError(line_no, "self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw SyntaxError(line_no, "duplicate edge");
        g.edges.emplace_back(u, v);
    }
    if (!have_n) throw SyntaxError(line_no == 0 ? 1 : line_no, "missing vertex count");
    return g;
}

namespace {

void check_plain(const PlainGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u < 1 || u > g.vertex_count || v < 1 || v > g.vertex_count)
            throw Error("plain-graph edge endpoint out of range");
        if (u == v) throw Error("plain graph has a self-loop");
        if (!seen.insert(std::minmax(u, v)).second) throw Error("plain graph has a duplicate edge");
    }
}

}  // namespace

GeneratedInstance gen_vc_gadget(const PlainGraph& g, int kappa) {
    check_plain(g);
    if (kappa < 0 || kappa > g.vertex_count) throw Error("kappa out of range");
    const int n = g.vertex_count;

    // column-major ids: s, the s_v column, the v column, the t_v column, t
    const int s = 1;
    auto sv = [&](int v) { return 1 + v; };
    auto vv = [&](int v) { return 1 + n + v; };
    auto tv = [&](int v) { return 1 + 2 * n + v; };
    const int t = 3 * n + 2;

    Graph h(3 * n + 2);
    for (int v = 1; v <= n; ++v) {
        h.add_edge(s, sv(v));
        h.add_edge(sv(v), vv(v));
        h.add_edge(vv(v), tv(v));
        h.add_edge(tv(v), t);
    }
    for (auto [u, v] : g.edges) h.add_edge(vv(u), vv(v));

    std::vector<int> A, B;
    for (int v = 1; v <= n; ++v) {
        A.push_back(sv(v));
        B.push_back(tv(v));
    }
    GeneratedInstance out;
    out.instance = make_instance(std::move(h), s, t, std::move(A), std::move(B));
    out.ell = n + kappa;
    return out;
}

GeneratedInstance gen_cross_composition(const std::vector<PlainGraph>& inputs,
                                        const std::vector<int>& kappas) {
    if (inputs.empty()) throw MismatchedSizes("no input instances");
    if (inputs.size() != kappas.size())
        throw MismatchedSizes("each input needs its cover budget");
    const int mu = inputs[0].vertex_count;
    const int kappa = kappas[0];
    for (const auto& g : inputs) {
        check_plain(g);
        if (g.vertex_count != mu)
            throw MismatchedSizes("all inputs must have the same vertex count");
    }
    for (int kp : kappas)
        if (kp != kappa) throw MismatchedSizes("all inputs must share the same kappa");
    if (kappa < 0 || kappa > mu) throw Error("kappa out of range");

    const int r = static_cast<int>(inputs.size());
    const int k = mu + 1;
    const int len = 4 * r + 1;  // vertices per path, terminals included

    // column-major ids over the interior columns 2 .. 4r
    const int s = 1;
    auto id = [&](int row, int col) { return 1 + (col - 2) * k + row; };
    const int t = k * (len - 2) + 2;

    Graph h(t);
    for (int row = 1; row <= k; ++row) {
        h.add_edge(s, id(row, 2));
        for (int col = 2; col < len - 1; ++col) h.add_edge(id(row, col), id(row, col + 1));
        h.add_edge(id(row, len - 1), t);
    }

    // embed input i on column 4i - 1 (rows 1..mu; row k stays a filler)
    for (int i = 1; i <= r; ++i) {
        int col = 4 * i - 1;
        for (auto [u, v] : inputs[i - 1].edges) h.add_edge(id(u, col), id(v, col));
    }

    // synchronization gadget after each embedding but the last: its rows sit
    // two columns later and attach to three spots of the last path
    for (int j = 1; j < r; ++j) {
        int rows_col = 4 * j + 1;
        for (int row = 1; row <= mu; ++row)
            for (int attach : {4 * j - 2, 4 * j, 4 * j + 2})
                h.add_edge(id(row, rows_col), id(k, attach));
    }
    // the last gadget additionally pins the goal column
    if (r >= 2)
        for (int row = 1; row <= mu; ++row) h.add_edge(id(k, 4 * r - 2), id(row, 4 * r));

    std::vector<int> A, B;
    for (int row = 1; row <= k; ++row) {
        A.push_back(id(row, 2));
        B.push_back(id(row, len - 1));
    }
    GeneratedInstance out;
    out.instance = make_instance(std::move(h), s, t, std::move(A), std::move(B));
    out.ell = r * (k + kappa);
    return out;
}

Instance gen_random_layered(std::uint32_t seed, int k, int path_len, double crossing_prob) {
    if (k < 1) throw Error("k must be at least 1");
    if (path_len < 3) throw Error("path_len must be at least 3");
    if (crossing_prob < 0.0 || crossing_prob > 1.0) throw Error("probability out of [0,1]");

    std::mt19937 rng(seed);
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(crossing_prob * 4294967296.0);  // portable Bernoulli draw

    for (int attempt = 0; attempt < 100; ++attempt) {
        const int s = 1;
        auto id = [&](int row, int col) { return 1 + (col - 2) * k + row; };
        const int t = k * (path_len - 2) + 2;

        Graph g(t);
        for (int row = 1; row <= k; ++row) {
            g.add_edge(s, id(row, 2));
            for (int col = 2; col < path_len - 1; ++col) g.add_edge(id(row, col), id(row, col + 1));
            g.add_edge(id(row, path_len - 1), t);
        }
        for (int col = 2; col + 1 <= path_len - 1; ++col)
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k; ++j) {
                    if (i == j) continue;
                    if (static_cast<std::uint64_t>(rng()) < threshold)
                        g.add_edge(id(i, col), id(j, col + 1));
                }

        std::vector<int> A, B;
        for (int row = 1; row <= k; ++row) {
            A.push_back(id(row, 2));
            B.push_back(id(row, path_len - 1));
        }
        try {
            return make_instance(std::move(g), s, t, std::move(A), std::move(B));
        } catch (const Error&) {
            continue;  // reroll the crossing edges
        }
    }
    throw GenerationFailed("no valid instance after 100 attempts");
}

int brute_vc(const PlainGraph& g) {
    check_plain(g);
    if (g.vertex_count > 20) throw TooLarge("vertex cover search is limited to 20 vertices");
    const int n = g.vertex_count;
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (auto [u, v] : g.edges)
            if (!(mask >> (u - 1) & 1) && !(mask >> (v - 1) & 1)) {
                covers = false;
                break;
            }
        if (covers) best = size;
    }
    return best;
}

}  // namespace msr
