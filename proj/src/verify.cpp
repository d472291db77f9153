#include "msr/verify.hpp"

#include <algorithm>
#include <sstream>

namespace msr {

Verdict verify_sequence(const Instance& inst, Model model,
                        const std::vector<std::pair<int, int>>& vertex_moves) {
    std::vector<char> occupied(inst.graph.vertex_count() + 1, 0);
    for (int v : inst.A) occupied[v] = 1;
    std::vector<int> cur(inst.A);

    auto reject = [](int step, const std::string& why) {
        return Verdict{false, step, why};
    };

    int step = 0;
    for (auto [from, to] : vertex_moves) {
        ++step;
        if (!inst.graph.has_vertex(from) || !inst.graph.has_vertex(to))
            return reject(step, "vertex outside the graph");
        if (!occupied[from]) return reject(step, "no token on the moved vertex");
        if (to == inst.s || to == inst.t) return reject(step, "token lands on a terminal");
        if (occupied[to]) return reject(step, "token lands on an occupied vertex");
        if (from == to) return reject(step, "token does not move");
        if (model == Model::slide && !inst.graph.has_edge(from, to))
            return reject(step, "slide endpoints are not adjacent");

        occupied[from] = 0;
        occupied[to] = 1;
        *std::find(cur.begin(), cur.end(), from) = to;
        if (!separates(inst.graph, inst.s, inst.t, cur))
            return reject(step, "intermediate set is not a separator");
    }

    std::vector<int> sorted(cur);
    std::sort(sorted.begin(), sorted.end());
    if (sorted != inst.B) return reject(step + 1, "final set differs from B");
    return Verdict{};
}

Verdict verify_sequence(const Instance& inst, const ReconfigSequence& seq) {
    std::vector<std::pair<int, int>> moves;
    moves.reserve(seq.moves.size());
    for (const Move& m : seq.moves) moves.emplace_back(m.from_vertex, m.to_vertex);
    return verify_sequence(inst, seq.model, moves);
}

SequenceFile parse_sequence_file(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    SequenceFile sf;
    bool have_model = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ls(raw);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (!have_model) {
            std::string name;
            if (first != "model" || !(ls >> name) || (name != "slide" && name != "jump"))
                throw SyntaxError(line_no, "expected 'model slide|jump'");
            sf.model = name == "slide" ? Model::slide : Model::jump;
            have_model = true;
            continue;
        }
        int from = 0, to = 0;
        try {
            from = std::stoi(first);
        } catch (const std::exception&) {
            throw SyntaxError(line_no, "expected '<from> <to>'");
        }
        if (!(ls >> to)) throw SyntaxError(line_no, "expected '<from> <to>'");
        sf.moves.emplace_back(from, to);
    }
    if (!have_model) throw SyntaxError(line_no == 0 ? 1 : line_no, "missing model header");
    return sf;
}

std::string format_sequence_file(const ReconfigSequence& seq) {
    std::ostringstream out;
    out << "model " << (seq.model == Model::slide ? "slide" : "jump") << "\n";
    for (const Move& m : seq.moves) out << m.from_vertex << " " << m.to_vertex << "\n";
    return out.str();
}

}  // namespace msr
