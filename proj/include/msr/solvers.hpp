#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "msr/preprocess.hpp"

namespace msr {

enum class Model { slide, jump };

/// One token move. Solvers fill the canonical-path view (path index and
/// positions on the instance they searched); the vertex ids are what gets
/// replayed and are always expressed in the caller's graph (lifted through
/// the preprocessing map where one applies). The oracle knows no paths and
/// leaves path/positions at 0.
struct Move {
    int path = 0;      // 1-based canonical-path index, 0 when unknown
    int from_pos = 0;  // 1-based position on that path, 0 when unknown
    int to_pos = 0;
    int from_vertex = 0;
    int to_vertex = 0;
};

struct ReconfigSequence {
    Model model = Model::jump;
    std::vector<Move> moves;
    std::size_t length() const { return moves.size(); }
};

struct SolveStats {
    std::uint64_t states_explored = 0;
};

struct SolveResult {
    std::optional<ReconfigSequence> sequence;  // empty when infeasible
    SolveStats stats;
    bool feasible() const { return sequence.has_value(); }
    std::size_t length() const { return sequence ? sequence->moves.size() : 0; }
};

/// Minimum-length slide sequence, or infeasible. Greedily applies forward
/// slides; a stall with tokens away from B certifies infeasibility because
/// slides are reversible and forward slides suffice. When feasible the
/// length is the sum of the window widths.
SolveResult solve_ts_shortest(const Instance& inst);

/// Some jump sequence, or infeasible (greedy forward jumps on the reduced
/// instance, farthest landing first). Not necessarily shortest.
SolveResult solve_tj_feasible(const Instance& inst);

/// Provably shortest jump sequence via breadth-first search over the
/// window-confined, forward-only configuration space of the reduced
/// instance. Throws StateSpaceExceeded when the window product exceeds
/// max_states.
SolveResult solve_tj_shortest(const Instance& inst, std::uint64_t max_states = 100000000ULL);

/// Exhaustive reference search: enumerates every minimum separator (no
/// canonical-path or forward restriction), builds the reconfiguration
/// graph, and BFSes it. Guarded by C(n-2, k) <= 10^6 (throws TooLarge).
/// The forbidden overload drops every separator touching the given
/// vertices, which is the audit hook for unskippability claims.
SolveResult oracle_bfs(const Instance& inst, Model model);
SolveResult oracle_bfs(const Instance& inst, Model model, const std::vector<int>& forbidden);

/// Path decomposition of the reduced graph minus the terminals, read off
/// a forward jump sequence: every jump unrolls into bags sliding a window
/// of two consecutive path vertices. Width is at most k.
struct PathDecomposition {
    std::vector<std::vector<int>> bags;
};

/// Throws NotForward if seq contains a backward jump. seq must be a valid
/// jump sequence on ri (path/position fields filled).
PathDecomposition pathdecomp_from_solution(const ReducedInstance& ri, const ReconfigSequence& seq);

}  // namespace msr
