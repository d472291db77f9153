#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msr/solvers.hpp"

namespace msr {

/// Outcome of replaying a claimed sequence. Reject is a value, not an
/// error; `step` is the 1-based index of the offending move (one past the
/// last move when the replay ends away from B).
struct Verdict {
    bool accepted = true;
    int step = 0;
    std::string reason;
};

/// Replays the moves from A with the full breadth-first separator test
/// (deliberately not the crossing-edge shortcut, so the verifier shares
/// nothing with the solvers' fast path). Accepts iff every intermediate
/// set is a minimum separator, every move is a legal single-token move of
/// the stated model, and the final set equals B.
Verdict verify_sequence(const Instance& inst, Model model,
                        const std::vector<std::pair<int, int>>& vertex_moves);
Verdict verify_sequence(const Instance& inst, const ReconfigSequence& seq);

/// Sequence file: header `model slide|jump`, then one `<from> <to>` pair
/// per line.
struct SequenceFile {
    Model model = Model::jump;
    std::vector<std::pair<int, int>> moves;
};

SequenceFile parse_sequence_file(const std::string& text);
std::string format_sequence_file(const ReconfigSequence& seq);

}  // namespace msr
