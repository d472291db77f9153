#pragma once

#include <vector>

#include "msr/canonical.hpp"
#include "msr/graph.hpp"

namespace msr {

/// Result of one reduction rule. Deleting vertices renumbers the survivors
/// densely; vertex_map[new id] = id in the rule's input instance (index 0
/// unused). `changed` is false when the rule was a no-op.
struct Reduction {
    Instance instance;
    std::vector<int> vertex_map;
    bool changed = false;
};

struct SharedRemoval {
    Instance instance;
    std::vector<int> vertex_map;
    std::vector<int> fixed_tokens;  // deleted A-and-B vertices, input ids
    bool changed = false;
};

/// A fully normalized jumping-model instance with the bookkeeping needed
/// to lift solutions back to the graph preprocessing started from.
struct ReducedInstance {
    Instance instance;
    CanonicalPaths cp;
    std::vector<int> vertex_map;    // reduced id -> original id
    std::vector<int> fixed_tokens;  // original ids whose tokens never move
    int k_reduced = 0;
};

/// Deletes the canonical-path vertices outside [l_i, r_i] and reattaches
/// the window ends to s and t. Equivalent under both move models.
Reduction trim_to_windows(const Instance& inst, const CanonicalPaths& cp);

/// Deletes all off-path vertices after connecting every pair of on-path
/// vertices that they join; shortcuts any chords this creates and repeats
/// until every vertex is on a chordless canonical path. Jumping model only.
Reduction contract_offpath(const Instance& inst, const CanonicalPaths& cp);

/// Keeps at most the two extreme neighbors a vertex has on each foreign
/// path, then splices out interior degree-2 vertices. Vertices of A, B,
/// and the terminals are never spliced. Jumping model only.
Reduction reduce_degrees(const Instance& inst, const CanonicalPaths& cp);

/// Deletes every vertex of A ∩ B; the tokens on them never move,
/// so the separator size shrinks by |A ∩ B|.
SharedRemoval remove_shared(const Instance& inst);

/// Runs remove_shared once, then trim/contract/degree-reduce to a joint
/// fixpoint, recomputing flow and canonical paths after every change.
/// When A = B the result is the trivial two-vertex yes-instance.
ReducedInstance preprocess_tj(const Instance& inst);

}  // namespace msr
