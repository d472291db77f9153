#pragma once

#include <optional>
#include <string>

#include "msr/preprocess.hpp"

namespace msr {

/// Kernelization result for the jump-count budget: either an equivalent
/// instance within the quadratic size bounds, or an early decision.
struct KernelOutcome {
    enum class Kind { decided_yes, decided_no, kernel };
    Kind kind = Kind::kernel;
    std::string reason;                    // which rule decided
    std::optional<ReducedInstance> kernel;  // set when kind == kernel
    int budget = 0;
};

/// Preprocesses, then applies the decision rules in order: YES when A = B
/// after reduction; NO when the separator size, a path length, the total
/// long-path size, the unskippable-vertex count, or a maximum matching of
/// crossing edges among skippable vertices exceeds what `budget` jumps
/// allow. Emitted kernels satisfy |V| <= 8b^2 + 5b and |E| <= 12b^2 + 7b.
KernelOutcome kernelize(const Instance& inst, int budget);

}  // namespace msr
