#pragma once

#include <stdexcept>
#include <string>

namespace msr {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number.
struct SyntaxError : Error {
    int line;
    SyntaxError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

/// A claimed separator does not separate s from t; names the offending set.
struct NotSeparator : Error {
    explicit NotSeparator(const std::string& set_name)
        : Error("set " + set_name + " does not separate s from t") {}
};

/// A claimed separator is larger than the minimum separator size.
struct NotMinimum : Error {
    explicit NotMinimum(const std::string& msg) : Error(msg) {}
};

struct TerminalsAdjacent : Error {
    TerminalsAdjacent() : Error("terminals s and t are adjacent") {}
};

/// A vertex set touches s, t, or a vertex outside the graph.
struct InvalidSet : Error {
    explicit InvalidSet(const std::string& msg) : Error(msg) {}
};

/// A set misses a canonical path or hits one twice.
struct NotOnePerPath : Error {
    explicit NotOnePerPath(const std::string& msg) : Error(msg) {}
};

/// A separator vertex lies on no canonical path (invariant violation upstream).
struct SeparatorOffPath : Error {
    explicit SeparatorOffPath(const std::string& msg) : Error(msg) {}
};

/// The configuration search would exceed the state cap.
struct StateSpaceExceeded : Error {
    explicit StateSpaceExceeded(const std::string& msg) : Error(msg) {}
};

/// A brute-force enumeration guard tripped.
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

/// Cross-composition inputs disagree in vertex count or cover budget.
struct MismatchedSizes : Error {
    explicit MismatchedSizes(const std::string& msg) : Error(msg) {}
};

struct GenerationFailed : Error {
    explicit GenerationFailed(const std::string& msg) : Error(msg) {}
};

/// A sequence contains a backward move where forward-only is required.
struct NotForward : Error {
    explicit NotForward(const std::string& msg) : Error(msg) {}
};

}  // namespace msr
