#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msr {

/// Dispatches one command (solve | preprocess | kernelize | generate |
/// verify | oracle). Returns 0 on success, 1 on a rejected verification,
/// 2 on usage errors, 3 on input validation failures, 4 on resource
/// guards. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msr
