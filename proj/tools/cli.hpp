#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qreal::cli {

/// Runs `qreal-lab` with the given arguments (program name excluded).
/// Returns 0 on success, 1 for computation failures, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qreal::cli
