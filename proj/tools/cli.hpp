#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nestocone::cli {

/// Exit codes: 0 success, 1 construction not applicable to the input,
/// 2 malformed input or usage, 3 internal error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nestocone::cli
