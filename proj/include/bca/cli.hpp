#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bca {

/// Batch front end. Exit codes: 0 when every verdict passes or holds,
/// 1 when some verdict fails (the report is still emitted), 2 on parse or
/// usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bca
