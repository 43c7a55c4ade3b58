#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exem {

/// Entry point behind the exem binary. Returns the process exit code:
/// 0 success, 1 runtime failure (e.g. missing input file), 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exem
