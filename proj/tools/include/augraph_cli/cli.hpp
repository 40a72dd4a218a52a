#pragma once

#include <string>
#include <vector>

namespace augraph::cli {

// Runs one CLI invocation. `args` excludes the program name. Exit codes:
//   0  success, outputs and manifests written
//   1  data or runtime error (bad file contents, dimension mismatches, ...)
//   2  usage error (unknown subcommand/flag, out-of-range argument)
// On failure no new output paths are left behind (outputs are staged to
// temporary names and renamed only after every write succeeded).
int run(const std::vector<std::string>& args);

int run(int argc, const char* const* argv);

}  // namespace augraph::cli
