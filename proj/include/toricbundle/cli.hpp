#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "toricbundle/analysis.hpp"
#include "toricbundle/kaneyama.hpp"

namespace toricbundle {

/// Exit codes of run_cli.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitMalformed = 2 };

/// Runs one subcommand. `args` excludes the program name. Reports go to `out` (or the --out
/// file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A relative path missing from the working directory is looked up under $TORICBUNDLE_FIXTURES.
std::string resolve_input_path(const std::string& path);

/// "identity", "sl-balance" or "block:R:p0,p1,...". Throws InputError.
Embedding parse_embedding(const std::string& spec);

/// "0,1;2" or a JSON list of lists. Throws InputError.
Partition parse_partition(const std::string& spec);

}  // namespace toricbundle
