#ifndef TESLERFORGE_CLI_HPP
#define TESLERFORGE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace teslerforge::cli {

/// Runs one CLI invocation. Returns 0 on success (JSON result on `out`),
/// 2 on domain errors (JSON error object on `out`), 1 on usage errors
/// (message on `err`). Output is byte-deterministic for fixed inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teslerforge::cli

#endif
