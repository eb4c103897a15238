#pragma once

#include <string>
#include <vector>

namespace fairclear {

// External decision procedure invoked over stdin/stdout.
struct BackendConfig {
    std::string exe;
    std::vector<std::string> args;
    std::string truePattern = R"(\b(true|sat|TRUE)\b)";
    std::string falsePattern = R"(\b(false|unsat|FALSE)\b)";
};

enum class BackendOutcome { True, False, SpawnFailed, TimedOut, Unparseable };

struct BackendResult {
    BackendOutcome outcome = BackendOutcome::SpawnFailed;
    std::string output;  // captured stdout (for diagnostics)
};

// Merge key=value lines ("backend.name", "backend.args",
// "backend.true_pattern", "backend.false_pattern") into cfg.  Blank lines
// and lines starting with '#' are ignored.  Returns false on a malformed
// line.
bool loadBackendConfig(const std::string& path, BackendConfig& cfg,
                       std::string& error);

// Run the backend, feed it input, wait up to timeoutSeconds, and classify
// its stdout by the true/false patterns (true wins if both match... the
// patterns are expected to be disjoint).
BackendResult runBackend(const BackendConfig& cfg, const std::string& input,
                         int timeoutSeconds);

}  // namespace fairclear
