#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qipa {

inline constexpr const char* kToolVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudgetExceeded = 3;

struct HarnessOptions {
    std::optional<std::filesystem::path> graph;
    std::optional<std::filesystem::path> spectrum;
    double alpha = 1.0;
    std::vector<double> alphas;  // error-scan grid; falls back to {alpha}
    double dtau = 0.01;
    double dt = 0.1;
    int steps = 200;
    std::uint64_t seed = 1;
    double c = 1.0;
    double d = 1.0;
    double k = 1.0;
    std::string mode = "both";      // varqite | qipa2 | both
    std::string oracle = "exp";     // identity | exp | dexp
    int max_iter = 100000;
    std::string state = "uniform";  // error-scan expectation state: uniform | evolved
    double tau = 1.0;               // evolved-state imaginary time
    int layers = 2;
    double regularization = 1e-8;
    std::filesystem::path out = ".";
    bool no_timestamp = false;
};

// Each command writes its outputs plus a manifest.json into opts.out and
// returns a CLI exit code; input problems surface as kExitInputError with the
// reason on stderr.
int cmd_analyze(const HarnessOptions& opts);
int cmd_power(const HarnessOptions& opts);
int cmd_compare(const HarnessOptions& opts);
int cmd_error_scan(const HarnessOptions& opts);

// Re-executes the command recorded in a manifest; outputs land in
// out_override if given, else next to the manifest. Byte-identical CSV/JSON
// is the determinism contract.
int cmd_rerun(const std::filesystem::path& manifest_file,
              const std::optional<std::filesystem::path>& out_override);

// Whole-file atomic write (temp + rename).
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace qipa
