#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace wordcomp {

// One named reproduction check. Every check pins its expected values and its
// wall-clock budget; `detail` carries the first expected/actual mismatch.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct VerifyOptions {
  std::filesystem::path data_dir;  // directory with the shipped fixtures
};

// WORDCOMP_DATA_DIR when set, otherwise the location configured at build
// time, otherwise "./data".
std::filesystem::path default_data_dir();

const std::vector<std::string>& verify_check_names();

CheckResult run_verify_check(const std::string& name, const VerifyOptions& opt);

// Runs the named checks ("all" or empty = every check, in order).
std::vector<CheckResult> run_verify(const std::vector<std::string>& names,
                                    const VerifyOptions& opt);

}  // namespace wordcomp
