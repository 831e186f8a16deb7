// Runs the full reproduction suite and prints one pass/fail line per
// criterion. Exits nonzero when any criterion fails.

#include <cstdio>

#include "wordcomp/verify.hpp"

int main() {
  wordcomp::VerifyOptions opt;
  opt.data_dir = wordcomp::default_data_dir();

  int criterion = 0;
  bool all_pass = true;
  for (const std::string& name : wordcomp::verify_check_names()) {
    wordcomp::CheckResult r = wordcomp::run_verify_check(name, opt);
    ++criterion;
    std::printf("criterion %02d [%s] %s (%.2fs, budget %.0fs)%s%s\n", criterion,
                r.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds, r.budget_seconds,
                r.pass ? "" : " -- ", r.pass ? "" : r.detail.c_str());
    std::fflush(stdout);
    all_pass &= r.pass;
  }
  return all_pass ? 0 : 1;
}
