#ifndef SONF_VERIFY_HPP
#define SONF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sonf {

struct VerifyOptions {
  int max_n = 6;        // sweep bound for parameters and kernels
  int max_d = 4;        // per-line summand bound for random parameters
  long long prime = 3;  // residue enumerations
  int samples = 200;    // random parameters per property sweep
  std::uint64_t seed = 20240817;
  bool parallel = true;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The full module invariant suite; deterministic for fixed options.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts);

}  // namespace sonf

#endif
