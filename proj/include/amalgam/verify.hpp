#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "amalgam/quotient.hpp"

namespace amalgam {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when nothing useful to say
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

enum class VerifyLevel { quick, full };

struct VerifyReport {
  AmalgamParams params;
  VerifyLevel level = VerifyLevel::quick;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool all_pass() const;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eed;

// The individual suites; every identity is checked by exact computation
// and failures become report entries, never exceptions.
std::vector<CheckResult> symbolic_identity_suite(const AmalgamParams& params);
std::vector<CheckResult> fox_suite(const AmalgamParams& params,
                                   std::uint64_t seed, int samples);
std::vector<CheckResult> conjugacy_suite(const AmalgamParams& params,
                                         std::uint64_t seed, int samples);
std::vector<CheckResult> betti_suite(const AmalgamParams& params);
std::vector<CheckResult> quotient_suite(const AmalgamParams& params,
                                        VerifyLevel level);

// Runs every suite. "quick" restricts quotient degrees and sample counts.
VerifyReport verify_all(const AmalgamParams& params, VerifyLevel level,
                        std::uint64_t seed = kDefaultSeed);

// All valid parameter triples with m, n bounded (the standard test grid).
std::vector<AmalgamParams> params_grid(int max_m, int max_n);

std::string render_table(const VerifyReport& report);
nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace amalgam
