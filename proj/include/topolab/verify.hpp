#pragma once

// Property suites run over a corpus of finite spaces: every topology up to a
// size, plus seeded random spaces. Output is deterministic for a given config.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/fintop.hpp"

namespace topolab {

struct CorpusConfig {
  std::size_t exhaustive_max = 0;  // all topologies on 0..exhaustive_max points
  bool exhaustive = false;
  std::size_t random_count = 0;
  std::size_t random_max_n = 8;  // random sizes are drawn from 1..random_max_n
  std::uint64_t seed = 7;
};

std::vector<FinSpace> build_corpus(const CorpusConfig& cfg);

// Per-space limits for the suites whose cost grows with a derived quantity.
inline constexpr std::size_t kThrpreComponentCap = 6;
inline constexpr std::size_t kIdealIsolatedCap = 6;

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // spaces beyond the suite's per-space limit
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few, each with its space
};

struct VerifyReport {
  std::string corpus;
  std::vector<SuiteResult> suites;
  bool ok() const;
  std::string summary() const;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rose", "thrpre", "ideals", "duality", "density"};
  return names;
}

// `suite` is one of suite_names() or "all". Throws InvalidSet on an unknown name.
VerifyReport run_verification(std::string_view suite, const CorpusConfig& cfg);

// Individual per-space checks; each returns an empty string on success or a
// description of the first violation.
std::string check_rose(const FinSpace& x);
std::string check_thrpre(const FinSpace& x);
std::string check_ideals(const FinSpace& x);
std::string check_duality(const FinSpace& x);
std::string check_density(const FinSpace& x);

}  // namespace topolab
