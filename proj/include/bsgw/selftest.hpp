#pragma once

// Seeded randomized property suites. Trial t draws from its own generator
// seeded by (seed, t), so results do not depend on evaluation order.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bsgw/report.hpp"

namespace bsgw {

// Types sampled by random trials.
const std::vector<std::string>& trial_types();

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// Random reduced word of length 1..min(max_len, |R^+|) over a sampled type,
// integer m_j uniform in 1..10.
BSInput random_trial(std::mt19937_64& rng, std::size_t max_len = 12);

// Random generalized Bott collection: stages <= 4, n_l <= 3, |a| <= 3, with a
// random divisor of small integers.
std::pair<BottCollection, DivisorClass> random_collection(std::mt19937_64& rng);

struct SuiteResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_error;
  std::optional<json> repro;  // minimized failing job spec
  std::string note;

  bool passed() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();  // without "all"

// Throws InputError for an unknown suite name.
std::vector<SuiteResult> run_selftest(const std::string& suite, std::uint64_t trials, std::uint64_t seed);

json selftest_json(const std::vector<SuiteResult>& results, std::uint64_t trials, std::uint64_t seed);

}  // namespace bsgw
