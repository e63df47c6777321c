#pragma once

// Exhaustive and seeded property checks over enumerated words.
//
// Every check is an indexed loop: check(i) inspects item i and returns a
// counterexample description on failure. run_indexed_serial is the reference
// loop; run_indexed distributes the same indices over OpenMP threads and merges
// so that counts and the reported (lowest-index) counterexample are identical.

#include <cstdint>
#include <functional>
#include <random>
#include <optional>
#include <string>
#include <vector>

#include "rademacher/rademacher.hpp"

namespace rademacher {

enum class Suite { all, lemmas, theorem, classical, cocycle, linking, words };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct CheckResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_counterexample;

  bool passed() const noexcept { return failures == 0; }
};

struct SuiteReport {
  std::vector<CheckResult> results;

  bool passed() const noexcept;
};

using IndexedCheck = std::function<std::optional<std::string>(std::size_t)>;

/// Reference loop. An exception thrown by check counts as a failure.
CheckResult run_indexed_serial(std::string name, std::size_t count, const IndexedCheck& check);
/// OpenMP loop over the same indices; threads <= 0 uses the OpenMP default.
CheckResult run_indexed(std::string name, std::size_t count, const IndexedCheck& check, int threads = 0);

struct VerifyOptions {
  int max_r = 3;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t log_pairs = 500;
  int conjugator_syllables = 4;
  int roundtrip_syllables = 4;
  long log_precision_bits = 64;
  int threads = 0;
  bool parallel = true;
};

SuiteReport run_verification(const TriangleGroup& group, Suite suite, const VerifyOptions& options);

/// Deterministic per-trial generator: the same (seed, stream, index) always
/// yields the same draws, independent of thread scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Uniformly drawn normalized word with at most max_syllables syllables.
template <class Rng>
Word random_word(Rng& rng, const TriangleGroup& group, int max_syllables) {
  std::uniform_int_distribution<int> length(0, max_syllables);
  std::uniform_int_distribution<int> coin(0, 1);
  Word w;
  w.sign = coin(rng) ? 1 : -1;
  const int len = length(rng);
  Generator g = coin(rng) ? Generator::S : Generator::U;
  for (int i = 0; i < len; ++i) {
    const long order = g == Generator::S ? group.p() : group.q();
    std::uniform_int_distribution<long> exponent(1, order - 1);
    w.syllables.push_back({g, exponent(rng)});
    g = g == Generator::S ? Generator::U : Generator::S;
  }
  return w;
}

// individual property families, also used by the acceptance suite
CheckResult check_theorem(const TriangleGroup& group, int max_r, const VerifyOptions& o);
CheckResult check_classical(const TriangleGroup& group, int max_r, const VerifyOptions& o);
CheckResult check_conjugacy(const TriangleGroup& group, const VerifyOptions& o);
CheckResult check_cocycle_identity(const TriangleGroup& group, const VerifyOptions& o);
CheckResult check_sign_formula_forms();
CheckResult check_log_definition(const TriangleGroup& group, const VerifyOptions& o);
CheckResult check_generator_signs(const TriangleGroup& group);
CheckResult check_sign_pattern(const TriangleGroup& group, int max_r, const VerifyOptions& o);
CheckResult check_chebyshev(const TriangleGroup& group);
CheckResult check_power_consistency(const TriangleGroup& group);
CheckResult check_generator_psi(const TriangleGroup& group);
CheckResult check_psi_additivity(const TriangleGroup& group, const VerifyOptions& o);
CheckResult check_psi_word_independence(const TriangleGroup& group, const VerifyOptions& o);
CheckResult check_linking(const TriangleGroup& group, int max_r, const VerifyOptions& o);
CheckResult check_u_exponent_count(const TriangleGroup& group, int max_r, const VerifyOptions& o);
CheckResult check_roundtrip(const TriangleGroup& group, int max_syllables, const VerifyOptions& o);
CheckResult check_normalize(const TriangleGroup& group, const VerifyOptions& o);

}  // namespace rademacher
