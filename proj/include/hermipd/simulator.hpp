#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermipd/decoder.hpp"
#include "hermipd/rng.hpp"

namespace hermipd {

struct TrialConfig {
  int q = 4;
  int m = 15;
  int s = 2;
  int ell = 4;
  std::optional<int> tau;  // channel errors per trial; default radius_practical
  long long trials = 100;
  std::uint64_t master_seed = 0;
  bool sweep = false;
  ModulusMode mode = kDefaultModulusMode;
  ExecMode exec = ExecMode::parallel;  // trial-level parallelism
};

struct TrialStats {
  // code/decoder parameters actually used
  int q = 0, m = 0, n = 0, k = 0, d_star = 0, ell = 0, s = 0, tau = 0;
  long long trials = 0;
  long long successes = 0;
  long long decode_failures = 0;
  long long miscorrections = 0;
  double failure_rate = 0.0;  // (decode_failures + miscorrections) / trials
  double ci_low = 0.0, ci_high = 0.0;  // 95% Clopper-Pearson on the combined count
  std::uint64_t seed = 0;
  double seconds = 0.0;
};

// Error vector of Hamming weight exactly tau: uniformly random support,
// uniformly random nonzero values.
std::vector<Fq> random_error(const HermitianCode& code, int tau,
                             SplitMix64& rng);

// Monte-Carlo loop: per trial draw a uniform message, encode, add a random
// weight-tau error, decode, and classify as success / miscorrection /
// decode failure.  Trials are seeded independently from (master_seed, index),
// so results are reproducible and independent of the number of threads;
// `seconds` is the only field that varies between identical runs.
TrialStats run_trials(const HermitianCode& code, const TrialConfig& config);
TrialStats run_trials(const TrialConfig& config);  // builds the code first

// 95% Clopper-Pearson interval for x failures out of n trials.
std::pair<double, double> clopper_pearson(long long x, long long n,
                                          double alpha = 0.05);

// The desk-scale reproduction rows: both q=4 and q=5 codes at all their
// error weights, q=7 rows at their practical radius with few trials.
std::vector<TrialConfig> default_table_rows(std::uint64_t master_seed);

std::vector<TrialStats> reproduce_table(const std::vector<TrialConfig>& rows);

std::string stats_csv_header();
std::string stats_csv_row(const TrialStats& st);
std::string stats_json_row(const TrialStats& st);  // one JSON object

}  // namespace hermipd
