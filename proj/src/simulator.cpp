#include "hermipd/simulator.hpp"

#include <boost/math/distributions/beta.hpp>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hermipd {

std::vector<Fq> random_error(const HermitianCode& code, int tau,
                             SplitMix64& rng) {
  if (tau < 0 || tau > code.n)
    throw std::invalid_argument("random_error: tau out of range");
  const int Q = code.field.size();
  std::vector<Fq> e(std::size_t(code.n), 0);
  // partial Fisher-Yates for the support
  std::vector<int> idx(std::size_t(code.n));
  for (int i = 0; i < code.n; ++i) idx[std::size_t(i)] = i;
  for (int j = 0; j < tau; ++j) {
    int pick = j + int(rng.below(std::uint64_t(code.n - j)));
    std::swap(idx[std::size_t(j)], idx[std::size_t(pick)]);
    e[std::size_t(idx[std::size_t(j)])] =
        Fq(1 + rng.below(std::uint64_t(Q - 1)));
  }
  return e;
}

std::pair<double, double> clopper_pearson(long long x, long long n,
                                          double alpha) {
  if (n <= 0 || x < 0 || x > n)
    throw std::invalid_argument("clopper_pearson: bad counts");
  using boost::math::beta_distribution;
  double lo = 0.0, hi = 1.0;
  if (x > 0)
    lo = quantile(beta_distribution<double>(double(x), double(n - x + 1)),
                  alpha / 2);
  if (x < n)
    hi = quantile(beta_distribution<double>(double(x + 1), double(n - x)),
                  1 - alpha / 2);
  return {lo, hi};
}

TrialStats run_trials(const HermitianCode& code, const TrialConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("run_trials: trials must be >= 1");
  if (config.q != code.q || config.m != code.m)
    throw std::invalid_argument("run_trials: config does not match code");
  const Field& F = code.field;
  int tau = config.tau ? *config.tau
                       : radius_practical(code.q, code.m, config.s, config.ell);
  if (tau < 0 || tau > code.n)
    throw std::invalid_argument("run_trials: tau out of range");

  TrialStats st;
  st.q = code.q;
  st.m = code.m;
  st.n = code.n;
  st.k = code.k;
  st.d_star = code.d_star;
  st.ell = config.ell;
  st.s = config.s;
  st.tau = tau;
  st.trials = config.trials;
  st.seed = config.master_seed;

  const long long N = config.trials;
  // 0 = success, 1 = decode failure, 2 = miscorrection
  std::vector<unsigned char> outcome(std::size_t(N), 1);

  auto t0 = std::chrono::steady_clock::now();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    if (config.exec == ExecMode::parallel)
#endif
  for (long long trial = 0; trial < N; ++trial) {
    SplitMix64 rng = trial_rng(config.master_seed, std::uint64_t(trial));
    std::vector<Fq> message(std::size_t(code.k));
    for (auto& v : message) v = Fq(rng.below(std::uint64_t(F.size())));
    std::vector<Fq> sent = encode(code, message);
    std::vector<Fq> error = random_error(code, tau, rng);
    std::vector<Fq> received(std::size_t(code.n));
    for (int i = 0; i < code.n; ++i)
      received[std::size_t(i)] =
          F.add(sent[std::size_t(i)], error[std::size_t(i)]);

    DecodeOptions opts;
    opts.s = config.s;
    opts.ell = config.ell;
    opts.tau = tau;
    opts.mode = config.mode;
    opts.exec = ExecMode::serial;  // parallelism lives at the trial level
    DecodeOutcome out = config.sweep ? decode_with_sweep(code, received, opts)
                                     : decode(code, received, opts);
    if (!out.success) {
      outcome[std::size_t(trial)] = 1;
    } else if (out.codeword == sent) {
      outcome[std::size_t(trial)] = 0;
    } else {
      // classification soundness: a miscorrection must still be a codeword
      // within tau of the received word
      if (!message_of_codeword(code, out.codeword) ||
          hamming_distance(received, out.codeword) > tau)
        throw std::logic_error("run_trials: decoder returned invalid codeword");
      outcome[std::size_t(trial)] = 2;
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  st.seconds = std::chrono::duration<double>(t1 - t0).count();

  for (unsigned char oc : outcome) {
    if (oc == 0)
      ++st.successes;
    else if (oc == 1)
      ++st.decode_failures;
    else
      ++st.miscorrections;
  }
  long long combined = st.decode_failures + st.miscorrections;
  st.failure_rate = double(combined) / double(st.trials);
  std::tie(st.ci_low, st.ci_high) = clopper_pearson(combined, st.trials);
  return st;
}

TrialStats run_trials(const TrialConfig& config) {
  HermitianCode code = make_code(config.q, config.m, config.exec);
  return run_trials(code, config);
}

std::vector<TrialConfig> default_table_rows(std::uint64_t master_seed) {
  std::vector<TrialConfig> rows;
  auto add = [&](int q, int m, int s, int ell, int tau, long long trials) {
    TrialConfig c;
    c.q = q;
    c.m = m;
    c.s = s;
    c.ell = ell;
    c.tau = tau;
    c.trials = trials;
    c.master_seed = master_seed + rows.size();
    rows.push_back(c);
  };
  add(4, 15, 2, 4, 28, 200);
  add(4, 15, 2, 4, 29, 200);
  add(4, 15, 2, 4, 30, 100);
  add(5, 55, 2, 3, 34, 50);
  add(5, 55, 2, 3, 35, 50);
  add(5, 55, 2, 3, 36, 50);
  add(5, 20, 2, 5, 67, 30);
  add(5, 20, 2, 5, 68, 30);
  add(5, 20, 2, 5, 69, 30);
  add(7, 70, 2, 3, 161, 10);
  add(7, 70, 2, 4, 169, 10);
  add(7, 55, 2, 4, 184, 10);
  return rows;
}

std::vector<TrialStats> reproduce_table(const std::vector<TrialConfig>& rows) {
  std::vector<TrialStats> out;
  int prev_q = -1, prev_m = -1;
  HermitianCode code;
  for (const TrialConfig& cfg : rows) {
    if (cfg.q != prev_q || cfg.m != prev_m) {
      code = make_code(cfg.q, cfg.m, cfg.exec);
      prev_q = cfg.q;
      prev_m = cfg.m;
    }
    out.push_back(run_trials(code, cfg));
  }
  return out;
}

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

std::string stats_csv_header() {
  return "q,m,n,k,d_star,ell,s,tau,trials,failures,miscorrections,"
         "failure_rate,ci_low,ci_high,seed,seconds";
}

std::string stats_csv_row(const TrialStats& st) {
  std::ostringstream os;
  os << st.q << ',' << st.m << ',' << st.n << ',' << st.k << ',' << st.d_star
     << ',' << st.ell << ',' << st.s << ',' << st.tau << ',' << st.trials
     << ',' << st.decode_failures << ',' << st.miscorrections << ','
     << fmt_double(st.failure_rate) << ',' << fmt_double(st.ci_low) << ','
     << fmt_double(st.ci_high) << ',' << st.seed << ','
     << fmt_double(st.seconds);
  return os.str();
}

std::string stats_json_row(const TrialStats& st) {
  nlohmann::json j;
  j["q"] = st.q;
  j["m"] = st.m;
  j["n"] = st.n;
  j["k"] = st.k;
  j["d_star"] = st.d_star;
  j["ell"] = st.ell;
  j["s"] = st.s;
  j["tau"] = st.tau;
  j["trials"] = st.trials;
  j["failures"] = st.decode_failures;
  j["miscorrections"] = st.miscorrections;
  j["failure_rate"] = st.failure_rate;
  j["ci_low"] = st.ci_low;
  j["ci_high"] = st.ci_high;
  j["seed"] = st.seed;
  j["seconds"] = st.seconds;
  return j.dump();
}

}  // namespace hermipd
