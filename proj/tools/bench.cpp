// Timing comparison of the serial reference kernels against the OpenMP
// variants: elimination on assembled decoding systems and the trial loop.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hermipd/simulator.hpp"

using namespace hermipd;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Mat assembled_matrix(const HermitianCode& code, int s, int ell, int tau,
                     std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Fq> word(std::size_t(code.n));
  for (auto& v : word) v = Fq(rng.below(std::uint64_t(code.field.size())));
  KeyEqContext ctx =
      build_context(code, interpolate(code, word), s, ell, tau);
  return assemble(ctx, ExecMode::parallel).matrix;
}

void bench_rref(const char* label, const Field& F, const Mat& M, int reps) {
  Mat ms = M;
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) {
    ms = M;
    rref_serial(F, ms);
  }
  double serial = seconds_since(t0) / reps;

  Mat mp = M;
  t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) {
    mp = M;
    rref_parallel(F, mp);
  }
  double parallel = seconds_since(t0) / reps;

  bool same = (ms == mp);
  std::printf("%-28s %5dx%-5d serial %8.2f ms   parallel %8.2f ms   x%.2f  %s\n",
              label, M.rows, M.cols, serial * 1e3, parallel * 1e3,
              serial / parallel, same ? "identical" : "MISMATCH");
}

void bench_trials(const char* label, int q, int m, int s, int ell, int tau,
                  long long trials) {
  HermitianCode code = make_code(q, m, ExecMode::parallel);
  TrialConfig cfg;
  cfg.q = q;
  cfg.m = m;
  cfg.s = s;
  cfg.ell = ell;
  cfg.tau = tau;
  cfg.trials = trials;
  cfg.master_seed = 1;

  cfg.exec = ExecMode::serial;
  TrialStats st_serial = run_trials(code, cfg);
  cfg.exec = ExecMode::parallel;
  TrialStats st_parallel = run_trials(code, cfg);

  bool same = st_serial.successes == st_parallel.successes &&
              st_serial.decode_failures == st_parallel.decode_failures &&
              st_serial.miscorrections == st_parallel.miscorrections;
  std::printf("%-28s %5lld trials serial %7.2f s (%6.1f/s)  parallel %7.2f s (%6.1f/s)  x%.2f  %s\n",
              label, trials, st_serial.seconds, trials / st_serial.seconds,
              st_parallel.seconds, trials / st_parallel.seconds,
              st_serial.seconds / st_parallel.seconds,
              same ? "identical stats" : "STATS MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel variants run serially\n\n");
#endif

  std::printf("-- reduced row echelon form on assembled decoding systems --\n");
  {
    HermitianCode c4 = make_code(4, 15, ExecMode::parallel);
    bench_rref("q=4 m=15 s=2 ell=4 tau=29", c4.field,
               assembled_matrix(c4, 2, 4, 29, 7), 5);
  }
  {
    HermitianCode c5 = make_code(5, 20, ExecMode::parallel);
    bench_rref("q=5 m=20 s=2 ell=5 tau=68", c5.field,
               assembled_matrix(c5, 2, 5, 68, 7), 3);
  }
  {
    HermitianCode c7 = make_code(7, 70, ExecMode::parallel);
    bench_rref("q=7 m=70 s=2 ell=3 tau=161", c7.field,
               assembled_matrix(c7, 2, 3, 161, 7), 1);
  }

  std::printf("\n-- Monte-Carlo trial loop --\n");
  bench_trials("q=4 m=15 s=2 ell=4 tau=29", 4, 15, 2, 4, 29, 64);
  bench_trials("q=5 m=55 s=2 ell=3 tau=36", 5, 55, 2, 3, 36, 16);
  return 0;
}
