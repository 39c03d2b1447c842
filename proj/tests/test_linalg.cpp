#include <doctest.h>

#include "hermipd/linalg.hpp"
#include "hermipd/rng.hpp"

using namespace hermipd;

namespace {

Mat rand_mat(SplitMix64& rng, const Field& F, int rows, int cols) {
  Mat M(rows, cols);
  for (auto& v : M.a) v = Fq(rng.below(std::uint64_t(F.size())));
  return M;
}

std::vector<Fq> matvec(const Field& F, const Mat& M, const std::vector<Fq>& x) {
  std::vector<Fq> y(std::size_t(M.rows), 0);
  for (int r = 0; r < M.rows; ++r) {
    Fq acc = 0;
    for (int c = 0; c < M.cols; ++c)
      acc = F.add(acc, F.mul(M.at(r, c), x[std::size_t(c)]));
    y[std::size_t(r)] = acc;
  }
  return y;
}

bool all_zero(const std::vector<Fq>& v) {
  for (Fq x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rref serial and parallel agree exactly") {
  for (int q : {2, 5}) {
    Field F(q);
    SplitMix64 rng(42 + q);
    for (int it = 0; it < 20; ++it) {
      Mat M = rand_mat(rng, F, 30, 45);
      Mat Ms = M, Mp = M;
      RrefInfo is = rref_serial(F, Ms);
      RrefInfo ip = rref_parallel(F, Mp);
      CHECK(is.rank == ip.rank);
      CHECK(is.pivot_cols == ip.pivot_cols);
      CHECK(Ms == Mp);
    }
  }
}

TEST_CASE("nullspace vectors annihilate the matrix") {
  for (int q : {2, 3, 4}) {
    Field F(q);
    SplitMix64 rng(7 * q);
    for (int it = 0; it < 15; ++it) {
      Mat M = rand_mat(rng, F, 12, 20);
      Mat copy = M;
      RrefInfo info = rref_serial(F, copy);
      auto ns = nullspace_basis(F, M, ExecMode::serial);
      CHECK(int(ns.size()) == M.cols - info.rank);
      for (const auto& v : ns) CHECK(all_zero(matvec(F, M, v)));
    }
  }
}

TEST_CASE("solve_pivot consistent and inconsistent") {
  Field F(4);
  SplitMix64 rng(99);
  for (int it = 0; it < 30; ++it) {
    Mat A = rand_mat(rng, F, 10, 6);
    std::vector<Fq> x0(6);
    for (auto& v : x0) v = Fq(rng.below(16));
    std::vector<Fq> b = matvec(F, A, x0);
    auto x = solve_pivot(F, A, b, ExecMode::serial);
    REQUIRE(x.has_value());
    CHECK(matvec(F, A, *x) == b);
  }
  // inconsistent: zero matrix, nonzero rhs
  Mat Z(3, 2);
  std::vector<Fq> b{0, 1, 0};
  CHECK(!solve_pivot(F, Z, b, ExecMode::serial).has_value());
}

TEST_CASE("SolveCache matches one-shot solves and is linear") {
  Field F(3);
  SplitMix64 rng(31337);
  Mat A = rand_mat(rng, F, 14, 9);
  SolveCache cache;
  cache.build(F, A, ExecMode::serial);
  for (int it = 0; it < 25; ++it) {
    std::vector<Fq> b(14);
    for (auto& v : b) v = Fq(rng.below(9));
    auto x1 = cache.solve(F, b);
    auto x2 = solve_pivot(F, A, b, ExecMode::serial);
    CHECK(x1.has_value() == x2.has_value());
    if (x1) CHECK(matvec(F, A, *x1) == b);
  }
  // linearity of the pivot solution
  std::vector<Fq> bb1 = matvec(F, A, std::vector<Fq>{1, 0, 2, 0, 1, 0, 0, 2, 1});
  std::vector<Fq> bb2 = matvec(F, A, std::vector<Fq>{0, 1, 0, 2, 0, 0, 1, 0, 2});
  auto s1 = cache.solve(F, bb1);
  auto s2 = cache.solve(F, bb2);
  REQUIRE(s1);
  REQUIRE(s2);
  std::vector<Fq> sum_b(14);
  for (int i = 0; i < 14; ++i)
    sum_b[std::size_t(i)] = F.add(bb1[std::size_t(i)], bb2[std::size_t(i)]);
  auto s12 = cache.solve(F, sum_b);
  REQUIRE(s12);
  for (int i = 0; i < 9; ++i)
    CHECK((*s12)[std::size_t(i)] == F.add((*s1)[std::size_t(i)], (*s2)[std::size_t(i)]));
}

TEST_CASE("latest_pivot_in_block picks the deepest start") {
  Field F(2);
  // basis rows over 4 coords; spans vectors starting at coords 0 and 2
  std::vector<std::vector<Fq>> basis = {{1, 0, 1, 0}, {0, 0, 1, 1}};
  auto v = latest_pivot_in_block(F, basis, 4);
  REQUIRE(v);
  CHECK((*v) == std::vector<Fq>{0, 0, 1, 1});
  // block restricted to the first 2 coords: only the first vector qualifies
  auto w = latest_pivot_in_block(F, basis, 2);
  REQUIRE(w);
  CHECK((*w)[0] == 1);
  // no vector starts inside a 0-length block
  CHECK(!latest_pivot_in_block(F, basis, 0).has_value());
}
