#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hermipd/galois.hpp"

namespace hermipd {

enum class ExecMode { serial, parallel };

/// Dense row-major matrix over GF(q^2).
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Fq> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * std::size_t(c), 0) {}

  Fq* row(int r) { return a.data() + std::size_t(r) * std::size_t(cols); }
  const Fq* row(int r) const {
    return a.data() + std::size_t(r) * std::size_t(cols);
  }
  Fq& at(int r, int c) { return a[std::size_t(r) * std::size_t(cols) + c]; }
  Fq at(int r, int c) const {
    return a[std::size_t(r) * std::size_t(cols) + c];
  }

  bool operator==(const Mat&) const = default;
};

struct RrefInfo {
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Reduced row echelon form, in place.  Pivoting is deterministic (first
// nonzero row per column), so serial and parallel variants produce
// bit-identical results; the parallel variant distributes the independent
// row updates of each pivot step over OpenMP threads.
RrefInfo rref_serial(const Field& F, Mat& M);
RrefInfo rref_parallel(const Field& F, Mat& M);
RrefInfo rref(const Field& F, Mat& M, ExecMode mode);

// Restricted variant: only the first `pivot_limit` columns are eligible as
// pivots (used for [A | I] factorizations).
RrefInfo rref_limited(const Field& F, Mat& M, int pivot_limit, ExecMode mode);

// Basis of the right nullspace of M (vectors of length M.cols).
std::vector<std::vector<Fq>> nullspace_basis(const Field& F, Mat M,
                                             ExecMode mode);

// One-shot solve A x = b; returns the pivot solution (free variables zero)
// or nullopt if inconsistent.
std::optional<std::vector<Fq>> solve_pivot(const Field& F, Mat A,
                                           std::span<const Fq> b,
                                           ExecMode mode);

/// Reusable factorization of a fixed matrix A for many right-hand sides.
/// Stores the transform T with T*A in reduced echelon form; solve() is a
/// mat-vec plus a consistency check on the rank-deficient rows.  The pivot
/// solution is linear in b, so callers get determinism and linearity.
class SolveCache {
 public:
  void build(const Field& F, const Mat& A, ExecMode mode);

  std::optional<std::vector<Fq>> solve(const Field& F,
                                       std::span<const Fq> b) const;

  int rank() const { return rank_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }

 private:
  int rows_ = 0, cols_ = 0, rank_ = 0;
  std::vector<int> pivot_cols_;
  Mat transform_;  // rows_ x rows_
};

// Among the span of `basis` (coordinates already in the elimination order),
// return the vector whose first nonzero coordinate is as late as possible
// while still inside the first `block_len` coordinates; nullopt if every
// span element starts at or beyond block_len.  The result is the unique
// reduced-echelon representative with unit leading coefficient.
std::optional<std::vector<Fq>> latest_pivot_in_block(
    const Field& F, const std::vector<std::vector<Fq>>& basis, int block_len);

}  // namespace hermipd
