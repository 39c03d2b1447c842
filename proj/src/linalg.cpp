#include "hermipd/linalg.hpp"

#include <stdexcept>

namespace hermipd {

namespace {

// dst -= f * src over columns [from, cols)
inline void row_axpy(const Field& F, Fq* dst, const Fq* src, Fq f, int from,
                     int cols) {
  const Fq* mr = F.mul_row(F.neg(f));
  for (int j = from; j < cols; ++j)
    if (src[j] != 0) dst[j] = F.add(dst[j], mr[src[j]]);
}

inline void row_scale(const Field& F, Fq* row, Fq f, int from, int cols) {
  const Fq* mr = F.mul_row(f);
  for (int j = from; j < cols; ++j) row[j] = mr[row[j]];
}

template <bool Parallel>
RrefInfo rref_impl(const Field& F, Mat& M, int pivot_limit) {
  RrefInfo info;
  int rank = 0;
  for (int col = 0; col < pivot_limit && rank < M.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < M.rows; ++r) {
      if (M.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < M.cols; ++j)
        std::swap(M.at(rank, j), M.at(piv, j));
    Fq lead = M.at(rank, col);
    if (lead != 1) row_scale(F, M.row(rank), F.inv(lead), col, M.cols);
    const Fq* src = M.row(rank);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (int r = 0; r < M.rows; ++r) {
        if (r == rank) continue;
        Fq f = M.at(r, col);
        if (f != 0) row_axpy(F, M.row(r), src, f, col, M.cols);
      }
    } else {
      for (int r = 0; r < M.rows; ++r) {
        if (r == rank) continue;
        Fq f = M.at(r, col);
        if (f != 0) row_axpy(F, M.row(r), src, f, col, M.cols);
      }
    }
    info.pivot_cols.push_back(col);
    ++rank;
  }
  info.rank = rank;
  return info;
}

}  // namespace

RrefInfo rref_serial(const Field& F, Mat& M) {
  return rref_impl<false>(F, M, M.cols);
}

RrefInfo rref_parallel(const Field& F, Mat& M) {
#ifdef _OPENMP
  return rref_impl<true>(F, M, M.cols);
#else
  return rref_impl<false>(F, M, M.cols);
#endif
}

RrefInfo rref(const Field& F, Mat& M, ExecMode mode) {
  return mode == ExecMode::parallel ? rref_parallel(F, M) : rref_serial(F, M);
}

RrefInfo rref_limited(const Field& F, Mat& M, int pivot_limit, ExecMode mode) {
#ifdef _OPENMP
  if (mode == ExecMode::parallel) return rref_impl<true>(F, M, pivot_limit);
#endif
  (void)mode;
  return rref_impl<false>(F, M, pivot_limit);
}

std::vector<std::vector<Fq>> nullspace_basis(const Field& F, Mat M,
                                             ExecMode mode) {
  RrefInfo info = rref(F, M, mode);
  std::vector<bool> is_pivot(std::size_t(M.cols), false);
  for (int c : info.pivot_cols) is_pivot[std::size_t(c)] = true;
  std::vector<std::vector<Fq>> basis;
  for (int free = 0; free < M.cols; ++free) {
    if (is_pivot[std::size_t(free)]) continue;
    std::vector<Fq> v(std::size_t(M.cols), 0);
    v[std::size_t(free)] = 1;
    for (int r = 0; r < info.rank; ++r)
      v[std::size_t(info.pivot_cols[std::size_t(r)])] =
          F.neg(M.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Fq>> solve_pivot(const Field& F, Mat A,
                                           std::span<const Fq> b,
                                           ExecMode mode) {
  if (int(b.size()) != A.rows)
    throw std::invalid_argument("solve_pivot: rhs length mismatch");
  Mat aug(A.rows, A.cols + 1);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols) = b[std::size_t(r)];
  }
  RrefInfo info = rref_limited(F, aug, A.cols, mode);
  for (int r = info.rank; r < A.rows; ++r)
    if (aug.at(r, A.cols) != 0) return std::nullopt;
  std::vector<Fq> x(std::size_t(A.cols), 0);
  for (int r = 0; r < info.rank; ++r)
    x[std::size_t(info.pivot_cols[std::size_t(r)])] = aug.at(r, A.cols);
  return x;
}

void SolveCache::build(const Field& F, const Mat& A, ExecMode mode) {
  rows_ = A.rows;
  cols_ = A.cols;
  Mat aug(A.rows, A.cols + A.rows);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols + r) = 1;
  }
  RrefInfo info = rref_limited(F, aug, A.cols, mode);
  rank_ = info.rank;
  pivot_cols_ = info.pivot_cols;
  transform_ = Mat(rows_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < rows_; ++c) transform_.at(r, c) = aug.at(r, cols_ + c);
}

std::optional<std::vector<Fq>> SolveCache::solve(
    const Field& F, std::span<const Fq> b) const {
  if (int(b.size()) != rows_)
    throw std::invalid_argument("SolveCache: rhs length mismatch");
  std::vector<Fq> y(std::size_t(rows_), 0);
  for (int r = 0; r < rows_; ++r) {
    Fq acc = 0;
    const Fq* tr = transform_.row(r);
    for (int c = 0; c < rows_; ++c)
      if (tr[c] != 0 && b[std::size_t(c)] != 0)
        acc = F.add(acc, F.mul(tr[c], b[std::size_t(c)]));
    y[std::size_t(r)] = acc;
  }
  for (int r = rank_; r < rows_; ++r)
    if (y[std::size_t(r)] != 0) return std::nullopt;
  std::vector<Fq> x(std::size_t(cols_), 0);
  for (int r = 0; r < rank_; ++r)
    x[std::size_t(pivot_cols_[std::size_t(r)])] = y[std::size_t(r)];
  return x;
}

std::optional<std::vector<Fq>> latest_pivot_in_block(
    const Field& F, const std::vector<std::vector<Fq>>& basis, int block_len) {
  if (basis.empty()) return std::nullopt;
  const int cols = int(basis[0].size());
  Mat M(int(basis.size()), cols);
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < cols; ++c) M.at(r, c) = basis[std::size_t(r)][std::size_t(c)];
  RrefInfo info = rref_serial(F, M);
  for (int r = info.rank; r-- > 0;) {
    if (info.pivot_cols[std::size_t(r)] < block_len) {
      std::vector<Fq> v(std::size_t(cols), 0);
      for (int c = 0; c < cols; ++c) v[std::size_t(c)] = M.at(r, c);
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace hermipd
