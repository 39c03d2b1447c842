#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hermipd/hermitian_ring.hpp"
#include "hermipd/linalg.hpp"

namespace hermipd {

/// One-point Hermitian code: evaluation of the functions of pole order <= m
/// at the q^3 affine rational points of Y^q + Y = X^{q+1}.
///
/// Immutable after construction.  The evaluation-matrix factorizations for
/// encoding/membership and for received-word interpolation are built once
/// and shared across decodes (concurrent reads are safe).
struct HermitianCode {
  int q = 0;
  int m = 0;
  int n = 0;       // q^3
  int g = 0;       // q(q-1)/2
  int k = 0;       // m - g + 1
  int d_star = 0;  // n - m

  Field field;
  std::vector<CurvePoint> points;       // fixed (x, y)-lexicographic order
  std::vector<Monomial> message_basis;  // deg_H <= m
  std::vector<Monomial> interp_basis;   // deg_H <= n + 2g - 1 (n + g entries)

  Mat eval_mat;            // n x k evaluation matrix
  SolveCache encode_cache; // factorization of eval_mat (membership back-map)
  SolveCache interp_cache; // factorization of the n x (n+g) interpolation system

  HermitianCode(const HermitianCode&) = delete;
  HermitianCode& operator=(const HermitianCode&) = delete;
  HermitianCode(HermitianCode&&) = default;
  HermitianCode& operator=(HermitianCode&&) = default;
  HermitianCode() : field(2) {}
};

// The q^3 affine rational points, ordered lexicographically by (x, y) in the
// field's element order.
std::vector<CurvePoint> curve_points(const Field& F);

// Throws std::invalid_argument unless 2(g-1) < m < n.
HermitianCode make_code(int q, int m, ExecMode mode = ExecMode::serial);

std::vector<Fq> encode(const HermitianCode& code, std::span<const Fq> message);

// The unique message encoding to `word`, or nullopt when word is not a
// codeword.
std::optional<std::vector<Fq>> message_of_codeword(const HermitianCode& code,
                                                   std::span<const Fq> word);

int hamming_distance(std::span<const Fq> a, std::span<const Fq> b);
int hamming_weight(std::span<const Fq> a);

}  // namespace hermipd
