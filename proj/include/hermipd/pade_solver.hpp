#pragma once

#include <optional>
#include <vector>

#include "hermipd/key_equations.hpp"
#include "hermipd/rational.hpp"

namespace hermipd {

// Guaranteed-solution threshold:
// n[1-(s+1)/(2(l+1))] - (l/2s)m - (l-s+1)/(s(l+1)) + (g-1)/(l+1).
Rational radius_guaranteed(int q, int m, int s, int ell);

// Practically achieved radius: floor of the same expression without the
// (g-1)/(l+1) term.
int radius_practical(int q, int m, int s, int ell);

// Closed-form system-size counts behind the existence bound, as exact
// integers: unknowns V = sum_i [s*tau + i(2g-1) - g + 1] and equation count
// E = sum_t [T_t - (s*tau + t*m) - 1].
long long sizing_unknowns(int g, int s, long long tau);
long long sizing_equations(int n, int g, int m, int s, int ell, long long tau);

/// The homogeneous linear system whose nullspace carries the candidate
/// solutions: one column per unknown coefficient of each lambda_i (blocks by
/// i, ascending deg_H inside a block), one row per constrained coefficient
/// of each reduced sum (all representable monomials above the psi bound).
struct PadeInstance {
  const KeyEqContext* ctx = nullptr;
  std::vector<std::vector<Monomial>> unknown_basis;  // per i = 0..s-1
  std::vector<int> block_offset;                     // size s+1, block_offset[s] = columns
  struct ConstraintRow {
    int t = 0;
    Monomial mono;
  };
  std::vector<ConstraintRow> rows;
  Mat matrix;
};

PadeInstance assemble(const KeyEqContext& ctx,
                      ExecMode mode = ExecMode::serial);

struct CandidateSolution {
  std::vector<RingElement> lambdas;  // size s, lambdas[0] != 0
  std::vector<RingElement> psis;     // size ell
  int nullspace_dim = 0;
};

struct PadeSolveResult {
  std::optional<CandidateSolution> candidate;
  int nullspace_dim = 0;  // 0 means the nullspace was trivial
};

// Nullspace + minimal-solution selection: coordinates are eliminated with
// lambda_0's monomials first in descending deg_H, so the deepest pivot row
// inside that block is the unique representative whose lambda_0 has the
// smallest leading monomial, scaled to a unit leading coefficient.
// candidate is empty when the nullspace is trivial or every nullspace
// vector has lambda_0 = 0.
PadeSolveResult solve_minimal(const PadeInstance& instance,
                              ExecMode mode = ExecMode::serial);

// Dimension of the solution space (diagnostic).
int solution_space_dim(const KeyEqContext& ctx,
                       ExecMode mode = ExecMode::serial);

}  // namespace hermipd
