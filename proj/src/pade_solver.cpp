#include "hermipd/pade_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermipd {

namespace {

Rational radius_base(int q, int m, int s, int ell) {
  long long n = (long long)q * q * q;
  Rational r = Rational(n) * (Rational(1) - Rational(s + 1, 2 * (ell + 1)));
  r = r - Rational((long long)ell * m, 2 * s);
  r = r - Rational(ell - s + 1, (long long)s * (ell + 1));
  return r;
}

}  // namespace

Rational radius_guaranteed(int q, int m, int s, int ell) {
  int g = q * (q - 1) / 2;
  return radius_base(q, m, s, ell) + Rational(g - 1, ell + 1);
}

int radius_practical(int q, int m, int s, int ell) {
  return int(radius_base(q, m, s, ell).floor());
}

long long sizing_unknowns(int g, int s, long long tau) {
  long long v = 0;
  for (int i = 0; i < s; ++i) v += s * tau + (long long)i * (2 * g - 1) - g + 1;
  return v;
}

long long sizing_equations(int n, int g, int m, int s, int ell,
                           long long tau) {
  long long e = 0;
  for (int t = 1; t <= ell; ++t) {
    long long T = (t < s) ? (long long)t * (n + 2 * g - 1) + s * tau + 1
                          : (long long)s * n;
    e += T - (s * tau + (long long)t * m) - 1;
  }
  return e;
}

PadeInstance assemble(const KeyEqContext& ctx, ExecMode mode) {
  const HermitianCode& code = *ctx.code;
  const Field& F = code.field;
  const int q = code.q;
  const int s = ctx.s;

  PadeInstance inst;
  inst.ctx = &ctx;
  inst.block_offset.assign(std::size_t(s) + 1, 0);
  for (int i = 0; i < s; ++i) {
    inst.unknown_basis.push_back(monomials_upto(q, ctx.lambda_bound(i)));
    inst.block_offset[std::size_t(i) + 1] =
        inst.block_offset[std::size_t(i)] +
        int(inst.unknown_basis.back().size());
  }
  const int cols = inst.block_offset[std::size_t(s)];

  // constraint rows: per t, every monomial representable after reduction
  // whose deg_H exceeds the psi bound
  std::vector<int> row_start(std::size_t(ctx.ell) + 1, 0);
  for (int t = 1; t <= ctx.ell; ++t) {
    const Modulus& mod = ctx.moduli[std::size_t(t - 1)];
    int cap = mod.xpower ? mod.exponent - 1 : ctx.g_power_s.deg() - 1;
    int bound = ctx.psi_bound(t);
    std::vector<Monomial> monos;
    for (int j = 0; j < q; ++j)
      for (int d = 0; d <= cap; ++d)
        if (monomial_deg_h(q, d, j) > bound)
          monos.push_back({d, j, monomial_deg_h(q, d, j)});
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& a, const Monomial& b) { return a.degh < b.degh; });
    for (const Monomial& mo : monos) inst.rows.push_back({t, mo});
    row_start[std::size_t(t)] = int(inst.rows.size());
  }

  inst.matrix = Mat(int(inst.rows.size()), cols);
  for (int i = 0; i < s; ++i) {
    const auto& basis = inst.unknown_basis[std::size_t(i)];
    const int off = inst.block_offset[std::size_t(i)];
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (mode == ExecMode::parallel)
#endif
    for (int c = 0; c < int(basis.size()); ++c) {
      const Monomial& mo = basis[std::size_t(c)];
      for (int t = 1; t <= ctx.ell; ++t) {
        const RingElement& a = ctx.A_red[std::size_t(t - 1)][std::size_t(i)];
        if (a.zero()) continue;
        RingElement red = reduce_mod(
            F, ring_mul_monomial(F, a, mo.xdeg, mo.ydeg), ctx, t);
        for (int r = row_start[std::size_t(t - 1)]; r < row_start[std::size_t(t)];
             ++r) {
          Fq v = ring_coeff(red, inst.rows[std::size_t(r)].mono);
          if (v != 0) inst.matrix.at(r, off + c) = v;
        }
      }
    }
  }
  (void)mode;
  return inst;
}

PadeSolveResult solve_minimal(const PadeInstance& inst, ExecMode mode) {
  const KeyEqContext& ctx = *inst.ctx;
  const Field& F = ctx.code->field;
  const int q = ctx.code->q;
  const int s = ctx.s;
  const int cols = inst.block_offset[std::size_t(s)];

  PadeSolveResult result;
  auto ns = nullspace_basis(F, inst.matrix, mode);
  result.nullspace_dim = int(ns.size());
  if (ns.empty()) return result;

  // elimination order: lambda_0 block descending deg_H first, then the
  // other blocks (descending within each)
  std::vector<int> order(static_cast<std::size_t>(cols), 0);
  {
    int pos = 0;
    for (int i = 0; i < s; ++i) {
      int lo = inst.block_offset[std::size_t(i)];
      int hi = inst.block_offset[std::size_t(i) + 1];
      for (int c = hi - 1; c >= lo; --c) order[std::size_t(pos++)] = c;
    }
  }
  std::vector<std::vector<Fq>> permuted(ns.size());
  for (std::size_t r = 0; r < ns.size(); ++r) {
    permuted[r].resize(std::size_t(cols));
    for (int c = 0; c < cols; ++c)
      permuted[r][std::size_t(c)] = ns[r][std::size_t(order[std::size_t(c)])];
  }
  const int block0 = int(inst.unknown_basis[0].size());
  auto picked = latest_pivot_in_block(F, permuted, block0);
  if (!picked) return result;

  CandidateSolution cand;
  cand.nullspace_dim = result.nullspace_dim;
  std::vector<Fq> natural(static_cast<std::size_t>(cols), 0);
  for (int c = 0; c < cols; ++c)
    natural[std::size_t(order[std::size_t(c)])] = (*picked)[std::size_t(c)];
  for (int i = 0; i < s; ++i) {
    RingElement li = ring_zero(q);
    const auto& basis = inst.unknown_basis[std::size_t(i)];
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Fq v = natural[std::size_t(inst.block_offset[std::size_t(i)]) + c];
      if (v != 0) ring_set_coeff(li, basis[c], v);
    }
    cand.lambdas.push_back(std::move(li));
  }
  for (int t = 1; t <= ctx.ell; ++t) {
    RingElement sum = ring_zero(q);
    for (int i = 0; i < s; ++i)
      sum = ring_add(F, sum,
                     ring_mul(F, cand.lambdas[std::size_t(i)],
                              ctx.A_red[std::size_t(t - 1)][std::size_t(i)]));
    RingElement psi = reduce_mod(F, sum, ctx, t);
    if (deg_h(psi) > ctx.psi_bound(t))
      throw std::logic_error("solve_minimal: psi degree exceeds bound");
    cand.psis.push_back(std::move(psi));
  }
  result.candidate = std::move(cand);
  return result;
}

int solution_space_dim(const KeyEqContext& ctx, ExecMode mode) {
  PadeInstance inst = assemble(ctx, mode);
  Mat M = inst.matrix;
  RrefInfo info = rref(ctx.code->field, M, mode);
  return inst.matrix.cols - info.rank;
}

}  // namespace hermipd
