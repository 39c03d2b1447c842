#include "hermipd/key_equations.hpp"

#include <stdexcept>

namespace hermipd {

int binom_mod_char(long long t, long long i, int p) {
  if (i < 0 || i > t) return 0;
  // exact product, fits easily for t <= 20
  unsigned long long num = 1;
  for (long long j = 1; j <= i; ++j) {
    num = num * (unsigned long long)(t - i + j);
    num /= (unsigned long long)j;
  }
  return int(num % (unsigned long long)(p));
}

KeyEqContext build_context(const HermitianCode& code, RingElement R, int s,
                           int ell, int tau, ModulusMode mode) {
  if (!(1 <= s && s <= ell))
    throw std::invalid_argument("build_context: need 1 <= s <= ell");
  if (tau < 0) throw std::invalid_argument("build_context: tau < 0");
  const Field& F = code.field;
  const int q = code.q;

  KeyEqContext ctx;
  ctx.code = &code;
  ctx.s = s;
  ctx.ell = ell;
  ctx.tau = tau;
  ctx.profile = s * tau + code.g;
  ctx.mode = mode;
  ctx.R = std::move(R);

  Poly g_poly;  // X^{q^2} - X
  g_poly.set_coeff(F.size(), 1);
  g_poly.set_coeff(1, F.neg(1));
  ctx.G = ring_from_poly(q, g_poly);
  ctx.g_power_s = poly_pow(F, g_poly, s);

  std::vector<RingElement> r_pow{ring_one(q)};
  for (int t = 1; t <= ell; ++t)
    r_pow.push_back(ring_mul(F, r_pow.back(), ctx.R));
  std::vector<RingElement> g_pow{ring_one(q)};
  for (int i = 1; i < s; ++i) g_pow.push_back(ring_mul(F, g_pow.back(), ctx.G));

  ctx.moduli.resize(std::size_t(ell));
  for (int t = 1; t <= ell; ++t) {
    Modulus& mod = ctx.moduli[std::size_t(t - 1)];
    if (t < s) {
      mod.xpower = true;
      int c = (mode == ModulusMode::equality) ? ctx.profile : tau;
      mod.exponent = (t * (code.n + 2 * code.g - 1) + c) / q + 1;
    }
  }

  ctx.A.assign(std::size_t(ell), {});
  ctx.A_red.assign(std::size_t(ell), {});
  for (int t = 1; t <= ell; ++t) {
    for (int i = 0; i < s; ++i) {
      int b = binom_mod_char(t, i, F.characteristic());
      RingElement a = (i > t || b == 0)
                          ? ring_zero(q)
                          : ring_scale(F,
                                       ring_mul(F, r_pow[std::size_t(t - i)],
                                                g_pow[std::size_t(i)]),
                                       Fq(b));
      ctx.A_red[std::size_t(t - 1)].push_back(reduce_mod(F, a, ctx, t));
      ctx.A[std::size_t(t - 1)].push_back(std::move(a));
    }
  }
  return ctx;
}

RingElement reduce_mod(const Field& F, const RingElement& a,
                       const KeyEqContext& ctx, int t) {
  const Modulus& mod = ctx.moduli[std::size_t(t - 1)];
  if (mod.xpower) return ring_trunc_xpow(a, mod.exponent);
  return ring_rem_poly(F, a, ctx.g_power_s);
}

RingElement error_locator(const HermitianCode& code,
                          std::span<const int> support) {
  const Field& F = code.field;
  const int q = code.q;
  const int e = int(support.size());
  for (int i : support)
    if (i < 0 || i >= code.n)
      throw std::invalid_argument("error_locator: position out of range");
  for (int D = e; D <= e + code.g; ++D) {
    std::vector<Monomial> basis = monomials_upto(q, D);
    Mat M(e, int(basis.size()));
    for (int r = 0; r < e; ++r) {
      const CurvePoint& P = code.points[std::size_t(support[std::size_t(r)])];
      for (int c = 0; c < M.cols; ++c)
        M.at(r, c) = F.mul(F.pow(P.x, basis[std::size_t(c)].xdeg),
                           F.pow(P.y, basis[std::size_t(c)].ydeg));
    }
    auto ns = nullspace_basis(F, std::move(M), ExecMode::serial);
    if (ns.empty()) continue;
    // minimal leading monomial: eliminate with descending-deg_H coordinates
    std::vector<std::vector<Fq>> rev(ns.size());
    for (std::size_t r = 0; r < ns.size(); ++r)
      rev[r].assign(ns[r].rbegin(), ns[r].rend());
    auto best = latest_pivot_in_block(F, rev, int(basis.size()));
    RingElement L = ring_zero(q);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Fq v = (*best)[basis.size() - 1 - c];
      if (v != 0) ring_set_coeff(L, basis[c], v);
    }
    return L;
  }
  throw std::logic_error("error_locator: no locator up to |E| + g");
}

std::optional<RingElement> error_evaluator(const KeyEqContext& ctx,
                                           const RingElement& locator,
                                           const RingElement& f) {
  const Field& F = ctx.code->field;
  RingElement num = ring_mul(F, locator, ring_sub(F, ctx.R, f));
  return exact_divide(F, num, ctx.G, deg_h(locator) + 2 * ctx.code->g - 1);
}

bool verify_key_equations(const KeyEqContext& ctx, const RingElement& locator,
                          const RingElement& omega, const RingElement& f) {
  const Field& F = ctx.code->field;
  const int q = ctx.code->q;
  const int s = ctx.s;
  const int p = F.characteristic();

  std::vector<RingElement> lam_pow{ring_one(q)}, om_pow{ring_one(q)},
      r_pow{ring_one(q)}, g_pow{ring_one(q)}, f_pow{ring_one(q)};
  for (int i = 1; i <= s; ++i) {
    lam_pow.push_back(ring_mul(F, lam_pow.back(), locator));
    g_pow.push_back(ring_mul(F, g_pow.back(), ctx.G));
  }
  for (int i = 1; i < s; ++i) om_pow.push_back(ring_mul(F, om_pow.back(), omega));
  for (int t = 1; t <= ctx.ell; ++t) {
    r_pow.push_back(ring_mul(F, r_pow.back(), ctx.R));
    f_pow.push_back(ring_mul(F, f_pow.back(), f));
  }

  for (int t = 1; t <= ctx.ell; ++t) {
    RingElement lhs = ring_mul(F, lam_pow[std::size_t(s)], f_pow[std::size_t(t)]);
    RingElement rhs = ring_zero(q);
    int imax = (t < s) ? t : s - 1;
    for (int i = 0; i <= imax; ++i) {
      int b = binom_mod_char(t, i, p);
      if (b == 0) continue;
      // locator*(R - f) = omega*G flips the sign of the proof's evaluator,
      // hence the (-1)^i here
      Fq coeff = Fq(b);
      if (i % 2 == 1) coeff = F.neg(coeff);
      RingElement term = ring_mul(F, lam_pow[std::size_t(s - i)],
                                  om_pow[std::size_t(i)]);
      term = ring_mul(F, term, r_pow[std::size_t(t - i)]);
      term = ring_mul(F, term, g_pow[std::size_t(i)]);
      rhs = ring_add(F, rhs, ring_scale(F, term, coeff));
    }
    RingElement diff = ring_sub(F, lhs, rhs);
    if (t < s) {
      if (!diff.zero()) return false;
    } else {
      if (!ring_rem_poly(F, diff, ctx.g_power_s).zero()) return false;
    }
  }
  return true;
}

}  // namespace hermipd
