#include "hermipd/decoder.hpp"

#include <stdexcept>

#include "hermipd/interpolation.hpp"

namespace hermipd {

const char* to_string(FailureReason r) {
  switch (r) {
    case FailureReason::none: return "none";
    case FailureReason::no_solution: return "no_solution";
    case FailureReason::lambda_zero_only: return "lambda_zero_only";
    case FailureReason::division_failed: return "division_failed";
    case FailureReason::message_degree_exceeded: return "message_degree_exceeded";
    case FailureReason::distance_exceeded: return "distance_exceeded";
  }
  return "?";
}

namespace {

// Solve lambda0 * f + w * G = psi1 for f of deg_H <= m (and a cofactor w of
// deg_H <= psi_bound - n).  The solution class of psi1 is only pinned modulo
// the working modulus, so plain exact division can miss; dividing modulo G
// is representative-independent because G vanishes at every P_i.
std::optional<RingElement> divide_mod_g(const KeyEqContext& ctx,
                                        const RingElement& lambda0,
                                        const RingElement& psi1) {
  const HermitianCode& code = *ctx.code;
  const Field& F = code.field;
  const int q = code.q;

  std::vector<Monomial> f_basis = monomials_upto(q, code.m);
  std::vector<Monomial> w_basis = monomials_upto(q, ctx.psi_bound(1) - code.n);

  std::vector<RingElement> prods;
  prods.reserve(f_basis.size() + w_basis.size());
  int max_len = 0;
  for (const auto& mo : f_basis)
    prods.push_back(ring_mul_monomial(F, lambda0, mo.xdeg, mo.ydeg));
  for (const auto& mo : w_basis)
    prods.push_back(ring_mul_monomial(F, ctx.G, mo.xdeg, mo.ydeg));
  for (const auto& p : prods)
    for (const auto& c : p.comp) max_len = std::max(max_len, int(c.c.size()));
  for (const auto& c : psi1.comp) max_len = std::max(max_len, int(c.c.size()));

  Mat A(q * max_len, int(prods.size()));
  std::vector<Fq> rhs(std::size_t(q) * std::size_t(max_len), 0);
  for (int j = 0; j < q; ++j)
    for (int d = 0; d < max_len; ++d) {
      int row = j * max_len + d;
      for (std::size_t k = 0; k < prods.size(); ++k)
        A.at(row, int(k)) = prods[k].comp[std::size_t(j)].coeff(d);
      rhs[std::size_t(row)] = psi1.comp[std::size_t(j)].coeff(d);
    }
  auto x = solve_pivot(F, std::move(A), rhs, ExecMode::serial);
  if (!x) return std::nullopt;
  RingElement f = ring_zero(q);
  for (std::size_t c = 0; c < f_basis.size(); ++c)
    if ((*x)[c] != 0) ring_set_coeff(f, f_basis[c], (*x)[c]);
  return f;
}

}  // namespace

DecodeOutcome decode(const HermitianCode& code, std::span<const Fq> received,
                     const DecodeOptions& opts) {
  if (!(1 <= opts.s && opts.s <= opts.ell))
    throw std::invalid_argument("decode: need 1 <= s <= ell");
  if (int(received.size()) != code.n)
    throw std::invalid_argument("decode: word length != n");
  int tau = opts.tau ? *opts.tau
                     : radius_practical(code.q, code.m, opts.s, opts.ell);
  if (tau < 0 || tau > code.n)
    throw std::invalid_argument("decode: tau out of range");

  DecodeOutcome out;
  out.tau_used = tau;

  RingElement R = interpolate(code, received);
  KeyEqContext ctx = build_context(code, std::move(R), opts.s, opts.ell, tau,
                                   opts.mode);
  PadeInstance inst = assemble(ctx, opts.exec);
  PadeSolveResult solved = solve_minimal(inst, opts.exec);
  out.nullspace_dim = solved.nullspace_dim;
  if (!solved.candidate) {
    out.reason = solved.nullspace_dim == 0 ? FailureReason::no_solution
                                           : FailureReason::lambda_zero_only;
    return out;
  }
  const CandidateSolution& cand = *solved.candidate;
  out.lambda0_degh = deg_h(cand.lambdas[0]);

  auto f = divide_mod_g(ctx, cand.lambdas[0], cand.psis[0]);
  if (!f) {
    out.reason = FailureReason::division_failed;
    return out;
  }
  if (deg_h(*f) > code.m) {  // guard; the division basis enforces it
    out.reason = FailureReason::message_degree_exceeded;
    return out;
  }

  std::vector<Fq> message(std::size_t(code.k), 0);
  for (std::size_t j = 0; j < code.message_basis.size(); ++j)
    message[j] = ring_coeff(*f, code.message_basis[j]);
  std::vector<Fq> codeword = encode(code, message);
  int dist = hamming_distance(received, codeword);
  if (dist > tau) {
    out.reason = FailureReason::distance_exceeded;
    return out;
  }
  out.success = true;
  out.codeword = std::move(codeword);
  out.message = std::move(message);
  out.errors_corrected = dist;
  return out;
}

DecodeOutcome decode_with_sweep(const HermitianCode& code,
                                std::span<const Fq> received,
                                DecodeOptions opts) {
  if (!opts.tau)
    opts.tau = radius_practical(code.q, code.m, opts.s, opts.ell);
  DecodeOutcome first = decode(code, received, opts);
  if (first.success) return first;
  int tau_min = (code.d_star - 1 + 1) / 2;  // ceil((d*-1)/2)
  for (int tau = *opts.tau - 1; tau >= tau_min; --tau) {
    DecodeOptions o = opts;
    o.tau = tau;
    DecodeOutcome out = decode(code, received, o);
    if (out.success) return out;
  }
  return first;
}

}  // namespace hermipd
