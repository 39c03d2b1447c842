#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hermipd/code.hpp"
#include "hermipd/interpolation.hpp"

namespace hermipd {

/// Degree cap used for the early congruences (t < s).
/// `equality` sizes the X-power modulus from the full working profile, which
/// makes the congruence equivalent to the exact identity the key equations
/// state for t < s.  `truncated` uses the shorter cap with tau alone in the
/// exponent; it admits strictly more solutions and is kept as a variant for
/// experimentation.
enum class ModulusMode { equality, truncated };

inline constexpr ModulusMode kDefaultModulusMode = ModulusMode::equality;

struct Modulus {
  bool xpower = false;
  int exponent = 0;  // meaningful when xpower
};

/// Assembled ingredients of the linearized decoding problem for a fixed
/// received word: the summands A_{t,i} = binom(t,i) R^{t-i} G^i, their
/// reductions, and the per-t moduli.  All degree bounds downstream are based
/// on profile = s*tau + g; the +g absorbs the gap between error count and
/// attainable locator degree and is what makes the practical radius
/// reachable.
struct KeyEqContext {
  const HermitianCode* code = nullptr;
  int s = 0;
  int ell = 0;
  int tau = 0;
  int profile = 0;  // s*tau + g
  ModulusMode mode = kDefaultModulusMode;

  RingElement R;
  RingElement G;  // X^{q^2} - X embedded in the ring
  Poly g_power_s; // (X^{q^2} - X)^s as a univariate polynomial

  std::vector<std::vector<RingElement>> A;      // A[t-1][i], t=1..ell, i=0..s-1
  std::vector<std::vector<RingElement>> A_red;  // A reduced mod the t-th modulus
  std::vector<Modulus> moduli;                  // moduli[t-1]

  int lambda_bound(int i) const { return profile + i * (2 * code->g - 1); }
  int psi_bound(int t) const { return profile + t * code->m; }
};

// Binomial coefficient mod the characteristic (t small).
int binom_mod_char(long long t, long long i, int p);

KeyEqContext build_context(const HermitianCode& code, RingElement R, int s,
                           int ell, int tau,
                           ModulusMode mode = kDefaultModulusMode);

RingElement reduce_mod(const Field& F, const RingElement& a,
                       const KeyEqContext& ctx, int t);

// ---- test oracles (require knowledge of the error; never used in decoding)

// Nonzero element of minimal deg_H vanishing at the given point indices;
// |support| <= deg_H <= |support| + g.
RingElement error_locator(const HermitianCode& code,
                          std::span<const int> support);

// The unique Omega with locator*(R - f) == Omega*G, as an exact division
// with bound deg_h(locator) + 2g - 1; nullopt when locator does not vanish
// on the error support of the word R interpolates (relative to f).
std::optional<RingElement> error_evaluator(const KeyEqContext& ctx,
                                           const RingElement& locator,
                                           const RingElement& f);

// Checks the full system of key equations for an oracle triple: exact
// equalities for t < s and congruences mod G^s for t = s..ell.  With Omega
// normalized by locator*(R-f) = Omega*G, the identity carries a (-1)^i on
// the i-th summand.
bool verify_key_equations(const KeyEqContext& ctx, const RingElement& locator,
                          const RingElement& omega, const RingElement& f);

}  // namespace hermipd
