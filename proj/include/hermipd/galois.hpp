#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace hermipd {

using Fq = std::uint8_t;

// Sentinel degree of the zero polynomial / zero ring element.
// Compares less than every attainable degree.
inline constexpr int kNegInf = std::numeric_limits<int>::min() / 2;

/// Arithmetic context for GF(q^2), q a prime power in {2,3,4,5,7,8}.
///
/// Elements are the integers 0..q^2-1, encoding coordinate vectors over the
/// prime field F_p (value = sum c_i p^i).  A fixed primitive element (the
/// class of z for a primitive modulus polynomial) drives log/antilog tables;
/// full add/mul tables are precomputed since q^2 <= 64.  Immutable after
/// construction, safe for concurrent reads.
class Field {
 public:
  explicit Field(int q);

  int q() const { return q_; }
  int size() const { return size_; }  // q^2
  int characteristic() const { return p_; }

  Fq add(Fq a, Fq b) const { return add_[idx(a, b)]; }
  Fq sub(Fq a, Fq b) const { return add_[idx(a, neg_[b])]; }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq mul(Fq a, Fq b) const { return mul_[idx(a, b)]; }
  Fq inv(Fq a) const;  // throws std::domain_error on 0
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, long long e) const;
  Fq frobenius(Fq a) const { return frob_[a]; }  // a^q

  bool in_subfield(Fq a) const { return frob_[a] == a; }
  // The q elements fixed by the q-power Frobenius, ascending encoding order.
  const std::vector<Fq>& subfield() const { return subfield_; }

  // Raw table row for hot loops: mul_row(a)[b] == mul(a, b).
  const Fq* mul_row(Fq a) const { return mul_.data() + idx(a, 0); }

 private:
  std::size_t idx(Fq a, Fq b) const {
    return std::size_t(a) * std::size_t(size_) + b;
  }

  int q_ = 0;
  int size_ = 0;
  int p_ = 0;
  std::vector<Fq> add_, mul_, neg_, frob_;
  std::vector<Fq> exp_;
  std::vector<int> log_;
  std::vector<Fq> subfield_;
};

/// Dense univariate polynomial over GF(q^2), coefficients lowest degree
/// first, no trailing zeros (zero polynomial = empty vector).
struct Poly {
  std::vector<Fq> c;

  bool zero() const { return c.empty(); }
  int deg() const { return c.empty() ? kNegInf : int(c.size()) - 1; }
  Fq coeff(int i) const {
    return (i >= 0 && i < int(c.size())) ? c[std::size_t(i)] : Fq{0};
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  void set_coeff(int i, Fq v);

  static Poly constant(Fq v);
  static Poly x_pow(int n, Fq lead = 1);

  bool operator==(const Poly&) const = default;
};

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_neg(const Field& F, const Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, Fq v);
Poly poly_shift(const Poly& a, int k);   // multiply by X^k
Poly poly_trunc(const Poly& a, int n);   // remainder mod X^n
// Quotient and remainder; throws std::domain_error on zero divisor.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_rem(const Field& F, const Poly& a, const Poly& b);
Poly poly_pow(const Field& F, const Poly& a, int e);
Fq poly_eval(const Field& F, const Poly& a, Fq x);

}  // namespace hermipd
