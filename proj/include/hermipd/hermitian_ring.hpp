#pragma once

#include <optional>
#include <vector>

#include "hermipd/galois.hpp"
#include "hermipd/linalg.hpp"

namespace hermipd {

/// Element of R = F_{q^2}[X,Y]/(Y^q + Y - X^{q+1}) in canonical form:
/// comp[j] is the X-polynomial multiplying Y^j, 0 <= j < q.  Canonical form
/// (Y-degree < q) is maintained by every operation.
struct RingElement {
  std::vector<Poly> comp;

  int q() const { return int(comp.size()); }
  bool zero() const {
    for (const auto& c : comp)
      if (!c.zero()) return false;
    return true;
  }
  bool operator==(const RingElement&) const = default;
};

struct CurvePoint {
  Fq x = 0;
  Fq y = 0;
};

struct Monomial {
  int xdeg = 0;
  int ydeg = 0;
  int degh = 0;
};

RingElement ring_zero(int q);
RingElement ring_one(int q);
RingElement ring_constant(int q, Fq v);
RingElement ring_monomial(int q, int xdeg, int ydeg, Fq coeff = 1);
RingElement ring_from_poly(int q, Poly p);  // univariate embedding (Y-degree 0)

// Pole order at the place at infinity; kNegInf for the zero element.
int deg_h(const RingElement& a);
inline int monomial_deg_h(int q, int i, int j) { return i * q + j * (q + 1); }

RingElement ring_add(const Field& F, const RingElement& a, const RingElement& b);
RingElement ring_sub(const Field& F, const RingElement& a, const RingElement& b);
RingElement ring_neg(const Field& F, const RingElement& a);
RingElement ring_scale(const Field& F, const RingElement& a, Fq v);
RingElement ring_mul(const Field& F, const RingElement& a, const RingElement& b);
// Fast path: multiply by the monomial X^xdeg Y^ydeg.
RingElement ring_mul_monomial(const Field& F, const RingElement& a, int xdeg,
                              int ydeg);
RingElement ring_pow(const Field& F, const RingElement& a, int e);
Fq ring_eval(const Field& F, const RingElement& a, CurvePoint P);

Fq ring_coeff(const RingElement& a, const Monomial& m);
void ring_set_coeff(RingElement& a, const Monomial& m, Fq v);

// All monomials X^i Y^j with j < q and deg_H <= D, ascending by deg_H
// (deg_H is injective on this set).  Empty for D < 0.
std::vector<Monomial> monomials_upto(int q, int D);

// Coordinates over the free basis 1, Y, ..., Y^{q-1}.
inline const std::vector<Poly>& vector_rep(const RingElement& a) {
  return a.comp;
}

/// Matrices over F_{q^2}[X] expressing multiplication in vector form:
/// vector_rep(a*b) == vector_rep(a) * mu_matrix(b) * xi_matrix(q).
struct PolyMat {
  int rows = 0;
  int cols = 0;
  std::vector<Poly> m;

  PolyMat() = default;
  PolyMat(int r, int c) : rows(r), cols(c), m(std::size_t(r) * std::size_t(c)) {}
  Poly& at(int r, int c) { return m[std::size_t(r) * std::size_t(cols) + c]; }
  const Poly& at(int r, int c) const {
    return m[std::size_t(r) * std::size_t(cols) + c];
  }
};

PolyMat mu_matrix(const RingElement& b);           // q x (2q-1), banded shifts
PolyMat xi_matrix(const Field& F, int q);          // (2q-1) x q, identity over fold-down block
std::vector<Poly> poly_vec_times_mat(const Field& F,
                                     const std::vector<Poly>& v,
                                     const PolyMat& M);

// Componentwise reductions (univariate moduli act per Y-power component).
RingElement ring_trunc_xpow(const RingElement& a, int n);
RingElement ring_rem_poly(const Field& F, const RingElement& a,
                          const Poly& modulus);

// Exact division: c with den*c == num and deg_h(c) <= deg_bound, via a
// linear solve over monomials_upto(q, deg_bound); nullopt when num is not
// a multiple of den within the bound.  Throws on zero denominator.
std::optional<RingElement> exact_divide(const Field& F, const RingElement& num,
                                        const RingElement& den, int deg_bound);

}  // namespace hermipd
