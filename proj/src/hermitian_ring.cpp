#include "hermipd/hermitian_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermipd {

RingElement ring_zero(int q) {
  RingElement a;
  a.comp.resize(std::size_t(q));
  return a;
}

RingElement ring_one(int q) { return ring_constant(q, 1); }

RingElement ring_constant(int q, Fq v) {
  RingElement a = ring_zero(q);
  a.comp[0] = Poly::constant(v);
  return a;
}

RingElement ring_monomial(int q, int xdeg, int ydeg, Fq coeff) {
  if (ydeg < 0 || ydeg >= q)
    throw std::invalid_argument("ring_monomial: Y-degree out of range");
  RingElement a = ring_zero(q);
  a.comp[std::size_t(ydeg)] = Poly::x_pow(xdeg, coeff);
  return a;
}

RingElement ring_from_poly(int q, Poly p) {
  RingElement a = ring_zero(q);
  a.comp[0] = std::move(p);
  return a;
}

int deg_h(const RingElement& a) {
  const int q = a.q();
  int best = kNegInf;
  for (int j = 0; j < q; ++j) {
    const Poly& c = a.comp[std::size_t(j)];
    if (!c.zero()) best = std::max(best, q * c.deg() + j * (q + 1));
  }
  return best;
}

RingElement ring_add(const Field& F, const RingElement& a,
                     const RingElement& b) {
  RingElement r = ring_zero(a.q());
  for (int j = 0; j < a.q(); ++j)
    r.comp[std::size_t(j)] =
        poly_add(F, a.comp[std::size_t(j)], b.comp[std::size_t(j)]);
  return r;
}

RingElement ring_sub(const Field& F, const RingElement& a,
                     const RingElement& b) {
  return ring_add(F, a, ring_neg(F, b));
}

RingElement ring_neg(const Field& F, const RingElement& a) {
  RingElement r = a;
  for (auto& c : r.comp) c = poly_neg(F, c);
  return r;
}

RingElement ring_scale(const Field& F, const RingElement& a, Fq v) {
  RingElement r = ring_zero(a.q());
  for (int j = 0; j < a.q(); ++j)
    r.comp[std::size_t(j)] = poly_scale(F, a.comp[std::size_t(j)], v);
  return r;
}

namespace {

// Fold Y-degrees q..2q-2 down with Y^q = X^{q+1} - Y.  A single pass
// suffices: targets k-q and k-q+1 stay below q.
RingElement fold_down(const Field& F, std::vector<Poly>& wide, int q) {
  RingElement r = ring_zero(q);
  for (int j = 0; j < q; ++j) r.comp[std::size_t(j)] = std::move(wide[std::size_t(j)]);
  for (int k = q; k <= 2 * q - 2; ++k) {
    Poly& c = wide[std::size_t(k)];
    if (c.zero()) continue;
    r.comp[std::size_t(k - q)] =
        poly_add(F, r.comp[std::size_t(k - q)], poly_shift(c, q + 1));
    r.comp[std::size_t(k - q + 1)] =
        poly_sub(F, r.comp[std::size_t(k - q + 1)], c);
  }
  return r;
}

}  // namespace

RingElement ring_mul(const Field& F, const RingElement& a,
                     const RingElement& b) {
  const int q = a.q();
  if (b.q() != q) throw std::invalid_argument("ring_mul: mixed q");
  std::vector<Poly> wide(std::size_t(2 * q - 1));
  for (int i = 0; i < q; ++i) {
    if (a.comp[std::size_t(i)].zero()) continue;
    for (int j = 0; j < q; ++j) {
      if (b.comp[std::size_t(j)].zero()) continue;
      wide[std::size_t(i + j)] = poly_add(
          F, wide[std::size_t(i + j)],
          poly_mul(F, a.comp[std::size_t(i)], b.comp[std::size_t(j)]));
    }
  }
  return fold_down(F, wide, q);
}

RingElement ring_mul_monomial(const Field& F, const RingElement& a, int xdeg,
                              int ydeg) {
  const int q = a.q();
  std::vector<Poly> wide(std::size_t(2 * q - 1));
  for (int j = 0; j < q; ++j) {
    if (a.comp[std::size_t(j)].zero()) continue;
    wide[std::size_t(j + ydeg)] = poly_shift(a.comp[std::size_t(j)], xdeg);
  }
  return fold_down(F, wide, q);
}

RingElement ring_pow(const Field& F, const RingElement& a, int e) {
  RingElement r = ring_one(a.q());
  for (int i = 0; i < e; ++i) r = ring_mul(F, r, a);
  return r;
}

Fq ring_eval(const Field& F, const RingElement& a, CurvePoint P) {
  Fq acc = 0;
  for (std::size_t j = a.comp.size(); j-- > 0;)
    acc = F.add(F.mul(acc, P.y), poly_eval(F, a.comp[j], P.x));
  return acc;
}

Fq ring_coeff(const RingElement& a, const Monomial& m) {
  return a.comp[std::size_t(m.ydeg)].coeff(m.xdeg);
}

void ring_set_coeff(RingElement& a, const Monomial& m, Fq v) {
  a.comp[std::size_t(m.ydeg)].set_coeff(m.xdeg, v);
}

std::vector<Monomial> monomials_upto(int q, int D) {
  std::vector<Monomial> out;
  for (int d = 0; d <= D; ++d) {
    int j = d % q;  // forced by deg_H mod q since j < q
    int num = d - j * (q + 1);
    if (num < 0) continue;
    out.push_back({num / q, j, d});
  }
  return out;
}

PolyMat mu_matrix(const RingElement& b) {
  const int q = b.q();
  PolyMat M(q, 2 * q - 1);
  for (int r = 0; r < q; ++r)
    for (int j = 0; j < q; ++j) M.at(r, r + j) = b.comp[std::size_t(j)];
  return M;
}

PolyMat xi_matrix(const Field& F, int q) {
  PolyMat X(2 * q - 1, q);
  for (int r = 0; r < q; ++r) X.at(r, r) = Poly::constant(1);
  for (int r = 0; r < q - 1; ++r) {
    X.at(q + r, r) = Poly::x_pow(q + 1);
    X.at(q + r, r + 1) = Poly::constant(F.neg(1));
  }
  return X;
}

std::vector<Poly> poly_vec_times_mat(const Field& F,
                                     const std::vector<Poly>& v,
                                     const PolyMat& M) {
  if (int(v.size()) != M.rows)
    throw std::invalid_argument("poly_vec_times_mat: size mismatch");
  std::vector<Poly> out(std::size_t(M.cols));
  for (int c = 0; c < M.cols; ++c)
    for (int r = 0; r < M.rows; ++r)
      if (!v[std::size_t(r)].zero() && !M.at(r, c).zero())
        out[std::size_t(c)] =
            poly_add(F, out[std::size_t(c)], poly_mul(F, v[std::size_t(r)], M.at(r, c)));
  return out;
}

RingElement ring_trunc_xpow(const RingElement& a, int n) {
  RingElement r = ring_zero(a.q());
  for (std::size_t j = 0; j < a.comp.size(); ++j)
    r.comp[j] = poly_trunc(a.comp[j], n);
  return r;
}

RingElement ring_rem_poly(const Field& F, const RingElement& a,
                          const Poly& modulus) {
  RingElement r = ring_zero(a.q());
  for (std::size_t j = 0; j < a.comp.size(); ++j)
    r.comp[j] = poly_rem(F, a.comp[j], modulus);
  return r;
}

std::optional<RingElement> exact_divide(const Field& F, const RingElement& num,
                                        const RingElement& den,
                                        int deg_bound) {
  if (den.zero()) throw std::domain_error("exact_divide: zero denominator");
  const int q = den.q();
  if (num.zero()) return ring_zero(q);
  std::vector<Monomial> basis = monomials_upto(q, deg_bound);
  std::vector<RingElement> prods;
  prods.reserve(basis.size());
  int max_len = 0;
  for (const auto& m : basis) {
    prods.push_back(ring_mul_monomial(F, den, m.xdeg, m.ydeg));
    for (const auto& c : prods.back().comp)
      max_len = std::max(max_len, int(c.c.size()));
  }
  for (const auto& c : num.comp) max_len = std::max(max_len, int(c.c.size()));

  Mat A(q * max_len, int(basis.size()));
  std::vector<Fq> rhs(std::size_t(q) * std::size_t(max_len), 0);
  for (int j = 0; j < q; ++j) {
    for (int d = 0; d < max_len; ++d) {
      int row = j * max_len + d;
      for (std::size_t k = 0; k < prods.size(); ++k)
        A.at(row, int(k)) = prods[k].comp[std::size_t(j)].coeff(d);
      rhs[std::size_t(row)] = num.comp[std::size_t(j)].coeff(d);
    }
  }
  auto x = solve_pivot(F, std::move(A), rhs, ExecMode::serial);
  if (!x) return std::nullopt;
  RingElement c = ring_zero(q);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if ((*x)[k] != 0) ring_set_coeff(c, basis[k], (*x)[k]);
  return c;
}

}  // namespace hermipd
