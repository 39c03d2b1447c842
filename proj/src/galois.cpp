#include "hermipd/galois.hpp"

#include <array>
#include <stdexcept>

namespace hermipd {

namespace {

struct ExtensionSpec {
  int q;
  int p;
  // primitive modulus polynomial over F_p, lowest degree first, monic
  std::vector<int> modulus;
};

// Conway polynomials for GF(q^2); primitive by construction, so the class
// of z generates the multiplicative group.
const ExtensionSpec& spec_for(int q) {
  static const std::array<ExtensionSpec, 6> specs = {{
      {2, 2, {1, 1, 1}},
      {3, 3, {2, 2, 1}},
      {4, 2, {1, 1, 0, 0, 1}},
      {5, 5, {2, 4, 1}},
      {7, 7, {3, 6, 1}},
      {8, 2, {1, 1, 0, 1, 1, 0, 1}},
  }};
  for (const auto& s : specs)
    if (s.q == q) return s;
  throw std::invalid_argument("Field: unsupported subfield order q=" +
                              std::to_string(q) + " (need q in {2,3,4,5,7,8})");
}

std::vector<int> to_digits(int v, int p, int e) {
  std::vector<int> d(std::size_t(e), 0);
  for (int i = 0; i < e; ++i) {
    d[std::size_t(i)] = v % p;
    v /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

Field::Field(int q) {
  const ExtensionSpec& sp = spec_for(q);
  q_ = q;
  p_ = sp.p;
  const int e = int(sp.modulus.size()) - 1;
  size_ = 1;
  for (int i = 0; i < e; ++i) size_ *= p_;
  const int Q = size_;

  auto mul_by_z = [&](int a) {
    std::vector<int> d = to_digits(a, p_, e);
    int top = d[std::size_t(e) - 1];
    for (int i = e - 1; i > 0; --i) d[std::size_t(i)] = d[std::size_t(i) - 1];
    d[0] = 0;
    if (top != 0) {
      for (int i = 0; i < e; ++i) {
        int v = d[std::size_t(i)] - top * sp.modulus[std::size_t(i)];
        d[std::size_t(i)] = ((v % p_) + p_) % p_;
      }
    }
    return from_digits(d, p_);
  };

  exp_.assign(std::size_t(Q) - 1, 0);
  log_.assign(std::size_t(Q), -1);
  int b = 1;
  for (int i = 0; i < Q - 1; ++i) {
    exp_[std::size_t(i)] = Fq(b);
    if (log_[std::size_t(b)] != -1)
      throw std::logic_error("Field: modulus polynomial is not primitive");
    log_[std::size_t(b)] = i;
    b = mul_by_z(b);
  }
  if (b != 1) throw std::logic_error("Field: bad multiplicative order");

  add_.assign(std::size_t(Q) * std::size_t(Q), 0);
  mul_.assign(std::size_t(Q) * std::size_t(Q), 0);
  neg_.assign(std::size_t(Q), 0);
  for (int a = 0; a < Q; ++a) {
    std::vector<int> da = to_digits(a, p_, e);
    for (int c = 0; c < Q; ++c) {
      std::vector<int> dc = to_digits(c, p_, e);
      std::vector<int> ds(std::size_t(e), 0);
      for (int i = 0; i < e; ++i)
        ds[std::size_t(i)] = (da[std::size_t(i)] + dc[std::size_t(i)]) % p_;
      Fq s = Fq(from_digits(ds, p_));
      add_[idx(Fq(a), Fq(c))] = s;
      if (s == 0) neg_[std::size_t(a)] = Fq(c);
      if (a != 0 && c != 0)
        mul_[idx(Fq(a), Fq(c))] =
            exp_[std::size_t((log_[std::size_t(a)] + log_[std::size_t(c)]) %
                             (Q - 1))];
    }
  }

  frob_.assign(std::size_t(Q), 0);
  for (int a = 0; a < Q; ++a) frob_[std::size_t(a)] = pow(Fq(a), q_);
  for (int a = 0; a < Q; ++a)
    if (frob_[std::size_t(a)] == Fq(a)) subfield_.push_back(Fq(a));
  if (int(subfield_.size()) != q_)
    throw std::logic_error("Field: Frobenius-fixed subfield has wrong size");
}

Fq Field::inv(Fq a) const {
  if (a == 0) throw std::domain_error("Field: inverse of zero");
  return exp_[std::size_t((size_ - 1 - log_[a]) % (size_ - 1))];
}

Fq Field::pow(Fq a, long long e) const {
  if (a == 0) return e == 0 ? Fq{1} : Fq{0};
  long long r = log_[a] % (size_ - 1);
  long long x = ((e % (size_ - 1)) * r) % (size_ - 1);
  if (x < 0) x += size_ - 1;
  return exp_[std::size_t(x)];
}

void Poly::set_coeff(int i, Fq v) {
  if (i >= int(c.size())) {
    if (v == 0) return;
    c.resize(std::size_t(i) + 1, 0);
  }
  c[std::size_t(i)] = v;
  trim();
}

Poly Poly::constant(Fq v) {
  Poly p;
  if (v != 0) p.c = {v};
  return p;
}

Poly Poly::x_pow(int n, Fq lead) {
  Poly p;
  if (lead != 0) {
    p.c.assign(std::size_t(n) + 1, 0);
    p.c.back() = lead;
  }
  return p;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = F.add(i < a.c.size() ? a.c[i] : Fq{0},
                   i < b.c.size() ? b.c[i] : Fq{0});
  r.trim();
  return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  return poly_add(F, a, poly_neg(F, b));
}

Poly poly_neg(const Field& F, const Poly& a) {
  Poly r = a;
  for (auto& x : r.c) x = F.neg(x);
  return r;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  Poly r;
  if (a.zero() || b.zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    const Fq* mr = F.mul_row(a.c[i]);
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (b.c[j] != 0) r.c[i + j] = F.add(r.c[i + j], mr[b.c[j]]);
  }
  r.trim();
  return r;
}

Poly poly_scale(const Field& F, const Poly& a, Fq v) {
  Poly r;
  if (v == 0) return r;
  r.c.resize(a.c.size());
  const Fq* mr = F.mul_row(v);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = mr[a.c[i]];
  r.trim();
  return r;
}

Poly poly_shift(const Poly& a, int k) {
  Poly r;
  if (a.zero()) return r;
  r.c.assign(a.c.size() + std::size_t(k), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + std::size_t(k)] = a.c[i];
  return r;
}

Poly poly_trunc(const Poly& a, int n) {
  Poly r;
  if (n <= 0) return r;
  r.c.assign(a.c.begin(),
             a.c.begin() + std::min(a.c.size(), std::size_t(n)));
  r.trim();
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a,
                                  const Poly& b) {
  if (b.zero()) throw std::domain_error("poly_divmod: zero divisor");
  Poly q, r = a;
  if (a.deg() < b.deg()) return {q, r};
  q.c.assign(std::size_t(a.deg() - b.deg()) + 1, 0);
  Fq lead_inv = F.inv(b.c.back());
  while (!r.zero() && r.deg() >= b.deg()) {
    int shift = r.deg() - b.deg();
    Fq f = F.mul(r.c.back(), lead_inv);
    q.c[std::size_t(shift)] = f;
    const Fq* mr = F.mul_row(f);
    for (std::size_t i = 0; i < b.c.size(); ++i)
      r.c[std::size_t(shift) + i] =
          F.sub(r.c[std::size_t(shift) + i], mr[b.c[i]]);
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly poly_rem(const Field& F, const Poly& a, const Poly& b) {
  return poly_divmod(F, a, b).second;
}

Poly poly_pow(const Field& F, const Poly& a, int e) {
  Poly r = Poly::constant(1);
  for (int i = 0; i < e; ++i) r = poly_mul(F, r, a);
  return r;
}

Fq poly_eval(const Field& F, const Poly& a, Fq x) {
  Fq acc = 0;
  for (std::size_t i = a.c.size(); i-- > 0;)
    acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

}  // namespace hermipd
