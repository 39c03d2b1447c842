#include "hermipd/code.hpp"

#include <stdexcept>
#include <string>

namespace hermipd {

std::vector<CurvePoint> curve_points(const Field& F) {
  const int q = F.q();
  std::vector<CurvePoint> pts;
  pts.reserve(std::size_t(q) * std::size_t(q) * std::size_t(q));
  for (int x = 0; x < F.size(); ++x) {
    Fq rhs = F.pow(Fq(x), q + 1);
    for (int y = 0; y < F.size(); ++y)
      if (F.add(F.frobenius(Fq(y)), Fq(y)) == rhs)
        pts.push_back({Fq(x), Fq(y)});
  }
  return pts;
}

namespace {

Mat evaluation_matrix(const Field& F, const std::vector<CurvePoint>& pts,
                      const std::vector<Monomial>& basis) {
  Mat M(int(pts.size()), int(basis.size()));
  for (int r = 0; r < M.rows; ++r) {
    const CurvePoint& P = pts[std::size_t(r)];
    for (int c = 0; c < M.cols; ++c) {
      const Monomial& mo = basis[std::size_t(c)];
      M.at(r, c) = F.mul(F.pow(P.x, mo.xdeg), F.pow(P.y, mo.ydeg));
    }
  }
  return M;
}

}  // namespace

HermitianCode make_code(int q, int m, ExecMode mode) {
  HermitianCode code;
  code.field = Field(q);
  code.q = q;
  code.g = q * (q - 1) / 2;
  code.n = q * q * q;
  if (!(2 * (code.g - 1) < m && m < code.n))
    throw std::invalid_argument("make_code: m=" + std::to_string(m) +
                                " outside (2g-2, n) for q=" +
                                std::to_string(q));
  code.m = m;
  code.k = m - code.g + 1;
  code.d_star = code.n - m;

  code.points = curve_points(code.field);
  if (int(code.points.size()) != code.n)
    throw std::logic_error("make_code: point count != q^3");

  code.message_basis = monomials_upto(q, m);
  if (int(code.message_basis.size()) != code.k)
    throw std::logic_error("make_code: message basis size != m - g + 1");
  code.interp_basis = monomials_upto(q, code.n + 2 * code.g - 1);
  if (int(code.interp_basis.size()) != code.n + code.g)
    throw std::logic_error("make_code: interpolation basis size != n + g");

  code.eval_mat = evaluation_matrix(code.field, code.points, code.message_basis);
  code.encode_cache.build(code.field, code.eval_mat, mode);
  if (code.encode_cache.rank() != code.k)
    throw std::logic_error("make_code: evaluation matrix rank deficient");

  Mat interp = evaluation_matrix(code.field, code.points, code.interp_basis);
  code.interp_cache.build(code.field, interp, mode);
  if (code.interp_cache.rank() != code.n)
    throw std::logic_error("make_code: interpolation system rank deficient");
  return code;
}

std::vector<Fq> encode(const HermitianCode& code, std::span<const Fq> message) {
  if (int(message.size()) != code.k)
    throw std::invalid_argument("encode: message length != k");
  const Field& F = code.field;
  std::vector<Fq> word(std::size_t(code.n), 0);
  for (int r = 0; r < code.n; ++r) {
    Fq acc = 0;
    const Fq* row = code.eval_mat.row(r);
    for (int c = 0; c < code.k; ++c)
      if (message[std::size_t(c)] != 0 && row[c] != 0)
        acc = F.add(acc, F.mul(row[c], message[std::size_t(c)]));
    word[std::size_t(r)] = acc;
  }
  return word;
}

std::optional<std::vector<Fq>> message_of_codeword(const HermitianCode& code,
                                                   std::span<const Fq> word) {
  if (int(word.size()) != code.n)
    throw std::invalid_argument("message_of_codeword: word length != n");
  return code.encode_cache.solve(code.field, word);
}

int hamming_distance(std::span<const Fq> a, std::span<const Fq> b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++d;
  return d;
}

int hamming_weight(std::span<const Fq> a) {
  int w = 0;
  for (Fq v : a)
    if (v != 0) ++w;
  return w;
}

}  // namespace hermipd
