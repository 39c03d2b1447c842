#include <doctest.h>

#include <map>

#include "hermipd/interpolation.hpp"
#include "hermipd/key_equations.hpp"
#include "hermipd/pade_solver.hpp"
#include "hermipd/rng.hpp"

using namespace hermipd;

namespace {

std::vector<Fq> rand_word(SplitMix64& rng, const Field& F, int n) {
  std::vector<Fq> w(std::size_t(n));
  for (auto& v : w) v = Fq(rng.below(std::uint64_t(F.size())));
  return w;
}

// distinct positions
std::vector<int> rand_support(SplitMix64& rng, int n, int count) {
  std::vector<int> idx(std::size_t(n));
  for (int i = 0; i < n; ++i) idx[std::size_t(i)] = i;
  for (int j = 0; j < count; ++j)
    std::swap(idx[std::size_t(j)],
              idx[std::size_t(j + int(rng.below(std::uint64_t(n - j))))]);
  idx.resize(std::size_t(count));
  return idx;
}

RingElement message_poly(const HermitianCode& code, std::span<const Fq> msg) {
  RingElement f = ring_zero(code.q);
  for (std::size_t j = 0; j < code.message_basis.size(); ++j)
    if (msg[j] != 0) ring_set_coeff(f, code.message_basis[j], msg[j]);
  return f;
}

}  // namespace

TEST_CASE("curve point counts and fibers") {
  for (int q : {2, 3, 4, 5}) {
    Field F(q);
    auto pts = curve_points(F);
    CHECK(int(pts.size()) == q * q * q);
    std::map<Fq, int> fiber;
    for (const auto& P : pts) {
      CHECK(F.add(F.frobenius(P.y), P.y) == F.pow(P.x, q + 1));
      fiber[P.x]++;
    }
    CHECK(int(fiber.size()) == q * q);
    for (auto& [x, cnt] : fiber) CHECK(cnt == q);
    // lexicographic in the element encoding
    for (std::size_t i = 1; i < pts.size(); ++i)
      CHECK((pts[i - 1].x < pts[i].x ||
             (pts[i - 1].x == pts[i].x && pts[i - 1].y < pts[i].y)));
  }
}

TEST_CASE("code parameters") {
  struct Row {
    int q, m, n, k, d;
  } rows[] = {{4, 15, 64, 10, 49}, {5, 55, 125, 46, 70}, {7, 70, 343, 50, 273}};
  for (const auto& r : rows) {
    HermitianCode code = make_code(r.q, r.m);
    CHECK(code.n == r.n);
    CHECK(code.k == r.k);
    CHECK(code.d_star == r.d);
    CHECK(code.encode_cache.rank() == code.k);
  }
  CHECK_THROWS_AS(make_code(4, 10), std::invalid_argument);  // m = 2g-2
  CHECK_THROWS_AS(make_code(4, 64), std::invalid_argument);  // m = n
}

TEST_CASE("encode basics and membership") {
  HermitianCode code = make_code(2, 3);
  std::vector<Fq> zero(std::size_t(code.k), 0);
  CHECK(hamming_weight(encode(code, zero)) == 0);
  std::vector<Fq> one_msg(std::size_t(code.k), 0);
  one_msg[0] = 1;  // f = 1
  auto ones = encode(code, one_msg);
  for (Fq v : ones) CHECK(v == 1);

  SplitMix64 rng(2024);
  for (int it = 0; it < 20; ++it) {
    std::vector<Fq> msg = rand_word(rng, code.field, code.k);
    auto cw = encode(code, msg);
    auto back = message_of_codeword(code, cw);
    REQUIRE(back);
    CHECK(*back == msg);
    // weight-1 perturbation leaves the code (d* > 1)
    auto bad = cw;
    bad[5] = code.field.add(bad[5], 1);
    CHECK(!message_of_codeword(code, bad).has_value());
  }
  auto z = message_of_codeword(code, std::vector<Fq>(std::size_t(code.n), 0));
  REQUIRE(z);
  CHECK(hamming_weight(*z) == 0);
}

TEST_CASE("q=2 m=3 minimum weight is at least d* = 5") {
  HermitianCode code = make_code(2, 3);
  int min_w = code.n + 1;
  for (int msg_id = 1; msg_id < 64; ++msg_id) {
    std::vector<Fq> msg(3);
    msg[0] = Fq(msg_id & 3);
    msg[1] = Fq((msg_id >> 2) & 3);
    msg[2] = Fq((msg_id >> 4) & 3);
    min_w = std::min(min_w, hamming_weight(encode(code, msg)));
  }
  CHECK(min_w >= code.d_star);
}

TEST_CASE("interpolation satisfies constraints and degree bound") {
  for (int q : {2, 3, 4}) {
    int m = (q == 2) ? 3 : (q == 3 ? 9 : 15);
    HermitianCode code = make_code(q, m);
    SplitMix64 rng(std::uint64_t(q) * 押 0 + 17);
    CHECK(interpolate(code, std::vector<Fq>(std::size_t(code.n), 0)).zero());
    for (int it = 0; it < 100; ++it) {
      auto r = rand_word(rng, code.field, code.n);
      RingElement R = interpolate(code, r);
      CHECK(deg_h(R) <= code.n + 2 * code.g - 1);
      for (int i = 0; i < code.n; ++i)
        CHECK(ring_eval(code.field, R, code.points[std::size_t(i)]) ==
              r[std::size_t(i)]);
    }
    // determinism and linearity
    auto r1 = rand_word(rng, code.field, code.n);
    auto r2 = rand_word(rng, code.field, code.n);
    CHECK(interpolate(code, r1) == interpolate(code, r1));
    std::vector<Fq> sum(std::size_t(code.n));
    for (int i = 0; i < code.n; ++i)
      sum[std::size_t(i)] = code.field.add(r1[std::size_t(i)], r2[std::size_t(i)]);
    CHECK(interpolate(code, sum) ==
          ring_add(code.field, interpolate(code, r1), interpolate(code, r2)));
  }
}

TEST_CASE("interpolating a codeword matches the message evaluations") {
  HermitianCode code = make_code(4, 15);
  SplitMix64 rng(515);
  std::vector<Fq> msg = rand_word(rng, code.field, code.k);
  auto cw = encode(code, msg);
  RingElement R = interpolate(code, cw);
  for (int i = 0; i < code.n; ++i)
    CHECK(ring_eval(code.field, R, code.points[std::size_t(i)]) ==
          cw[std::size_t(i)]);
}

TEST_CASE("binomials mod characteristic") {
  CHECK(binom_mod_char(2, 1, 2) == 0);
  CHECK(binom_mod_char(4, 2, 5) == 1);  // 6 mod 5
  for (int t = 0; t <= 8; ++t) CHECK(binom_mod_char(t, 0, 3) == 1);
  CHECK(binom_mod_char(3, 5, 2) == 0);  // i > t
}

TEST_CASE("context summands and moduli") {
  HermitianCode code = make_code(4, 15);
  SplitMix64 rng(888);
  RingElement R = interpolate(code, rand_word(rng, code.field, code.n));

  KeyEqContext ctx = build_context(code, R, 2, 4, 29, ModulusMode::truncated);
  // literal Problem-1 cap: floor((75 + 29)/4) + 1 = 27
  CHECK(ctx.moduli[0].xpower);
  CHECK(ctx.moduli[0].exponent == 27);
  CHECK(!ctx.moduli[1].xpower);
  // A_{t,0} = R^t
  const Field& F = code.field;
  CHECK(ctx.A[0][0] == R);
  CHECK(ctx.A[1][0] == ring_mul(F, R, R));
  // char 2: binom(2,1) = 0 kills A_{2,1}; binom(3,1) = 1 keeps A_{3,1}
  CHECK(ctx.A[1][1].zero());
  CHECK(!ctx.A[2][1].zero());
  CHECK(ctx.A[2][1] == ring_mul(F, ring_mul(F, R, R), ctx.G));

  // s=1: only i=0 and every modulus is G itself
  KeyEqContext c1 = build_context(code, R, 1, 3, 10);
  for (int t = 1; t <= 3; ++t) {
    CHECK(!c1.moduli[std::size_t(t - 1)].xpower);
    CHECK(int(c1.A[std::size_t(t - 1)].size()) == 1);
  }
  CHECK(c1.g_power_s.deg() == 16);

  CHECK_THROWS_AS(build_context(code, R, 3, 2, 5), std::invalid_argument);
}

TEST_CASE("error locator oracle") {
  HermitianCode c2 = make_code(2, 3);
  RingElement triv = error_locator(c2, std::vector<int>{});
  CHECK(triv == ring_one(2));
  CHECK(deg_h(triv) == 0);

  SplitMix64 rng(606);
  for (int it = 0; it < 10; ++it) {
    int pos = int(rng.below(8));
    RingElement L = error_locator(c2, std::vector<int>{pos});
    CHECK(deg_h(L) >= 1);
    CHECK(deg_h(L) <= 1 + c2.g);
    CHECK(ring_eval(c2.field, L, c2.points[std::size_t(pos)]) == 0);
  }

  HermitianCode c4 = make_code(4, 15);
  for (int it = 0; it < 10; ++it) {
    auto sup = rand_support(rng, c4.n, 3);
    RingElement L = error_locator(c4, sup);
    CHECK(deg_h(L) >= 3);
    CHECK(deg_h(L) <= 3 + c4.g);
    for (int i : sup)
      CHECK(ring_eval(c4.field, L, c4.points[std::size_t(i)]) == 0);
  }
}

TEST_CASE("error evaluator and key equations") {
  SplitMix64 rng(4040);
  struct P {
    int q, m;
  } params[] = {{2, 3}, {3, 9}, {4, 15}};
  for (auto [q, m] : params) {
    HermitianCode code = make_code(q, m);
    const Field& F = code.field;
    int radius = radius_practical(q, m, 2, 3);
    for (int it = 0; it < 15; ++it) {
      std::vector<Fq> msg = rand_word(rng, F, code.k);
      auto sent = encode(code, msg);
      int w = 1 + int(rng.below(std::uint64_t(radius)));
      auto sup = rand_support(rng, code.n, w);
      auto r = sent;
      for (int i : sup)
        r[std::size_t(i)] =
            F.add(r[std::size_t(i)], Fq(1 + rng.below(std::uint64_t(F.size() - 1))));

      RingElement R = interpolate(code, r);
      RingElement f = message_poly(code, msg);
      RingElement locator = error_locator(code, sup);
      KeyEqContext ctx = build_context(code, R, 2, 3, w);
      auto omega = error_evaluator(ctx, locator, f);
      REQUIRE(omega);
      // defining identity and degree bound
      CHECK(ring_mul(F, locator, ring_sub(F, R, f)) == ring_mul(F, *omega, ctx.G));
      CHECK(deg_h(*omega) <= deg_h(locator) + 2 * code.g - 1);
      CHECK(verify_key_equations(ctx, locator, *omega, f));

      // negative control: perturb one coefficient of omega
      RingElement bad = *omega;
      bad.comp[0].set_coeff(0, F.add(bad.comp[0].coeff(0), 1));
      CHECK(!verify_key_equations(ctx, locator, bad, f));
    }
  }
}

TEST_CASE("evaluator division fails for a non-locator") {
  HermitianCode code = make_code(2, 3);
  const Field& F = code.field;
  SplitMix64 rng(11);
  std::vector<Fq> msg = rand_word(rng, F, code.k);
  auto sent = encode(code, msg);
  auto r = sent;
  r[0] = F.add(r[0], 1);  // one error at position 0
  RingElement R = interpolate(code, r);
  RingElement f = message_poly(code, msg);
  KeyEqContext ctx = build_context(code, R, 2, 2, 1);
  // a locator that misses the error position entirely
  RingElement wrong = error_locator(code, std::vector<int>{5});
  if (ring_eval(F, wrong, code.points[0]) != 0)
    CHECK(!error_evaluator(ctx, wrong, f).has_value());
}
