#include <doctest.h>

#include "hermipd/galois.hpp"
#include "hermipd/rng.hpp"

using namespace hermipd;

namespace {
const int kSupported[] = {2, 3, 4, 5, 7, 8};

Poly rand_poly(SplitMix64& rng, const Field& F, int max_deg) {
  Poly p;
  int d = int(rng.below(std::uint64_t(max_deg) + 1));
  for (int i = 0; i <= d; ++i)
    p.set_coeff(i, Fq(rng.below(std::uint64_t(F.size()))));
  return p;
}
}  // namespace

TEST_CASE("field sizes and subfield") {
  for (int q : kSupported) {
    Field F(q);
    CHECK(F.q() == q);
    CHECK(F.size() == q * q);
    CHECK(int(F.subfield().size()) == q);
    int fixed = 0;
    for (int a = 0; a < F.size(); ++a)
      if (F.frobenius(Fq(a)) == Fq(a)) ++fixed;
    CHECK(fixed == q);
  }
}

TEST_CASE("unsupported q rejected") {
  CHECK_THROWS_AS(Field(6), std::invalid_argument);
  CHECK_THROWS_AS(Field(9), std::invalid_argument);
  CHECK_THROWS_AS(Field(1), std::invalid_argument);
}

TEST_CASE("F_4 multiplication table") {
  // F_4 = F_2[z]/(z^2+z+1), z encoded as 2: z*z = z+1 = 3
  Field F(2);
  CHECK(F.mul(2, 2) == 3);
  CHECK(F.mul(2, 3) == 1);  // z * (z+1) = z^2 + z = 1
  CHECK(F.add(2, 3) == 1);
}

TEST_CASE("multiplicative group order") {
  for (int q : {5, 7}) {
    Field F(q);
    for (int a = 1; a < F.size(); ++a)
      CHECK(F.pow(Fq(a), q * q - 1) == 1);
  }
}

TEST_CASE("ring axioms on random elements") {
  for (int q : kSupported) {
    Field F(q);
    SplitMix64 rng(0xf1e1d);
    for (int it = 0; it < 200; ++it) {
      Fq a = Fq(rng.below(std::uint64_t(F.size())));
      Fq b = Fq(rng.below(std::uint64_t(F.size())));
      Fq c = Fq(rng.below(std::uint64_t(F.size())));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
  }
}

TEST_CASE("frobenius is a field automorphism fixing F_q") {
  for (int q : kSupported) {
    Field F(q);
    SplitMix64 rng(77);
    for (int it = 0; it < 100; ++it) {
      Fq a = Fq(rng.below(std::uint64_t(F.size())));
      Fq b = Fq(rng.below(std::uint64_t(F.size())));
      CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
      CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
    }
    for (Fq a : F.subfield()) CHECK(F.frobenius(a) == a);
  }
}

TEST_CASE("poly add in characteristic 2") {
  Field F(4);
  Poly a;
  a.set_coeff(2, 1);
  a.set_coeff(0, 1);  // X^2 + 1
  CHECK(poly_add(F, a, a).zero());
}

TEST_CASE("poly truncation") {
  Field F(4);
  CHECK(poly_rem(F, Poly::x_pow(5), Poly::x_pow(3)).zero());
  CHECK(poly_trunc(Poly::x_pow(5), 3).zero());
  Poly a;  // X^2 + X
  a.set_coeff(2, 1);
  a.set_coeff(1, 1);
  CHECK(poly_rem(F, a, Poly::x_pow(3)) == a);
  CHECK(poly_trunc(a, 3) == a);
}

TEST_CASE("poly divmod long division") {
  for (int q : {2, 3}) {  // char 2 and char 3
    Field F(q);
    Poly a = poly_sub(F, Poly::x_pow(4), Poly::x_pow(1));  // X^4 - X
    auto [quo, rem] = poly_divmod(F, a, Poly::x_pow(2));
    CHECK(quo == Poly::x_pow(2));
    CHECK(rem == poly_neg(F, Poly::x_pow(1)));
    CHECK(poly_add(F, poly_mul(F, quo, Poly::x_pow(2)), rem) == a);
  }
  Field F(4);
  CHECK_THROWS_AS(poly_divmod(F, Poly::x_pow(2), Poly{}), std::domain_error);
}

TEST_CASE("poly mul degree additivity") {
  for (int q : {2, 3, 5}) {
    Field F(q);
    SplitMix64 rng(q);
    for (int it = 0; it < 100; ++it) {
      Poly a = rand_poly(rng, F, 8);
      Poly b = rand_poly(rng, F, 8);
      if (a.zero() || b.zero()) continue;
      CHECK(poly_mul(F, a, b).deg() == a.deg() + b.deg());
    }
  }
}

TEST_CASE("poly divmod random roundtrip") {
  Field F(5);
  SplitMix64 rng(5151);
  for (int it = 0; it < 100; ++it) {
    Poly a = rand_poly(rng, F, 12);
    Poly b = rand_poly(rng, F, 5);
    if (b.zero()) continue;
    auto [quo, rem] = poly_divmod(F, a, b);
    CHECK(poly_add(F, poly_mul(F, quo, b), rem) == a);
    CHECK(rem.deg() < b.deg());
  }
}
