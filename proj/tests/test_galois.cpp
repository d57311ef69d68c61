#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "curvemul/errors.hpp"
#include "support.hpp"

using namespace curvemul;
using testing::slow_mul;

namespace {

const FieldSpec F2 = FieldSpec::gf2();
const FieldSpec F4 = FieldSpec::gf4();
const FieldSpec F16 = FieldSpec::gf16();

FieldElement e16(Bits b) { return {F16, b}; }

}  // namespace

TEST_CASE("bundled field specs") {
  CHECK(F2.k() == 1);
  CHECK(F4.modulus() == 0b111);
  CHECK(F16.modulus() == 0b10011);
  CHECK_THROWS_AS(FieldSpec(4, 0b10101), InstanceError);  // (w^2+w+1)^2
  CHECK_THROWS_AS(FieldSpec(4, 0b111), UsageError);
  CHECK(FieldSpec(8, 0x11B).order() == 256);
}

TEST_CASE("fe_add") {
  CHECK(fe_add(e16(2), e16(2)).bits == 0);
  CHECK(fe_add(e16(2), e16(1)).bits == 0b0011);
  CHECK(fe_add({F2, 1}, {F2, 1}).bits == 0);
  CHECK_THROWS_AS(fe_add({F2, 1}, {F4, 1}), UsageError);
}

TEST_CASE("fe_mul") {
  const Bits a3 = testing::slow_pow(4, 0b10011, 2, 3);
  CHECK(fe_mul(e16(2), e16(a3)).bits == 0b0011);
  for (Bits x = 0; x < 16; ++x) CHECK(fe_mul(e16(x), e16(1)).bits == x);
  // log table of the multiplicative group
  std::vector<Bits> pw(15);
  pw[0] = 1;
  for (int i = 1; i < 15; ++i) pw[i] = slow_mul(4, 0b10011, pw[i - 1], 2);
  CHECK(fe_mul(e16(2), e16(pw[14])).bits == 1);
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j) CHECK(fe_mul(e16(pw[i]), e16(pw[j])).bits == pw[(i + j) % 15]);
  CHECK_THROWS_AS(fe_mul({F2, 1}, {F16, 1}), UsageError);
}

TEST_CASE("fe_mul agrees with carry-less oracle on every bundled field and GF(256)") {
  for (const FieldSpec& f : {F2, F4, F16, FieldSpec(8, 0x11B), FieldSpec(3, 0b1011)})
    for (unsigned a = 0; a < f.order(); ++a)
      for (unsigned b = 0; b < f.order(); ++b)
        REQUIRE(f.mul(Bits(a), Bits(b)) == slow_mul(f.k(), f.modulus(), Bits(a), Bits(b)));
}

TEST_CASE("fe_inv") {
  CHECK(fe_inv(e16(1)).bits == 1);
  CHECK(fe_inv({F4, 2}).bits == 3);
  const Bits a5 = testing::slow_pow(4, 0b10011, 2, 5), a10 = testing::slow_pow(4, 0b10011, 2, 10);
  CHECK(fe_inv(e16(a5)).bits == a10);
  CHECK_THROWS_AS(fe_inv(e16(0)), DivisionByZero);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(3);
  for (const FieldSpec& f : {F2, F4, F16}) {
    for (int i = 0; i < 1000; ++i) {
      const Bits x = rng() % f.order(), y = rng() % f.order(), z = rng() % f.order();
      CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
      CHECK(f.mul(x, y ^ z) == (f.mul(x, y) ^ f.mul(x, z)));
      CHECK(f.square(x ^ y) == (f.square(x) ^ f.square(y)));
      const Bits nz = static_cast<Bits>(1 + rng() % (f.order() - 1));
      CHECK(f.mul(nz, f.inv(nz)) == 1);
    }
  }
}

TEST_CASE("poly arithmetic") {
  const Poly x1(F2, {1, 1});
  const ExtSpecPtr one_dim = make_ext(Poly(F2, {0, 1}));
  CHECK(poly_eval_ext(x1, ExtElement::one(one_dim)).is_zero());

  const Poly q(F2, {1, 0, 0, 1, 0, 1});
  const DivMod dm = poly_divmod(Poly::monomial(F2, 5), q);
  CHECK(dm.quotient == Poly::constant(F2, 1));
  CHECK(dm.remainder == Poly(F2, {1, 0, 0, 1}));

  CHECK(poly_mul(Poly(F4, {2, 1}), Poly(F4, {3, 1})) == Poly(F4, {1, 1, 1}));
  CHECK_THROWS_AS(poly_divmod(q, Poly(F2)), DivisionByZero);
  CHECK_FALSE(Poly(F2).degree().has_value());
  CHECK(Poly(F2, {1, 0, 0}).degree() == 0u);
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(Poly(F2, {1, 1, 1})));
  CHECK(is_irreducible(Poly(F2, {1, 0, 0, 1, 0, 1})));
  CHECK_FALSE(is_irreducible(Poly(F2, {1, 0, 1})));
  CHECK_THROWS_AS(is_irreducible(Poly(F4, {1, 2})), UsageError);

  // Count of monic irreducibles of degree d over F_q by brute-force root/factor search.
  auto brute = [](const FieldSpec& f, std::size_t d) {
    std::size_t count = 0;
    const std::size_t total = static_cast<std::size_t>(std::pow(f.order(), d));
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Bits> c(d + 1, 0);
      std::size_t t = code;
      for (std::size_t j = 0; j < d; ++j, t /= f.order()) c[j] = static_cast<Bits>(t % f.order());
      c[d] = 1;
      const Poly p(f, c);
      if (is_irreducible(p)) ++count;
    }
    return count;
  };
  // Necklace counts (1/d) sum mu(d/e) q^e
  CHECK(brute(F2, 5) == 6);
  CHECK(brute(F2, 6) == 9);
  CHECK(brute(F4, 3) == 20);
  CHECK(brute(F16, 2) == 120);
}

TEST_CASE("extension arithmetic") {
  const ExtSpecPtr k32 = make_ext(Poly(F2, {1, 0, 0, 1, 0, 1}));
  const ExtElement b = ExtElement::generator(k32);
  CHECK(to_coords(b) == std::vector<Bits>{0, 1, 0, 0, 0});

  const ExtElement lhs = ExtElement(k32, {1, 1, 0, 0, 0});
  const ExtElement rhs = ExtElement(k32, {1, 1, 1, 0, 0});
  CHECK(to_coords(ext_mul_schoolbook(lhs, rhs)) == std::vector<Bits>{1, 0, 0, 1, 0});
  CHECK(ext_mul_schoolbook(lhs, rhs) == ext_pow(b, 5));
  CHECK(ext_inv(ExtElement::one(k32)) == ExtElement::one(k32));
  CHECK_THROWS_AS(ext_inv(ExtElement::zero(k32)), DivisionByZero);
  CHECK_THROWS_AS(from_coords(k32, std::vector<Bits>{1, 0}), UsageError);
  CHECK_THROWS_AS(make_ext(Poly(F2, {1, 0, 1})), InstanceError);
}

TEST_CASE("absolute trace") {
  const ExtSpecPtr k32 = make_ext(Poly(F2, {1, 0, 0, 1, 0, 1}));
  CHECK(absolute_trace(ExtElement::zero(k32)).bits == 0);
  CHECK(absolute_trace(ExtElement::one(k32)).bits == 1);

  const InstanceSpec s = read_instance(testing::instance_path("f16_13"));
  const ExtElement b = ExtElement::generator(s.Q.residue_ptr());
  CHECK(absolute_trace(ext_pow(b, 5)).bits == 0);
}

TEST_CASE("extension properties on random samples") {
  std::mt19937_64 rng(11);
  const InstanceSpec s = read_instance(testing::instance_path("f16_13"));
  const std::vector<ExtSpecPtr> specs = {make_ext(Poly(F2, {1, 0, 0, 1, 0, 1})), make_ext(Poly(F4, {1, 2, 3, 1, 2, 1})),
                                         s.Q.residue_ptr()};
  for (const auto& spec : specs) {
    const FieldSpec& f = spec->base();
    const std::size_t d = spec->degree();
    for (int i = 0; i < 200; ++i) {
      const auto cx = random_element(rng, f, d), cy = random_element(rng, f, d);
      const ExtElement x = from_coords(spec, cx), y = from_coords(spec, cy);
      CHECK(to_coords(x) == cx);
      CHECK(absolute_trace(x).bits == absolute_trace(ext_mul_schoolbook(x, x)).bits);

      // x * y by shift-and-add over the coordinates of y.
      ExtElement acc = ExtElement::zero(spec), shifted = x;
      const ExtElement t = ExtElement::generator(spec);
      for (std::size_t j = 0; j < d; ++j) {
        acc = ext_add(acc, ext_scale(shifted, cy[j]));
        shifted = ExtElement::from_poly(spec, poly_mul(shifted.as_poly(), t.as_poly()));
      }
      CHECK(acc == ext_mul_schoolbook(x, y));
      if (!x.is_zero()) CHECK(ext_mul_schoolbook(x, ext_inv(x)) == ExtElement::one(spec));
    }
  }
}

TEST_CASE("frobenius and generated degree") {
  const ExtSpecPtr k16 = make_ext(Poly(F2, {1, 1, 0, 0, 1}));
  const ExtElement t = ExtElement::generator(k16);
  CHECK(ext_frobenius(t, 4) == t);
  CHECK(ext_frobenius(t, 1) == ext_mul_schoolbook(t, t));
  const ExtElement g[] = {t};
  CHECK(generated_degree(g) == 4);
  // t^5 has order 3 and lies in F_4
  const ExtElement h[] = {ext_pow(t, 5)};
  CHECK(generated_degree(h) == 2);
  const ExtElement one[] = {ExtElement::one(k16)};
  CHECK(generated_degree(one) == 1);
}
