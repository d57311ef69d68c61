#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvemul/errors.hpp"
#include "curvemul/simd.hpp"
#include "support.hpp"

using namespace curvemul;

namespace {

const std::vector<FieldSpec> kFields = {FieldSpec::gf2(), FieldSpec::gf4(), FieldSpec::gf16(), FieldSpec(3, 0b1011),
                                        FieldSpec(8, 0x11B)};
const std::vector<std::size_t> kLengths = {0, 1, 7, 15, 16, 31, 32, 33, 63, 64, 65, 100, 257};

std::vector<Bits> rand_vec(std::mt19937_64& rng, const FieldSpec& f, std::size_t n) {
  std::vector<Bits> v(n);
  for (auto& x : v) x = static_cast<Bits>(rng() & (f.order() - 1));
  return v;
}

}  // namespace

TEST_CASE("scalar backend is always available and listed first") {
  CHECK(simd::available(simd::Backend::scalar));
  const auto all = simd::available_backends();
  REQUIRE_FALSE(all.empty());
  CHECK(all.front() == simd::Backend::scalar);
  CHECK(simd::available(simd::preferred()));
  MESSAGE("preferred backend: " << simd::backend_name(simd::preferred()));
}

TEST_CASE("unavailable backends are rejected") {
  for (simd::Backend b : {simd::Backend::avx2, simd::Backend::neon})
    if (!simd::available(b)) CHECK_THROWS_AS(simd::kernels(b), UsageError);
}

TEST_CASE("scalar kernels match the carry-less oracle") {
  std::mt19937_64 rng(1);
  const auto& k = simd::kernels(simd::Backend::scalar);
  for (const auto& f : kFields) {
    const auto a = rand_vec(rng, f, 300), b = rand_vec(rng, f, 300);
    std::vector<Bits> out(300);
    k.mul(f, a, b, out);
    Bits dot = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Bits p = testing::slow_mul(f.k(), f.modulus(), a[i], b[i]);
      CHECK(out[i] == p);
      dot ^= p;
    }
    CHECK(k.dot(f, a, b) == dot);
  }
}

TEST_CASE("every backend matches scalar bit for bit") {
  std::mt19937_64 rng(17);
  const auto& ref = simd::kernels(simd::Backend::scalar);
  for (simd::Backend be : simd::available_backends()) {
    const auto& k = simd::kernels(be);
    CAPTURE(simd::backend_name(be));
    for (const auto& f : kFields)
      for (std::size_t n : kLengths) {
        CAPTURE(f.k());
        CAPTURE(n);
        const auto a = rand_vec(rng, f, n), b = rand_vec(rng, f, n);
        std::vector<Bits> o1(n), o2(n);
        ref.mul(f, a, b, o1);
        k.mul(f, a, b, o2);
        CHECK(o1 == o2);
        CHECK(ref.dot(f, a, b) == k.dot(f, a, b));

        const Bits c = static_cast<Bits>(rng() & (f.order() - 1));
        std::vector<Bits> y1 = b, y2 = b;
        ref.axpy(f, c, a, y1);
        k.axpy(f, c, a, y2);
        CHECK(y1 == y2);

        // in-place product
        std::vector<Bits> alias = a;
        k.mul(f, alias, b, alias);
        CHECK(alias == o1);
      }
  }
}

TEST_CASE("exhaustive GF(16) and GF(256) tables per backend") {
  for (simd::Backend be : simd::available_backends()) {
    const auto& k = simd::kernels(be);
    for (const FieldSpec& f : {FieldSpec::gf16(), FieldSpec(8, 0x11B)}) {
      const std::size_t q = f.order();
      std::vector<Bits> a(q * q), b(q * q), out(q * q);
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
          a[i * q + j] = static_cast<Bits>(i);
          b[i * q + j] = static_cast<Bits>(j);
        }
      k.mul(f, a, b, out);
      for (std::size_t i = 0; i < q * q; ++i)
        REQUIRE(out[i] == testing::slow_mul(f.k(), f.modulus(), a[i], b[i]));
    }
  }
}
