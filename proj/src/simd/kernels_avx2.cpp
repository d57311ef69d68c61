#include "curvemul/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

namespace curvemul::simd::detail {

namespace {

constexpr std::size_t kLanes = 32;

struct Consts {
  __m256i low_mask;  // order - 1
  __m256i top_bit;   // w^(k-1)
  __m256i reduce;    // modulus without its leading term
  int k;
};

__attribute__((target("avx2"))) Consts make_consts(const FieldSpec& f) {
  const unsigned k = f.k();
  return {_mm256_set1_epi8(static_cast<char>((f.order() - 1) & 0xFF)),
          _mm256_set1_epi8(static_cast<char>(1u << (k - 1))),
          _mm256_set1_epi8(static_cast<char>(f.modulus() & 0xFF & ((1u << k) - 1))), static_cast<int>(k)};
}

// Shift-and-add product across 32 lanes: k rounds of conditional add then multiply-by-w.
__attribute__((target("avx2"))) inline __m256i mul_lanes(__m256i a, __m256i b, const Consts& c) {
  __m256i r = _mm256_setzero_si256();
  for (int i = 0; i < c.k; ++i) {
    const __m256i bit = _mm256_set1_epi8(static_cast<char>(1u << i));
    const __m256i take = _mm256_cmpeq_epi8(_mm256_and_si256(b, bit), bit);
    r = _mm256_xor_si256(r, _mm256_and_si256(a, take));
    const __m256i carry = _mm256_cmpeq_epi8(_mm256_and_si256(a, c.top_bit), c.top_bit);
    a = _mm256_xor_si256(_mm256_and_si256(_mm256_add_epi8(a, a), c.low_mask), _mm256_and_si256(carry, c.reduce));
  }
  return r;
}

__attribute__((target("avx2"))) inline __m256i load_tail(const Bits* p, std::size_t n) {
  alignas(32) Bits buf[kLanes] = {};
  std::memcpy(buf, p, n);
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(buf));
}

__attribute__((target("avx2"))) inline void store_tail(Bits* p, std::size_t n, __m256i v) {
  alignas(32) Bits buf[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(buf), v);
  std::memcpy(p, buf, n);
}

__attribute__((target("avx2"))) void mul_avx2(const FieldSpec& f, std::span<const Bits> a,
                                              std::span<const Bits> b, std::span<Bits> out) {
  const Consts c = make_consts(f);
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), mul_lanes(va, vb, c));
  }
  if (i < n) {
    const std::size_t rest = n - i;
    store_tail(out.data() + i, rest, mul_lanes(load_tail(a.data() + i, rest), load_tail(b.data() + i, rest), c));
  }
}

__attribute__((target("avx2"))) Bits dot_avx2(const FieldSpec& f, std::span<const Bits> a,
                                              std::span<const Bits> b) {
  const Consts c = make_consts(f);
  const std::size_t n = a.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    acc = _mm256_xor_si256(acc, mul_lanes(va, vb, c));
  }
  if (i < n) {
    const std::size_t rest = n - i;
    acc = _mm256_xor_si256(acc, mul_lanes(load_tail(a.data() + i, rest), load_tail(b.data() + i, rest), c));
  }
  // Horizontal XOR: 256 -> 128 -> 64 -> 8 bits.
  __m128i x = _mm_xor_si128(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
  x = _mm_xor_si128(x, _mm_srli_si128(x, 8));
  std::uint64_t w = static_cast<std::uint64_t>(_mm_cvtsi128_si64(x));
  w ^= w >> 32;
  w ^= w >> 16;
  w ^= w >> 8;
  return static_cast<Bits>(w & 0xFF);
}

__attribute__((target("avx2"))) void axpy_avx2(const FieldSpec& f, Bits coef, std::span<const Bits> x,
                                               std::span<Bits> y) {
  const Consts c = make_consts(f);
  const __m256i vc = _mm256_set1_epi8(static_cast<char>(coef));
  const std::size_t n = y.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    vy = _mm256_xor_si256(vy, mul_lanes(vx, vc, c));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), vy);
  }
  if (i < n) {
    const std::size_t rest = n - i;
    const __m256i vy = _mm256_xor_si256(load_tail(y.data() + i, rest), mul_lanes(load_tail(x.data() + i, rest), vc, c));
    store_tail(y.data() + i, rest, vy);
  }
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{Backend::avx2, &mul_avx2, &dot_avx2, &axpy_avx2};
  return k;
}

}  // namespace curvemul::simd::detail

#endif
