#include "curvemul/simd.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstring>

namespace curvemul::simd::detail {

namespace {

constexpr std::size_t kLanes = 16;

struct Consts {
  uint8x16_t low_mask;
  uint8x16_t top_bit;
  uint8x16_t reduce;
  int k;
};

Consts make_consts(const FieldSpec& f) {
  const unsigned k = f.k();
  return {vdupq_n_u8(static_cast<std::uint8_t>((f.order() - 1) & 0xFF)),
          vdupq_n_u8(static_cast<std::uint8_t>(1u << (k - 1))),
          vdupq_n_u8(static_cast<std::uint8_t>(f.modulus() & ((1u << k) - 1) & 0xFF)), static_cast<int>(k)};
}

inline uint8x16_t mul_lanes(uint8x16_t a, uint8x16_t b, const Consts& c) {
  uint8x16_t r = vdupq_n_u8(0);
  for (int i = 0; i < c.k; ++i) {
    const uint8x16_t bit = vdupq_n_u8(static_cast<std::uint8_t>(1u << i));
    r = veorq_u8(r, vandq_u8(a, vtstq_u8(b, bit)));
    const uint8x16_t carry = vtstq_u8(a, c.top_bit);
    a = veorq_u8(vandq_u8(vaddq_u8(a, a), c.low_mask), vandq_u8(carry, c.reduce));
  }
  return r;
}

inline uint8x16_t load_tail(const Bits* p, std::size_t n) {
  Bits buf[kLanes] = {};
  std::memcpy(buf, p, n);
  return vld1q_u8(buf);
}

inline void store_tail(Bits* p, std::size_t n, uint8x16_t v) {
  Bits buf[kLanes];
  vst1q_u8(buf, v);
  std::memcpy(p, buf, n);
}

void mul_neon(const FieldSpec& f, std::span<const Bits> a, std::span<const Bits> b, std::span<Bits> out) {
  const Consts c = make_consts(f);
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_u8(out.data() + i, mul_lanes(vld1q_u8(a.data() + i), vld1q_u8(b.data() + i), c));
  if (i < n) {
    const std::size_t rest = n - i;
    store_tail(out.data() + i, rest, mul_lanes(load_tail(a.data() + i, rest), load_tail(b.data() + i, rest), c));
  }
}

Bits dot_neon(const FieldSpec& f, std::span<const Bits> a, std::span<const Bits> b) {
  const Consts c = make_consts(f);
  const std::size_t n = a.size();
  uint8x16_t acc = vdupq_n_u8(0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = veorq_u8(acc, mul_lanes(vld1q_u8(a.data() + i), vld1q_u8(b.data() + i), c));
  if (i < n) {
    const std::size_t rest = n - i;
    acc = veorq_u8(acc, mul_lanes(load_tail(a.data() + i, rest), load_tail(b.data() + i, rest), c));
  }
  std::uint64_t w = vgetq_lane_u64(vreinterpretq_u64_u8(acc), 0) ^ vgetq_lane_u64(vreinterpretq_u64_u8(acc), 1);
  w ^= w >> 32;
  w ^= w >> 16;
  w ^= w >> 8;
  return static_cast<Bits>(w & 0xFF);
}

void axpy_neon(const FieldSpec& f, Bits coef, std::span<const Bits> x, std::span<Bits> y) {
  const Consts c = make_consts(f);
  const uint8x16_t vc = vdupq_n_u8(coef);
  const std::size_t n = y.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    vst1q_u8(y.data() + i, veorq_u8(vld1q_u8(y.data() + i), mul_lanes(vld1q_u8(x.data() + i), vc, c)));
  if (i < n) {
    const std::size_t rest = n - i;
    store_tail(y.data() + i, rest, veorq_u8(load_tail(y.data() + i, rest), mul_lanes(load_tail(x.data() + i, rest), vc, c)));
  }
}

}  // namespace

const Kernels& neon_kernels() {
  static const Kernels k{Backend::neon, &mul_neon, &dot_neon, &axpy_neon};
  return k;
}

}  // namespace curvemul::simd::detail

#endif
