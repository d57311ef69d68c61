#include "curvemul/simd.hpp"

namespace curvemul::simd::detail {

namespace {

void mul_scalar(const FieldSpec& f, std::span<const Bits> a, std::span<const Bits> b, std::span<Bits> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(a[i], b[i]);
}

Bits dot_scalar(const FieldSpec& f, std::span<const Bits> a, std::span<const Bits> b) {
  Bits acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc ^= f.mul(a[i], b[i]);
  return acc;
}

void axpy_scalar(const FieldSpec& f, Bits c, std::span<const Bits> x, std::span<Bits> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] ^= f.mul(c, x[i]);
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Backend::scalar, &mul_scalar, &dot_scalar, &axpy_scalar};
  return k;
}

}  // namespace curvemul::simd::detail
