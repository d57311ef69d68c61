#pragma once

// Data-parallel GF(2^k) kernels over byte vectors (one element per byte).
// Every backend computes bit-identical results; the scalar backend is the reference.

#include <span>
#include <string_view>
#include <vector>

#include "curvemul/galois.hpp"

namespace curvemul::simd {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);

struct Kernels {
  Backend backend;
  /// out[i] = a[i] * b[i]; out may alias a or b.
  void (*mul)(const FieldSpec& f, std::span<const Bits> a, std::span<const Bits> b, std::span<Bits> out);
  /// XOR-sum of a[i] * b[i].
  Bits (*dot)(const FieldSpec& f, std::span<const Bits> a, std::span<const Bits> b);
  /// y[i] ^= c * x[i].
  void (*axpy)(const FieldSpec& f, Bits c, std::span<const Bits> x, std::span<Bits> y);
};

/// True when the backend was compiled in and the running CPU supports it.
bool available(Backend b);
/// All available backends, scalar first.
std::vector<Backend> available_backends();
/// Widest available backend, unless CURVEMUL_SIMD=scalar|avx2|neon overrides it.
Backend preferred();
/// Throws UsageError for an unavailable backend.
const Kernels& kernels(Backend b);

namespace detail {
const Kernels& scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels();
#endif
#if defined(__aarch64__)
const Kernels& neon_kernels();
#endif
}  // namespace detail

}  // namespace curvemul::simd
