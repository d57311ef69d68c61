#include <cstdlib>
#include <string>

#include "curvemul/errors.hpp"
#include "curvemul/simd.hpp"

namespace curvemul::simd {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

bool available(Backend b) {
  switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
    if (available(b)) out.push_back(b);
  return out;
}

Backend preferred() {
  if (const char* env = std::getenv("CURVEMUL_SIMD")) {
    const std::string want(env);
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
      if (want == backend_name(b) && available(b)) return b;
  }
  return available_backends().back();
}

const Kernels& kernels(Backend b) {
  if (!available(b)) throw UsageError("simd backend not available: " + std::string(backend_name(b)));
  switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2: return detail::avx2_kernels();
#endif
#if defined(__aarch64__)
    case Backend::neon: return detail::neon_kernels();
#endif
    default: return detail::scalar_kernels();
  }
}

}  // namespace curvemul::simd
