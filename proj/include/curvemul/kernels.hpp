#pragma once

// Fixed bilinear multiplication kernels for residue fields of degree 1, 2 and 4.
// Each kernel is a straight-line program whose cost does not depend on the operands.

#include <cstdint>
#include <span>
#include <vector>

#include "curvemul/galois.hpp"

namespace curvemul {

/// Counts products (x-dependent value) * (y-dependent value) in the base field.
struct BilinearCounter {
  std::uint64_t bilinear_mults = 0;
};

enum class KernelId { direct, karatsuba2, karatsuba4 };

/// 1, 3 or 9.
unsigned kernel_cost(KernelId id);
unsigned kernel_degree(KernelId id);
/// Kernel for a residue degree; UsageError for degrees other than 1, 2, 4.
KernelId kernel_for_degree(std::size_t d);
/// mu(d) for d in {1, 2, 4}.
inline unsigned mu(std::size_t d) { return kernel_cost(kernel_for_degree(d)); }

Bits mul_d1(const FieldSpec& f, Bits a, Bits b, BilinearCounter& c);
FieldElement mul_d1(const FieldElement& a, const FieldElement& b, BilinearCounter& c);
/// Karatsuba in a degree-2 extension; throws UsageError on spec mismatch or wrong degree.
ExtElement mul_d2(const ExtElement& a, const ExtElement& b, BilinearCounter& c);
/// Two-level Karatsuba in a degree-4 extension.
ExtElement mul_d4(const ExtElement& a, const ExtElement& b, BilinearCounter& c);

/// Coordinate-level entry point used by the engine: out = a * b in F_q[t]/(modulus),
/// where a, b, out hold deg(modulus) coordinates.
void kernel_mul(KernelId id, const FieldSpec& f, const Poly& modulus, std::span<const Bits> a,
                std::span<const Bits> b, std::span<Bits> out, BilinearCounter& c);

/// Kernel selection for one evaluation place.
struct PlaceKernel {
  KernelId id;
  ExtSpecPtr residue;  // null for degree-1 places
};

struct KernelPlan {
  std::vector<PlaceKernel> places;

  /// Sum of kernel costs over all places.
  std::uint64_t cost() const;
};

}  // namespace curvemul
