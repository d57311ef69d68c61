#include "curvemul/kernels.hpp"

#include <array>

#include "curvemul/errors.hpp"

namespace curvemul {

unsigned kernel_cost(KernelId id) {
  switch (id) {
    case KernelId::direct: return 1;
    case KernelId::karatsuba2: return 3;
    case KernelId::karatsuba4: return 9;
  }
  return 0;
}

unsigned kernel_degree(KernelId id) {
  switch (id) {
    case KernelId::direct: return 1;
    case KernelId::karatsuba2: return 2;
    case KernelId::karatsuba4: return 4;
  }
  return 0;
}

KernelId kernel_for_degree(std::size_t d) {
  switch (d) {
    case 1: return KernelId::direct;
    case 2: return KernelId::karatsuba2;
    case 4: return KernelId::karatsuba4;
    default: throw UsageError("no multiplication kernel for residue degree " + std::to_string(d));
  }
}

std::uint64_t KernelPlan::cost() const {
  std::uint64_t s = 0;
  for (const auto& p : places) s += kernel_cost(p.id);
  return s;
}

namespace {

// (a0 + a1 t)(b0 + b1 t) -> p[0..2], three products.
inline void kara2(const FieldSpec& f, const Bits* a, const Bits* b, Bits* p) {
  const Bits lo = f.mul(a[0], b[0]);
  const Bits hi = f.mul(a[1], b[1]);
  const Bits mid = f.mul(a[0] ^ a[1], b[0] ^ b[1]);
  p[0] = lo;
  p[1] = mid ^ lo ^ hi;
  p[2] = hi;
}

// Degree-3 operands split as A0 + A1 t^2; three kara2 calls, nine products.
inline void kara4(const FieldSpec& f, const Bits* a, const Bits* b, Bits* p) {
  Bits lo[3], hi[3], mid[3];
  kara2(f, a, b, lo);
  kara2(f, a + 2, b + 2, hi);
  const Bits as[2] = {static_cast<Bits>(a[0] ^ a[2]), static_cast<Bits>(a[1] ^ a[3])};
  const Bits bs[2] = {static_cast<Bits>(b[0] ^ b[2]), static_cast<Bits>(b[1] ^ b[3])};
  kara2(f, as, bs, mid);
  for (int i = 0; i < 7; ++i) p[i] = 0;
  for (int i = 0; i < 3; ++i) {
    p[i] ^= lo[i];
    p[i + 2] ^= mid[i] ^ lo[i] ^ hi[i];
    p[i + 4] ^= hi[i];
  }
}

// Reduces p (length 2d-1) modulo the monic modulus of degree d into out.
// Multiplications here are by fixed modulus constants and are not bilinear.
void reduce(const FieldSpec& f, const Poly& m, Bits* p, std::size_t d, std::span<Bits> out) {
  for (std::size_t i = 2 * d - 2; i >= d; --i) {
    const Bits c = p[i];
    if (c == 0) continue;
    p[i] = 0;
    for (std::size_t j = 0; j < d; ++j) p[i - d + j] ^= f.mul(c, m.coeff(j));
  }
  for (std::size_t j = 0; j < d; ++j) out[j] = p[j];
}

void check_pair(const ExtElement& a, const ExtElement& b, std::size_t d, const char* who) {
  if (!(a.spec() == b.spec())) throw UsageError(std::string(who) + ": operands in different fields");
  if (a.spec().degree() != d) throw UsageError(std::string(who) + ": wrong extension degree");
}

}  // namespace

Bits mul_d1(const FieldSpec& f, Bits a, Bits b, BilinearCounter& c) {
  ++c.bilinear_mults;
  return f.mul(a, b);
}

FieldElement mul_d1(const FieldElement& a, const FieldElement& b, BilinearCounter& c) {
  if (!(a.spec == b.spec)) throw UsageError("mul_d1: operands in different fields");
  return {a.spec, mul_d1(a.spec, a.bits, b.bits, c)};
}

void kernel_mul(KernelId id, const FieldSpec& f, const Poly& modulus, std::span<const Bits> a,
                std::span<const Bits> b, std::span<Bits> out, BilinearCounter& c) {
  const std::size_t d = kernel_degree(id);
  if (a.size() != d || b.size() != d || out.size() != d) throw UsageError("kernel_mul: operand length mismatch");
  std::array<Bits, 7> p{};
  switch (id) {
    case KernelId::direct:
      out[0] = mul_d1(f, a[0], b[0], c);
      return;
    case KernelId::karatsuba2:
      kara2(f, a.data(), b.data(), p.data());
      break;
    case KernelId::karatsuba4:
      kara4(f, a.data(), b.data(), p.data());
      break;
  }
  c.bilinear_mults += kernel_cost(id);
  reduce(f, modulus, p.data(), d, out);
}

ExtElement mul_d2(const ExtElement& a, const ExtElement& b, BilinearCounter& c) {
  check_pair(a, b, 2, "mul_d2");
  std::vector<Bits> out(2);
  kernel_mul(KernelId::karatsuba2, a.spec().base(), a.spec().modulus(), a.coeffs(), b.coeffs(), out, c);
  return ExtElement(a.spec_ptr(), std::move(out));
}

ExtElement mul_d4(const ExtElement& a, const ExtElement& b, BilinearCounter& c) {
  check_pair(a, b, 4, "mul_d4");
  std::vector<Bits> out(4);
  kernel_mul(KernelId::karatsuba4, a.spec().base(), a.spec().modulus(), a.coeffs(), b.coeffs(), out, c);
  return ExtElement(a.spec_ptr(), std::move(out));
}

}  // namespace curvemul
