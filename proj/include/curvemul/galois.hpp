#pragma once

// Binary finite fields GF(2^k), polynomials over them, and extensions
// F_q[t]/(m(t)) presented by an irreducible modulus.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace curvemul {

/// Raw coefficient vector of a GF(2^k) element, bit i = coefficient of w^i.
using Bits = std::uint8_t;

/// GF(2^k) = F_2[w]/(modulus(w)) for 1 <= k <= 8.
class FieldSpec {
 public:
  /// modulus is a (k+1)-bit vector with bit k set; it must be irreducible over F_2.
  FieldSpec(unsigned k, std::uint32_t modulus);

  static FieldSpec gf2();   // F_2, modulus w + 1
  static FieldSpec gf4();   // w^2 + w + 1
  static FieldSpec gf16();  // w^4 + w + 1

  unsigned k() const { return k_; }
  std::uint32_t modulus() const { return modulus_; }
  unsigned order() const { return 1u << k_; }
  bool contains(Bits b) const { return (static_cast<unsigned>(b) >> k_) == 0; }

  Bits add(Bits a, Bits b) const { return static_cast<Bits>(a ^ b); }
  Bits mul(Bits a, Bits b) const;
  Bits square(Bits a) const { return mul(a, a); }
  Bits inv(Bits a) const;
  Bits pow(Bits a, std::uint64_t e) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint8_t k_;
  std::uint16_t modulus_;
};

/// Element of a FieldSpec carrying its field, for the checked public API.
struct FieldElement {
  FieldElement(FieldSpec spec, Bits bits);

  static FieldElement zero(FieldSpec spec) { return {spec, 0}; }
  static FieldElement one(FieldSpec spec) { return {spec, 1}; }

  FieldSpec spec;
  Bits bits;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
/// Throws DivisionByZero on a zero input.
FieldElement fe_inv(const FieldElement& a);

/// Univariate polynomial over a FieldSpec; coefficient j multiplies x^j, trailing zeros trimmed.
class Poly {
 public:
  explicit Poly(FieldSpec field) : field_(field) {}
  Poly(FieldSpec field, std::vector<Bits> coeffs);

  static Poly constant(FieldSpec field, Bits c);
  static Poly monomial(FieldSpec field, std::size_t exponent, Bits c = 1);
  /// The polynomial x.
  static Poly x(FieldSpec field) { return monomial(field, 1); }

  const FieldSpec& field() const { return field_; }
  /// nullopt for the zero polynomial (degree -infinity).
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Bits lead() const { return c_.empty() ? Bits{0} : c_.back(); }
  Bits coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Bits{0}; }
  std::span<const Bits> coeffs() const { return c_; }

  /// Horner evaluation at a base-field point.
  Bits eval(Bits at) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  FieldSpec field_;
  std::vector<Bits> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Bits c);
/// Throws DivisionByZero when the divisor is zero.
DivMod poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& m);
/// Monic gcd (zero if both inputs are zero).
Poly poly_gcd(const Poly& a, const Poly& b);
/// base^(q^times) mod m, q = field order; uses repeated squaring.
Poly poly_frobenius_mod(const Poly& base, std::size_t times, const Poly& m);

/// Rabin test over the coefficient field. Rejects non-monic or constant input with UsageError.
bool is_irreducible(const Poly& p);

/// Extension F_q[t]/(modulus(t)), modulus monic irreducible of degree d >= 1.
class ExtSpec {
 public:
  explicit ExtSpec(Poly modulus);

  const FieldSpec& base() const { return modulus_.field(); }
  std::size_t degree() const { return d_; }
  const Poly& modulus() const { return modulus_; }

  friend bool operator==(const ExtSpec& a, const ExtSpec& b) { return a.modulus_ == b.modulus_; }

 private:
  Poly modulus_;
  std::size_t d_;
};

using ExtSpecPtr = std::shared_ptr<const ExtSpec>;

ExtSpecPtr make_ext(Poly modulus);

/// Element of an ExtSpec in the basis 1, t, ..., t^(d-1).
class ExtElement {
 public:
  ExtElement(ExtSpecPtr spec, std::vector<Bits> coeffs);

  static ExtElement zero(ExtSpecPtr spec);
  static ExtElement one(ExtSpecPtr spec);
  /// Base-field scalar embedded as a constant.
  static ExtElement lift(ExtSpecPtr spec, Bits c);
  /// The class of t.
  static ExtElement generator(ExtSpecPtr spec);
  /// Reduces p modulo the spec's modulus.
  static ExtElement from_poly(ExtSpecPtr spec, const Poly& p);

  const ExtSpec& spec() const { return *spec_; }
  const ExtSpecPtr& spec_ptr() const { return spec_; }
  std::span<const Bits> coeffs() const { return c_; }
  bool is_zero() const;
  Poly as_poly() const { return Poly(spec_->base(), c_); }

  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return *a.spec_ == *b.spec_ && a.c_ == b.c_;
  }

 private:
  ExtSpecPtr spec_;
  std::vector<Bits> c_;
};

ExtElement ext_add(const ExtElement& a, const ExtElement& b);
/// Reference product: full polynomial product, then reduction by the modulus.
ExtElement ext_mul_schoolbook(const ExtElement& a, const ExtElement& b);
ExtElement ext_scale(const ExtElement& a, Bits c);
/// Extended Euclid over F_q[t]; throws DivisionByZero on zero.
ExtElement ext_inv(const ExtElement& a);
ExtElement ext_pow(const ExtElement& a, std::uint64_t e);
/// a^(q^times), q = base-field order.
ExtElement ext_frobenius(const ExtElement& a, std::size_t times);

std::vector<Bits> to_coords(const ExtElement& z);
/// Throws UsageError unless coords.size() equals the extension degree.
ExtElement from_coords(ExtSpecPtr spec, std::span<const Bits> coords);

/// Horner evaluation with coefficients lifted into z's field.
ExtElement poly_eval_ext(const Poly& p, const ExtElement& z);

/// Tr_{F_(q^d)/F_2}(z) = sum of z^(2^i), i < k*d. Returned as an F_2 element.
FieldElement absolute_trace(const ExtElement& z);

/// Degree over F_q of the smallest subfield of z's field containing every given element.
std::size_t generated_degree(std::span<const ExtElement> elems);

}  // namespace curvemul
