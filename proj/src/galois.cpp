#include "curvemul/galois.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "curvemul/errors.hpp"

namespace curvemul {

namespace {

int bit_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t bit_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = bit_degree(m);
  for (int da = bit_degree(a); da >= dm; da = bit_degree(a)) a ^= m << (da - dm);
  return a;
}

// Trial division by every polynomial of degree <= k/2; k <= 8 keeps this tiny.
bool bit_irreducible(std::uint32_t p) {
  const int k = bit_degree(p);
  for (int d = 1; 2 * d <= k; ++d)
    for (std::uint32_t f = 1u << d; f < (2u << d); ++f)
      if (bit_mod(p, f) == 0) return false;
  return true;
}

void trim(std::vector<Bits>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* what) {
  if (!(a == b)) throw UsageError(std::string(what) + ": operands live in different fields");
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// In-place a <- a mod m on raw coefficient vectors; m monic-or-not, nonzero.
void raw_mod(const FieldSpec& f, std::vector<Bits>& a, std::span<const Bits> m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Bits lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    const Bits c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] ^= f.mul(c, m[i]);
    trim(a);
  }
}

std::vector<Bits> raw_mul(const FieldSpec& f, std::span<const Bits> a, std::span<const Bits> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Bits> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= f.mul(a[i], b[j]);
  }
  trim(r);
  return r;
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec::FieldSpec(unsigned k, std::uint32_t modulus) {
  if (k < 1 || k > 8) throw UsageError("FieldSpec: k must be in [1, 8]");
  if (bit_degree(modulus) != static_cast<int>(k))
    throw UsageError("FieldSpec: modulus must have degree exactly k");
  if (!bit_irreducible(modulus)) throw InstanceError("FieldSpec: modulus is reducible over F_2");
  k_ = static_cast<std::uint8_t>(k);
  modulus_ = static_cast<std::uint16_t>(modulus);
}

FieldSpec FieldSpec::gf2() { return FieldSpec(1, 0b11); }
FieldSpec FieldSpec::gf4() { return FieldSpec(2, 0b111); }
FieldSpec FieldSpec::gf16() { return FieldSpec(4, 0b10011); }

Bits FieldSpec::mul(Bits a, Bits b) const {
  unsigned x = a, r = 0;
  const unsigned top = 1u << k_;
  for (unsigned y = b; y; y >>= 1) {
    if (y & 1u) r ^= x;
    x <<= 1;
    if (x & top) x ^= modulus_;
  }
  return static_cast<Bits>(r);
}

Bits FieldSpec::pow(Bits a, std::uint64_t e) const {
  Bits r = 1;
  while (e) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

// Extended Euclid on bit polynomials.
Bits FieldSpec::inv(Bits a) const {
  if (a == 0) throw DivisionByZero("FieldSpec::inv: zero has no inverse");
  std::uint32_t r0 = modulus_, r1 = a;
  std::uint32_t s0 = 0, s1 = 1;
  while (r1 != 1) {
    std::uint32_t q = 0;
    std::uint32_t rem = r0;
    const int d1 = bit_degree(r1);
    for (int d = bit_degree(rem); d >= d1; d = bit_degree(rem)) {
      q ^= 1u << (d - d1);
      rem ^= r1 << (d - d1);
    }
    // s2 = s0 - q*s1 over F_2[w]
    std::uint32_t qs = 0;
    for (std::uint32_t qq = q, sh = 0; qq; qq >>= 1, ++sh)
      if (qq & 1u) qs ^= s1 << sh;
    const std::uint32_t s2 = s0 ^ qs;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  return static_cast<Bits>(bit_mod(s1, modulus_));
}

// ------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldSpec s, Bits b) : spec(s), bits(b) {
  if (!spec.contains(b)) throw UsageError("FieldElement: bits outside the field");
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec, b.spec, "fe_add");
  return {a.spec, a.spec.add(a.bits, b.bits)};
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec, b.spec, "fe_mul");
  return {a.spec, a.spec.mul(a.bits, b.bits)};
}

FieldElement fe_inv(const FieldElement& a) { return {a.spec, a.spec.inv(a.bits)}; }

// --------------------------------------------------------------------- Poly

Poly::Poly(FieldSpec field, std::vector<Bits> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (Bits b : c_)
    if (!field_.contains(b)) throw UsageError("Poly: coefficient outside the field");
  trim(c_);
}

Poly Poly::constant(FieldSpec field, Bits c) { return Poly(field, {c}); }

Poly Poly::monomial(FieldSpec field, std::size_t exponent, Bits c) {
  std::vector<Bits> v(exponent + 1, 0);
  v[exponent] = c;
  return Poly(field, std::move(v));
}

std::optional<std::size_t> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

Bits Poly::eval(Bits at) const {
  Bits r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.mul(r, at) ^ *it;
  return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field(), "poly_add");
  const auto ac = a.coeffs(), bc = b.coeffs();
  std::vector<Bits> r(std::max(ac.size(), bc.size()), 0);
  for (std::size_t i = 0; i < ac.size(); ++i) r[i] ^= ac[i];
  for (std::size_t i = 0; i < bc.size(); ++i) r[i] ^= bc[i];
  return Poly(a.field(), std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field(), "poly_mul");
  return Poly(a.field(), raw_mul(a.field(), a.coeffs(), b.coeffs()));
}

Poly poly_scale(const Poly& a, Bits c) {
  std::vector<Bits> r(a.coeffs().begin(), a.coeffs().end());
  for (Bits& x : r) x = a.field().mul(x, c);
  return Poly(a.field(), std::move(r));
}

DivMod poly_divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field(), "poly_divmod");
  if (b.is_zero()) throw DivisionByZero("poly_divmod: division by the zero polynomial");
  const FieldSpec& f = a.field();
  std::vector<Bits> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() <= db) return {Poly(f), a};
  std::vector<Bits> quot(rem.size() - db, 0);
  const Bits lead_inv = f.inv(b.lead());
  while (rem.size() > db) {
    const Bits c = f.mul(rem.back(), lead_inv);
    const std::size_t shift = rem.size() - 1 - db;
    quot[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) rem[shift + i] ^= f.mul(c, bc[i]);
    trim(rem);
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& m) { return poly_divmod(a, m).remainder; }

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return poly_scale(x, x.field().inv(x.lead()));
}

Poly poly_frobenius_mod(const Poly& base, std::size_t times, const Poly& m) {
  if (m.is_zero()) throw DivisionByZero("poly_frobenius_mod: zero modulus");
  const FieldSpec& f = base.field();
  std::vector<Bits> cur(base.coeffs().begin(), base.coeffs().end());
  raw_mod(f, cur, m.coeffs());
  const std::size_t squarings = times * f.k();
  for (std::size_t i = 0; i < squarings; ++i) {
    cur = raw_mul(f, cur, cur);
    raw_mod(f, cur, m.coeffs());
  }
  return Poly(f, std::move(cur));
}

bool is_irreducible(const Poly& p) {
  if (!p.is_monic()) throw UsageError("is_irreducible: polynomial must be monic");
  const std::size_t m = *p.degree();
  if (m == 0) throw UsageError("is_irreducible: constant polynomial");
  if (m == 1) return true;
  const Poly x = Poly::x(p.field());
  if (!(poly_frobenius_mod(x, m, p) == poly_mod(x, p))) return false;
  for (std::size_t r : prime_divisors(m)) {
    const Poly h = poly_add(poly_frobenius_mod(x, m / r, p), x);
    const Poly g = poly_gcd(h, p);
    if (!(g.degree() == std::optional<std::size_t>{0})) return false;
  }
  return true;
}

// ------------------------------------------------------------------ ExtSpec

ExtSpec::ExtSpec(Poly modulus) : modulus_(std::move(modulus)), d_(0) {
  if (!modulus_.is_monic()) throw UsageError("ExtSpec: modulus must be monic");
  d_ = *modulus_.degree();
  if (d_ == 0) throw UsageError("ExtSpec: modulus must have positive degree");
  if (!is_irreducible(modulus_)) throw InstanceError("ExtSpec: modulus is reducible");
}

ExtSpecPtr make_ext(Poly modulus) { return std::make_shared<const ExtSpec>(std::move(modulus)); }

// --------------------------------------------------------------- ExtElement

ExtElement::ExtElement(ExtSpecPtr spec, std::vector<Bits> coeffs)
    : spec_(std::move(spec)), c_(std::move(coeffs)) {
  if (!spec_) throw UsageError("ExtElement: null spec");
  if (c_.size() != spec_->degree()) throw UsageError("ExtElement: coordinate count must equal the degree");
  for (Bits b : c_)
    if (!spec_->base().contains(b)) throw UsageError("ExtElement: coordinate outside the base field");
}

ExtElement ExtElement::zero(ExtSpecPtr spec) {
  const std::size_t d = spec->degree();
  return ExtElement(std::move(spec), std::vector<Bits>(d, 0));
}

ExtElement ExtElement::one(ExtSpecPtr spec) { return lift(std::move(spec), 1); }

ExtElement ExtElement::lift(ExtSpecPtr spec, Bits c) {
  std::vector<Bits> v(spec->degree(), 0);
  v[0] = c;
  return ExtElement(std::move(spec), std::move(v));
}

ExtElement ExtElement::generator(ExtSpecPtr spec) {
  return from_poly(spec, Poly::x(spec->base()));
}

ExtElement ExtElement::from_poly(ExtSpecPtr spec, const Poly& p) {
  require_same_field(spec->base(), p.field(), "ExtElement::from_poly");
  std::vector<Bits> r(p.coeffs().begin(), p.coeffs().end());
  raw_mod(spec->base(), r, spec->modulus().coeffs());
  r.resize(spec->degree(), 0);
  return ExtElement(std::move(spec), std::move(r));
}

bool ExtElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Bits b) { return b == 0; });
}

namespace {
void require_same_ext(const ExtElement& a, const ExtElement& b, const char* what) {
  if (!(a.spec() == b.spec())) throw UsageError(std::string(what) + ": operands live in different extensions");
}
}  // namespace

ExtElement ext_add(const ExtElement& a, const ExtElement& b) {
  require_same_ext(a, b, "ext_add");
  std::vector<Bits> r(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] ^= b.coeffs()[i];
  return ExtElement(a.spec_ptr(), std::move(r));
}

ExtElement ext_mul_schoolbook(const ExtElement& a, const ExtElement& b) {
  require_same_ext(a, b, "ext_mul_schoolbook");
  const FieldSpec& f = a.spec().base();
  std::vector<Bits> r = raw_mul(f, a.coeffs(), b.coeffs());
  if (!r.empty()) raw_mod(f, r, a.spec().modulus().coeffs());
  r.resize(a.spec().degree(), 0);
  return ExtElement(a.spec_ptr(), std::move(r));
}

ExtElement ext_scale(const ExtElement& a, Bits c) {
  std::vector<Bits> r(a.coeffs().begin(), a.coeffs().end());
  for (Bits& x : r) x = a.spec().base().mul(x, c);
  return ExtElement(a.spec_ptr(), std::move(r));
}

ExtElement ext_inv(const ExtElement& a) {
  if (a.is_zero()) throw DivisionByZero("ext_inv: zero has no inverse");
  const FieldSpec& f = a.spec().base();
  // Invariant: s_i * a == r_i (mod modulus).
  Poly r0 = a.spec().modulus(), r1 = a.as_poly();
  Poly s0(f), s1 = Poly::constant(f, 1);
  while (*r1.degree() > 0) {
    DivMod qr = poly_divmod(r0, r1);
    Poly s2 = poly_add(s0, poly_mul(qr.quotient, s1));
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  return ExtElement::from_poly(a.spec_ptr(), poly_scale(s1, f.inv(r1.lead())));
}

ExtElement ext_pow(const ExtElement& a, std::uint64_t e) {
  ExtElement r = ExtElement::one(a.spec_ptr());
  ExtElement b = a;
  while (e) {
    if (e & 1u) r = ext_mul_schoolbook(r, b);
    b = ext_mul_schoolbook(b, b);
    e >>= 1;
  }
  return r;
}

ExtElement ext_frobenius(const ExtElement& a, std::size_t times) {
  ExtElement r = a;
  const std::size_t squarings = times * a.spec().base().k();
  for (std::size_t i = 0; i < squarings; ++i) r = ext_mul_schoolbook(r, r);
  return r;
}

std::vector<Bits> to_coords(const ExtElement& z) { return {z.coeffs().begin(), z.coeffs().end()}; }

ExtElement from_coords(ExtSpecPtr spec, std::span<const Bits> coords) {
  if (coords.size() != spec->degree()) throw UsageError("from_coords: length mismatch");
  return ExtElement(std::move(spec), std::vector<Bits>(coords.begin(), coords.end()));
}

ExtElement poly_eval_ext(const Poly& p, const ExtElement& z) {
  require_same_field(p.field(), z.spec().base(), "poly_eval_ext");
  ExtElement r = ExtElement::zero(z.spec_ptr());
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    r = ext_add(ext_mul_schoolbook(r, z), ExtElement::lift(z.spec_ptr(), *it));
  return r;
}

FieldElement absolute_trace(const ExtElement& z) {
  const std::size_t total = z.spec().base().k() * z.spec().degree();
  ExtElement acc = z, cur = z;
  for (std::size_t i = 1; i < total; ++i) {
    cur = ext_mul_schoolbook(cur, cur);
    acc = ext_add(acc, cur);
  }
  const auto c = acc.coeffs();
  // The trace lies in F_2, so only the constant coordinate may be set, and only to 0 or 1.
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) throw Error("absolute_trace: result outside F_2 (internal arithmetic fault)");
  if (c[0] > 1) throw Error("absolute_trace: result outside F_2 (internal arithmetic fault)");
  return FieldElement(FieldSpec::gf2(), c[0]);
}

std::size_t generated_degree(std::span<const ExtElement> elems) {
  if (elems.empty()) return 1;
  const std::size_t d = elems.front().spec().degree();
  for (std::size_t e = 1; e <= d; ++e) {
    if (d % e) continue;
    const bool fixed = std::all_of(elems.begin(), elems.end(),
                                   [&](const ExtElement& z) { return ext_frobenius(z, e) == z; });
    if (fixed) return e;
  }
  return d;
}

}  // namespace curvemul
