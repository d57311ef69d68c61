#include "curvemul/curve.hpp"

#include <algorithm>
#include <utility>

#include "curvemul/errors.hpp"

namespace curvemul {

CurveModel::CurveModel(Poly num, Poly den, unsigned g) : rhs_num(std::move(num)), rhs_den(std::move(den)), genus(g) {
  if (!(rhs_num.field() == rhs_den.field())) throw UsageError("CurveModel: numerator and denominator fields differ");
  if (rhs_den.is_zero()) throw InstanceError("CurveModel: zero denominator");
  if (poly_gcd(rhs_num, rhs_den).degree().value_or(0) != 0)
    throw InstanceError("CurveModel: rhs numerator and denominator share a factor");
}

FunctionRep::FunctionRep(Poly a, Poly b_, Poly d) : ay(std::move(a)), b(std::move(b_)), den(std::move(d)) {
  if (!(ay.field() == b.field()) || !(b.field() == den.field())) throw UsageError("FunctionRep: mixed fields");
  if (den.is_zero()) throw InstanceError("FunctionRep: zero denominator");
}

FunctionRep FunctionRep::one(FieldSpec field) {
  return FunctionRep(Poly(field), Poly::constant(field, 1), Poly::constant(field, 1));
}

FunctionRep function_mul(const FunctionRep& f, const FunctionRep& g, const CurveModel& curve) {
  // y^2 = y + N/D, so the numerator gains a factor D.
  const Poly aa = poly_mul(f.ay, g.ay);
  const Poly cross = poly_add(poly_mul(f.ay, g.b), poly_mul(g.ay, f.b));
  const Poly& n = curve.rhs_num;
  const Poly& d = curve.rhs_den;
  Poly ay = poly_mul(poly_add(aa, cross), d);
  Poly b = poly_add(poly_mul(aa, n), poly_mul(poly_mul(f.b, g.b), d));
  Poly den = poly_mul(poly_mul(f.den, g.den), d);
  return FunctionRep(std::move(ay), std::move(b), std::move(den));
}

AffinePlace::AffinePlace(ExtElement x, ExtElement y, std::string l)
    : x_img(std::move(x)), y_img(std::move(y)), label(std::move(l)) {
  if (!(x_img.spec() == y_img.spec())) throw UsageError("AffinePlace: x and y images in different residue fields");
}

std::size_t place_degree(const Place& p) {
  if (const auto* a = std::get_if<AffinePlace>(&p)) return a->degree();
  return 1;
}

const std::string& place_label(const Place& p) {
  return std::visit([](const auto& v) -> const std::string& { return v.label; }, p);
}

bool on_curve_check(const AffinePlace& p, const CurveModel& c) {
  if (!(p.residue().base() == c.base())) return false;
  const ExtElement den = poly_eval_ext(c.rhs_den, p.x_img);
  if (den.is_zero()) return false;
  const ExtElement lhs = ext_add(ext_mul_schoolbook(p.y_img, p.y_img), p.y_img);
  const ExtElement rhs = ext_mul_schoolbook(poly_eval_ext(c.rhs_num, p.x_img), ext_inv(den));
  return lhs == rhs;
}

bool generates_residue_field(const AffinePlace& p) {
  const ExtElement both[] = {p.x_img, p.y_img};
  return generated_degree(both) == p.degree();
}

ExtElement eval_affine(const FunctionRep& f, const AffinePlace& p) {
  const ExtElement den = poly_eval_ext(f.den, p.x_img);
  if (den.is_zero())
    throw SupportCollision("eval_affine: denominator vanishes at place " + (p.label.empty() ? "?" : p.label));
  const ExtElement num = ext_add(ext_mul_schoolbook(poly_eval_ext(f.ay, p.x_img), p.y_img), poly_eval_ext(f.b, p.x_img));
  return ext_mul_schoolbook(num, ext_inv(den));
}

ExtElement eval_at_Q(const FunctionRep& f, const AffinePlace& q) { return eval_affine(f, q); }

namespace {

// s^m * p(1/s) as a coefficient vector of length m + 1.
std::vector<Bits> reversed_to(const Poly& p, std::size_t m) {
  std::vector<Bits> out(m + 1, 0);
  const auto c = p.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) out[m - j] = c[j];
  return out;
}

std::size_t deg_or_zero(const Poly& p) { return p.degree().value_or(0); }

}  // namespace

std::vector<Bits> rhs_series_at_infinity(const CurveModel& c, std::size_t precision) {
  const FieldSpec& f = c.base();
  const std::size_t dn = deg_or_zero(c.rhs_num), dd = *c.rhs_den.degree();
  if (!c.rhs_num.is_zero() && dn > dd)
    throw InstanceError("curve has a pole of u(x) at infinity: the infinite place is ramified");
  const std::size_t m = dd;
  const std::vector<Bits> num = reversed_to(c.rhs_num, m), den = reversed_to(c.rhs_den, m);
  const Bits d0_inv = f.inv(den[0]);
  std::vector<Bits> out(precision, 0);
  for (std::size_t i = 0; i < precision; ++i) {
    Bits acc = i < num.size() ? num[i] : Bits{0};
    for (std::size_t j = 1; j <= std::min(i, m); ++j) acc ^= f.mul(den[j], out[i - j]);
    out[i] = f.mul(acc, d0_inv);
  }
  return out;
}

std::vector<Bits> infinite_branch_series(const CurveModel& c, Bits y0, std::size_t precision) {
  if (y0 > 1) throw UsageError("infinite_branch_series: branch value must be 0 or 1");
  if (precision == 0) return {};
  const FieldSpec& f = c.base();
  const std::vector<Bits> cs = rhs_series_at_infinity(c, precision);
  if (cs[0] != 0) throw InstanceError("u(infinity) != 0: no degree-1 places with y0 in {0,1} over infinity");
  std::vector<Bits> y(precision, 0);
  y[0] = y0;
  for (std::size_t k = 1; k < precision; ++k) y[k] = (k % 2) ? cs[k] : f.add(cs[k], f.square(y[k / 2]));
  // Residual y^2 + y - c must vanish identically up to the truncation order.
  for (std::size_t k = 0; k < precision; ++k) {
    const Bits sq = (k % 2 == 0) ? f.square(y[k / 2]) : Bits{0};
    if ((sq ^ y[k] ^ cs[k]) != 0) throw Error("infinite_branch_series: residual check failed");
  }
  return y;
}

std::size_t default_precision(const FunctionRep& fn) {
  const std::size_t m = std::max({deg_or_zero(fn.ay), deg_or_zero(fn.b), deg_or_zero(fn.den)});
  return 2 * m + 4;
}

Bits eval_infinite(const FunctionRep& fn, const CurveModel& c, const InfinitePlace& p) {
  const FieldSpec& f = c.base();
  if (!(fn.den.field() == f)) throw UsageError("eval_infinite: function and curve fields differ");
  const std::size_t m = std::max({deg_or_zero(fn.ay), deg_or_zero(fn.b), deg_or_zero(fn.den)});
  std::size_t prec = p.precision_hint > 0 ? static_cast<std::size_t>(p.precision_hint) : default_precision(fn);
  prec = std::max(prec, m + 1);
  const std::vector<Bits> y = infinite_branch_series(c, p.branch_y0, prec);
  const std::vector<Bits> a = reversed_to(fn.ay, m), b = reversed_to(fn.b, m), d = reversed_to(fn.den, m);

  std::vector<Bits> num(prec, 0);
  for (std::size_t i = 0; i <= m && i < prec; ++i) {
    num[i] ^= b[i];
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < prec; ++j) num[i + j] ^= f.mul(a[i], y[j]);
  }
  std::size_t vd = 0;
  while (d[vd] == 0) ++vd;  // den != 0, so vd <= m
  for (std::size_t i = 0; i < vd; ++i)
    if (num[i] != 0) throw PoleError("eval_infinite: function has a pole at " + (p.label.empty() ? "?" : p.label));
  return f.mul(num[vd], f.inv(d[vd]));
}

std::vector<Bits> eval_place(const FunctionRep& fn, const CurveModel& c, const Place& p) {
  if (const auto* a = std::get_if<AffinePlace>(&p)) return to_coords(eval_affine(fn, *a));
  return {eval_infinite(fn, c, std::get<InfinitePlace>(p))};
}

AffinePlace beta_from_ideal(const CurveModel& c, const Poly& qpoly, const Poly& ynum, const Poly& yden,
                            std::string label) {
  const ExtSpecPtr spec = make_ext(qpoly);
  const ExtElement alpha = ExtElement::generator(spec);
  const ExtElement den = poly_eval_ext(yden, alpha);
  if (den.is_zero()) throw InstanceError("beta_from_ideal: y denominator vanishes at the place");
  const ExtElement beta = ext_mul_schoolbook(poly_eval_ext(ynum, alpha), ext_inv(den));
  AffinePlace place(alpha, beta, std::move(label));
  if (!on_curve_check(place, c)) throw InstanceError("beta_from_ideal: resulting point is not on the curve");
  return place;
}

}  // namespace curvemul
