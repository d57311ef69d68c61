#pragma once

// Artin-Schreier curves y^2 + y = u(x) in characteristic 2, their places, and
// evaluation of functions (a(x) y + b(x)) / den(x) into residue fields.

#include <string>
#include <variant>
#include <vector>

#include "curvemul/galois.hpp"

namespace curvemul {

/// y^2 + y = rhs_num(x) / rhs_den(x); the genus is given, not computed.
struct CurveModel {
  CurveModel(Poly rhs_num, Poly rhs_den, unsigned genus);

  const FieldSpec& base() const { return rhs_num.field(); }

  Poly rhs_num;
  Poly rhs_den;
  unsigned genus;
};

/// (ay(x) * y + b(x)) / den(x). Not reduced to lowest terms.
struct FunctionRep {
  FunctionRep(Poly ay, Poly b, Poly den);

  static FunctionRep one(FieldSpec field);

  Poly ay;
  Poly b;
  Poly den;
};

/// Product of two function representations, with y^2 rewritten as y + u(x).
FunctionRep function_mul(const FunctionRep& f, const FunctionRep& g, const CurveModel& curve);

/// Place given by a point (x_img, y_img) over its residue field F_q[t]/(m(t)).
struct AffinePlace {
  AffinePlace(ExtElement x_img, ExtElement y_img, std::string label = {});

  std::size_t degree() const { return residue().degree(); }
  const ExtSpec& residue() const { return x_img.spec(); }
  const ExtSpecPtr& residue_ptr() const { return x_img.spec_ptr(); }

  ExtElement x_img;
  ExtElement y_img;
  std::string label;
};

/// Degree-1 place over x = infinity on a curve whose right-hand side vanishes at infinity.
struct InfinitePlace {
  Bits branch_y0 = 0;   // y at the place, 0 or 1
  int precision_hint = 0;  // series length override; 0 selects the default
  std::string label;
};

using Place = std::variant<AffinePlace, InfinitePlace>;

std::size_t place_degree(const Place& p);
const std::string& place_label(const Place& p);

/// On-curve check in the residue field. False if rhs_den vanishes at x_img.
bool on_curve_check(const AffinePlace& p, const CurveModel& c);

/// True when x_img and y_img together generate the full residue field.
bool generates_residue_field(const AffinePlace& p);

/// Value of f at p. Throws SupportCollision when den(x_img) = 0.
ExtElement eval_affine(const FunctionRep& f, const AffinePlace& p);

/// Same as eval_affine; the place is the degree-n place defining F_(q^n).
ExtElement eval_at_Q(const FunctionRep& f, const AffinePlace& q);

/// Power series y(s) = sum y_k s^k, s = 1/x, on the branch through y0, truncated to `precision` terms.
/// Throws InstanceError when the curve has no unramified degree-1 places at infinity.
std::vector<Bits> infinite_branch_series(const CurveModel& c, Bits y0, std::size_t precision);

/// Series c(s) of rhs_num(1/s) / rhs_den(1/s), truncated to `precision` terms.
std::vector<Bits> rhs_series_at_infinity(const CurveModel& c, std::size_t precision);

/// Default series length: 2 * (max degree among ay, b, den) + 4.
std::size_t default_precision(const FunctionRep& f);

/// Value of f at the infinite place. Throws PoleError if f has a pole there.
Bits eval_infinite(const FunctionRep& f, const CurveModel& c, const InfinitePlace& p);

/// Coordinates of f at any place: d coordinates for an affine place of degree d, one for an infinite place.
std::vector<Bits> eval_place(const FunctionRep& f, const CurveModel& c, const Place& p);

/// Place over the ideal (qpoly(x), yden(x) y + ynum(x)): residue F_q[t]/(qpoly), x = t,
/// y = ynum(t) / yden(t). Throws InstanceError if yden(t) = 0 or the point is off the curve.
AffinePlace beta_from_ideal(const CurveModel& c, const Poly& qpoly, const Poly& ynum, const Poly& yden,
                            std::string label = {});

}  // namespace curvemul
