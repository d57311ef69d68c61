#include <random>
#include <set>

#include "curvemul/errors.hpp"
#include "curvemul/tools.hpp"

namespace curvemul {

bool check_total_split(const CurveModel& curve, const Poly& qpoly) {
  const ExtSpecPtr spec = make_ext(qpoly);
  const ExtElement b = ExtElement::generator(spec);
  const ExtElement den = poly_eval_ext(curve.rhs_den, b);
  if (den.is_zero()) throw InstanceError("check_total_split: rhs denominator vanishes at the place");
  const ExtElement u = ext_mul_schoolbook(poly_eval_ext(curve.rhs_num, b), ext_inv(den));
  return absolute_trace(u).bits == 0;
}

namespace {

bool accepts(const CurveModel& curve, const Poly& p) {
  if (!is_irreducible(p)) return false;
  try {
    return check_total_split(curve, p);
  } catch (const InstanceError&) {
    return false;  // p is a factor of rhs_den
  }
}

}  // namespace

std::vector<Poly> split_search(const CurveModel& curve, std::size_t degree, std::uint64_t trials,
                               std::uint64_t seed) {
  if (degree == 0) throw UsageError("split_search: degree must be positive");
  const FieldSpec& f = curve.base();
  std::vector<Poly> out;
  if (f.k() == 1 && degree <= 8) {
    for (std::uint32_t low = 0; low < (1u << degree); ++low) {
      std::vector<Bits> c(degree + 1, 0);
      for (std::size_t j = 0; j < degree; ++j) c[j] = (low >> j) & 1;
      c[degree] = 1;
      Poly p(f, std::move(c));
      if (accepts(curve, p)) out.push_back(std::move(p));
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::vector<Bits>> seen;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<Bits> c(degree + 1, 0);
    for (std::size_t j = 0; j < degree; ++j) c[j] = static_cast<Bits>(rng() & (f.order() - 1));
    c[degree] = 1;
    if (seen.count(c)) continue;
    seen.insert(c);
    Poly p(f, std::move(c));
    if (accepts(curve, p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace curvemul
