#pragma once

// Instance files, element text format, splitting search and verification reports.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "curvemul/engine.hpp"

namespace curvemul {

/// Parses an instance document without checking instance invariants.
/// Throws ParseError for malformed JSON or fields, InstanceError when a modulus is not irreducible.
InstanceSpec parse_instance(std::string_view json_text);
InstanceSpec read_instance(const std::filesystem::path& path);
/// read_instance followed by validate().
InstanceSpec load_instance(const std::filesystem::path& path);

/// "c0,c1,...,c(n-1)", each a decimal integer below 2^k.
std::vector<Bits> parse_element(std::string_view text, const FieldSpec& f, std::size_t n);
std::string format_element(std::span<const Bits> coords);
/// "x^5 + x^3 + 1"; coefficients other than 1 are written as decimal integers, e.g. "2*x^2".
std::string format_poly(const Poly& p);

/// Artin-Schreier splitting test: trace of u(t) from F_q[t]/(qpoly) down to F_2 is zero.
/// Throws InstanceError when rhs_den(t) = 0.
bool check_total_split(const CurveModel& curve, const Poly& qpoly);

/// Monic irreducible polynomials of the given degree passing check_total_split.
/// Over F_2 with degree <= 8 every polynomial is scanned and trials is ignored; otherwise
/// `trials` random monic polynomials are drawn from a generator seeded with `seed`.
std::vector<Poly> split_search(const CurveModel& curve, std::size_t degree, std::uint64_t trials,
                               std::uint64_t seed);

struct VerifyReport {
  std::vector<Check> checks;
  bool pass() const { return all_pass(checks); }
};

/// Full audit of an instance: invariants, rank of T, good basis, oracle spot checks, counts.
VerifyReport verify(const InstanceSpec& spec, std::uint64_t spot_checks = 64, std::uint64_t seed = 1);
/// Same, starting from a file; parse failures are reported as a failed check.
VerifyReport verify(const std::filesystem::path& path, std::uint64_t spot_checks = 64, std::uint64_t seed = 1);

/// Uniform random coordinate vector over f.
template <class Rng>
std::vector<Bits> random_element(Rng& rng, const FieldSpec& f, std::size_t n) {
  std::vector<Bits> v(n);
  for (auto& c : v) c = static_cast<Bits>(rng() & (f.order() - 1));
  return v;
}

}  // namespace curvemul
