#include <optional>
#include <random>

#include "curvemul/errors.hpp"
#include "curvemul/tools.hpp"

namespace curvemul {

VerifyReport verify(const InstanceSpec& spec, std::uint64_t spot_checks, std::uint64_t seed) {
  VerifyReport rep;
  rep.checks = validation_checks(spec);
  if (!rep.pass()) return rep;

  for (auto& c : verify_good_basis(spec)) rep.checks.push_back(std::move(c));
  if (!rep.pass()) return rep;

  std::optional<CompiledInstance> compiled;
  try {
    compiled.emplace(compile(spec));
  } catch (const Error& e) {
    rep.checks.push_back({"compile", false, e.what()});
    return rep;
  }
  const CompiledInstance& ci = *compiled;
  const std::size_t N = spec.dim();
  std::string profile;
  for (const auto& p : ci.selected) profile += (profile.empty() ? "" : ",") + std::to_string(place_degree(p));
  rep.checks.push_back({"place selection", true, std::to_string(ci.selected.size()) + " places, degrees " + profile});
  rep.checks.push_back({"rank(T)", ci.rank == N, std::to_string(ci.rank) + " of " + std::to_string(N)});
  {
    const Matrix prod = mat_mul(ci.T_inv_top, ci.T);
    bool ok = true;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) ok = ok && prod.at(i, j) == (i == j ? 1 : 0);
    rep.checks.push_back({"T^-1 top rows", ok, std::to_string(prod.rows()) + " rows of T^-1 times T give identity rows"});
  }

  std::mt19937_64 rng(seed);
  const Poly& qmod = spec.Q.residue().modulus();
  std::uint64_t bad = 0;
  std::string first;
  OpReport last;
  for (std::uint64_t i = 0; i < spot_checks; ++i) {
    const auto x = random_element(rng, spec.field, spec.n);
    const auto y = random_element(rng, spec.field, spec.n);
    const MulResult r = multiply(ci, x, y);
    last = r.report;
    if (r.z != reference_mul(qmod, x, y) && bad++ == 0) first = "x=" + format_element(x) + " y=" + format_element(y);
  }
  rep.checks.push_back({"oracle spot checks", bad == 0,
                        std::to_string(spot_checks - bad) + "/" + std::to_string(spot_checks) + " agree with schoolbook" +
                            (bad ? "; first mismatch " + first : "")});

  const OpReport want = expected_report(ci);
  if (spot_checks == 0) last = multiply(ci, std::vector<Bits>(spec.n, 0), std::vector<Bits>(spec.n, 0)).report;
  rep.checks.push_back({"step1 count", last.step1_scalar == want.step1_scalar,
                        std::to_string(last.step1_scalar) + " = 2n(2n+g-1)"});
  rep.checks.push_back({"step2 count", last.step2_bilinear == want.step2_bilinear,
                        std::to_string(last.step2_bilinear) + " = sum of mu(deg P)"});
  rep.checks.push_back({"step3 count", last.step3_scalar == want.step3_scalar,
                        std::to_string(last.step3_scalar) + " = (2n-1)(2n+g-1)"});
  const double bound = total_bound(spec.n, spec.genus(), ci.r);
  rep.checks.push_back({"total bound", static_cast<double>(last.total()) <= bound,
                        std::to_string(last.total()) + " <= " + std::to_string(static_cast<long long>(bound))});
  return rep;
}

VerifyReport verify(const std::filesystem::path& path, std::uint64_t spot_checks, std::uint64_t seed) {
  try {
    return verify(read_instance(path), spot_checks, seed);
  } catch (const Error& e) {
    VerifyReport r;
    r.checks.push_back({"parse", false, e.what()});
    return r;
  }
}

}  // namespace curvemul
