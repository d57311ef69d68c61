// One line per acceptance criterion; exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>

#include "curvemul/errors.hpp"
#include "vectors.hpp"

using namespace curvemul;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

const char* kNames[] = {"f16_13", "f4_5", "f2_5"};

std::map<std::string, CompiledInstance> load_all() {
  std::map<std::string, CompiledInstance> out;
  for (const char* n : kNames) out.emplace(n, compile(load_instance(testing::instance_path(n))));
  return out;
}

void c1(const std::map<std::string, CompiledInstance>& ci) {
  const auto t0 = Clock::now();
  int ok = 0, total = 0;
  std::string bad;
  for (const auto& v : testing::worked_products()) {
    ++total;
    if (multiply(ci.at(v.instance), v.x, v.y).z == v.z)
      ++ok;
    else
      bad += " " + v.instance + ":" + v.label;
  }
  const double s = seconds_since(t0);
  report(1, "worked products reproduced exactly", ok == total && s < 1.0,
         std::to_string(ok) + "/" + std::to_string(total) + " in " + fmt_s(s) + (bad.empty() ? "" : "; mismatched" + bad));
}

void c2(const std::map<std::string, CompiledInstance>& ci) {
  bool all = true;
  std::string detail;
  for (const char* n : kNames) {
    const auto& c = ci.at(n);
    std::mt19937_64 rng(2024);
    const auto t0 = Clock::now();
    int ok = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_element(rng, c.spec.field, c.spec.n), y = random_element(rng, c.spec.field, c.spec.n);
      ok += multiply(c, x, y).z == reference_mul(c.spec.Q.residue().modulus(), x, y);
    }
    const double s = seconds_since(t0);
    all = all && ok == 1000 && s < 5.0;
    detail += std::string(detail.empty() ? "" : ", ") + n + " " + std::to_string(ok) + "/1000 in " + fmt_s(s);
  }
  report(2, "oracle equivalence on 1000 seeded pairs", all, detail);
}

void c3(const std::map<std::string, CompiledInstance>& ci) {
  const std::size_t want[] = {27, 11, 11};
  bool all = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    const std::size_t r = rank(ci.at(kNames[i]).T);
    all = all && r == want[i];
    detail += std::string(detail.empty() ? "" : " / ") + std::to_string(r);
  }
  report(3, "rank(T) = 27 / 11 / 11", all, "measured " + detail);
}

void c4(const std::map<std::string, CompiledInstance>& ci) {
  bool all = true;
  std::string detail;
  for (const char* n : kNames) {
    const auto checks = verify_good_basis(ci.at(n));
    std::size_t ok = 0;
    for (const auto& c : checks) ok += c.pass;
    all = all && ok == checks.size();
    detail += std::string(detail.empty() ? "" : ", ") + n + " " + std::to_string(ok) + "/" + std::to_string(checks.size());
  }
  report(4, "good basis: e_1..e_n, e_1,e_2..e_n, then g zeros at Q", all, detail);
}

void c5(const std::map<std::string, CompiledInstance>& ci) {
  const OpReport want[] = {{702, 27, 675}, {110, 12, 99}, {110, 18, 99}};
  bool all = true;
  std::string s1, s2, s3;
  for (int i = 0; i < 3; ++i) {
    const auto& c = ci.at(kNames[i]);
    const std::uint64_t n = c.spec.n, N = c.spec.dim();
    const OpReport got = multiply(c, std::vector<Bits>(n, 1), std::vector<Bits>(n, 1)).report;
    all = all && got == want[i] && got.step1_scalar == 2 * n * N && got.step3_scalar == (2 * n - 1) * N &&
          got.step2_bilinear == c.plan.cost();
    const char* sep = i ? "/" : "";
    s1 += sep + std::to_string(got.step1_scalar);
    s2 += sep + std::to_string(got.step2_bilinear);
    s3 += sep + std::to_string(got.step3_scalar);
  }
  report(5, "exact operation counts", all,
         "step2_bilinear " + s2 + ", step1_scalar " + s1 + " = 2n(2n+g-1), step3_scalar " + s3 + " = (2n-1)(2n+g-1)");
}

void c6(const std::map<std::string, CompiledInstance>& ci) {
  bool all = true;
  std::string detail;
  for (const char* n : kNames) {
    const auto& c = ci.at(n);
    const OpReport r = multiply(c, std::vector<Bits>(c.spec.n, 1), std::vector<Bits>(c.spec.n, 1)).report;
    const double b = total_bound(c.spec.n, c.spec.genus(), c.r);
    all = all && static_cast<double>(r.total()) <= b;
    detail += std::string(detail.empty() ? "" : ", ") + n + " " + std::to_string(r.total()) + " <= " +
              std::to_string(static_cast<long long>(b));
  }
  report(6, "total multiplications within the aggregate bound", all, detail);
}

void c7() {
  const InstanceSpec f16 = read_instance(testing::instance_path("f16_13"));
  const bool q16 = check_total_split(f16.curve, f16.Q.residue().modulus());
  const InstanceSpec f2 = read_instance(testing::instance_path("f2_5"));
  const auto found = split_search(f2.curve, 5, 1, 0);
  const Poly target(FieldSpec::gf2(), {1, 0, 0, 1, 0, 1});
  const bool hit = std::find(found.begin(), found.end(), target) != found.end();
  report(7, "splitting criterion", q16 && hit,
         std::string("F16 degree-13 place ") + (q16 ? "splits" : "does not split") + "; degree-5 scan over F2 found " +
             std::to_string(found.size()) + " polynomial(s), " + (hit ? "including" : "missing") + " x^5 + x^3 + 1");
}

void c8(const std::map<std::string, CompiledInstance>& ci) {
  std::uint64_t cases = 0, bad = 0;
  std::mt19937_64 rng(8);

  // kernels against the schoolbook product
  const FieldSpec F2 = FieldSpec::gf2(), F4 = FieldSpec::gf4();
  for (const Poly& m : {Poly(F2, {1, 1, 1}), Poly(F4, {2, 1, 1}), Poly(F4, {3, 1, 1})}) {
    const ExtSpecPtr k = make_ext(m);
    const unsigned q = k->base().order();
    for (unsigned a = 0; a < q * q; ++a)
      for (unsigned b = 0; b < q * q; ++b) {
        const ExtElement x(k, {Bits(a % q), Bits(a / q)}), y(k, {Bits(b % q), Bits(b / q)});
        BilinearCounter c;
        ++cases;
        bad += !(mul_d2(x, y, c) == ext_mul_schoolbook(x, y)) || c.bilinear_mults != 3;
      }
  }
  const ExtSpecPtr k4 = make_ext(Poly(F2, {1, 0, 0, 1, 1}));
  for (int i = 0; i < 10000; ++i) {
    const ExtElement x = from_coords(k4, random_element(rng, F2, 4)), y = from_coords(k4, random_element(rng, F2, 4));
    BilinearCounter c;
    ++cases;
    bad += !(mul_d4(x, y, c) == ext_mul_schoolbook(x, y)) || c.bilinear_mults != 9;
  }

  // commutativity, identity and absorbing laws through the asymmetric embeddings
  for (const char* n : kNames) {
    const auto& c = ci.at(n);
    std::vector<Bits> one(c.spec.n, 0), zero(c.spec.n, 0);
    one[0] = 1;
    for (int i = 0; i < 300; ++i) {
      const auto x = random_element(rng, c.spec.field, c.spec.n), y = random_element(rng, c.spec.field, c.spec.n);
      cases += 3;
      bad += multiply(c, x, y).z != multiply(c, y, x).z;
      bad += multiply(c, x, one).z != x;
      bad += multiply(c, x, zero).z != zero;
    }
  }

  // branch series at the infinite places
  for (const char* n : {"f4_5", "f2_5"}) {
    const CurveModel& curve = ci.at(n).spec.curve;
    const FieldSpec& f = curve.base();
    for (Bits y0 : {Bits{0}, Bits{1}}) {
      const std::size_t prec = 64;
      const auto y = infinite_branch_series(curve, y0, prec);
      const auto cs = rhs_series_at_infinity(curve, prec);
      for (std::size_t k = 0; k < prec; ++k) {
        Bits sq = 0;
        for (std::size_t i = 0; i <= k; ++i) sq ^= f.mul(y[i], y[k - i]);
        ++cases;
        bad += (sq ^ y[k] ^ cs[k]) != 0;
      }
    }
  }
  report(8, "property suites", bad == 0,
         std::to_string(cases - bad) + "/" + std::to_string(cases) +
             " cases (kernels vs schoolbook, commutativity, identity, absorbing, series residual)");
}

}  // namespace

int main() {
  try {
    const auto ci = load_all();
    c1(ci);
    c2(ci);
    c3(ci);
    c4(ci);
    c5(ci);
    c6(ci);
    c7();
    c8(ci);
  } catch (const std::exception& e) {
    std::printf("[FAIL] setup: %s\n", e.what());
    return 1;
  }
  std::printf("%s: %d criterion line(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
