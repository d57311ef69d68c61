#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "curvemul/errors.hpp"
#include "curvemul/tools.hpp"

using namespace curvemul;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

simd::Backend pick_backend(const std::string& name) {
  if (name == "auto") return simd::preferred();
  for (simd::Backend b : {simd::Backend::scalar, simd::Backend::avx2, simd::Backend::neon})
    if (name == simd::backend_name(b)) {
      if (!simd::available(b)) throw UsageError("backend '" + name + "' is not available on this machine");
      return b;
    }
  throw UsageError("unknown backend '" + name + "' (expected auto, scalar, avx2 or neon)");
}

void print_report(const OpReport& r, const CompiledInstance& ci) {
  std::cout << "step1_scalar   " << r.step1_scalar << "\n"
            << "step2_bilinear " << r.step2_bilinear << "\n"
            << "step3_scalar   " << r.step3_scalar << "\n"
            << "total          " << r.total() << "\n"
            << "bound          " << static_cast<long long>(total_bound(ci.spec.n, ci.spec.genus(), ci.r)) << "\n";
}

int cmd_verify(const std::string& file, std::uint64_t spot) {
  const VerifyReport rep = verify(std::filesystem::path(file), spot, 1);
  for (const auto& c : rep.checks) std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
  std::cout << (rep.pass() ? "verify: PASS" : "verify: FAIL") << "\n";
  return rep.pass() ? kOk : kFail;
}

int cmd_mul(const std::string& file, const std::string& xs, const std::string& ys, const std::string& be,
            bool show_counts) {
  const CompiledInstance ci = compile(load_instance(file));
  const auto x = parse_element(xs, ci.spec.field, ci.spec.n);
  const auto y = parse_element(ys, ci.spec.field, ci.spec.n);
  const MulResult r = multiply(ci, x, y, pick_backend(be));
  std::cout << format_element(r.z) << "\n";
  if (show_counts) print_report(r.report, ci);
  return kOk;
}

int cmd_selftest(const std::string& file, std::uint64_t trials, std::uint64_t seed, const std::string& be) {
  const CompiledInstance ci = compile(load_instance(file));
  const simd::Backend backend = pick_backend(be);
  const Poly& qmod = ci.spec.Q.residue().modulus();
  const OpReport want = expected_report(ci);
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto x = random_element(rng, ci.spec.field, ci.spec.n);
    const auto y = random_element(rng, ci.spec.field, ci.spec.n);
    const MulResult r = multiply(ci, x, y, backend);
    const auto expect = reference_mul(qmod, x, y);
    if (r.z != expect || !(r.report == want)) {
      std::cout << "selftest: FAIL at trial " << i << "\n  x        " << format_element(x) << "\n  y        "
                << format_element(y) << "\n  expected " << format_element(expect) << "\n  got      "
                << format_element(r.z) << "\n";
      return kFail;
    }
  }
  std::cout << "selftest: PASS " << trials << " trials, seed " << seed << ", backend "
            << simd::backend_name(backend) << "\n";
  return kOk;
}

int cmd_bench(const std::string& file, std::uint64_t reps, unsigned threads, const std::string& be) {
  if (reps == 0 || threads == 0) throw UsageError("bench: --reps and --threads must be positive");
  const CompiledInstance ci = compile(load_instance(file));
  const simd::Backend backend = pick_backend(be);
  std::mt19937_64 rng(7);
  const auto x = random_element(rng, ci.spec.field, ci.spec.n);
  const auto y = random_element(rng, ci.spec.field, ci.spec.n);

  // Each thread times its own share; per-multiplication samples are pooled for the median.
  std::vector<std::vector<double>> samples(threads);
  std::vector<std::thread> pool;
  const auto wall0 = std::chrono::steady_clock::now();
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      const std::uint64_t mine = reps / threads + (t < reps % threads ? 1 : 0);
      samples[t].reserve(mine);
      for (std::uint64_t i = 0; i < mine; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const MulResult r = multiply(ci, x, y, backend);
        const auto t1 = std::chrono::steady_clock::now();
        if (r.z.empty()) std::abort();
        samples[t].push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
      }
    });
  for (auto& th : pool) th.join();
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  std::vector<double> all;
  for (auto& s : samples) all.insert(all.end(), s.begin(), s.end());
  std::nth_element(all.begin(), all.begin() + all.size() / 2, all.end());
  std::cout << "instance       " << ci.spec.name << "\n"
            << "backend        " << simd::backend_name(backend) << "\n"
            << "threads        " << threads << "\n"
            << "reps           " << reps << "\n"
            << "median_ns      " << static_cast<long long>(all[all.size() / 2]) << "\n"
            << "throughput/s   " << static_cast<long long>(static_cast<double>(reps) / wall) << "\n";
  print_report(multiply(ci, x, y, backend).report, ci);
  return kOk;
}

int cmd_counts(const std::string& file) {
  const CompiledInstance ci = compile(load_instance(file));
  std::string profile;
  for (const auto& p : ci.selected) profile += (profile.empty() ? "" : ",") + std::to_string(place_degree(p));
  std::cout << "n              " << ci.spec.n << "\n"
            << "g              " << ci.spec.genus() << "\n"
            << "place_degrees  " << profile << "\n";
  const std::vector<Bits> zero(ci.spec.n, 0);
  print_report(multiply(ci, zero, zero).report, ci);
  return kOk;
}

int cmd_split(const std::string& file, std::size_t degree, std::uint64_t trials, std::uint64_t seed) {
  const InstanceSpec spec = read_instance(file);
  const auto found = split_search(spec.curve, degree, trials, seed);
  for (const auto& p : found) std::cout << format_poly(p) << "\n";
  std::cout << "split-search: " << found.size() << " polynomial(s)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field multiplication by interpolation on algebraic curves"};
  app.require_subcommand(1);
  std::string file, xs, ys, backend = "auto";
  std::uint64_t trials = 1000, seed = 42, reps = 10000, spot = 64;
  std::size_t degree = 0;
  unsigned threads = 1;
  bool show_counts = false;

  auto* v = app.add_subcommand("verify", "Audit an instance file");
  v->add_option("file", file, "instance JSON")->required();
  v->add_option("--spot", spot, "random oracle spot checks");

  auto* m = app.add_subcommand("mul", "Multiply two elements");
  m->add_option("file", file, "instance JSON")->required();
  m->add_option("--x", xs, "first factor, comma-separated coordinates")->required();
  m->add_option("--y", ys, "second factor")->required();
  m->add_option("--backend", backend, "auto|scalar|avx2|neon");
  m->add_flag("--counts", show_counts, "also print the operation report");

  auto* s = app.add_subcommand("selftest", "Compare against the schoolbook oracle on random pairs");
  s->add_option("file", file, "instance JSON")->required();
  s->add_option("--trials", trials, "number of random pairs");
  s->add_option("--seed", seed, "generator seed");
  s->add_option("--backend", backend, "auto|scalar|avx2|neon");

  auto* b = app.add_subcommand("bench", "Time multiplications");
  b->add_option("file", file, "instance JSON")->required();
  b->add_option("--reps", reps, "number of multiplications");
  b->add_option("--threads", threads, "worker threads sharing one compiled instance");
  b->add_option("--backend", backend, "auto|scalar|avx2|neon");

  auto* c = app.add_subcommand("counts", "Print the per-step multiplication counts");
  c->add_option("file", file, "instance JSON")->required();

  auto* sp = app.add_subcommand("split-search", "Search irreducible polynomials whose place splits on the curve");
  sp->add_option("file", file, "instance JSON (its curve is used)")->required();
  sp->add_option("--degree", degree, "polynomial degree")->required();
  sp->add_option("--trials", trials, "random draws (ignored for exhaustive scans)");
  sp->add_option("--seed", seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*v) return cmd_verify(file, spot);
    if (*m) return cmd_mul(file, xs, ys, backend, show_counts);
    if (*s) return cmd_selftest(file, trials, seed, backend);
    if (*b) return cmd_bench(file, reps, threads, backend);
    if (*c) return cmd_counts(file);
    if (*sp) return cmd_split(file, degree, trials, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
