#include "curvemul/engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "curvemul/errors.hpp"

namespace curvemul {

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

bool over(const Poly& p, const FieldSpec& f) { return p.field() == f; }

bool irreducible_safe(const Poly& p) {
  if (!p.is_monic() || p.degree().value_or(0) == 0) return false;
  return is_irreducible(p);
}

// (x, y) and (x', y') describe the same place when one pair is a Frobenius conjugate of the other.
bool same_affine_place(const AffinePlace& a, const AffinePlace& b) {
  if (!(a.residue() == b.residue())) return false;
  for (std::size_t i = 0; i < a.degree(); ++i)
    if (ext_frobenius(a.x_img, i) == b.x_img && ext_frobenius(a.y_img, i) == b.y_img) return true;
  return false;
}

Check make(std::string name, const std::vector<std::string>& bad, std::string ok_detail) {
  if (bad.empty()) return {std::move(name), true, std::move(ok_detail)};
  return {std::move(name), false, "failed for " + join(bad)};
}

}  // namespace

std::vector<Check> validation_checks(const InstanceSpec& s) {
  std::vector<Check> out;
  const FieldSpec& f = s.field;
  const std::size_t n = s.n, g = s.genus(), N = s.dim();

  out.push_back({"curve field", s.curve.base() == f, "curve coefficients over the declared field"});
  out.push_back({"basis length", s.basis.size() == N,
                 "basis has " + std::to_string(s.basis.size()) + " functions, 2n+g-1 = " + std::to_string(N)});
  {
    std::vector<std::string> bad;
    for (std::size_t j = 0; j < s.basis.size(); ++j)
      if (!over(s.basis[j].den, f)) bad.push_back("f_" + std::to_string(j + 1));
    out.push_back(make("basis field", bad, "all basis polynomials over the declared field"));
  }
  {
    const bool ok = !s.basis.empty() && s.basis[0].ay.is_zero() && s.basis[0].b == s.basis[0].den;
    out.push_back({"f_1 = 1", ok, ok ? "first basis function is the constant 1" : "first basis function is not 1"});
  }

  out.push_back({"Q degree", s.Q.degree() == n,
                 "deg Q = " + std::to_string(s.Q.degree()) + ", n = " + std::to_string(n)});
  out.push_back({"Q on curve", on_curve_check(s.Q, s.curve), "y(Q)^2 + y(Q) = u(x(Q))"});
  out.push_back({"Q generates residue field", generates_residue_field(s.Q), "x(Q), y(Q) generate F_(q^n)"});

  const std::size_t dd = n + g - 1;
  for (const auto* d : {&s.d1, &s.d2}) {
    const std::string nm = d == &s.d1 ? "D1" : "D2";
    out.push_back({nm + " degree", over(*d, f) && d->degree() == dd,
                   "deg " + nm + " = " + std::to_string(d->degree().value_or(0)) + ", n+g-1 = " + std::to_string(dd)});
    out.push_back({nm + " irreducible", over(*d, f) && irreducible_safe(*d), nm + " monic and irreducible"});
  }
  out.push_back({"D1 != D2", !(s.d1 == s.d2), "divisor places are distinct"});
  {
    bool ok = true;
    for (const auto* d : {&s.d1, &s.d2})
      if (over(*d, f) && !d->is_zero()) ok = ok && poly_gcd(s.Q.residue().modulus(), *d).degree() == 0u;
    out.push_back({"Q outside supp D1, D2", ok, "Q modulus coprime to D1 and D2"});
  }

  std::vector<std::string> off_curve, no_gen, support, bad_degree, bad_inf;
  for (const auto& p : s.candidates) {
    const std::string& lbl = place_label(p);
    const std::size_t deg = place_degree(p);
    if (deg != 1 && deg != 2 && deg != 4) bad_degree.push_back(lbl);
    if (const auto* a = std::get_if<AffinePlace>(&p)) {
      if (!on_curve_check(*a, s.curve)) off_curve.push_back(lbl);
      if (!generates_residue_field(*a)) no_gen.push_back(lbl);
      if (a->residue().base() == f &&
          (poly_eval_ext(s.d1, a->x_img).is_zero() || poly_eval_ext(s.d2, a->x_img).is_zero()))
        support.push_back(lbl);
    } else {
      const auto& inf = std::get<InfinitePlace>(p);
      try {
        if (inf.branch_y0 > 1) throw UsageError("branch");
        infinite_branch_series(s.curve, inf.branch_y0, 1);
      } catch (const Error&) {
        bad_inf.push_back(lbl);
      }
    }
  }
  out.push_back(make("places on curve", off_curve, "every affine candidate satisfies the curve equation"));
  out.push_back(make("places generate residue fields", no_gen, "x and y images generate each residue field"));
  out.push_back(make("places outside supp D1, D2", support, "no candidate x-image is a root of D1 or D2"));
  out.push_back(make("place degrees supported", bad_degree, "candidate degrees in {1, 2, 4}"));
  out.push_back(make("infinite places unramified", bad_inf, "two degree-1 branches over x = infinity"));

  std::vector<std::string> dups;
  for (std::size_t i = 0; i < s.candidates.size(); ++i)
    for (std::size_t j = i + 1; j < s.candidates.size(); ++j) {
      const Place& a = s.candidates[i];
      const Place& b = s.candidates[j];
      bool same = false;
      if (a.index() != b.index()) continue;
      if (const auto* pa = std::get_if<AffinePlace>(&a))
        same = same_affine_place(*pa, std::get<AffinePlace>(b));
      else
        same = std::get<InfinitePlace>(a).branch_y0 == std::get<InfinitePlace>(b).branch_y0;
      if (same) dups.push_back(place_label(a) + "=" + place_label(b));
    }
  out.push_back(make("places distinct", dups, "no candidate place is listed twice"));
  return out;
}

void validate(const InstanceSpec& spec) {
  for (const auto& c : validation_checks(spec))
    if (!c.pass) throw InstanceError("instance invariant '" + c.name + "' violated: " + c.detail);
}

std::vector<Bits> good_basis_target(const InstanceSpec& spec, std::size_t j) {
  const std::size_t n = spec.n;
  std::vector<Bits> e(n, 0);
  if (j >= 1 && j <= n)
    e[j - 1] = 1;
  else if (j > n && j <= 2 * n - 1)
    e[j - n] = 1;
  return e;
}

std::vector<Check> verify_good_basis(const InstanceSpec& spec) {
  std::vector<Check> out;
  const std::size_t n = spec.n;
  for (std::size_t j = 1; j <= spec.basis.size(); ++j) {
    const std::string name = "f_" + std::to_string(j) + "(Q)";
    std::string want;
    if (j <= n)
      want = "alpha^" + std::to_string(j - 1);
    else if (j <= 2 * n - 1)
      want = "alpha^" + std::to_string(j - n);
    else
      want = "0";
    try {
      const bool ok = to_coords(eval_at_Q(spec.basis[j - 1], spec.Q)) == good_basis_target(spec, j);
      out.push_back({name, ok, ok ? "= " + want : "expected " + want});
    } catch (const Error& e) {
      out.push_back({name, false, e.what()});
    }
  }
  return out;
}

std::vector<Check> verify_good_basis(const CompiledInstance& ci) { return verify_good_basis(ci.spec); }

Matrix evaluation_matrix(const InstanceSpec& spec, std::span<const Place> places) {
  std::size_t rows = 0;
  for (const auto& p : places) rows += place_degree(p);
  const std::size_t cols = spec.basis.size();
  std::vector<Bits> e(rows * cols, 0);
  std::size_t r0 = 0;
  for (const auto& p : places) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::vector<Bits> v = eval_place(spec.basis[j], spec.curve, p);
      for (std::size_t i = 0; i < v.size(); ++i) e[(r0 + i) * cols + j] = v[i];
    }
    r0 += place_degree(p);
  }
  return Matrix(spec.field, rows, cols, std::move(e));
}

namespace {

struct Profile {
  std::vector<std::size_t> count;  // per entry of degrees
  std::uint64_t cost;
};

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

constexpr std::size_t kMaxSelections = 200000;

}  // namespace

CompiledInstance compile(const InstanceSpec& spec) {
  validate(spec);
  for (const auto& c : verify_good_basis(spec))
    if (!c.pass) throw SetupError("good basis check failed at " + c.name + ": " + c.detail);

  const std::size_t N = spec.dim();
  const std::size_t n = spec.n;

  // Candidates bucketed by degree, in listed order.
  std::vector<std::size_t> degrees;
  for (const auto& p : spec.candidates) degrees.push_back(place_degree(p));
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  std::vector<std::vector<std::size_t>> bucket(degrees.size());
  for (std::size_t i = 0; i < spec.candidates.size(); ++i) {
    const auto it = std::find(degrees.begin(), degrees.end(), place_degree(spec.candidates[i]));
    bucket[it - degrees.begin()].push_back(i);
  }

  // Per-degree place counts reaching N, cheapest first; ties prefer more low-degree places.
  std::vector<Profile> profiles;
  std::vector<std::size_t> cur(degrees.size(), 0);
  auto enumerate = [&](auto&& self, std::size_t level, std::size_t sum) -> void {
    if (level == degrees.size()) {
      if (sum != N) return;
      std::uint64_t cost = 0;
      for (std::size_t i = 0; i < degrees.size(); ++i) cost += cur[i] * mu(degrees[i]);
      profiles.push_back({cur, cost});
      return;
    }
    for (std::size_t k = 0; k <= bucket[level].size() && sum + k * degrees[level] <= N; ++k) {
      cur[level] = k;
      self(self, level + 1, sum + k * degrees[level]);
    }
    cur[level] = 0;
  };
  enumerate(enumerate, 0, 0);
  if (profiles.empty()) throw SetupError("no subset of candidate places has total degree 2n+g-1");
  std::stable_sort(profiles.begin(), profiles.end(), [](const Profile& a, const Profile& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.count > b.count;
  });

  std::size_t attempts = 0;
  for (const auto& prof : profiles) {
    std::vector<std::vector<std::size_t>> comb(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      comb[i].resize(prof.count[i]);
      std::iota(comb[i].begin(), comb[i].end(), std::size_t{0});
    }
    while (true) {
      std::vector<std::size_t> source;
      std::vector<Place> chosen;
      for (std::size_t i = 0; i < degrees.size(); ++i)
        for (std::size_t c : comb[i]) {
          source.push_back(bucket[i][c]);
          chosen.push_back(spec.candidates[bucket[i][c]]);
        }
      Matrix T = evaluation_matrix(spec, chosen);
      const std::size_t rk = rank(T);
      if (rk == N) {
        const Matrix Tinv = invert(T);
        std::vector<std::size_t> xc(n), yc;
        std::iota(xc.begin(), xc.end(), std::size_t{0});
        yc.push_back(0);
        for (std::size_t j = n; j <= 2 * n - 2; ++j) yc.push_back(j);

        std::vector<RowGroup> groups;
        KernelPlan plan;
        std::size_t off = 0, rational = 0, r = 1;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          const std::size_t d = place_degree(chosen[i]);
          groups.push_back({i, off, d});
          const auto* a = std::get_if<AffinePlace>(&chosen[i]);
          plan.places.push_back({kernel_for_degree(d), d > 1 && a ? a->residue_ptr() : nullptr});
          if (d == 1) rational += 1;
          r = std::max(r, d);
          off += d;
        }
        Matrix Tx = T.select_columns(xc), Ty = T.select_columns(yc);
        Matrix top = Tinv.top_rows(2 * n - 1);
        return CompiledInstance{spec,        std::move(chosen), std::move(source), std::move(T),
                                std::move(top), std::move(Tx),  std::move(Ty),     rk,
                                rational,    std::move(groups), std::move(plan),
                                N > 2 * n + 2 * static_cast<std::size_t>(spec.genus()) - 2, r};
      }
      if (++attempts >= kMaxSelections) throw SetupError("place selection gave up after " + std::to_string(attempts) + " singular choices");
      // Odometer: the highest-degree combination advances first.
      std::size_t lvl = degrees.size();
      bool advanced = false;
      while (lvl-- > 0) {
        if (next_combination(comb[lvl], bucket[lvl].size())) {
          advanced = true;
          break;
        }
        std::iota(comb[lvl].begin(), comb[lvl].end(), std::size_t{0});
      }
      if (!advanced) break;
    }
  }
  throw SetupError("no selection of candidate places gives an invertible T");
}

std::vector<Bits> embed_x(std::span<const Bits> x, std::size_t n, unsigned g) {
  if (x.size() != n) throw UsageError("embed_x: expected " + std::to_string(n) + " coordinates");
  std::vector<Bits> v(2 * n + g - 1, 0);
  std::copy(x.begin(), x.end(), v.begin());
  return v;
}

std::vector<Bits> embed_y(std::span<const Bits> y, std::size_t n, unsigned g) {
  if (y.size() != n) throw UsageError("embed_y: expected " + std::to_string(n) + " coordinates");
  std::vector<Bits> v(2 * n + g - 1, 0);
  v[0] = y[0];
  for (std::size_t j = 1; j < n; ++j) v[n + j - 1] = y[j];
  return v;
}

MulResult multiply(const CompiledInstance& ci, std::span<const Bits> x, std::span<const Bits> y,
                   simd::Backend backend) {
  const std::size_t n = ci.spec.n;
  const FieldSpec& f = ci.spec.field;
  if (x.size() != n || y.size() != n) throw UsageError("multiply: operands must have n = " + std::to_string(n) + " coordinates");
  for (std::size_t i = 0; i < n; ++i)
    if (!f.contains(x[i]) || !f.contains(y[i])) throw UsageError("multiply: coordinate outside the base field");

  MulResult res;
  CountingContext step1, step3;
  BilinearCounter step2;

  // Step 1: T applied to the embeddings; only the structurally nonzero columns are touched.
  const std::vector<Bits> zv = mat_vec(ci.Tx, x, step1, false, backend);
  const std::vector<Bits> tv = mat_vec(ci.Ty, y, step1, false, backend);

  // Step 2: Hadamard product in the residue fields.
  std::vector<Bits> u(zv.size(), 0);
  const std::size_t r1 = ci.rational_rows;
  simd::kernels(backend).mul(f, std::span(zv).first(r1), std::span(tv).first(r1), std::span(u).first(r1));
  step2.bilinear_mults += r1;
  for (std::size_t i = 0; i < ci.groups.size(); ++i) {
    const RowGroup& grp = ci.groups[i];
    if (grp.width == 1) continue;
    const PlaceKernel& pk = ci.plan.places[i];
    kernel_mul(pk.id, f, pk.residue->modulus(), std::span(zv).subspan(grp.offset, grp.width),
               std::span(tv).subspan(grp.offset, grp.width), std::span(u).subspan(grp.offset, grp.width), step2);
  }

  // Step 3: first 2n-1 coefficients of the product in the basis.
  const std::vector<Bits> w = mat_vec_partial(ci.T_inv_top, u, 2 * n - 1, step3, backend);

  // Step 4: evaluation at Q through the good-basis images; additions only.
  const std::uint64_t before = step1.scalar_mults + step3.scalar_mults + step2.bilinear_mults;
  res.z.assign(n, 0);
  res.z[0] = w[0];
  for (std::size_t j = 1; j < n; ++j) res.z[j] = w[j] ^ w[n + j - 1];
  if (step1.scalar_mults + step3.scalar_mults + step2.bilinear_mults != before)
    throw Error("multiply: recombination performed multiplications");

  res.report = {step1.scalar_mults, step2.bilinear_mults, step3.scalar_mults};
  return res;
}

std::vector<Bits> reference_mul(const Poly& qpoly, std::span<const Bits> x, std::span<const Bits> y) {
  const ExtSpecPtr spec = make_ext(qpoly);
  return to_coords(ext_mul_schoolbook(from_coords(spec, x), from_coords(spec, y)));
}

OpReport expected_report(const CompiledInstance& ci) {
  const std::uint64_t n = ci.spec.n, N = ci.spec.dim();
  return {2 * n * N, ci.plan.cost(), (2 * n - 1) * N};
}

double total_bound(std::size_t n, unsigned g, std::size_t r) {
  double best = 0;
  for (std::size_t i : {1, 2, 4})
    if (i <= r) best = std::max(best, static_cast<double>(mu(i)) / static_cast<double>(i));
  const double nn = static_cast<double>(n), gg = g;
  return 8 * nn * nn + nn * (4 * gg - 5) + (2 * nn + 2 * gg - 2 + static_cast<double>(r)) * best;
}

}  // namespace curvemul
