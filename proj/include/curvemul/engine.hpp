#pragma once

// Setup and execution of the asymmetric interpolation multiplication in F_(q^n):
// evaluation of two embedded elements at places of the curve, a Hadamard product in
// the residue fields, interpolation by T^-1 and recombination by coordinate additions.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "curvemul/curve.hpp"
#include "curvemul/kernels.hpp"
#include "curvemul/linalg.hpp"
#include "curvemul/simd.hpp"

namespace curvemul {

struct InstanceSpec {
  std::string name;
  FieldSpec field;
  std::size_t n;
  CurveModel curve;
  AffinePlace Q;  // degree-n place; its residue field is F_(q^n) with alpha = x_img
  Poly d1;        // moduli of the divisor places, degree n+g-1
  Poly d2;
  /// f_1..f_n, then f_(n+1)..f_(2n-1), then the g functions vanishing at Q.
  std::vector<FunctionRep> basis;
  std::vector<Place> candidates;

  unsigned genus() const { return curve.genus; }
  /// 2n + g - 1
  std::size_t dim() const { return 2 * n + genus() - 1; }
};

/// One named pass/fail check with a human-readable detail.
struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

bool all_pass(const std::vector<Check>& checks);

/// Every instance invariant as a separate check, in a fixed order.
std::vector<Check> validation_checks(const InstanceSpec& spec);
/// Throws InstanceError naming the first failed invariant.
void validate(const InstanceSpec& spec);

/// Coordinates in F_(q^n) = F_q[alpha] expected for f_j(Q), j = 1..dim (1-based).
std::vector<Bits> good_basis_target(const InstanceSpec& spec, std::size_t j);

struct RowGroup {
  std::size_t place;   // index into CompiledInstance::selected
  std::size_t offset;  // first row of T
  std::size_t width;   // place degree
};

struct CompiledInstance {
  InstanceSpec spec;
  std::vector<Place> selected;     // degree-1 places first, then by increasing degree
  std::vector<std::size_t> source; // index of each selected place in spec.candidates
  Matrix T;
  Matrix T_inv_top;  // first 2n-1 rows of T^-1
  Matrix Tx;         // T restricted to the support of embed_x (columns 0..n-1)
  Matrix Ty;         // T restricted to the support of embed_y (columns 0, n..2n-2)
  std::size_t rank;
  std::size_t rational_rows;  // rows [0, rational_rows) belong to degree-1 places
  std::vector<RowGroup> groups;
  KernelPlan plan;
  /// sum_i i*N_i > 2n+2g-2 over the selected places; informational only.
  bool injectivity_advisory;
  /// Largest selected place degree.
  std::size_t r;
};

/// Good-basis check: f_j(Q) = alpha^(j-1) for j <= n, f_(n+j)(Q) = alpha^j for j < n, f_j(Q) = 0 beyond.
std::vector<Check> verify_good_basis(const InstanceSpec& spec);
std::vector<Check> verify_good_basis(const CompiledInstance& ci);

/// Validates, checks the basis, selects places and builds T and the top rows of T^-1.
/// Throws InstanceError for invalid data and SetupError when no selection gives full rank.
CompiledInstance compile(const InstanceSpec& spec);

/// Evaluation matrix of the basis at the given places, d rows per degree-d place.
Matrix evaluation_matrix(const InstanceSpec& spec, std::span<const Place> places);

std::vector<Bits> embed_x(std::span<const Bits> x, std::size_t n, unsigned g);
std::vector<Bits> embed_y(std::span<const Bits> y, std::size_t n, unsigned g);

struct OpReport {
  std::uint64_t step1_scalar = 0;
  std::uint64_t step2_bilinear = 0;
  std::uint64_t step3_scalar = 0;

  std::uint64_t total() const { return step1_scalar + step2_bilinear + step3_scalar; }
  friend bool operator==(const OpReport&, const OpReport&) = default;
};

struct MulResult {
  std::vector<Bits> z;
  OpReport report;
};

/// x * y for coordinate vectors of length n. Throws UsageError on a length mismatch.
MulResult multiply(const CompiledInstance& ci, std::span<const Bits> x, std::span<const Bits> y,
                   simd::Backend backend = simd::preferred());

/// Schoolbook product in F_q[t]/(qpoly).
std::vector<Bits> reference_mul(const Poly& qpoly, std::span<const Bits> x, std::span<const Bits> y);

/// Counts predicted for a compiled instance.
OpReport expected_report(const CompiledInstance& ci);

/// 8n^2 + n(4g-5) + (2n+2g-2+r) * max_(i<=r) mu(i)/i, the max over kernel degrees i in {1,2,4}.
double total_bound(std::size_t n, unsigned g, std::size_t r);

}  // namespace curvemul
