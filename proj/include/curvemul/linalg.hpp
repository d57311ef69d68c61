#pragma once

// Dense matrices over a binary field, with multiplication counting for the
// matrix-vector products of the evaluation and interpolation steps.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "curvemul/galois.hpp"
#include "curvemul/simd.hpp"

namespace curvemul {

/// Counts base-field products attributed to one algorithm step. Additions are never counted.
struct CountingContext {
  std::uint64_t scalar_mults = 0;
};

class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  /// entries are row-major; throws UsageError on a size mismatch or out-of-field entry.
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Bits> entries);

  static Matrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Bits at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Bits v);
  std::span<const Bits> row(std::size_t r) const { return {e_.data() + r * cols_, cols_}; }
  std::span<const Bits> entries() const { return e_; }

  /// Submatrix made of the first `count` rows.
  Matrix top_rows(std::size_t count) const;
  /// Submatrix keeping the given columns, in the given order.
  Matrix select_columns(std::span<const std::size_t> columns) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Bits> e_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Row-echelon rank; the input is not modified.
std::size_t rank(const Matrix& m);

/// Gauss-Jordan inverse. Non-square input is a UsageError; a singular matrix raises SetupError.
Matrix invert(const Matrix& m);

/// m * v. Adds rows * (#multiplied positions) to ctx: with skip_zero only the nonzero
/// entries of v are multiplied, otherwise all cols.
std::vector<Bits> mat_vec(const Matrix& m, std::span<const Bits> v, CountingContext& ctx, bool skip_zero,
                          simd::Backend backend = simd::preferred());

/// First rows_needed components of m * v; adds rows_needed * cols to ctx.
std::vector<Bits> mat_vec_partial(const Matrix& m, std::span<const Bits> v, std::size_t rows_needed,
                                  CountingContext& ctx, simd::Backend backend = simd::preferred());

}  // namespace curvemul
