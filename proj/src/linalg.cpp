#include "curvemul/linalg.hpp"

#include <utility>

#include "curvemul/errors.hpp"

namespace curvemul {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Bits> entries)
    : field_(field), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw UsageError("Matrix: entry count differs from rows*cols");
  for (Bits b : e_)
    if (!field_.contains(b)) throw UsageError("Matrix: entry outside the field");
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Bits v) {
  if (r >= rows_ || c >= cols_) throw UsageError("Matrix::set: index out of range");
  if (!field_.contains(v)) throw UsageError("Matrix::set: value outside the field");
  e_[r * cols_ + c] = v;
}

Matrix Matrix::top_rows(std::size_t count) const {
  if (count > rows_) throw UsageError("Matrix::top_rows: more rows requested than present");
  return Matrix(field_, count, cols_, std::vector<Bits>(e_.begin(), e_.begin() + count * cols_));
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j] >= cols_) throw UsageError("Matrix::select_columns: column out of range");
      out.e_[r * columns.size() + j] = at(r, columns[j]);
    }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()) || a.cols() != b.rows()) throw UsageError("mat_mul: incompatible operands");
  const FieldSpec& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Bits acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc ^= f.mul(a.at(i, k), b.at(k, j));
      out.set(i, j, acc);
    }
  return out;
}

namespace {

// Reduces work (rows x width) to row-echelon form in place, optionally applying the same
// row operations to aug; returns the rank. Pivot = first nonzero entry in the column.
std::size_t eliminate(const FieldSpec& f, std::vector<Bits>& work, std::size_t rows, std::size_t cols,
                      std::vector<Bits>* aug, std::size_t aug_cols, bool reduce_above) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && work[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(work[p * cols + j], work[rank * cols + j]);
      if (aug)
        for (std::size_t j = 0; j < aug_cols; ++j) std::swap((*aug)[p * aug_cols + j], (*aug)[rank * aug_cols + j]);
    }
    const Bits pinv = f.inv(work[rank * cols + c]);
    for (std::size_t j = 0; j < cols; ++j) work[rank * cols + j] = f.mul(work[rank * cols + j], pinv);
    if (aug)
      for (std::size_t j = 0; j < aug_cols; ++j) (*aug)[rank * aug_cols + j] = f.mul((*aug)[rank * aug_cols + j], pinv);
    for (std::size_t r = reduce_above ? 0 : rank + 1; r < rows; ++r) {
      if (r == rank) continue;
      const Bits factor = work[r * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) work[r * cols + j] ^= f.mul(factor, work[rank * cols + j]);
      if (aug)
        for (std::size_t j = 0; j < aug_cols; ++j) (*aug)[r * aug_cols + j] ^= f.mul(factor, (*aug)[rank * aug_cols + j]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  std::vector<Bits> work(m.entries().begin(), m.entries().end());
  return eliminate(m.field(), work, m.rows(), m.cols(), nullptr, 0, false);
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("invert: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Bits> work(m.entries().begin(), m.entries().end());
  Matrix id = Matrix::identity(m.field(), n);
  std::vector<Bits> aug(id.entries().begin(), id.entries().end());
  if (eliminate(m.field(), work, n, n, &aug, n, true) != n) throw SetupError("invert: matrix is singular");
  return Matrix(m.field(), n, n, std::move(aug));
}

std::vector<Bits> mat_vec(const Matrix& m, std::span<const Bits> v, CountingContext& ctx, bool skip_zero,
                          simd::Backend backend) {
  if (v.size() != m.cols()) throw UsageError("mat_vec: dimension mismatch");
  const FieldSpec& f = m.field();
  std::vector<Bits> out(m.rows(), 0);
  if (!skip_zero) {
    const simd::Kernels& k = simd::kernels(backend);
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = k.dot(f, m.row(r), v);
    ctx.scalar_mults += static_cast<std::uint64_t>(m.rows()) * m.cols();
    return out;
  }
  std::size_t used = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    ++used;
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] ^= f.mul(m.at(r, j), v[j]);
  }
  ctx.scalar_mults += static_cast<std::uint64_t>(m.rows()) * used;
  return out;
}

std::vector<Bits> mat_vec_partial(const Matrix& m, std::span<const Bits> v, std::size_t rows_needed,
                                  CountingContext& ctx, simd::Backend backend) {
  if (v.size() != m.cols()) throw UsageError("mat_vec_partial: dimension mismatch");
  if (rows_needed > m.rows()) throw UsageError("mat_vec_partial: more rows requested than present");
  const simd::Kernels& k = simd::kernels(backend);
  std::vector<Bits> out(rows_needed, 0);
  for (std::size_t r = 0; r < rows_needed; ++r) out[r] = k.dot(m.field(), m.row(r), v);
  ctx.scalar_mults += static_cast<std::uint64_t>(rows_needed) * m.cols();
  return out;
}

}  // namespace curvemul
