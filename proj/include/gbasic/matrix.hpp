#ifndef GBASIC_MATRIX_HPP
#define GBASIC_MATRIX_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbasic/scalar.hpp"

namespace gbasic {

/// Dense matrix over an exact field. Empty shapes (0 rows or 0 cols) are
/// legal and have rank 0.
class Matrix {
 public:
  Matrix(int rows, int cols, const Field& field);

  static Matrix identity(int n, const Field& field);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          const Field& field);
  static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols,
                             const Field& field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j);
  const Scalar& at(int i, int j) const;

  std::vector<Scalar> row(int i) const;
  std::vector<Scalar> column(int j) const;

  Matrix transpose() const;

  /// [this | right]; row counts must agree.
  Matrix augmented(const Matrix& right) const;

  /// Horizontal extension by one column.
  Matrix with_column(std::span<const Scalar> v) const;

  Matrix submatrix(const std::vector<int>& row_idx,
                   const std::vector<int>& col_idx) const;

  Matrix operator*(const Matrix& rhs) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  int rows_;
  int cols_;
  Field field_;
  std::vector<Scalar> data_;  // row-major
};

/// Exact rank by fraction-free (Bareiss) elimination. Over Q each row is
/// first cleared to integers, so all intermediate values stay integral.
int rank(const Matrix& m);

/// Determinant of a square matrix, by the same fraction-free scheme.
Scalar det(const Matrix& m);

/// Reduced row echelon form via Gauss-Jordan (a deliberately separate
/// elimination path from rank()). Pivot column indices are reported
/// through `pivot_cols` when given.
Matrix rref(const Matrix& m, std::vector<int>* pivot_cols = nullptr);

/// Basis of the right null space {x : Mx = 0}, one vector per free column.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// One solution of Mx = b (free variables set to zero), or nothing if the
/// system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         std::span<const Scalar> b);

/// Whether v lies in the span of the columns of m.
bool in_column_span(const Matrix& m, std::span<const Scalar> v);

}  // namespace gbasic

#endif
