#include "gbasic/matrix.hpp"

#include <algorithm>
#include <utility>

namespace gbasic {

Matrix::Matrix(int rows, int cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field) {
  if (rows < 0 || cols < 0) throw dimension_mismatch("negative matrix shape");
  data_.assign(static_cast<std::size_t>(rows) * cols, field.zero());
}

Matrix Matrix::identity(int n, const Field& field) {
  Matrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         const Field& field) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c, field);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw dimension_mismatch("ragged row lengths");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j].field() != field)
        throw field_mismatch("matrix entry over the wrong field");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>>& cols,
                            const Field& field) {
  std::vector<std::vector<Scalar>> rows;
  if (!cols.empty()) {
    std::size_t r = cols[0].size();
    rows.assign(r, std::vector<Scalar>());
    for (const auto& col : cols) {
      if (col.size() != r) throw dimension_mismatch("ragged column lengths");
      for (std::size_t i = 0; i < r; ++i) rows[i].push_back(col[i]);
    }
  }
  return from_rows(rows, field);
}

Scalar& Matrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw dimension_mismatch("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

const Scalar& Matrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw dimension_mismatch("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

std::vector<Scalar> Matrix::row(int i) const {
  std::vector<Scalar> out;
  out.reserve(cols_);
  for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

std::vector<Scalar> Matrix::column(int j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::augmented(const Matrix& right) const {
  if (rows_ != right.rows_)
    throw dimension_mismatch("augmenting matrices with different row counts");
  if (field_ != right.field_)
    throw field_mismatch("augmenting matrices over different fields");
  Matrix out(rows_, cols_ + right.cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < right.cols_; ++j)
      out.at(i, cols_ + j) = right.at(i, j);
  }
  return out;
}

Matrix Matrix::with_column(std::span<const Scalar> v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw dimension_mismatch("appended column has wrong length");
  Matrix out(rows_, cols_ + 1, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    out.at(i, cols_) = v[static_cast<std::size_t>(i)];
  }
  return out;
}

Matrix Matrix::submatrix(const std::vector<int>& row_idx,
                         const std::vector<int>& col_idx) const {
  Matrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()),
             field_);
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) =
          at(row_idx[i], col_idx[j]);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw dimension_mismatch("matrix product shape mismatch");
  if (field_ != rhs.field_)
    throw field_mismatch("matrix product over different fields");
  Matrix out(rows_, rhs.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw dimension_mismatch("vector length does not match column count");
  std::vector<Scalar> out(static_cast<std::size_t>(rows_), field_.zero());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out[static_cast<std::size_t>(i)] +=
          at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_ == rhs.field_ &&
         data_ == rhs.data_;
}

std::string Matrix::str() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : " ";
    out += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
    out += i + 1 == rows_ ? "]" : "\n";
  }
  return rows_ == 0 ? "[]" : out;
}

namespace {

// Multiplies each rational row by the lcm of its denominators, so the
// Bareiss recurrence divides integers exactly. No-op over F_p.
void integerize_rows(std::vector<std::vector<Scalar>>& a) {
  for (auto& row : a) {
    if (row.empty() || row[0].is_modular()) return;
    mpz_class l = 1;
    for (const Scalar& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                        x.rational_value().get_den().get_mpz_t());
    if (l == 1) continue;
    Scalar s = Scalar::from_mpq(mpq_class(l));
    for (Scalar& x : row) x *= s;
  }
}

// Bareiss elimination over the scalar field. Returns the rank; if sign_out
// is given the matrix is treated as square and the signed last pivot
// (the determinant) is stored there.
int bareiss(std::vector<std::vector<Scalar>> a, const Field& field,
            Scalar* det_out) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  integerize_rows(a);
  Scalar prev = field.one();
  bool negate = false;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      if (det_out) {
        *det_out = field.zero();
        return r;
      }
      continue;
    }
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      negate = !negate;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = field.zero();
    }
    prev = a[r][c];
    ++r;
  }
  if (det_out) {
    if (r < rows) {
      *det_out = field.zero();
    } else {
      *det_out = negate ? -prev : prev;
    }
  }
  return r;
}

std::vector<std::vector<Scalar>> to_rows(const Matrix& m) {
  std::vector<std::vector<Scalar>> a;
  a.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  return a;
}

}  // namespace

int rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(to_rows(m), m.field(), nullptr);
}

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols())
    throw dimension_mismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return m.field().one();
  Scalar d = m.field().zero();
  // Bareiss on the raw (non-integerized) rows: exact division still holds
  // over a field, and the result is the honest determinant.
  std::vector<std::vector<Scalar>> a = to_rows(m);
  const Field& field = m.field();
  Scalar prev = field.one();
  bool negate = false;
  int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (!a[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return field.zero();
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      negate = !negate;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j)
        a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
      a[i][c] = field.zero();
    }
    prev = a[c][c];
  }
  d = negate ? -prev : prev;
  return d;
}

Matrix rref(const Matrix& m, std::vector<int>* pivot_cols) {
  Matrix a = m;
  if (pivot_cols) pivot_cols->clear();
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return a;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  std::vector<int> pivots;
  Matrix r = rref(m, &pivots);
  const Field& field = m.field();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Scalar>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(m.cols()), field.zero());
    v[static_cast<std::size_t>(f)] = field.one();
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[static_cast<std::size_t>(pivots[k])] =
          -r.at(static_cast<int>(k), f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         std::span<const Scalar> b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw dimension_mismatch("right-hand side has wrong length");
  std::vector<int> pivots;
  Matrix r = rref(m.with_column(b), &pivots);
  const Field& field = m.field();
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(static_cast<std::size_t>(m.cols()), field.zero());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[static_cast<std::size_t>(pivots[k])] =
        r.at(static_cast<int>(k), m.cols());
  return x;
}

bool in_column_span(const Matrix& m, std::span<const Scalar> v) {
  return solve(m, v).has_value();
}

}  // namespace gbasic
