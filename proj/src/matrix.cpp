#include "posetcoh/matrix.hpp"

#include <algorithm>

namespace posetcoh {

Matrix::Matrix(Field field, int rows, int cols) : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw internal_error("negative matrix shape");
  entries_.assign(static_cast<size_t>(rows) * cols, mpq_class(0));
}

Matrix Matrix::identity(Field field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<mpq_class>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw input_error("ShapeMismatch", "ragged rows in matrix literal");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw internal_error("vstack of no blocks");
  int rows = 0;
  for (const Matrix& b : blocks) {
    rows += b.rows();
    if (b.cols() != blocks[0].cols() || b.field() != blocks[0].field())
      throw input_error("ShapeMismatch", "vstack blocks disagree");
  }
  Matrix m(blocks[0].field(), rows, blocks[0].cols());
  int r0 = 0;
  for (const Matrix& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.set(r0 + i, j, b.at(i, j));
    r0 += b.rows();
  }
  return m;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw internal_error("hstack of no blocks");
  int cols = 0;
  for (const Matrix& b : blocks) {
    cols += b.cols();
    if (b.rows() != blocks[0].rows() || b.field() != blocks[0].field())
      throw input_error("ShapeMismatch", "hstack blocks disagree");
  }
  Matrix m(blocks[0].field(), blocks[0].rows(), cols);
  int c0 = 0;
  for (const Matrix& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.set(i, c0 + j, b.at(i, j));
    c0 += b.cols();
  }
  return m;
}

Matrix Matrix::block_diagonal(Field field, const std::vector<Matrix>& blocks) {
  int rows = 0, cols = 0;
  for (const Matrix& b : blocks) {
    if (b.field() != field) throw input_error("FieldMismatch", "block field disagrees");
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(field, rows, cols);
  int r0 = 0, c0 = 0;
  for (const Matrix& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.set(r0 + i, c0 + j, b.at(i, j));
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

void Matrix::set(int r, int c, const mpq_class& v) {
  entries_[static_cast<size_t>(r) * cols_ + c] = field_.canonical(v);
}

void Matrix::check_same_field(const Matrix& other) const {
  if (field_ != other.field_)
    throw input_error("FieldMismatch", field_.tag() + " vs " + other.field_.tag());
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  check_same_field(rhs);
  if (cols_ != rhs.rows_) throw input_error("ShapeMismatch", "matrix product shape");
  Matrix out(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpq_class& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const mpq_class& b = rhs.at(k, j);
        if (b == 0) continue;
        out.set(i, j, out.at(i, j) + a * b);
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  check_same_field(rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw input_error("ShapeMismatch", "matrix sum shape");
  Matrix out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) + rhs.at(i, j));
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const {
  Matrix out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, -at(i, j));
  return out;
}

Matrix Matrix::scaled(const mpq_class& c) const {
  Matrix out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, c * at(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

Matrix Matrix::row_slice(int begin, int end) const {
  Matrix out(field_, end - begin, cols_);
  for (int i = begin; i < end; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i - begin, j, at(i, j));
  return out;
}

Matrix Matrix::col_slice(int begin, int end) const {
  Matrix out(field_, rows_, end - begin);
  for (int i = 0; i < rows_; ++i)
    for (int j = begin; j < end; ++j) out.set(i, j - begin, at(i, j));
  return out;
}

bool Matrix::is_zero() const {
  for (const mpq_class& e : entries_)
    if (e != 0) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}, 0};
  Matrix& a = res.reduced;
  const Field& f = a.field();
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < a.cols(); ++j) {
        mpq_class tmp = a.at(row, j);
        a.set(row, j, a.at(pivot, j));
        a.set(pivot, j, tmp);
      }
    const mpq_class inv = f.inv(a.at(row, col));
    for (int j = col; j < a.cols(); ++j) a.set(row, j, f.mul(inv, a.at(row, j)));
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const mpq_class factor = a.at(r, col);
      if (factor == 0) continue;
      for (int j = col; j < a.cols(); ++j)
        a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(row, j))));
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(m.field(), m.cols(), static_cast<int>(free_cols.size()));
  const Field& f = m.field();
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const int fc = free_cols[k];
    basis.set(fc, static_cast<int>(k), 1);
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
      basis.set(r.pivot_cols[i], static_cast<int>(k), f.neg(r.reduced.at(static_cast<int>(i), fc)));
  }
  return basis;
}

Matrix cokernel_projection(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

bool is_injective(const Matrix& m) { return rank(m) == m.cols(); }

bool is_surjective(const Matrix& m) { return rank(m) == m.rows(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw input_error("FieldMismatch", "solve over mixed fields");
  if (a.rows() != b.rows()) throw input_error("ShapeMismatch", "solve shape");
  const RrefResult r = rref(Matrix::hstack({a, b}));
  for (int c : r.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (size_t i = 0; i < r.pivot_cols.size(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x.set(r.pivot_cols[i], j, r.reduced.at(static_cast<int>(i), a.cols() + j));
  return x;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  auto xt = solve(a.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  if (!((*x) * m == Matrix::identity(m.field(), m.rows()))) return std::nullopt;
  return x;
}

mpq_class determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw input_error("ShapeMismatch", "determinant of non-square");
  Matrix a = m;
  const Field& f = a.field();
  const int n = a.rows();
  mpq_class det = f.from_long(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return mpq_class(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        mpq_class tmp = a.at(col, j);
        a.set(col, j, a.at(pivot, j));
        a.set(pivot, j, tmp);
      }
      det = f.neg(det);
    }
    det = f.mul(det, a.at(col, col));
    const mpq_class inv = f.inv(a.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const mpq_class factor = f.mul(a.at(r, col), inv);
      if (factor == 0) continue;
      for (int j = col; j < n; ++j)
        a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(col, j))));
    }
  }
  return det;
}

std::vector<std::vector<int>> index_subsets(int n, int j) {
  std::vector<std::vector<int>> out;
  if (j < 0 || j > n) return out;
  std::vector<int> cur(j);
  for (int i = 0; i < j; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = j - 1;
    while (i >= 0 && cur[i] == n - j + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int k = i + 1; k < j; ++k) cur[k] = cur[k - 1] + 1;
  }
  if (j == 0) out = {{}};
  return out;
}

Matrix compound(const Matrix& m, int j) {
  const auto row_sets = index_subsets(m.rows(), j);
  const auto col_sets = index_subsets(m.cols(), j);
  Matrix out(m.field(), static_cast<int>(row_sets.size()), static_cast<int>(col_sets.size()));
  for (size_t ri = 0; ri < row_sets.size(); ++ri)
    for (size_t ci = 0; ci < col_sets.size(); ++ci) {
      Matrix sub(m.field(), j, j);
      for (int a = 0; a < j; ++a)
        for (int b = 0; b < j; ++b) sub.set(a, b, m.at(row_sets[ri][a], col_sets[ci][b]));
      out.set(static_cast<int>(ri), static_cast<int>(ci), j == 0 ? mpq_class(1) : determinant(sub));
    }
  return out;
}

}  // namespace posetcoh
