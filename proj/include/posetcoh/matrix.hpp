#pragma once

#include <optional>
#include <vector>

#include "posetcoh/field.hpp"

namespace posetcoh {

// Dense matrix over an exact field. Entries are stored row-major in
// canonical form (reduced fraction, or residue in [0,p)).
class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(Field field, int rows, int cols);

  static Matrix identity(Field field, int n);
  static Matrix zero(Field field, int rows, int cols) { return Matrix(field, rows, cols); }
  static Matrix from_rows(Field field, const std::vector<std::vector<mpq_class>>& rows);

  // Stacks blocks vertically / horizontally. All blocks must agree in the
  // other dimension and in field.
  static Matrix vstack(const std::vector<Matrix>& blocks);
  static Matrix hstack(const std::vector<Matrix>& blocks);
  static Matrix block_diagonal(Field field, const std::vector<Matrix>& blocks);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const mpq_class& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, const mpq_class& v);
  Scalar scalar_at(int r, int c) const { return Scalar{field_, at(r, c)}; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const mpq_class& c) const;
  Matrix transpose() const;

  Matrix row_slice(int begin, int end) const;  // rows [begin, end)
  Matrix col_slice(int begin, int end) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same_field(const Matrix& other) const;

  Field field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Gauss-Jordan with first-nonzero pivoting, so pivot choices (and hence all
// derived bases) are reproducible.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

// Columns form a basis of the right kernel {x : Mx = 0}; count = cols - rank.
Matrix kernel_basis(const Matrix& m);

// Rows form a basis of the left kernel {y : yM = 0}; count = rows - rank.
// Stacking them yields the canonical projection onto coker(M).
Matrix cokernel_projection(const Matrix& m);

bool is_injective(const Matrix& m);
bool is_surjective(const Matrix& m);

// Solves A X = B exactly; nullopt when inconsistent. Free variables are 0,
// so the result is deterministic.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Solves X A = B (i.e. factor B through a surjection/row space of A).
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

mpq_class determinant(const Matrix& m);

// j-th compound matrix: entries are the j x j minors, with row/column index
// subsets enumerated in lexicographic order. compound(M, 0) is the 1 x 1
// identity.
Matrix compound(const Matrix& m, int j);

// All j-element subsets of {0,..,n-1}, lexicographically.
std::vector<std::vector<int>> index_subsets(int n, int j);

}  // namespace posetcoh
