#pragma once

#include <map>

#include "posetcoh/matrix.hpp"

namespace posetcoh {

// Degree-indexed dimension vector; only nonzero entries are stored.
using GradedDims = std::map<int, long>;

namespace detail {

// Shared storage for bounded complexes. `dir` is +1 for cochain complexes
// (differentials raise degree) and -1 for chain complexes.
class ComplexBase {
 public:
  explicit ComplexBase(Field field, int dir) : field_(field), dir_(dir) {}

  const Field& field() const { return field_; }
  int direction() const { return dir_; }

  int dim(int n) const;
  void set_dim(int n, int d);

  // d_n : C_n -> C_{n+dir}. Absent differentials are zero.
  Matrix differential(int n) const;
  void set_differential(int n, Matrix d);

  bool empty() const { return dims_.empty(); }
  int lo() const;  // lowest degree with nonzero dimension
  int hi() const;

  // Checks shapes and d∘d = 0; throws NotAComplex with offending degree.
  void validate() const;

  GradedDims homology_dims() const;

  friend bool operator==(const ComplexBase& a, const ComplexBase& b);

 private:
  Field field_;
  int dir_;
  std::map<int, int> dims_;       // nonzero dims only
  std::map<int, Matrix> diffs_;   // keyed by source degree, nonzero only
};

}  // namespace detail

class CochainComplex : public detail::ComplexBase {
 public:
  explicit CochainComplex(Field field) : ComplexBase(field, +1) {}

  static CochainComplex concentrated(Field field, int degree, int dim) {
    CochainComplex c(field);
    c.set_dim(degree, dim);
    return c;
  }

  GradedDims cohomology_dims() const { return homology_dims(); }
};

class ChainComplex : public detail::ComplexBase {
 public:
  explicit ChainComplex(Field field) : ComplexBase(field, -1) {}

  static ChainComplex concentrated(Field field, int degree, int dim) {
    ChainComplex c(field);
    c.set_dim(degree, dim);
    return c;
  }
};

// A degreewise collection of matrices, used for chain maps and for the
// structure maps of complex-valued functors. Absent degrees are zero maps.
struct DegreewiseMap {
  std::map<int, Matrix> parts;

  Matrix part(const Field& field, int n, int target_dim, int source_dim) const {
    auto it = parts.find(n);
    if (it != parts.end()) return it->second;
    return Matrix::zero(field, target_dim, source_dim);
  }

  void set(int n, Matrix m) {
    if (!m.is_zero()) parts[n] = std::move(m);
  }
};

// Asserts that `f` is a chain map source -> target (commutes with the
// differentials); throws NotChainMap otherwise.
template <typename ComplexT>
void validate_chain_map(const ComplexT& source, const ComplexT& target, const DegreewiseMap& f);

}  // namespace posetcoh
