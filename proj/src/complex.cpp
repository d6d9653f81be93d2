#include "posetcoh/complex.hpp"

namespace posetcoh {
namespace detail {

int ComplexBase::dim(int n) const {
  auto it = dims_.find(n);
  return it == dims_.end() ? 0 : it->second;
}

void ComplexBase::set_dim(int n, int d) {
  if (d < 0) throw internal_error("negative complex dimension");
  if (d == 0)
    dims_.erase(n);
  else
    dims_[n] = d;
}

Matrix ComplexBase::differential(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return Matrix::zero(field_, dim(n + dir_), dim(n));
}

void ComplexBase::set_differential(int n, Matrix d) {
  if (d.rows() != dim(n + dir_) || d.cols() != dim(n))
    throw input_error("ShapeMismatch", "differential at degree " + std::to_string(n));
  if (d.is_zero())
    diffs_.erase(n);
  else
    diffs_[n] = std::move(d);
}

int ComplexBase::lo() const { return dims_.empty() ? 0 : dims_.begin()->first; }

int ComplexBase::hi() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

void ComplexBase::validate() const {
  for (const auto& [n, d] : diffs_) {
    if (d.rows() != dim(n + dir_) || d.cols() != dim(n))
      throw input_error("NotAComplex", "differential shape at degree " + std::to_string(n));
    auto next = diffs_.find(n + dir_);
    if (next != diffs_.end() && !(next->second * d).is_zero())
      throw input_error("NotAComplex",
                        "d∘d != 0 at degree " + std::to_string(n));
  }
}

GradedDims ComplexBase::homology_dims() const {
  GradedDims out;
  for (const auto& [n, d] : dims_) {
    const long h = d - rank(differential(n)) - rank(differential(n - dir_));
    if (h < 0) throw internal_error("negative homology dimension; not a complex");
    if (h > 0) out[n] = h;
  }
  return out;
}

bool operator==(const ComplexBase& a, const ComplexBase& b) {
  if (a.field_ != b.field_ || a.dir_ != b.dir_ || a.dims_ != b.dims_) return false;
  auto lo = std::min(a.empty() ? 0 : a.lo(), b.empty() ? 0 : b.lo());
  auto hi = std::max(a.empty() ? 0 : a.hi(), b.empty() ? 0 : b.hi());
  for (int n = lo; n <= hi; ++n)
    if (a.differential(n) != b.differential(n)) return false;
  return true;
}

}  // namespace detail

template <typename ComplexT>
void validate_chain_map(const ComplexT& source, const ComplexT& target, const DegreewiseMap& f) {
  const Field& k = source.field();
  const int dir = source.direction();
  const int lo = std::min(source.empty() ? 0 : source.lo(), target.empty() ? 0 : target.lo());
  const int hi = std::max(source.empty() ? 0 : source.hi(), target.empty() ? 0 : target.hi());
  for (int n = lo; n <= hi; ++n) {
    const Matrix fn = f.part(k, n, target.dim(n), source.dim(n));
    if (fn.rows() != target.dim(n) || fn.cols() != source.dim(n))
      throw input_error("NotChainMap", "component shape at degree " + std::to_string(n));
    const Matrix fn1 = f.part(k, n + dir, target.dim(n + dir), source.dim(n + dir));
    if (!(fn1 * source.differential(n) == target.differential(n) * fn))
      throw input_error("NotChainMap", "does not commute with d at degree " + std::to_string(n));
  }
}

template void validate_chain_map<CochainComplex>(const CochainComplex&, const CochainComplex&,
                                                 const DegreewiseMap&);
template void validate_chain_map<ChainComplex>(const ChainComplex&, const ChainComplex&,
                                               const DegreewiseMap&);

}  // namespace posetcoh
