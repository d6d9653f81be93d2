#include "posetcoh/functor.hpp"

#include <algorithm>
#include <set>

namespace posetcoh {

FunctorOnPoset::FunctorOnPoset(Poset base, Variance variance, Field field)
    : base_(std::move(base)), variance_(variance), field_(field) {
  dims_.assign(base_.size(), 0);
}

void FunctorOnPoset::set_dim(int p, int d) {
  if (d < 0) throw input_error("BadDimension", "negative dimension at '" + base_.id(p) + "'");
  dims_[p] = d;
}

void FunctorOnPoset::set_cover_map(int q, int p, Matrix m) {
  if (!base_.is_cover(q, p))
    throw input_error("NotACover", "'" + base_.id(q) + "' ≺ '" + base_.id(p) + "' is not a cover");
  const int target = variance_ == Variance::Contravariant ? dims_[q] : dims_[p];
  const int source = variance_ == Variance::Contravariant ? dims_[p] : dims_[q];
  if (m.rows() != target || m.cols() != source)
    throw input_error("ShapeMismatch", "map on cover '" + base_.id(q) + "<" + base_.id(p) + "'");
  if (m.field() != field_) throw input_error("FieldMismatch", "cover map field");
  cover_maps_[{q, p}] = std::move(m);
}

bool FunctorOnPoset::has_cover_map(int q, int p) const { return cover_maps_.count({q, p}) > 0; }

const Matrix& FunctorOnPoset::cover_map(int q, int p) const {
  auto it = cover_maps_.find({q, p});
  if (it == cover_maps_.end())
    throw input_error("MissingCoverMap",
                      "no map on cover '" + base_.id(q) + "<" + base_.id(p) + "'");
  return it->second;
}

Matrix FunctorOnPoset::map_along(int q, int p) const {
  if (q == p) return Matrix::identity(field_, dims_[p]);
  if (!base_.less(q, p))
    throw input_error("NotBelow", "'" + base_.id(q) + "' is not below '" + base_.id(p) + "'");
  // First unrefinable path from q up to p, following cover enumeration order.
  std::vector<int> path;
  auto dfs = [&](auto&& self, int at) -> bool {
    path.push_back(at);
    if (at == p) return true;
    for (int up : base_.upper_covers(at))
      if (base_.leq(up, p) && self(self, up)) return true;
    path.pop_back();
    return false;
  };
  if (!dfs(dfs, q)) throw internal_error("no cover path despite q < p");
  if (variance_ == Variance::Contravariant) {
    Matrix m = cover_map(path[0], path[1]);
    for (size_t i = 1; i + 1 < path.size(); ++i) m = m * cover_map(path[i], path[i + 1]);
    return m;
  }
  Matrix m = cover_map(path[0], path[1]);
  for (size_t i = 1; i + 1 < path.size(); ++i) m = cover_map(path[i], path[i + 1]) * m;
  return m;
}

std::vector<std::string> FunctorOnPoset::validate() const {
  for (const auto& [q, p] : base_.cover_pairs()) cover_map(q, p);  // MissingCoverMap

  std::vector<std::string> violations;
  const int n = base_.size();
  for (int q = 0; q < n; ++q)
    for (int p = 0; p < n; ++p) {
      if (!base_.less(q, p)) continue;
      // All unrefinable paths q -> p and their composites.
      std::vector<std::vector<int>> paths;
      std::vector<int> path{q};
      auto dfs = [&](auto&& self, int at) -> void {
        if (at == p) {
          paths.push_back(path);
          return;
        }
        for (int up : base_.upper_covers(at))
          if (base_.leq(up, p)) {
            path.push_back(up);
            self(self, up);
            path.pop_back();
          }
      };
      dfs(dfs, q);
      if (paths.size() < 2) continue;
      auto composite = [&](const std::vector<int>& pa) {
        if (variance_ == Variance::Contravariant) {
          Matrix m = cover_map(pa[0], pa[1]);
          for (size_t i = 1; i + 1 < pa.size(); ++i) m = m * cover_map(pa[i], pa[i + 1]);
          return m;
        }
        Matrix m = cover_map(pa[0], pa[1]);
        for (size_t i = 1; i + 1 < pa.size(); ++i) m = cover_map(pa[i], pa[i + 1]) * m;
        return m;
      };
      auto label = [&](const std::vector<int>& pa) {
        std::string s = base_.id(pa[0]);
        for (size_t i = 1; i < pa.size(); ++i) s += "<" + base_.id(pa[i]);
        return s;
      };
      const Matrix first = composite(paths[0]);
      for (size_t i = 1; i < paths.size(); ++i)
        if (!(composite(paths[i]) == first)) {
          violations.push_back("(" + base_.id(q) + "," + base_.id(p) + "): composites along '" +
                               label(paths[0]) + "' and '" + label(paths[i]) + "' differ");
          break;
        }
    }
  return violations;
}

void FunctorOnPoset::validate_or_throw() const {
  const auto violations = validate();
  if (!violations.empty())
    throw input_error("NotFunctorial", violations.front() +
                                           (violations.size() > 1
                                                ? " (and " + std::to_string(violations.size() - 1) +
                                                      " more)"
                                                : ""));
}

FunctorOnPoset FunctorOnPoset::restrict(const std::vector<int>& elements) const {
  FunctorOnPoset out(base_.induced(elements), variance_, field_);
  for (size_t i = 0; i < elements.size(); ++i) out.set_dim(static_cast<int>(i), dims_[elements[i]]);
  for (const auto& [a, b] : out.base().cover_pairs())
    out.set_cover_map(a, b, map_along(elements[a], elements[b]));
  return out;
}

std::vector<std::pair<int, int>> induced_covers(const Poset& base,
                                                const std::vector<int>& elements) {
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(elements.size());
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) {
      if (a == b || !base.less(elements[a], elements[b])) continue;
      bool mid = false;
      for (int c = 0; c < m && !mid; ++c)
        if (c != a && c != b && base.less(elements[a], elements[c]) &&
            base.less(elements[c], elements[b]))
          mid = true;
      if (!mid) out.emplace_back(a, b);
    }
  return out;
}

namespace {

void check_subposet(const FunctorOnPoset& f, const std::vector<int>& subposet) {
  std::set<int> seen;
  for (int e : subposet) {
    if (e < 0 || e >= f.base().size()) throw input_error("UnknownElement", "index out of range");
    if (!seen.insert(e).second)
      throw input_error("NotInduced", "repeated element '" + f.base().id(e) + "'");
  }
}

std::vector<int> block_offsets(const FunctorOnPoset& f, const std::vector<int>& subposet) {
  std::vector<int> off(subposet.size() + 1, 0);
  for (size_t i = 0; i < subposet.size(); ++i) off[i + 1] = off[i] + f.dim(subposet[i]);
  return off;
}

}  // namespace

LimitResult limit(const FunctorOnPoset& f, const std::vector<int>& subposet) {
  if (f.variance() != Variance::Contravariant)
    throw input_error("WrongVariance", "limit needs a contravariant functor");
  check_subposet(f, subposet);
  const auto off = block_offsets(f, subposet);
  const int total = off.back();
  const auto covers = induced_covers(f.base(), subposet);

  // (x_p) is in the limit iff F(q≺p)(x_p) = x_q on every induced cover.
  int crows = 0;
  for (const auto& [a, b] : covers) crows += f.dim(subposet[a]);
  Matrix constraints(f.field(), crows, total);
  int r0 = 0;
  for (const auto& [a, b] : covers) {
    const Matrix m = f.map_along(subposet[a], subposet[b]);
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) constraints.set(r0 + i, off[b] + j, m.at(i, j));
      constraints.set(r0 + i, off[a] + i, -1);
    }
    r0 += m.rows();
  }

  LimitResult res;
  res.elements = subposet;
  res.inclusion = kernel_basis(constraints);
  res.dimension = res.inclusion.cols();
  for (size_t i = 0; i < subposet.size(); ++i)
    res.projections.push_back(res.inclusion.row_slice(off[i], off[i + 1]));
  return res;
}

ColimitResult colimit(const FunctorOnPoset& f, const std::vector<int>& subposet) {
  if (f.variance() != Variance::Covariant)
    throw input_error("WrongVariance", "colimit needs a covariant functor");
  check_subposet(f, subposet);
  const auto off = block_offsets(f, subposet);
  const int total = off.back();
  const auto covers = induced_covers(f.base(), subposet);

  // Quotient of the direct sum by the image of x ↦ F(q≺p)(x) - x over covers.
  int ccols = 0;
  for (const auto& [a, b] : covers) ccols += f.dim(subposet[a]);
  Matrix relations(f.field(), total, ccols);
  int c0 = 0;
  for (const auto& [a, b] : covers) {
    const Matrix m = f.map_along(subposet[a], subposet[b]);
    for (int j = 0; j < m.cols(); ++j) {
      for (int i = 0; i < m.rows(); ++i) relations.set(off[b] + i, c0 + j, m.at(i, j));
      relations.set(off[a] + j, c0 + j, -1);
    }
    c0 += m.cols();
  }

  ColimitResult res;
  res.elements = subposet;
  res.quotient = cokernel_projection(relations);
  res.dimension = res.quotient.rows();
  for (size_t i = 0; i < subposet.size(); ++i)
    res.coprojections.push_back(res.quotient.col_slice(off[i], off[i + 1]));
  return res;
}

Matrix map_into_limit(const FunctorOnPoset& f, int p, const std::vector<int>& subposet,
                      const LimitResult* precomputed) {
  for (int q : subposet)
    if (!f.base().less(q, p))
      throw input_error("NotBelow", "'" + f.base().id(q) + "' not below '" + f.base().id(p) + "'");
  LimitResult local;
  const LimitResult* lim = precomputed;
  if (!lim) {
    local = limit(f, subposet);
    lim = &local;
  }
  if (subposet.empty()) return Matrix::zero(f.field(), 0, f.dim(p));
  std::vector<Matrix> blocks;
  for (int q : subposet) blocks.push_back(f.map_along(q, p));
  const Matrix cone = Matrix::vstack(blocks);
  auto solved = solve(lim->inclusion, cone);
  if (!solved) throw internal_error("cone map does not land in the limit");
  return *solved;
}

Matrix map_from_colimit(const FunctorOnPoset& f, int p, const std::vector<int>& subposet,
                        const ColimitResult* precomputed) {
  for (int q : subposet)
    if (!f.base().less(q, p))
      throw input_error("NotBelow", "'" + f.base().id(q) + "' not below '" + f.base().id(p) + "'");
  ColimitResult local;
  const ColimitResult* col = precomputed;
  if (!col) {
    local = colimit(f, subposet);
    col = &local;
  }
  if (subposet.empty()) return Matrix::zero(f.field(), f.dim(p), 0);
  std::vector<Matrix> blocks;
  for (int q : subposet) blocks.push_back(f.map_along(q, p));
  const Matrix cocone = Matrix::hstack(blocks);
  auto solved = solve_left(col->quotient, cocone);
  if (!solved) throw internal_error("cocone map does not factor through the colimit");
  return *solved;
}

}  // namespace posetcoh
