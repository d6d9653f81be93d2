#include "posetcoh/derived.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace posetcoh {

namespace {

// Degreewise composition g ∘ f. Missing parts are zero maps, so only common
// degrees contribute.
DegreewiseMap compose(const DegreewiseMap& g, const DegreewiseMap& f) {
  DegreewiseMap out;
  for (const auto& [n, fn] : f.parts) {
    auto it = g.parts.find(n);
    if (it == g.parts.end()) continue;
    out.set(n, it->second * fn);
  }
  return out;
}

template <typename ComplexT>
bool dw_equal(const Field& field, const DegreewiseMap& a, const DegreewiseMap& b,
              const ComplexT& source, const ComplexT& target) {
  int lo = 0, hi = -1;
  if (!source.empty()) lo = source.lo(), hi = source.hi();
  for (int n = lo; n <= hi; ++n)
    if (a.part(field, n, target.dim(n), source.dim(n)) !=
        b.part(field, n, target.dim(n), source.dim(n)))
      return false;
  return true;
}

template <typename FunctorT>
DegreewiseMap map_along_impl(const FunctorT& f, int q, int p, bool contravariant) {
  if (q == p) {
    DegreewiseMap id;
    const auto& c = f.at[p];
    if (!c.empty())
      for (int n = c.lo(); n <= c.hi(); ++n)
        id.set(n, Matrix::identity(f.field, c.dim(n)));
    return id;
  }
  std::vector<int> path;
  auto dfs = [&](auto&& self, int at) -> bool {
    path.push_back(at);
    if (at == p) return true;
    for (int up : f.base.upper_covers(at))
      if (f.base.leq(up, p) && self(self, up)) return true;
    path.pop_back();
    return false;
  };
  if (!f.base.less(q, p) || !dfs(dfs, q)) throw internal_error("no path for map_along");
  DegreewiseMap acc = f.cover_maps.at({path[0], path[1]});
  for (size_t i = 1; i + 1 < path.size(); ++i) {
    const DegreewiseMap& step = f.cover_maps.at({path[i], path[i + 1]});
    acc = contravariant ? compose(acc, step) : compose(step, acc);
  }
  return acc;
}

template <typename FunctorT, typename ComplexT>
void validate_impl(const FunctorT& f, bool contravariant) {
  for (const auto& [q, p] : f.base.cover_pairs()) {
    auto it = f.cover_maps.find({q, p});
    if (it == f.cover_maps.end())
      throw input_error("MissingCoverMap", "cover '" + f.base.id(q) + "<" + f.base.id(p) + "'");
    const ComplexT& src = contravariant ? f.at[p] : f.at[q];
    const ComplexT& tgt = contravariant ? f.at[q] : f.at[p];
    validate_chain_map(src, tgt, it->second);
  }
  for (int q = 0; q < f.base.size(); ++q)
    for (int p = 0; p < f.base.size(); ++p) {
      if (!f.base.less(q, p)) continue;
      // Compare the composite along each upper cover route.
      DegreewiseMap reference;
      bool have_ref = false;
      for (int r : f.base.upper_covers(q)) {
        if (!f.base.leq(r, p)) continue;
        DegreewiseMap rest = map_along_impl(f, r, p, contravariant);
        const DegreewiseMap& step = f.cover_maps.at({q, r});
        DegreewiseMap route = contravariant ? compose(step, rest) : compose(rest, step);
        if (!have_ref) {
          reference = route;
          have_ref = true;
        } else {
          const ComplexT& src = contravariant ? f.at[p] : f.at[q];
          const ComplexT& tgt = contravariant ? f.at[q] : f.at[p];
          if (!dw_equal(f.field, reference, route, src, tgt))
            throw input_error("NotFunctorial", "path-dependent composite between '" +
                                                   f.base.id(q) + "' and '" + f.base.id(p) + "'");
        }
      }
    }
}

}  // namespace

DegreewiseMap CochainFunctor::map_along(int q, int p) const {
  return map_along_impl(*this, q, p, true);
}

void CochainFunctor::validate() const { validate_impl<CochainFunctor, CochainComplex>(*this, true); }

DegreewiseMap ChainFunctor::map_along(int q, int p) const {
  return map_along_impl(*this, q, p, false);
}

void ChainFunctor::validate() const { validate_impl<ChainFunctor, ChainComplex>(*this, false); }

CocylinderResult cocylinder(const CochainComplex& source, const CochainComplex& target,
                            const DegreewiseMap& f) {
  validate_chain_map(source, target, f);
  const Field& k = source.field();
  CocylinderResult res{CochainComplex(k), {}, {}};

  int lo = std::min(source.empty() ? 0 : source.lo(), target.empty() ? 0 : target.lo());
  int hi = std::max(source.empty() ? 0 : source.hi(), (target.empty() ? 0 : target.hi()) + 1);
  for (int n = lo; n <= hi; ++n)
    res.complex.set_dim(n, source.dim(n) + target.dim(n - 1) + target.dim(n));

  for (int n = lo; n <= hi; ++n) {
    const int cs = source.dim(n), dm = target.dim(n - 1), dn = target.dim(n);
    const int cs1 = source.dim(n + 1), dn1 = target.dim(n + 1);
    if (cs + dm + dn == 0 || cs1 + dn + dn1 == 0) continue;
    Matrix d(k, cs1 + dn + dn1, cs + dm + dn);
    const Matrix dc = source.differential(n);
    const Matrix dd_prev = target.differential(n - 1);
    const Matrix dd = target.differential(n);
    const Matrix fn = f.part(k, n, dn, cs);
    for (int i = 0; i < cs1; ++i)
      for (int j = 0; j < cs; ++j) d.set(i, j, dc.at(i, j));
    for (int i = 0; i < dn; ++i) {
      for (int j = 0; j < cs; ++j) d.set(cs1 + i, j, -fn.at(i, j));
      for (int j = 0; j < dm; ++j) d.set(cs1 + i, cs + j, -dd_prev.at(i, j));
      d.set(cs1 + i, cs + dm + i, 1);
    }
    for (int i = 0; i < dn1; ++i)
      for (int j = 0; j < dn; ++j) d.set(cs1 + dn + i, cs + dm + j, dd.at(i, j));
    res.complex.set_differential(n, std::move(d));
  }
  res.complex.validate();

  for (int n = lo; n <= hi; ++n) {
    const int cs = source.dim(n), dm = target.dim(n - 1), dn = target.dim(n);
    if (cs > 0) {
      Matrix inc(k, cs + dm + dn, cs);
      const Matrix fn = f.part(k, n, dn, cs);
      for (int i = 0; i < cs; ++i) inc.set(i, i, 1);
      for (int i = 0; i < dn; ++i)
        for (int j = 0; j < cs; ++j) inc.set(cs + dm + i, j, fn.at(i, j));
      res.inclusion.set(n, std::move(inc));
    }
    if (dn > 0) {
      Matrix proj(k, dn, cs + dm + dn);
      for (int i = 0; i < dn; ++i) proj.set(i, cs + dm + i, 1);
      res.projection.set(n, std::move(proj));
    }
  }
  validate_chain_map(source, res.complex, res.inclusion);
  validate_chain_map(res.complex, target, res.projection);
  return res;
}

CylinderResult cylinder(const ChainComplex& source, const ChainComplex& target,
                        const DegreewiseMap& f) {
  validate_chain_map(source, target, f);
  const Field& k = source.field();
  CylinderResult res{ChainComplex(k), {}, {}};

  int lo = std::min(source.empty() ? 0 : source.lo(), target.empty() ? 0 : target.lo());
  int hi = std::max((source.empty() ? 0 : source.hi()) + 1, target.empty() ? 0 : target.hi());
  for (int n = lo; n <= hi; ++n)
    res.complex.set_dim(n, source.dim(n) + source.dim(n - 1) + target.dim(n));

  for (int n = lo; n <= hi; ++n) {
    const int cn = source.dim(n), cm = source.dim(n - 1), dn = target.dim(n);
    const int cn1 = source.dim(n - 1), cm1 = source.dim(n - 2), dn1 = target.dim(n - 1);
    if (cn + cm + dn == 0 || cn1 + cm1 + dn1 == 0) continue;
    Matrix d(k, cn1 + cm1 + dn1, cn + cm + dn);
    const Matrix dc = source.differential(n);        // C_n -> C_{n-1}
    const Matrix dc_prev = source.differential(n - 1);
    const Matrix dd = target.differential(n);
    const Matrix fm = f.part(k, n - 1, dn1, cm);
    for (int i = 0; i < cn1; ++i) {
      for (int j = 0; j < cn; ++j) d.set(i, j, dc.at(i, j));
      d.set(i, cn + i, 1);
    }
    for (int i = 0; i < cm1; ++i)
      for (int j = 0; j < cm; ++j) d.set(cn1 + i, cn + j, -dc_prev.at(i, j));
    for (int i = 0; i < dn1; ++i) {
      for (int j = 0; j < cm; ++j) d.set(cn1 + cm1 + i, cn + j, -fm.at(i, j));
      for (int j = 0; j < dn; ++j) d.set(cn1 + cm1 + i, cn + cm + j, dd.at(i, j));
    }
    res.complex.set_differential(n, std::move(d));
  }
  res.complex.validate();

  for (int n = lo; n <= hi; ++n) {
    const int cn = source.dim(n), cm = source.dim(n - 1), dn = target.dim(n);
    if (cn > 0) {
      Matrix inc(k, cn + cm + dn, cn);
      for (int i = 0; i < cn; ++i) inc.set(i, i, 1);
      res.inclusion.set(n, std::move(inc));
    }
    if (dn > 0) {
      Matrix proj(k, dn, cn + cm + dn);
      const Matrix fn = f.part(k, n, dn, cn);
      for (int i = 0; i < dn; ++i) {
        for (int j = 0; j < cn; ++j) proj.set(i, j, fn.at(i, j));
        proj.set(i, cn + cm + i, 1);
      }
      res.projection.set(n, std::move(proj));
    }
  }
  validate_chain_map(source, res.complex, res.inclusion);
  validate_chain_map(res.complex, target, res.projection);
  return res;
}

ComplexLimit limit_of_complexes(const CochainFunctor& f, const std::vector<int>& elements) {
  ComplexLimit res{CochainComplex(f.field), {}, elements};
  res.projections.resize(elements.size());
  bool any = false;
  int lo = 0, hi = -1;
  for (int e : elements)
    if (!f.at[e].empty()) {
      lo = any ? std::min(lo, f.at[e].lo()) : f.at[e].lo();
      hi = any ? std::max(hi, f.at[e].hi()) : f.at[e].hi();
      any = true;
    }
  if (!any) return res;

  const auto covers = induced_covers(f.base, elements);
  std::map<std::pair<int, int>, DegreewiseMap> maps;
  for (const auto& [a, b] : covers) maps[{a, b}] = f.map_along(elements[a], elements[b]);

  std::map<int, Matrix> kernels;
  std::map<int, std::vector<int>> offsets;
  for (int n = lo; n <= hi; ++n) {
    std::vector<int>& off = offsets[n];
    off.assign(elements.size() + 1, 0);
    for (size_t i = 0; i < elements.size(); ++i) off[i + 1] = off[i] + f.at[elements[i]].dim(n);
    const int total = off.back();
    int crows = 0;
    for (const auto& [a, b] : covers) crows += f.at[elements[a]].dim(n);
    Matrix constraints(f.field, crows, total);
    int r0 = 0;
    for (const auto& [a, b] : covers) {
      const Matrix m =
          maps[{a, b}].part(f.field, n, f.at[elements[a]].dim(n), f.at[elements[b]].dim(n));
      for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) constraints.set(r0 + i, off[b] + j, m.at(i, j));
        constraints.set(r0 + i, off[a] + i, -1);
      }
      r0 += m.rows();
    }
    kernels.emplace(n, kernel_basis(constraints));
    res.complex.set_dim(n, kernels.at(n).cols());
  }

  for (int n = lo; n <= hi; ++n) {
    const Matrix& kn = kernels.at(n);
    for (size_t i = 0; i < elements.size(); ++i)
      res.projections[i].set(n, kn.row_slice(offsets[n][i], offsets[n][i + 1]));
    if (n == hi) continue;
    // Induced differential: the product differential restricted to the
    // limit, expressed in the kernel bases.
    std::vector<Matrix> blocks;
    for (int e : elements) blocks.push_back(f.at[e].differential(n));
    const Matrix product_d = Matrix::block_diagonal(f.field, blocks);
    auto solved = solve(kernels.at(n + 1), product_d * kn);
    if (!solved) throw internal_error("limit differential does not restrict");
    res.complex.set_differential(n, *solved);
  }
  res.complex.validate();
  return res;
}

ComplexColimit colimit_of_complexes(const ChainFunctor& f, const std::vector<int>& elements) {
  ComplexColimit res{ChainComplex(f.field), {}, elements};
  res.coprojections.resize(elements.size());
  bool any = false;
  int lo = 0, hi = -1;
  for (int e : elements)
    if (!f.at[e].empty()) {
      lo = any ? std::min(lo, f.at[e].lo()) : f.at[e].lo();
      hi = any ? std::max(hi, f.at[e].hi()) : f.at[e].hi();
      any = true;
    }
  if (!any) return res;

  const auto covers = induced_covers(f.base, elements);
  std::map<std::pair<int, int>, DegreewiseMap> maps;
  for (const auto& [a, b] : covers) maps[{a, b}] = f.map_along(elements[a], elements[b]);

  std::map<int, Matrix> quotients;
  std::map<int, std::vector<int>> offsets;
  for (int n = lo; n <= hi; ++n) {
    std::vector<int>& off = offsets[n];
    off.assign(elements.size() + 1, 0);
    for (size_t i = 0; i < elements.size(); ++i) off[i + 1] = off[i] + f.at[elements[i]].dim(n);
    const int total = off.back();
    int ccols = 0;
    for (const auto& [a, b] : covers) ccols += f.at[elements[a]].dim(n);
    Matrix relations(f.field, total, ccols);
    int c0 = 0;
    for (const auto& [a, b] : covers) {
      const Matrix m =
          maps[{a, b}].part(f.field, n, f.at[elements[b]].dim(n), f.at[elements[a]].dim(n));
      for (int j = 0; j < m.cols(); ++j) {
        for (int i = 0; i < m.rows(); ++i) relations.set(off[b] + i, c0 + j, m.at(i, j));
        relations.set(off[a] + j, c0 + j, -1);
      }
      c0 += m.cols();
    }
    quotients.emplace(n, cokernel_projection(relations));
    res.complex.set_dim(n, quotients.at(n).rows());
  }

  for (int n = lo; n <= hi; ++n) {
    const Matrix& qn = quotients.at(n);
    for (size_t i = 0; i < elements.size(); ++i)
      res.coprojections[i].set(n, qn.col_slice(offsets[n][i], offsets[n][i + 1]));
    if (n == lo) continue;
    std::vector<Matrix> blocks;
    for (int e : elements) blocks.push_back(f.at[e].differential(n));
    const Matrix product_d = Matrix::block_diagonal(f.field, blocks);
    auto solved = solve_left(qn, quotients.at(n - 1) * product_d);
    if (!solved) throw internal_error("colimit differential does not descend");
    res.complex.set_differential(n, *solved);
  }
  res.complex.validate();
  return res;
}

FibrantReplacement fibrant_replacement(const FunctorOnPoset& f) {
  if (f.variance() != Variance::Contravariant)
    throw input_error("WrongVariance", "fibrant replacement needs a contravariant functor");
  const Poset& base = f.base();
  FibrantReplacement out;
  out.rf.base = base;
  out.rf.field = f.field();
  out.rf.at.assign(base.size(), CochainComplex(f.field()));
  out.unit.assign(base.size(), Matrix(f.field(), 0, 0));

  std::vector<int> order(base.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return base.degree(a) < base.degree(b); });

  for (int p : order) {
    std::vector<int> below;
    for (int q = 0; q < base.size(); ++q)
      if (base.less(q, p)) below.push_back(q);

    const ComplexLimit lim = limit_of_complexes(out.rf, below);

    // ε_p : F(p) -> (lim RF)^0 through the units below.
    Matrix eps(f.field(), lim.complex.dim(0), f.dim(p));
    if (!below.empty() && lim.complex.dim(0) > 0) {
      std::vector<Matrix> blocks;
      for (int q : below) blocks.push_back(out.unit[q] * f.map_along(q, p));
      auto solved = solve(/*inclusion in degree 0*/ [&] {
        std::vector<Matrix> rows;
        for (size_t i = 0; i < below.size(); ++i)
          rows.push_back(lim.projections[i].part(f.field(), 0, out.rf.at[below[i]].dim(0),
                                                 lim.complex.dim(0)));
        return Matrix::vstack(rows);
      }(), Matrix::vstack(blocks));
      if (!solved) throw internal_error("cone into limit of RF inconsistent");
      eps = *solved;
      if (!(lim.complex.differential(0) * eps).is_zero())
        throw internal_error("unit does not land in cycles");
    }

    const CochainComplex fsrc = CochainComplex::concentrated(f.field(), 0, f.dim(p));
    DegreewiseMap eps_map;
    eps_map.set(0, eps);
    CocylinderResult coc = cocylinder(fsrc, lim.complex, eps_map);
    out.rf.at[p] = coc.complex;
    out.unit[p] = coc.inclusion.part(f.field(), 0, coc.complex.dim(0), f.dim(p));

    for (size_t i = 0; i < below.size(); ++i) {
      const int q = below[i];
      if (!base.is_cover(q, p)) continue;
      out.rf.cover_maps[{q, p}] = compose(lim.projections[i], coc.projection);
    }
  }
  return out;
}

CofibrantReplacement cofibrant_replacement(const FunctorOnPoset& f) {
  if (f.variance() != Variance::Covariant)
    throw input_error("WrongVariance", "cofibrant replacement needs a covariant functor");
  const Poset& base = f.base();
  CofibrantReplacement out;
  out.qf.base = base;
  out.qf.field = f.field();
  out.qf.at.assign(base.size(), ChainComplex(f.field()));
  out.counit.assign(base.size(), Matrix(f.field(), 0, 0));

  std::vector<int> order(base.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return base.degree(a) < base.degree(b); });

  for (int p : order) {
    std::vector<int> below;
    for (int q = 0; q < base.size(); ++q)
      if (base.less(q, p)) below.push_back(q);

    const ComplexColimit col = colimit_of_complexes(out.qf, below);

    // ε_p : (colim QF)_0 -> F(p) through the counits below.
    Matrix eps(f.field(), f.dim(p), col.complex.dim(0));
    if (!below.empty() && col.complex.dim(0) > 0) {
      std::vector<Matrix> blocks;
      for (int q : below) blocks.push_back(f.map_along(q, p) * out.counit[q]);
      std::vector<Matrix> qcols;
      for (size_t i = 0; i < below.size(); ++i)
        qcols.push_back(col.coprojections[i].part(f.field(), 0, col.complex.dim(0),
                                                  out.qf.at[below[i]].dim(0)));
      auto solved = solve_left(Matrix::hstack(qcols), Matrix::hstack(blocks));
      if (!solved) throw internal_error("cocone from colimit of QF inconsistent");
      eps = *solved;
      if (col.complex.dim(1) > 0 && !(eps * col.complex.differential(1)).is_zero())
        throw internal_error("counit does not kill boundaries");
    }

    const ChainComplex ftgt = ChainComplex::concentrated(f.field(), 0, f.dim(p));
    DegreewiseMap eps_map;
    eps_map.set(0, eps);
    CylinderResult cyl = cylinder(col.complex, ftgt, eps_map);
    out.qf.at[p] = cyl.complex;
    out.counit[p] = cyl.projection.part(f.field(), 0, f.dim(p), cyl.complex.dim(0));

    for (size_t i = 0; i < below.size(); ++i) {
      const int q = below[i];
      if (!base.is_cover(q, p)) continue;
      out.qf.cover_maps[{q, p}] = compose(cyl.inclusion, col.coprojections[i]);
    }
  }
  return out;
}

std::vector<int> proper_below_top(const BoundedPoset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.poset().size(); ++i)
    if (i != p.top()) out.push_back(i);
  return out;
}

GradedDims cohomology_over(const FunctorOnPoset& f, const std::vector<int>& elements) {
  const FunctorOnPoset sub = f.restrict(elements);
  const FibrantReplacement rf = fibrant_replacement(sub);
  std::vector<int> all(sub.base().size());
  std::iota(all.begin(), all.end(), 0);
  return limit_of_complexes(rf.rf, all).complex.cohomology_dims();
}

GradedDims cohomology(const FunctorOnPoset& f, const BoundedPoset& p) {
  return cohomology_over(f, proper_below_top(p));
}

GradedDims homology_over(const FunctorOnPoset& f, const std::vector<int>& elements) {
  const FunctorOnPoset sub = f.restrict(elements);
  const CofibrantReplacement qf = cofibrant_replacement(sub);
  std::vector<int> all(sub.base().size());
  std::iota(all.begin(), all.end(), 0);
  return colimit_of_complexes(qf.qf, all).complex.homology_dims();
}

GradedDims homology(const FunctorOnPoset& f, const BoundedPoset& p) {
  return homology_over(f, proper_below_top(p));
}

namespace {

// All chains of the induced subposet, grouped by length; members are base
// indexes in increasing base order.
std::vector<std::vector<std::vector<int>>> chains_by_length(const Poset& base,
                                                            const std::vector<int>& elements) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> chain;
  auto record = [&]() {
    const size_t len = chain.size() - 1;
    if (out.size() <= len) out.resize(len + 1);
    out[len].push_back(chain);
  };
  auto rec = [&](auto&& self) -> void {
    record();
    for (int e : elements)
      if (base.less(chain.back(), e)) {
        chain.push_back(e);
        self(self);
        chain.pop_back();
      }
  };
  for (int e : elements) {
    chain.assign(1, e);
    rec(rec);
  }
  return out;
}

}  // namespace

CochainComplex nerve_cochain_complex(const FunctorOnPoset& f, const std::vector<int>& elements) {
  if (f.variance() != Variance::Contravariant)
    throw input_error("WrongVariance", "cochain nerve needs a contravariant functor");
  CochainComplex complex(f.field());
  const auto chains = chains_by_length(f.base(), elements);
  if (chains.empty()) return complex;

  // Per-length offsets of each chain's F(q_0) block.
  std::vector<std::map<std::vector<int>, int>> offset(chains.size());
  std::vector<int> total(chains.size(), 0);
  for (size_t n = 0; n < chains.size(); ++n) {
    for (const auto& ch : chains[n]) {
      offset[n][ch] = total[n];
      total[n] += f.dim(ch.front());
    }
    complex.set_dim(static_cast<int>(n), total[n]);
  }

  for (size_t n = 0; n + 1 < chains.size(); ++n) {
    Matrix d(f.field(), total[n + 1], total[n]);
    for (const auto& ch : chains[n + 1]) {
      const int row0 = offset[n + 1].at(ch);
      const int dim_here = f.dim(ch.front());
      for (size_t i = 0; i < ch.size(); ++i) {
        std::vector<int> face = ch;
        face.erase(face.begin() + static_cast<long>(i));
        const int col0 = offset[n].at(face);
        if (i == 0) {
          const Matrix m = f.map_along(ch[0], ch[1]);
          for (int r = 0; r < dim_here; ++r)
            for (int c = 0; c < m.cols(); ++c)
              d.set(row0 + r, col0 + c, d.at(row0 + r, col0 + c) + m.at(r, c));
        } else {
          const mpq_class sign = (i % 2 == 0) ? 1 : -1;
          for (int r = 0; r < dim_here; ++r)
            d.set(row0 + r, col0 + r, d.at(row0 + r, col0 + r) + sign);
        }
      }
    }
    complex.set_differential(static_cast<int>(n), std::move(d));
  }
  complex.validate();
  return complex;
}

ChainComplex nerve_chain_complex(const FunctorOnPoset& f, const std::vector<int>& elements) {
  if (f.variance() != Variance::Covariant)
    throw input_error("WrongVariance", "chain nerve needs a covariant functor");
  ChainComplex complex(f.field());
  const auto chains = chains_by_length(f.base(), elements);
  if (chains.empty()) return complex;

  std::vector<std::map<std::vector<int>, int>> offset(chains.size());
  std::vector<int> total(chains.size(), 0);
  for (size_t n = 0; n < chains.size(); ++n) {
    for (const auto& ch : chains[n]) {
      offset[n][ch] = total[n];
      total[n] += f.dim(ch.front());
    }
    complex.set_dim(static_cast<int>(n), total[n]);
  }

  for (size_t n = 1; n < chains.size(); ++n) {
    Matrix d(f.field(), total[n - 1], total[n]);
    for (const auto& ch : chains[n]) {
      const int col0 = offset[n].at(ch);
      const int dim_here = f.dim(ch.front());
      for (size_t i = 0; i < ch.size(); ++i) {
        std::vector<int> face = ch;
        face.erase(face.begin() + static_cast<long>(i));
        const int row0 = offset[n - 1].at(face);
        if (i == 0) {
          const Matrix m = f.map_along(ch[0], ch[1]);
          for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < dim_here; ++c)
              d.set(row0 + r, col0 + c, d.at(row0 + r, col0 + c) + m.at(r, c));
        } else {
          const mpq_class sign = (i % 2 == 0) ? 1 : -1;
          for (int r = 0; r < dim_here; ++r)
            d.set(row0 + r, col0 + r, d.at(row0 + r, col0 + r) + sign);
        }
      }
    }
    complex.set_differential(static_cast<int>(n), std::move(d));
  }
  complex.validate();
  return complex;
}

GradedDims nerve_cohomology_oracle(const FunctorOnPoset& f, const std::vector<int>& elements) {
  return nerve_cochain_complex(f, elements).cohomology_dims();
}

GradedDims nerve_homology_oracle(const FunctorOnPoset& f, const std::vector<int>& elements) {
  return nerve_chain_complex(f, elements).homology_dims();
}

}  // namespace posetcoh
