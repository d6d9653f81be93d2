#include "posetcoh/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "posetcoh/atomic.hpp"
#include "posetcoh/derived.hpp"

namespace posetcoh {

namespace {

const Field kQ = Field::rationals();

std::string matrix_key(const Matrix& m) {
  if (m.rows() == 0) return "V";
  std::string key = "x[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) key += ";";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) key += ",";
      key += scalar_to_string(m.at(i, j));
    }
  }
  return key + "]";
}

Matrix drop_zero_rows(const Matrix& m) {
  std::vector<Matrix> rows;
  for (int i = 0; i < m.rows(); ++i)
    if (!m.row_slice(i, i + 1).is_zero()) rows.push_back(m.row_slice(i, i + 1));
  if (rows.empty()) return Matrix::zero(m.field(), 0, m.cols());
  return Matrix::vstack(rows);
}

// Rowspace containment: rows(a) ⊆ rows(b).
bool rowspace_contained(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return true;
  return rank(Matrix::vstack({b, a})) == rank(b);
}

}  // namespace

void Arrangement::validate() const {
  if (ambient_dim <= 0) throw input_error("BadArrangement", "ambient dimension must be positive");
  for (size_t i = 0; i < hyperplanes.size(); ++i) {
    if (static_cast<int>(hyperplanes[i].size()) != ambient_dim)
      throw input_error("BadArrangement", "covector length != ambient dimension");
    bool nonzero = false;
    for (const mpq_class& v : hyperplanes[i]) nonzero = nonzero || v != 0;
    if (!nonzero) throw input_error("BadArrangement", "zero covector");
  }
  for (size_t i = 0; i < hyperplanes.size(); ++i)
    for (size_t j = i + 1; j < hyperplanes.size(); ++j) {
      Matrix two(kQ, 2, ambient_dim);
      for (int c = 0; c < ambient_dim; ++c) {
        two.set(0, c, hyperplanes[i][c]);
        two.set(1, c, hyperplanes[j][c]);
      }
      if (rank(two) < 2)
        throw input_error("BadArrangement", "proportional covectors " + std::to_string(i) +
                                                " and " + std::to_string(j));
    }
}

IntersectionLattice intersection_lattice(const Arrangement& a) {
  a.validate();
  const int n = a.ambient_dim;

  std::vector<Matrix> hyper_rows;
  for (const auto& co : a.hyperplanes) {
    Matrix row(kQ, 1, n);
    for (int c = 0; c < n; ++c) row.set(0, c, co[c]);
    hyper_rows.push_back(std::move(row));
  }

  // Close {V} under intersecting with hyperplanes. Each subspace is the
  // RREF of its annihilator rows.
  std::map<std::string, Matrix> seen;
  std::vector<Matrix> worklist{Matrix::zero(kQ, 0, n)};
  seen.emplace("V", worklist[0]);
  while (!worklist.empty()) {
    const Matrix cur = worklist.back();
    worklist.pop_back();
    for (const Matrix& h : hyper_rows) {
      const Matrix stacked = drop_zero_rows(rref(Matrix::vstack({cur, h})).reduced);
      const std::string key = matrix_key(stacked);
      if (seen.emplace(key, stacked).second) worklist.push_back(stacked);
    }
  }

  std::vector<std::pair<std::string, Matrix>> elems(seen.begin(), seen.end());
  std::sort(elems.begin(), elems.end(), [](const auto& x, const auto& y) {
    const int dx = x.second.rows(), dy = y.second.rows();     // codimension
    if (dx != dy) return dx > dy;                             // smallest subspace first
    return x.first < y.first;
  });

  IntersectionLattice l;
  l.ambient_dim = n;
  l.hyperplane_count = static_cast<int>(a.hyperplanes.size());
  std::vector<std::string> ids;
  for (const auto& [key, ann] : elems) {
    ids.push_back(key);
    l.annihilator.push_back(ann);
    l.basis.push_back(kernel_basis(ann));
    l.subspace_dim.push_back(n - ann.rows());
  }

  // x ≤ y iff ann(y) ⊆ ann(x); covers are the inclusion-minimal pairs.
  const int m = static_cast<int>(ids.size());
  auto below = [&](int x, int y) {
    return x != y && rowspace_contained(l.annihilator[y], l.annihilator[x]);
  };
  std::vector<std::pair<std::string, std::string>> covers;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (!below(x, y)) continue;
      bool mid = false;
      for (int z = 0; z < m && !mid; ++z)
        if (z != x && z != y && below(x, z) && below(z, y)) mid = true;
      if (!mid) covers.emplace_back(ids[x], ids[y]);
    }
  l.poset = BoundedPoset::wrap(Poset::validate(ids, covers));
  return l;
}

namespace {

// The covector line of a coatom x of c0, relative to c0: any annihilator row
// of x outside the annihilator of c0.
Matrix relative_rows(const IntersectionLattice& l, int x) { return l.annihilator[x]; }

// Greedy basis extraction: scan candidates in order and keep those whose
// annihilator enlarges the span over ann(c0).
std::vector<int> greedy_basis(const IntersectionLattice& l, int c0,
                              const std::vector<int>& candidates, int target_rank) {
  Matrix span = l.annihilator[c0];
  std::vector<int> basis;
  for (int x : candidates) {
    if (static_cast<int>(rank(span)) >= target_rank) break;
    const Matrix bigger = Matrix::vstack({span, relative_rows(l, x)});
    if (rank(bigger) > rank(span)) {
      span = bigger;
      basis.push_back(x);
    }
  }
  return basis;
}

int coatom_span_rank(const IntersectionLattice& l, int c0) {
  std::vector<Matrix> rows{l.annihilator[c0]};
  for (int x : l.poset.poset().lower_covers(c0)) rows.push_back(relative_rows(l, x));
  return rank(Matrix::vstack(rows));
}

}  // namespace

ArrangementOrdering arrangement_ordering(const IntersectionLattice& l) {
  ArrangementOrdering out;
  out.family = OrderingFamily::explicit_chains({});
  const Poset& poset = l.poset.poset();

  std::vector<std::vector<int>> chains = l.poset.all_top_chains();
  std::stable_sort(chains.begin(), chains.end(), [&](const auto& a, const auto& b) {
    return poset.degree(a.front()) > poset.degree(b.front());
  });

  for (const auto& chain : chains) {
    const int c0 = chain.front();
    const std::vector<int>& coatoms = poset.lower_covers(c0);
    const int target = coatom_span_rank(l, c0);

    std::vector<int> cset = c_set(l.poset, out.family, chain);

    // Candidate preference: coatoms cut out by the tail's basis elements that
    // precede c0 (in tail order), then the rest of C(c), then the others.
    std::vector<int> preference;
    auto push_unique = [&](int x) {
      if (std::find(preference.begin(), preference.end(), x) == preference.end())
        preference.push_back(x);
    };
    if (chain.size() > 1) {
      const std::vector<int> tail(chain.begin() + 1, chain.end());
      const std::string tail_key = OrderingFamily::chain_key(poset, tail);
      const std::vector<int> tail_order = out.family.coatom_order(l.poset, tail);
      auto basis_it = out.cl3_basis.find(tail_key);
      if (basis_it != out.cl3_basis.end()) {
        for (int b : tail_order) {
          if (b == c0) break;
          if (std::find(basis_it->second.begin(), basis_it->second.end(), b) ==
              basis_it->second.end())
            continue;
          // b ∩ c0 is a coatom of c0 and lies in C(c).
          const Matrix meet = drop_zero_rows(
              rref(Matrix::vstack({l.annihilator[b], l.annihilator[c0]})).reduced);
          const std::string key = matrix_key(meet);
          auto pos = poset.find(key);
          if (pos && std::find(cset.begin(), cset.end(), *pos) != cset.end()) push_unique(*pos);
        }
      }
    }
    for (int x : cset) push_unique(x);
    for (int x : coatoms) push_unique(x);

    const std::vector<int> basis = greedy_basis(l, c0, preference, target);

    // Both C(c) and the basis must come out as initial segments; one always
    // contains the other for the family built this way.
    const std::set<int> cset_set(cset.begin(), cset.end());
    const std::set<int> basis_set(basis.begin(), basis.end());
    const bool basis_in_c =
        std::includes(cset_set.begin(), cset_set.end(), basis_set.begin(), basis_set.end());
    const bool c_in_basis =
        std::includes(basis_set.begin(), basis_set.end(), cset_set.begin(), cset_set.end());
    if (!basis_in_c && !c_in_basis)
      throw internal_error("coatom basis and C(c) are not nested at '" + poset.id(c0) + "'");

    std::vector<int> order;
    for (int x : basis)
      if (cset_set.count(x)) order.push_back(x);
    for (int x : cset)
      if (std::find(order.begin(), order.end(), x) == order.end()) order.push_back(x);
    for (int x : basis)
      if (std::find(order.begin(), order.end(), x) == order.end()) order.push_back(x);
    for (int x : coatoms)
      if (std::find(order.begin(), order.end(), x) == order.end()) order.push_back(x);

    const std::string key = OrderingFamily::chain_key(poset, chain);
    out.family.set_chain_order(key, poset.ids_of(order));
    out.cl3_basis[key] = basis;
  }
  return out;
}

bool verify_cl3(const IntersectionLattice& l, const OrderingFamily& family) {
  for (const auto& chain : l.poset.all_top_chains()) {
    const int c0 = chain.front();
    const std::vector<int> order = family.coatom_order(l.poset, chain);
    const int target = coatom_span_rank(l, c0);
    const int need = target - rank(l.annihilator[c0]);
    if (need > static_cast<int>(order.size())) return false;
    const std::vector<int> prefix(order.begin(), order.begin() + need);
    Matrix span = l.annihilator[c0];
    for (int x : prefix) span = Matrix::vstack({span, relative_rows(l, x)});
    if (rank(span) != target) return false;
  }
  return true;
}

FunctorOnPoset exterior_power_functor(const IntersectionLattice& l, int j) {
  if (j < 0) throw input_error("BadDimension", "negative exterior power");
  const Poset& poset = l.poset.poset();
  FunctorOnPoset f(poset, Variance::Covariant, kQ);
  for (int e = 0; e < poset.size(); ++e)
    f.set_dim(e, static_cast<int>(binomial(l.subspace_dim[e], j)));
  for (const auto& [q, p] : poset.cover_pairs()) {
    auto coords = solve(l.basis[p], l.basis[q]);
    if (!coords) throw internal_error("subspace basis does not include");
    f.set_cover_map(q, p, compound(*coords, j));
  }
  return f;
}

DijTable dij_table(const IntersectionLattice& l, int max_i, int max_j) {
  DijTable table;
  table.max_i = max_i;
  table.max_j = max_j;
  table.entries.assign(max_i + 1, std::vector<long>(max_j + 1, 0));

  std::vector<int> below_top = proper_below_top(l.poset);
  for (int j = 0; j <= max_j; ++j) {
    const FunctorOnPoset f = exterior_power_functor(l, j);
    const GradedDims engine = homology_over(f, below_top);
    const GradedDims oracle = nerve_homology_oracle(f, below_top);
    if (engine != oracle)
      throw internal_error("engine and nerve oracle disagree on the d table at j=" +
                           std::to_string(j));
    for (const auto& [i, dim] : engine)
      if (i <= max_i) table.entries[i][j] = dim;
  }
  return table;
}

long dij_formula(const IntersectionLattice& l, int i, int j) {
  const int d = l.poset.poset().poset_degree();
  const int dim_v = l.ambient_dim;
  if (i == 0 && j >= 0 && j <= d - 2) return binomial(dim_v, j);
  if (i == 0 && j == dim_v - 1) return l.hyperplane_count;
  if (i >= 1 && i <= d - 2 && i + j == d - 1 && l.bottom_dim() == 0) {
    MobiusTable mu(l.poset.poset());
    long total = (i % 2 == 0 ? -1 : 1) * binomial(dim_v, j);
    for (int deg = d - 1 - i; deg <= d - 1; ++deg) {
      long mu_sum = 0;
      for (int e = 0; e < l.poset.poset().size(); ++e)
        if (l.lattice_degree(e) == deg) mu_sum += std::abs(mu.mobius(e, l.poset.top()));
      const int exponent = deg - d + 1 + i;
      total += (exponent % 2 == 0 ? 1 : -1) * binomial(deg, j) * mu_sum;
    }
    return total;
  }
  throw input_error("OutOfFormulaDomain",
                    "no closed formula for (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long result = 1;
  for (int t = 0; t < std::min(k, n - k); ++t) result = result * (n - t) / (t + 1);
  return result;
}

}  // namespace posetcoh
