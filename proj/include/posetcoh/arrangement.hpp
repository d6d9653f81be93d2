#pragma once

#include "posetcoh/functor.hpp"
#include "posetcoh/shellability.hpp"

namespace posetcoh {

// A finite central hyperplane arrangement, given by the normal covectors of
// its hyperplanes (rational, nonzero, pairwise non-proportional).
struct Arrangement {
  int ambient_dim = 0;
  std::vector<std::vector<mpq_class>> hyperplanes;

  void validate() const;
};

// The intersections of the hyperplanes ordered by inclusion, with the full
// space as top. Subspaces are identified by the reduced row echelon form of
// their annihilator covectors, which also fixes the basis used by the
// exterior-power functors.
struct IntersectionLattice {
  BoundedPoset poset;
  int ambient_dim = 0;
  int hyperplane_count = 0;
  std::vector<Matrix> annihilator;   // per element, RREF rows
  std::vector<Matrix> basis;         // per element, columns spanning the subspace
  std::vector<int> subspace_dim;

  int bottom_dim() const { return subspace_dim[poset.bottom()]; }
  // Lattice degree of an element: dim(x) - dim(0̂).
  int lattice_degree(int e) const { return subspace_dim[e] - bottom_dim(); }
};

IntersectionLattice intersection_lattice(const Arrangement& a);

// A recursive coatom ordering in which, for every chain, an initial segment
// of the coatom order is a basis of the span of the coatom covectors. Also
// returns that basis per chain for the CL3 verifier.
struct ArrangementOrdering {
  OrderingFamily family;
  std::map<std::string, std::vector<int>> cl3_basis;  // by chain key
};

ArrangementOrdering arrangement_ordering(const IntersectionLattice& l);

// Checks that each chain's coatom order has a basis of ⟨L_{≺c_0}⟩ as an
// initial segment.
bool verify_cl3(const IntersectionLattice& l, const OrderingFamily& family);

// Covariant functor W ↦ Λ^j(W) with cover maps the j-th compound matrices
// of the basis-change inclusions.
FunctorOnPoset exterior_power_functor(const IntersectionLattice& l, int j);

// d_{i,j} = dim H_i(L∖{V}; Λ^j), computed by the derived engine and
// cross-checked against the nerve oracle.
struct DijTable {
  int max_i = 0;
  int max_j = 0;
  std::vector<std::vector<long>> entries;  // entries[i][j]
};

DijTable dij_table(const IntersectionLattice& l, int max_i, int max_j);

// Closed-form prediction where the dimension formulas apply; throws
// OutOfFormulaDomain elsewhere.
long dij_formula(const IntersectionLattice& l, int i, int j);

long binomial(int n, int k);

}  // namespace posetcoh
