#pragma once

#include "posetcoh/functor.hpp"

namespace posetcoh {

// Factorization of a chain map through the mapping cocylinder:
// f = projection ∘ inclusion with the inclusion a quasi-isomorphism and the
// projection a split epimorphism.
struct CocylinderResult {
  CochainComplex complex;
  DegreewiseMap inclusion;   // source -> cocyl, c ↦ (c, 0, f(c))
  DegreewiseMap projection;  // cocyl -> target, (c, d, d') ↦ d'
};

// cocyl(f)^n = C^n × D^{n-1} × D^n with ∂(c,d,d') = (∂c, d' - f(c) - ∂d, ∂d').
CocylinderResult cocylinder(const CochainComplex& source, const CochainComplex& target,
                            const DegreewiseMap& f);

// Factorization through the mapping cylinder: the inclusion is a degreewise
// monomorphism, the projection (c,c',d) ↦ f(c) + d a split epimorphism and a
// quasi-isomorphism onto the target.
struct CylinderResult {
  ChainComplex complex;
  DegreewiseMap inclusion;   // source -> cyl, c ↦ (c, 0, 0)
  DegreewiseMap projection;  // cyl -> target
};

// cyl(f)_n = C_n × C_{n-1} × D_n with ∂(c,c',d) = (∂c + c', -∂c', ∂d - f(c')).
CylinderResult cylinder(const ChainComplex& source, const ChainComplex& target,
                        const DegreewiseMap& f);

// A functor into cochain complexes over a poset, with one chain map per
// cover. Contravariant: map(q≺p) : at[p] -> at[q].
struct CochainFunctor {
  Poset base;
  Field field;
  std::vector<CochainComplex> at;
  std::map<std::pair<int, int>, DegreewiseMap> cover_maps;

  DegreewiseMap map_along(int q, int p) const;
  // Chain-map shapes and degreewise path independence.
  void validate() const;
};

// Covariant counterpart into chain complexes: map(q≺p) : at[q] -> at[p].
struct ChainFunctor {
  Poset base;
  Field field;
  std::vector<ChainComplex> at;
  std::map<std::pair<int, int>, DegreewiseMap> cover_maps;

  DegreewiseMap map_along(int q, int p) const;
  void validate() const;
};

// Degreewise limit of a cochain-valued functor over a sub-collection of its
// base (positions into `elements` index the projections).
struct ComplexLimit {
  CochainComplex complex;
  std::vector<DegreewiseMap> projections;
  std::vector<int> elements;
};

ComplexLimit limit_of_complexes(const CochainFunctor& f, const std::vector<int>& elements);

struct ComplexColimit {
  ChainComplex complex;
  std::vector<DegreewiseMap> coprojections;
  std::vector<int> elements;
};

ComplexColimit colimit_of_complexes(const ChainFunctor& f, const std::vector<int>& elements);

// Fibrant replacement of a contravariant module-valued functor, built
// inductively in degree order: each value is the cocylinder of
// F(p) -> lim over the strictly-below part of the replacement so far. The
// result is degreewise-surjective onto those limits and quasi-isomorphic to
// F at every element.
struct FibrantReplacement {
  CochainFunctor rf;
  // unit[p] : F(p) -> RF(p)^0, the degree-0 component of the weak
  // equivalence F -> RF.
  std::vector<Matrix> unit;
};

FibrantReplacement fibrant_replacement(const FunctorOnPoset& f);

// Cofibrant replacement of a covariant functor via mapping cylinders of
// colim QF -> colim F -> F(p); colim QF -> QF(p) is a degreewise
// monomorphism and QF(p) -> F(p) a quasi-isomorphism.
struct CofibrantReplacement {
  ChainFunctor qf;
  // counit[p] : QF(p)_0 -> F(p), degree-0 component of QF -> F.
  std::vector<Matrix> counit;
};

CofibrantReplacement cofibrant_replacement(const FunctorOnPoset& f);

// Higher limits of a contravariant functor over the induced subposet on
// `elements`, computed as the cohomology of the limit of the fibrant
// replacement built on that subposet.
GradedDims cohomology_over(const FunctorOnPoset& f, const std::vector<int>& elements);

// Over P∖{1̂} of a bounded poset.
GradedDims cohomology(const FunctorOnPoset& f, const BoundedPoset& p);

GradedDims homology_over(const FunctorOnPoset& f, const std::vector<int>& elements);
GradedDims homology(const FunctorOnPoset& f, const BoundedPoset& p);

// Independent oracles: the chain-level nerve replacements. The cochain
// degree-n part is the product over n-chains q_0 < ... < q_n of F(q_0); the
// first face applies F(q_0<q_1), the others drop an element.
GradedDims nerve_cohomology_oracle(const FunctorOnPoset& f, const std::vector<int>& elements);
GradedDims nerve_homology_oracle(const FunctorOnPoset& f, const std::vector<int>& elements);

// The assembled nerve complexes, exposed for tests.
CochainComplex nerve_cochain_complex(const FunctorOnPoset& f, const std::vector<int>& elements);
ChainComplex nerve_chain_complex(const FunctorOnPoset& f, const std::vector<int>& elements);

// Elements of P∖{1̂} in insertion order.
std::vector<int> proper_below_top(const BoundedPoset& p);

}  // namespace posetcoh
