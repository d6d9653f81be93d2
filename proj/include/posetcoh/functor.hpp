#pragma once

#include <map>

#include "posetcoh/complex.hpp"
#include "posetcoh/poset.hpp"

namespace posetcoh {

enum class Variance { Contravariant, Covariant };

inline const char* variance_name(Variance v) {
  return v == Variance::Contravariant ? "contra" : "co";
}

// A functor from a finite poset to finite-dimensional modules over an exact
// field. Only cover maps are stored; maps along longer relations are the
// (validated) composites.
//
// Shapes: for a cover q ≺ p, a contravariant functor stores
// F(q≺p): F(p) -> F(q), a covariant one F(q≺p): F(q) -> F(p).
class FunctorOnPoset {
 public:
  FunctorOnPoset(Poset base, Variance variance, Field field);

  const Poset& base() const { return base_; }
  Variance variance() const { return variance_; }
  const Field& field() const { return field_; }

  int dim(int p) const { return dims_[p]; }
  void set_dim(int p, int d);
  void set_cover_map(int q, int p, Matrix m);
  const Matrix& cover_map(int q, int p) const;
  bool has_cover_map(int q, int p) const;

  // Composite along an arbitrary unrefinable path from q up to p (q ≤ p).
  // For q = p this is the identity.
  Matrix map_along(int q, int p) const;

  // Checks that every cover has a map of the right shape and that all
  // unrefinable-chain composites between comparable pairs agree. Returns
  // human-readable violations; empty means the functor is valid.
  std::vector<std::string> validate() const;
  void validate_or_throw() const;

  // Restriction to the induced subposet on `elements` (cover maps of the
  // subposet are composites in the base).
  FunctorOnPoset restrict(const std::vector<int>& elements) const;

 private:
  Poset base_;
  Variance variance_;
  Field field_;
  std::vector<int> dims_;
  std::map<std::pair<int, int>, Matrix> cover_maps_;
};

// Cover pairs of the induced subposet on `elements`, as index pairs into
// `elements` (a ≺ b positions).
std::vector<std::pair<int, int>> induced_covers(const Poset& base, const std::vector<int>& elements);

// Limit of a contravariant functor over an induced subposet: the maximal
// subspace of the product over elements compatible with all structure maps.
struct LimitResult {
  long dimension = 0;
  // Inclusion of the limit into the product of the values (rows grouped by
  // element, in the order given to `limit`).
  Matrix inclusion;
  // Projection onto each element's value: proj[k] * inclusion-coordinates.
  std::vector<Matrix> projections;
  std::vector<int> elements;
};

LimitResult limit(const FunctorOnPoset& f, const std::vector<int>& subposet);

// Colimit of a covariant functor over an induced subposet.
struct ColimitResult {
  long dimension = 0;
  // Quotient map from the direct sum of the values (columns grouped by
  // element) onto the colimit.
  Matrix quotient;
  std::vector<Matrix> coprojections;
  std::vector<int> elements;
};

ColimitResult colimit(const FunctorOnPoset& f, const std::vector<int>& subposet);

// The canonical map F(p) -> lim_Q F for contravariant F and Q ⊆ P_{<p}.
Matrix map_into_limit(const FunctorOnPoset& f, int p, const std::vector<int>& subposet,
                      const LimitResult* precomputed = nullptr);

// The canonical map colim_Q F -> F(p) for covariant F and Q ⊆ P_{<p}.
Matrix map_from_colimit(const FunctorOnPoset& f, int p, const std::vector<int>& subposet,
                        const ColimitResult* precomputed = nullptr);

}  // namespace posetcoh
