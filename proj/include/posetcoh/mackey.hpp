#pragma once

#include "posetcoh/functor.hpp"

namespace posetcoh {

// A contravariant functor G together with transfer maps F(j<i): G(j) -> G(i)
// for every strict relation j < i. The round trips α(i,j) = G(j<i)∘F(j<i)
// are the data the weak-Mackey conditions constrain.
struct MackeyData {
  FunctorOnPoset g;
  std::map<std::pair<int, int>, Matrix> transfers;  // keyed (j, i) with j < i

  const Matrix& transfer(int j, int i) const;
  Matrix alpha(int i, int j) const;  // G(j<i) ∘ F(j<i) ∈ End(G(j))

  // Shapes of all transfers against G's dimensions.
  void validate_shapes() const;
};

struct MackeyReport {
  bool ok = false;
  std::vector<std::string> violations;
};

// Weak Mackey conditions: every α(i,j) is G-linear, and for k < i, j < i
// with j ≮ k, the joint kernel of the maps below k is killed by
// G(j<i)∘F(k<i). Over a field, G-linearity of α at j reduces to
// ker G(l<j) ⊆ ker(G(l<j)∘α) for every l < j.
MackeyReport verify_weak_mackey(const MackeyData& m);

// Joint kernel ∩_{l ≺ k} ker(G(l≺k)) as a column basis; covers suffice since
// kernels along longer relations only grow. Zero for minimal k.
Matrix mackey_kernel_at(const MackeyData& m, int k);

// True when every α(i,j) with i, j in the subposet and j < i is an
// invertible G-linear automorphism. Invertibility of the witness β on G(l)
// reduces to injectivity of the induced map on im(G(l<j)).
bool quasi_unit_in(const MackeyData& m, const std::vector<int>& subposet);

}  // namespace posetcoh
