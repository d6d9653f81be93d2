#pragma once

#include "posetcoh/functor.hpp"
#include "posetcoh/shellability.hpp"

namespace posetcoh {

// Result of a (co)stability check at one degree. A failing chain records the
// rank of the natural map and the dimension it would need.
struct StabilityReport {
  int degree = 0;
  bool pass = false;

  struct Failure {
    std::vector<int> chain;
    int map_rank = 0;
    int required = 0;  // lim dimension (surjectivity) or source dimension (injectivity)
  };
  std::vector<Failure> failures;
};

// F(c_0) -> lim over ⟨C(c)⟩ must be surjective for every unrefinable chain
// of length i ending at the top.
StabilityReport check_stability(const BoundedPoset& p, const OrderingFamily& ordering,
                                const FunctorOnPoset& f, int i);

// Dual: colim over ⟨C(c)⟩ -> F(c_0) must be injective.
StabilityReport check_costability(const BoundedPoset& p, const OrderingFamily& ordering,
                                  const FunctorOnPoset& f, int i);

// Degrees in [1, d(P)-1] where the check passes, hence where the
// corresponding (co)homology over P∖{1̂} is guaranteed to vanish.
std::vector<int> predict_vanishing(const BoundedPoset& p, const OrderingFamily& ordering,
                                   const FunctorOnPoset& f);

}  // namespace posetcoh
