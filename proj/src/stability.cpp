#include "posetcoh/stability.hpp"

namespace posetcoh {

namespace {

void check_degree_range(const BoundedPoset& p, int i) {
  if (i < 1 || i > p.poset().poset_degree() - 1)
    throw input_error("DegreeOutOfRange",
                      "degree " + std::to_string(i) + " outside [1, d(P)-1]");
}

void check_same_base(const BoundedPoset& p, const FunctorOnPoset& f) {
  if (f.base().ids() != p.poset().ids())
    throw input_error("BaseMismatch", "functor and poset have different elements");
}

}  // namespace

StabilityReport check_stability(const BoundedPoset& p, const OrderingFamily& ordering,
                                const FunctorOnPoset& f, int i) {
  check_degree_range(p, i);
  check_same_base(p, f);
  if (f.variance() != Variance::Contravariant)
    throw input_error("WrongVariance", "stability needs a contravariant functor");

  StabilityReport report;
  report.degree = i;
  for (const auto& chain : p.unrefinable_top_chains(i)) {
    const std::vector<int> cset = c_set(p, ordering, chain);
    const std::vector<int> below = p.poset().lower_set(cset);
    const LimitResult lim = limit(f, below);
    const Matrix m = map_into_limit(f, chain.front(), below, &lim);
    const int r = rank(m);
    if (r != lim.dimension)
      report.failures.push_back({chain, r, static_cast<int>(lim.dimension)});
  }
  report.pass = report.failures.empty();
  return report;
}

StabilityReport check_costability(const BoundedPoset& p, const OrderingFamily& ordering,
                                  const FunctorOnPoset& f, int i) {
  check_degree_range(p, i);
  check_same_base(p, f);
  if (f.variance() != Variance::Covariant)
    throw input_error("WrongVariance", "co-stability needs a covariant functor");

  StabilityReport report;
  report.degree = i;
  for (const auto& chain : p.unrefinable_top_chains(i)) {
    const std::vector<int> cset = c_set(p, ordering, chain);
    const std::vector<int> below = p.poset().lower_set(cset);
    const ColimitResult col = colimit(f, below);
    const Matrix m = map_from_colimit(f, chain.front(), below, &col);
    const int r = rank(m);
    if (r != col.dimension)
      report.failures.push_back({chain, r, static_cast<int>(col.dimension)});
  }
  report.pass = report.failures.empty();
  return report;
}

std::vector<int> predict_vanishing(const BoundedPoset& p, const OrderingFamily& ordering,
                                   const FunctorOnPoset& f) {
  std::vector<int> out;
  for (int i = 1; i <= p.poset().poset_degree() - 1; ++i) {
    const StabilityReport r = f.variance() == Variance::Contravariant
                                  ? check_stability(p, ordering, f, i)
                                  : check_costability(p, ordering, f, i);
    if (r.pass) out.push_back(i);
  }
  return out;
}

}  // namespace posetcoh
