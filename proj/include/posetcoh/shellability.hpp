#pragma once

#include <map>
#include <optional>

#include "posetcoh/poset.hpp"

namespace posetcoh {

// Assigns to each unrefinable chain c ending at the top a total order ⊑_c of
// the coatoms of c_0. Realized either as a single global priority list
// restricted per chain, or explicitly per chain.
class OrderingFamily {
 public:
  static OrderingFamily global(std::vector<std::string> priority);
  static OrderingFamily explicit_chains(std::map<std::string, std::vector<std::string>> orders);

  bool is_global() const { return global_.has_value(); }
  const std::optional<std::vector<std::string>>& global_priority() const { return global_; }
  const std::map<std::string, std::vector<std::string>>& chain_orders() const { return chains_; }

  void set_chain_order(const std::string& key, std::vector<std::string> order);
  void erase_chain_order(const std::string& key) { chains_.erase(key); }

  // "c0<c1<...<top", ids joined in chain order.
  static std::string chain_key(const Poset& p, const std::vector<int>& chain);

  // The coatoms of c_0 in the order ⊑_c. Throws BadOrdering if the family
  // does not produce exactly that set.
  std::vector<int> coatom_order(const BoundedPoset& p, const std::vector<int>& chain) const;

 private:
  std::optional<std::vector<std::string>> global_;
  std::map<std::string, std::vector<std::string>> chains_;
};

// C(c) for an unrefinable chain ending at the top: the coatoms of c_0 lying
// under a coatom of c_1 that precedes c_0 in the tail order. Empty for the
// length-0 chain. Result in insertion order.
std::vector<int> c_set(const BoundedPoset& p, const OrderingFamily& ordering,
                       const std::vector<int>& chain);

struct ShellabilityReport {
  bool pass = false;

  struct Cl1Violation {
    std::vector<int> chain;
    int member;   // element of C(c) ...
    int blocker;  // ... preceded by this non-member
  };
  struct Cl2Violation {
    std::vector<int> chain;
    int h_prime;
    int h;
    int p;  // common lower bound with no valid (h'', q)
  };

  std::vector<Cl1Violation> cl1;
  std::vector<Cl2Violation> cl2;
  std::vector<std::string> family_errors;  // malformed ordering data
};

// Checks CL1 and CL2 for every unrefinable chain to the top (the axiom on
// well-order segments is vacuous for finite posets).
ShellabilityReport verify_ordering(const BoundedPoset& p, const OrderingFamily& ordering);

struct SearchLimits {
  size_t max_chains = 4000;
  size_t max_nodes = 4'000'000;
};

// Backtracking search for a recursive coatom ordering; chains are processed
// by decreasing start degree so CL1 constraints propagate early, candidates
// in lexicographic order of insertion index. nullopt = exhaustive failure.
std::optional<OrderingFamily> find_ordering(const BoundedPoset& p, const SearchLimits& limits = {});

// Necessary condition used as a cheap pre-filter in the search: above every
// element, the codegree ≤ 2 part must be connected.
bool codegree12_final(const BoundedPoset& p, int* witness = nullptr);

struct CompatibilityResult {
  bool compatible = false;
  std::vector<int> witness_chain;
};

// Q ⊆ P_{≺p} is compatible when some unrefinable chain from p to the top
// has Q as an initial segment of its coatom order.
CompatibilityResult is_compatible(const BoundedPoset& p, const OrderingFamily& ordering, int elem,
                                  const std::vector<int>& q);

// The bounded poset ⟨Q⟩ ∪ {p} together with the coatom ordering it inherits
// from a compatible witness chain.
struct InheritedSubposet {
  BoundedPoset poset;
  OrderingFamily ordering;
  std::vector<int> original_elements;
};

InheritedSubposet inherited_subposet(const BoundedPoset& p, const OrderingFamily& ordering,
                                     int elem, const std::vector<int>& q,
                                     const std::vector<int>& witness_chain);

}  // namespace posetcoh
