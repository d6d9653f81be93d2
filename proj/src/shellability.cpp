#include "posetcoh/shellability.hpp"

#include <algorithm>
#include <set>

namespace posetcoh {

OrderingFamily OrderingFamily::global(std::vector<std::string> priority) {
  OrderingFamily f;
  f.global_ = std::move(priority);
  return f;
}

OrderingFamily OrderingFamily::explicit_chains(
    std::map<std::string, std::vector<std::string>> orders) {
  OrderingFamily f;
  f.chains_ = std::move(orders);
  return f;
}

void OrderingFamily::set_chain_order(const std::string& key, std::vector<std::string> order) {
  chains_[key] = std::move(order);
}

std::string OrderingFamily::chain_key(const Poset& p, const std::vector<int>& chain) {
  std::string key;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i) key += "<";
    key += p.id(chain[i]);
  }
  return key;
}

namespace {

void check_top_chain(const BoundedPoset& p, const std::vector<int>& chain) {
  if (chain.empty() || chain.back() != p.top())
    throw input_error("ChainNotToTop", "chain must end at the top");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!p.poset().is_cover(chain[i], chain[i + 1]))
      throw input_error("NotUnrefinable", "'" + p.poset().id(chain[i]) + "' ≺ '" +
                                              p.poset().id(chain[i + 1]) + "' is not a cover");
}

}  // namespace

std::vector<int> OrderingFamily::coatom_order(const BoundedPoset& p,
                                              const std::vector<int>& chain) const {
  check_top_chain(p, chain);
  const std::vector<int>& coatoms = p.poset().lower_covers(chain.front());
  std::vector<int> result;
  if (global_) {
    std::map<std::string, size_t> pos;
    for (size_t i = 0; i < global_->size(); ++i) pos[(*global_)[i]] = i;
    result = coatoms;
    for (int c : coatoms)
      if (!pos.count(p.poset().id(c)))
        throw input_error("BadOrdering",
                          "global priority misses element '" + p.poset().id(c) + "'");
    std::sort(result.begin(), result.end(),
              [&](int a, int b) { return pos[p.poset().id(a)] < pos[p.poset().id(b)]; });
    return result;
  }
  const std::string key = chain_key(p.poset(), chain);
  auto it = chains_.find(key);
  if (it == chains_.end()) throw input_error("BadOrdering", "no order stored for chain " + key);
  for (const std::string& id : it->second) result.push_back(p.poset().index(id));
  std::set<int> given(result.begin(), result.end());
  std::set<int> expected(coatoms.begin(), coatoms.end());
  if (given != expected || result.size() != given.size())
    throw input_error("BadOrdering", "order for chain " + key + " is not a permutation of the coatoms");
  return result;
}

std::vector<int> c_set(const BoundedPoset& p, const OrderingFamily& ordering,
                       const std::vector<int>& chain) {
  check_top_chain(p, chain);
  if (chain.size() == 1) return {};
  const int c0 = chain[0];
  const std::vector<int> tail(chain.begin() + 1, chain.end());
  const std::vector<int> tail_order = ordering.coatom_order(p, tail);
  std::vector<int> before;  // coatoms of c_1 strictly before c_0
  for (int h : tail_order) {
    if (h == c0) break;
    before.push_back(h);
  }
  std::vector<int> out;
  for (int x : p.poset().lower_covers(c0)) {
    bool in = false;
    for (int h : before)
      if (p.poset().less(x, h)) {
        in = true;
        break;
      }
    if (in) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool cl1_holds(const std::vector<int>& order, const std::vector<int>& cset,
               ShellabilityReport::Cl1Violation* violation) {
  const std::set<int> members(cset.begin(), cset.end());
  size_t expect = members.size();
  for (size_t i = 0; i < expect; ++i) {
    if (!members.count(order[i])) {
      if (violation) {
        // Some member appears after this non-member.
        for (size_t j = i + 1; j < order.size(); ++j)
          if (members.count(order[j])) {
            violation->member = order[j];
            violation->blocker = order[i];
            break;
          }
      }
      return false;
    }
  }
  return true;
}

bool cl2_holds(const Poset& poset, const std::vector<int>& order, std::vector<int>* viol) {
  for (size_t hi = 0; hi < order.size(); ++hi) {
    const int h = order[hi];
    for (size_t hpi = 0; hpi < hi; ++hpi) {
      const int hp = order[hpi];
      for (int p = 0; p < poset.size(); ++p) {
        if (!poset.less(p, h) || !poset.less(p, hp)) continue;
        bool ok = false;
        for (size_t k = 0; k < hi && !ok; ++k) {
          const int hpp = order[k];
          for (int q : poset.lower_covers(h))
            if (poset.leq(p, q) && poset.less(q, hpp)) {
              ok = true;
              break;
            }
        }
        if (!ok) {
          if (viol) *viol = {hp, h, p};
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

ShellabilityReport verify_ordering(const BoundedPoset& p, const OrderingFamily& ordering) {
  ShellabilityReport report;
  for (const auto& chain : p.all_top_chains()) {
    std::vector<int> order, cset;
    try {
      order = ordering.coatom_order(p, chain);
      cset = c_set(p, ordering, chain);
    } catch (const Error& e) {
      report.family_errors.push_back(e.what());
      continue;
    }
    ShellabilityReport::Cl1Violation v1{chain, -1, -1};
    if (!cl1_holds(order, cset, &v1)) report.cl1.push_back(v1);
    std::vector<int> v2;
    if (!cl2_holds(p.poset(), order, &v2))
      report.cl2.push_back({chain, v2[0], v2[1], v2[2]});
  }
  report.pass = report.cl1.empty() && report.cl2.empty() && report.family_errors.empty();
  return report;
}

bool codegree12_final(const BoundedPoset& p, int* witness) {
  const Poset& poset = p.poset();
  for (int e = 0; e < poset.size(); ++e) {
    if (e == p.top()) continue;
    std::vector<int> q;
    for (int x = 0; x < poset.size(); ++x)
      if (poset.leq(e, x) && (p.codegree(x) == 1 || p.codegree(x) == 2)) q.push_back(x);
    if (q.empty()) continue;
    // Connectivity of the comparability graph on q.
    std::vector<int> stack{0};
    std::set<int> seen{0};
    while (!stack.empty()) {
      const int at = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < q.size(); ++j)
        if (!seen.count(static_cast<int>(j)) &&
            (poset.less(q[at], q[j]) || poset.less(q[j], q[at]))) {
          seen.insert(static_cast<int>(j));
          stack.push_back(static_cast<int>(j));
        }
    }
    if (seen.size() != q.size()) {
      if (witness) *witness = e;
      return false;
    }
  }
  return true;
}

namespace {

// Candidate orders for one chain: C(c) first (all permutations), the rest
// after, filtered by CL2. Enumerated lexicographically by insertion index.
std::vector<std::vector<int>> candidate_orders(const Poset& poset, const std::vector<int>& coatoms,
                                               const std::vector<int>& cset) {
  std::vector<int> members = cset;
  std::vector<int> rest;
  const std::set<int> in_c(cset.begin(), cset.end());
  for (int c : coatoms)
    if (!in_c.count(c)) rest.push_back(c);
  std::sort(members.begin(), members.end());
  std::sort(rest.begin(), rest.end());

  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> head_perms{{}};
  std::vector<int> head = members;
  do {
    std::vector<int> tail = rest;
    do {
      std::vector<int> order = head;
      order.insert(order.end(), tail.begin(), tail.end());
      if (cl2_holds(poset, order, nullptr)) out.push_back(order);
    } while (std::next_permutation(tail.begin(), tail.end()));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

}  // namespace

std::optional<OrderingFamily> find_ordering(const BoundedPoset& p, const SearchLimits& limits) {
  if (!codegree12_final(p)) return std::nullopt;

  std::vector<std::vector<int>> chains = p.all_top_chains();
  if (chains.size() > limits.max_chains)
    throw Error("SizeGuardExceeded", "too many chains: " + std::to_string(chains.size()));
  // Decreasing start degree, so every chain's tail is assigned first.
  std::stable_sort(chains.begin(), chains.end(), [&](const auto& a, const auto& b) {
    return p.poset().degree(a.front()) > p.poset().degree(b.front());
  });

  OrderingFamily family = OrderingFamily::explicit_chains({});
  size_t nodes = 0;
  auto assign = [&](auto&& self, size_t at) -> bool {
    if (at == chains.size()) return true;
    if (++nodes > limits.max_nodes)
      throw Error("SizeGuardExceeded", "search budget exhausted");
    const auto& chain = chains[at];
    const std::string key = OrderingFamily::chain_key(p.poset(), chain);
    const std::vector<int> cset = c_set(p, family, chain);
    for (auto& order : candidate_orders(p.poset(), p.poset().lower_covers(chain.front()), cset)) {
      family.set_chain_order(key, p.poset().ids_of(order));
      if (self(self, at + 1)) return true;
    }
    family.erase_chain_order(key);
    return false;
  };
  if (assign(assign, 0)) return family;
  return std::nullopt;
}

CompatibilityResult is_compatible(const BoundedPoset& p, const OrderingFamily& ordering, int elem,
                                  const std::vector<int>& q) {
  for (int x : q)
    if (!p.poset().is_cover(x, elem))
      throw input_error("NotCoatomOf",
                        "'" + p.poset().id(x) + "' is not a coatom of '" + p.poset().id(elem) + "'");
  const std::set<int> want(q.begin(), q.end());
  for (int len = 0; len <= p.poset().poset_degree(); ++len) {
    for (const auto& chain : p.unrefinable_top_chains(len)) {
      if (chain.front() != elem) continue;
      const std::vector<int> order = ordering.coatom_order(p, chain);
      if (order.size() < want.size()) continue;
      std::set<int> prefix(order.begin(), order.begin() + want.size());
      if (prefix == want) return {true, chain};
    }
  }
  return {false, {}};
}

InheritedSubposet inherited_subposet(const BoundedPoset& p, const OrderingFamily& ordering,
                                     int elem, const std::vector<int>& q,
                                     const std::vector<int>& witness_chain) {
  std::vector<int> elems = p.poset().lower_set(q);
  if (std::find(elems.begin(), elems.end(), elem) == elems.end()) elems.push_back(elem);
  std::sort(elems.begin(), elems.end());

  InheritedSubposet out{BoundedPoset::wrap(p.poset().induced(elems), "", p.poset().id(elem)),
                        OrderingFamily::explicit_chains({}), elems};

  // Each chain of the subposet extends by the witness chain; its coatom
  // order is the restriction of the big poset's order on that extension.
  for (const auto& sub_chain : out.poset.all_top_chains()) {
    std::vector<int> big_chain;
    for (int pos : sub_chain) big_chain.push_back(elems[pos]);
    big_chain.insert(big_chain.end(), witness_chain.begin() + 1, witness_chain.end());
    const std::vector<int> big_order = ordering.coatom_order(p, big_chain);
    std::vector<std::string> order_ids;
    for (int x : big_order) {
      const std::string& id = p.poset().id(x);
      if (out.poset.poset().find(id)) order_ids.push_back(id);
    }
    out.ordering.set_chain_order(OrderingFamily::chain_key(out.poset.poset(), sub_chain),
                                 std::move(order_ids));
  }
  return out;
}

}  // namespace posetcoh
