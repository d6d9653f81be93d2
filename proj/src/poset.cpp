#include "posetcoh/poset.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace posetcoh {

namespace {

std::unordered_map<std::string, int> build_index(const std::vector<std::string>& ids) {
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (!index.emplace(ids[i], static_cast<int>(i)).second)
      throw input_error("DuplicateElement", "element id '" + ids[i] + "' repeated");
  }
  return index;
}

}  // namespace

Poset Poset::validate(const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& covers) {
  Poset p;
  p.ids_ = elements;
  const auto index = build_index(elements);
  const int n = static_cast<int>(elements.size());

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [q_id, p_id] : covers) {
    auto qi = index.find(q_id);
    auto pi = index.find(p_id);
    if (qi == index.end()) throw input_error("UnknownElement", "'" + q_id + "' in covers");
    if (pi == index.end()) throw input_error("UnknownElement", "'" + p_id + "' in covers");
    if (qi->second == pi->second)
      throw input_error("CycleDetected", "self-loop at '" + q_id + "'");
    adj[qi->second][pi->second] = true;
  }

  // Reflexive-transitive closure; a cycle shows up as a < a.
  p.leq_ = adj;
  for (int i = 0; i < n; ++i) p.leq_[i][i] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq_[i][k])
        for (int j = 0; j < n; ++j)
          if (p.leq_[k][j]) p.leq_[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq_[i][j] && p.leq_[j][i])
        throw input_error("CycleDetected",
                          "'" + elements[i] + "' and '" + elements[j] + "' are mutually below");

  // Every declared edge must be a genuine cover.
  for (int q = 0; q < n; ++q)
    for (int pp = 0; pp < n; ++pp) {
      if (!adj[q][pp]) continue;
      for (int r = 0; r < n; ++r) {
        if (r == q || r == pp) continue;
        if (p.leq_[q][r] && p.leq_[r][pp])
          throw input_error("NonCoverPair", "(" + elements[q] + "," + elements[pp] +
                                                ") has intermediate '" + elements[r] + "'");
      }
    }

  p.lower_covers_.assign(n, {});
  p.upper_covers_.assign(n, {});
  for (int pp = 0; pp < n; ++pp)
    for (int q = 0; q < n; ++q)
      if (adj[q][pp]) {
        p.covers_.emplace_back(q, pp);
        p.lower_covers_[pp].push_back(q);
        p.upper_covers_[q].push_back(pp);
      }
  // Canonical cover order: by upper element, then lower.
  std::sort(p.covers_.begin(), p.covers_.end(),
            [](const auto& a, const auto& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });

  // Longest-path relaxation over the cover DAG.
  p.degree_.assign(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [q, pp] : p.covers_)
      if (p.degree_[pp] < p.degree_[q] + 1) {
        p.degree_[pp] = p.degree_[q] + 1;
        changed = true;
      }
  }
  return p;
}

int Poset::index(const std::string& id) const {
  auto f = find(id);
  if (!f) throw input_error("UnknownElement", "'" + id + "'");
  return *f;
}

std::optional<int> Poset::find(const std::string& id) const {
  for (size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == id) return static_cast<int>(i);
  return std::nullopt;
}

bool Poset::is_cover(int q, int p) const {
  const auto& lc = lower_covers_[p];
  return std::find(lc.begin(), lc.end(), q) != lc.end();
}

int Poset::poset_degree() const {
  int d = 0;
  for (int x : degree_) d = std::max(d, x);
  return d;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (lower_covers_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (upper_covers_[i].empty()) out.push_back(i);
  return out;
}

std::optional<int> Poset::unique_minimum() const {
  auto mins = minimal_elements();
  if (mins.size() != 1) return std::nullopt;
  return mins[0];
}

std::optional<int> Poset::unique_maximum() const {
  auto maxs = maximal_elements();
  if (maxs.size() != 1) return std::nullopt;
  return maxs[0];
}

std::vector<int> Poset::lower_set(const std::vector<int>& q) const {
  std::vector<bool> in(size(), false);
  for (int x : q) {
    if (x < 0 || x >= size()) throw input_error("UnknownElement", "index out of range");
    for (int i = 0; i < size(); ++i)
      if (leq_[i][x]) in[i] = true;
  }
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

Poset Poset::induced(const std::vector<int>& elements) const {
  std::vector<std::string> ids;
  ids.reserve(elements.size());
  for (int e : elements) ids.push_back(ids_[e]);
  std::vector<std::pair<std::string, std::string>> covers;
  const int m = static_cast<int>(elements.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !less(elements[a], elements[b])) continue;
      bool has_mid = false;
      for (int c = 0; c < m && !has_mid; ++c)
        if (c != a && c != b && less(elements[a], elements[c]) && less(elements[c], elements[b]))
          has_mid = true;
      if (!has_mid) covers.emplace_back(ids[a], ids[b]);
    }
  return Poset::validate(ids, covers);
}

std::vector<std::vector<int>> Poset::unrefinable_chains_to(int top, int length) const {
  std::vector<std::vector<int>> out;
  std::vector<int> chain{top};
  // Grow downward along covers; chain is kept reversed (top first).
  auto rec = [&](auto&& self, int steps) -> void {
    if (steps == length) {
      std::vector<int> c(chain.rbegin(), chain.rend());
      out.push_back(std::move(c));
      return;
    }
    for (int q : lower_covers_[chain.back()]) {
      chain.push_back(q);
      self(self, steps + 1);
      chain.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<int>> Poset::maximal_chains() const {
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  auto rec = [&](auto&& self, int at) -> void {
    chain.push_back(at);
    if (upper_covers_[at].empty())
      out.push_back(chain);
    else
      for (int p : upper_covers_[at]) self(self, p);
    chain.pop_back();
  };
  for (int m : minimal_elements()) rec(rec, m);
  return out;
}

std::vector<std::vector<int>> Poset::order_complex_faces() const {
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  // Chains grow by elements strictly above the current end, enumerated in
  // index order.
  auto rec = [&](auto&& self, int at) -> void {
    chain.push_back(at);
    out.push_back(chain);
    for (int b = 0; b < size(); ++b)
      if (less(at, b)) self(self, b);
    chain.pop_back();
  };
  for (int a = 0; a < size(); ++a) rec(rec, a);
  return out;
}

bool Poset::is_pure(std::pair<Chain, Chain>* witness) const {
  const auto chains = maximal_chains();
  if (chains.empty()) return true;
  size_t max_i = 0, min_i = 0;
  for (size_t i = 1; i < chains.size(); ++i) {
    if (chains[i].size() > chains[max_i].size()) max_i = i;
    if (chains[i].size() < chains[min_i].size()) min_i = i;
  }
  if (chains[max_i].size() == chains[min_i].size()) return true;
  if (witness) {
    witness->first = Chain{chains[max_i], true};
    witness->second = Chain{chains[min_i], true};
  }
  return false;
}

std::vector<std::string> Poset::ids_of(const std::vector<int>& elements) const {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (int e : elements) out.push_back(ids_[e]);
  return out;
}

BoundedPoset BoundedPoset::wrap(Poset poset, const std::string& bottom, const std::string& top) {
  BoundedPoset b;
  if (bottom.empty()) {
    auto m = poset.unique_minimum();
    if (!m) throw input_error("NotBounded", "no unique minimum and no bottom given");
    b.bottom_ = *m;
  } else {
    b.bottom_ = poset.index(bottom);
  }
  if (top.empty()) {
    auto m = poset.unique_maximum();
    if (!m) throw input_error("NotBounded", "no unique maximum and no top given");
    b.top_ = *m;
  } else {
    b.top_ = poset.index(top);
  }
  for (int i = 0; i < poset.size(); ++i) {
    if (!poset.leq(b.bottom_, i))
      throw input_error("NotBounded", "'" + poset.id(i) + "' not above the bottom");
    if (!poset.leq(i, b.top_))
      throw input_error("NotBounded", "'" + poset.id(i) + "' not below the top");
  }
  // Shortest cover-path to the top, by upward BFS.
  b.codegree_.assign(poset.size(), -1);
  std::queue<int> queue;
  b.codegree_[b.top_] = 0;
  queue.push(b.top_);
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop();
    for (int q : poset.lower_covers(at))
      if (b.codegree_[q] < 0) {
        b.codegree_[q] = b.codegree_[at] + 1;
        queue.push(q);
      }
  }
  b.poset_ = std::move(poset);
  return b;
}

std::vector<std::vector<int>> BoundedPoset::unrefinable_top_chains(int i) const {
  if (i < 0) throw input_error("DegreeOutOfRange", "negative chain length");
  return poset_.unrefinable_chains_to(top_, i);
}

std::vector<std::vector<int>> BoundedPoset::all_top_chains() const {
  std::vector<std::vector<int>> out;
  for (int len = 0; len <= poset_.poset_degree(); ++len)
    for (auto& c : poset_.unrefinable_chains_to(top_, len)) out.push_back(std::move(c));
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : faces) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

SimplicialComplex order_complex(const Poset& p) {
  SimplicialComplex k;
  k.vertices = p.ids();
  k.faces = p.order_complex_faces();
  return k;
}

}  // namespace posetcoh
