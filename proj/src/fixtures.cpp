#include "posetcoh/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "posetcoh/atomic.hpp"

namespace posetcoh {

namespace {

std::string subset_id(const std::vector<int>& s) {
  std::string id = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) id += ",";
    id += std::to_string(s[i]);
  }
  return id + "}";
}

// Larger maximum of the symmetric difference wins; used to order coatom
// restrictions of the Boolean lattice by dropped element.
bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  for (int v = 16; v >= 0; --v) {
    const bool ina = sa.count(v) > 0, inb = sb.count(v) > 0;
    if (ina != inb) return inb;
  }
  return false;
}

Fixture boolean_fixture(int n) {
  if (n < 1 || n > 5) throw input_error("UnknownFixture", "boolean-n supports 1 <= n <= 5");
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i + 1);
    subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<std::string> ids;
  for (const auto& s : subsets) ids.push_back(subset_id(s));
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& s : subsets)
    for (const auto& t : subsets)
      if (t.size() == s.size() + 1 && std::includes(t.begin(), t.end(), s.begin(), s.end()))
        covers.emplace_back(subset_id(s), subset_id(t));

  Fixture f;
  f.name = "boolean-" + std::to_string(n);
  f.poset = BoundedPoset::wrap(Poset::validate(ids, covers));

  std::vector<std::vector<int>> by_colex = subsets;
  std::sort(by_colex.begin(), by_colex.end(),
            [](const auto& a, const auto& b) { return colex_less(b, a); });
  std::vector<std::string> priority;
  for (const auto& s : by_colex) priority.push_back(subset_id(s));
  f.ordering = OrderingFamily::global(priority);

  f.expected_mobius[{ids.front(), ids.back()}] = n % 2 == 0 ? 1 : -1;
  f.expected_degree = n;
  f.expected_pure = true;
  return f;
}

std::string partition_id(const std::vector<std::vector<int>>& blocks) {
  std::string id;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) id += "|";
    for (int v : blocks[i]) id += std::to_string(v);
  }
  return id;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      auto sorted = current;
      for (auto& b : sorted) std::sort(b.begin(), b.end());
      std::sort(sorted.begin(), sorted.end());
      out.push_back(sorted);
      return;
    }
    for (auto& block : current) {
      block.push_back(next);
      self(self, next + 1);
      block.pop_back();
    }
    current.push_back({next});
    self(self, next + 1);
    current.pop_back();
  };
  rec(rec, 1);
  return out;
}

bool refines(const std::vector<std::vector<int>>& fine, const std::vector<std::vector<int>>& coarse) {
  for (const auto& fb : fine) {
    bool inside = false;
    for (const auto& cb : coarse)
      if (std::includes(cb.begin(), cb.end(), fb.begin(), fb.end())) {
        inside = true;
        break;
      }
    if (inside) continue;
    return false;
  }
  return true;
}

Fixture partition_fixture(int n) {
  if (n < 2 || n > 4) throw input_error("UnknownFixture", "partition-n supports 2 <= n <= 4");
  auto parts = set_partitions(n);
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();  // finer first
    return partition_id(a) < partition_id(b);
  });
  std::vector<std::string> ids;
  for (const auto& p : parts) ids.push_back(partition_id(p));
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& fine : parts)
    for (const auto& coarse : parts)
      if (fine.size() == coarse.size() + 1 && refines(fine, coarse))
        covers.emplace_back(partition_id(fine), partition_id(coarse));

  Fixture f;
  f.name = "partition-" + std::to_string(n);
  f.poset = BoundedPoset::wrap(Poset::validate(ids, covers));
  if (f.poset.poset().size() <= 6)
    if (auto found = find_ordering(f.poset)) f.ordering = *found;
  long mu = 1;  // μ(0̂,1̂) = (-1)^{n-1} (n-1)!
  for (int k = 1; k < n; ++k) mu *= -k;
  f.expected_mobius[{ids.front(), ids.back()}] = mu;
  f.expected_degree = n - 1;
  f.expected_pure = true;
  return f;
}

Fixture gamma1_fixture() {
  Fixture f;
  f.name = "gamma1";
  const std::vector<std::string> ids = {"bot", "a",  "c",  "d",  "b",  "ac",
                                        "ad",  "cd", "bc", "bd", "top"};
  std::vector<std::pair<std::string, std::string>> covers = {
      {"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"bot", "d"},
      {"a", "ac"},  {"a", "ad"},  {"c", "ac"},  {"c", "cd"},  {"c", "bc"},
      {"d", "ad"},  {"d", "cd"},  {"d", "bd"},  {"b", "bc"},  {"b", "bd"},
      {"ac", "top"}, {"ad", "top"}, {"cd", "top"}, {"bc", "top"}, {"bd", "top"}};
  f.poset = BoundedPoset::wrap(Poset::validate(ids, covers));
  f.ordering =
      OrderingFamily::global({"ac", "ad", "bc", "bd", "cd", "a", "c", "d", "b", "bot"});
  f.expected_c_sets = {{"ac", {}},
                       {"ad", {"a"}},
                       {"bc", {"c"}},
                       {"bd", {"b", "d"}},
                       {"cd", {"c", "d"}}};
  f.expected_degree = 3;
  f.expected_pure = true;
  return f;
}

Fixture gamma2_fixture() {
  Fixture f;
  f.name = "gamma2";
  const std::vector<std::string> ids = {"am",      "a,m",   "s,v",   "am,u",
                                        "a,m,s,v", "a,m,u", "s,v,u", "top"};
  std::vector<std::pair<std::string, std::string>> covers = {
      {"am", "a,m"},      {"am", "s,v"},      {"am", "am,u"},
      {"a,m", "a,m,s,v"}, {"a,m", "a,m,u"},   {"s,v", "a,m,s,v"}, {"s,v", "s,v,u"},
      {"am,u", "a,m,u"},  {"am,u", "s,v,u"},
      {"a,m,s,v", "top"}, {"a,m,u", "top"},   {"s,v,u", "top"}};
  f.poset = BoundedPoset::wrap(Poset::validate(ids, covers));
  f.ordering = OrderingFamily::global(
      {"s,v,u", "a,m,u", "a,m,s,v", "am,u", "a,m", "s,v", "am"});
  f.expected_c_sets = {{"s,v,u", {}}, {"a,m,u", {"am,u"}}, {"a,m,s,v", {"a,m", "s,v"}}};
  f.expected_degree = 3;
  f.expected_pure = true;
  return f;
}

Fixture gamma7_like_fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  const std::vector<std::string> ids = {"ma",      "a,m",   "s,v",   "ma,w",
                                        "a,m,s,v", "a,m,w", "s,v,w", "top"};
  std::vector<std::pair<std::string, std::string>> covers = {
      {"ma", "a,m"},      {"ma", "s,v"},      {"ma", "ma,w"},
      {"a,m", "a,m,s,v"}, {"a,m", "a,m,w"},   {"s,v", "a,m,s,v"}, {"s,v", "s,v,w"},
      {"ma,w", "a,m,w"},  {"ma,w", "s,v,w"},
      {"a,m,s,v", "top"}, {"a,m,w", "top"},   {"s,v,w", "top"}};
  f.poset = BoundedPoset::wrap(Poset::validate(ids, covers));
  f.ordering = OrderingFamily::global(
      {"s,v,w", "a,m,w", "a,m,s,v", "ma,w", "a,m", "s,v", "ma"});
  f.expected_c_sets = {{"s,v,w", {}}, {"a,m,w", {"ma,w"}}, {"a,m,s,v", {"a,m", "s,v"}}};
  f.expected_degree = 3;
  f.expected_pure = true;
  return f;
}

Fixture arrangement_fixture(const std::string& name, const Arrangement& a, int degree) {
  Fixture f;
  f.name = name;
  const IntersectionLattice l = intersection_lattice(a);
  f.poset = l.poset;
  f.ordering = arrangement_ordering(l).family;
  f.expected_degree = degree;
  f.expected_pure = true;
  return f;
}

int parse_suffix(const std::string& name, const std::string& prefix) {
  const std::string num = name.substr(prefix.size());
  if (num.empty() || num.size() > 2) throw input_error("UnknownFixture", name);
  for (char c : num)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw input_error("UnknownFixture", name);
  return std::stoi(num);
}

}  // namespace

Arrangement coordinate_arrangement(int n) {
  Arrangement a;
  a.ambient_dim = n;
  for (int i = 0; i < n; ++i) {
    std::vector<mpq_class> co(n, 0);
    co[i] = 1;
    a.hyperplanes.push_back(co);
  }
  return a;
}

Arrangement braid_arrangement(int n) {
  Arrangement a;
  a.ambient_dim = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<mpq_class> co(n, 0);
      co[i] = 1;
      co[j] = -1;
      a.hyperplanes.push_back(co);
    }
  return a;
}

Fixture get_fixture(const std::string& name) {
  if (name.rfind("boolean-", 0) == 0) return boolean_fixture(parse_suffix(name, "boolean-"));
  if (name.rfind("partition-", 0) == 0) return partition_fixture(parse_suffix(name, "partition-"));
  if (name == "gamma1") return gamma1_fixture();
  if (name == "gamma2") return gamma2_fixture();
  if (name == "gamma7") return gamma7_like_fixture("gamma7");
  if (name == "gamma11") return gamma7_like_fixture("gamma11");
  if (name.rfind("coord-arr-", 0) == 0) {
    const int n = parse_suffix(name, "coord-arr-");
    if (n < 1 || n > 4) throw input_error("UnknownFixture", "coord-arr-n supports 1 <= n <= 4");
    return arrangement_fixture(name, coordinate_arrangement(n), n);
  }
  if (name.rfind("braid-arr-", 0) == 0) {
    const int n = parse_suffix(name, "braid-arr-");
    if (n < 2 || n > 4) throw input_error("UnknownFixture", "braid-arr-n supports 2 <= n <= 4");
    return arrangement_fixture(name, braid_arrangement(n), n - 1);
  }
  throw input_error("UnknownFixture", name);
}

std::vector<std::string> fixture_names() {
  return {"boolean-2", "boolean-3",  "boolean-4",  "partition-3", "partition-4",
          "gamma1",    "gamma2",     "gamma7",     "gamma11",     "coord-arr-2",
          "coord-arr-3", "coord-arr-4", "braid-arr-3", "braid-arr-4"};
}

FixtureReport run_fixture_assertions(const std::string& name) {
  const Fixture f = get_fixture(name);
  FixtureReport report;

  auto check = [&](bool ok, const std::string& what) {
    report.lines.push_back((ok ? "ok: " : "FAIL: ") + what);
    if (!ok) report.failures.push_back(what);
  };

  if (f.expected_degree >= 0)
    check(f.poset.poset().poset_degree() == f.expected_degree,
          "degree equals " + std::to_string(f.expected_degree));
  if (f.expected_pure) check(f.poset.poset().is_pure() == *f.expected_pure, "purity");

  if (f.ordering) {
    const ShellabilityReport shell = verify_ordering(f.poset, *f.ordering);
    check(shell.pass, "coatom ordering satisfies the shellability axioms");
    for (const auto& [coatom, expected] : f.expected_c_sets) {
      const std::vector<int> chain = {f.poset.poset().index(coatom), f.poset.top()};
      const auto got = f.poset.poset().ids_of(c_set(f.poset, *f.ordering, chain));
      std::vector<std::string> want = expected;
      std::sort(want.begin(), want.end());
      auto sorted = got;
      std::sort(sorted.begin(), sorted.end());
      check(sorted == want, "C(" + coatom + ") matches");
    }
  } else {
    check(f.expected_c_sets.empty(), "no ordering, no expected C sets");
  }

  for (const auto& [pq, value] : f.expected_mobius) {
    const long got =
        mobius(f.poset.poset(), f.poset.poset().index(pq.first), f.poset.poset().index(pq.second));
    check(got == value, "mobius(" + pq.first + "," + pq.second + ") = " + std::to_string(value));
  }

  report.pass = report.failures.empty();
  return report;
}

}  // namespace posetcoh
