#pragma once

#include "posetcoh/arrangement.hpp"
#include "posetcoh/shellability.hpp"

namespace posetcoh {

// A built-in verified poset, usually with a coatom ordering and hand-checked
// expected data.
struct Fixture {
  std::string name;
  BoundedPoset poset;
  std::optional<OrderingFamily> ordering;

  // Expected C(c) sets for length-1 chains, keyed by coatom id.
  std::map<std::string, std::vector<std::string>> expected_c_sets;
  // Expected Möbius values μ(p, q) by id pair.
  std::map<std::pair<std::string, std::string>, long> expected_mobius;
  int expected_degree = -1;       // -1 = unspecified
  std::optional<bool> expected_pure;
};

// Names: boolean-n, partition-n (n ≤ 4), gamma1, gamma2, gamma7, gamma11,
// coord-arr-n, braid-arr-n.
Fixture get_fixture(const std::string& name);

std::vector<std::string> fixture_names();

struct FixtureReport {
  bool pass = false;
  std::vector<std::string> lines;    // one per executed assertion
  std::vector<std::string> failures;
};

// Verifies the ordering, the expected C(c) sets, Möbius values, degree and
// purity claims of a fixture.
FixtureReport run_fixture_assertions(const std::string& name);

// The arrangements behind coord-arr-n / braid-arr-n, reused by tests.
Arrangement coordinate_arrangement(int n);
Arrangement braid_arrangement(int n);

}  // namespace posetcoh
