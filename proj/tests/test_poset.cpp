#include <doctest.h>

#include <algorithm>
#include <set>

#include "posetcoh/fixtures.hpp"
#include "posetcoh/poset.hpp"
#include "support/test_helpers.hpp"

using namespace posetcoh;

TEST_CASE("validate accepts chains and rejects bad input") {
  const Poset two = Poset::validate({"a", "b"}, {{"a", "b"}});
  CHECK(two.less(0, 1));
  CHECK(two.is_cover(0, 1));

  CHECK_THROWS_AS(Poset::validate({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
                  InputError);  // transitive edge is not a cover
  CHECK_THROWS_AS(Poset::validate({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  CHECK_THROWS_AS(Poset::validate({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(Poset::validate({"a"}, {{"a", "z"}}), InputError);
}

TEST_CASE("degrees and codegrees") {
  const Fixture b3 = get_fixture("boolean-3");
  const Poset& p = b3.poset.poset();
  CHECK(p.degree(b3.poset.bottom()) == 0);
  CHECK(p.degree(b3.poset.top()) == 3);
  CHECK(p.poset_degree() == 3);
  CHECK(b3.poset.codegree(b3.poset.top()) == 0);
  for (int h : b3.poset.coatoms()) CHECK(b3.poset.codegree(h) == 1);

  const Fixture b4 = get_fixture("boolean-4");
  for (int a : b4.poset.atoms()) CHECK(b4.poset.codegree(a) == 3);

  const Fixture g1 = get_fixture("gamma1");
  CHECK(g1.poset.poset().poset_degree() == 3);

  // Degree is strictly order preserving.
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.less(a, b)) CHECK(p.degree(a) < p.degree(b));
}

TEST_CASE("purity") {
  CHECK(get_fixture("boolean-3").poset.poset().is_pure());

  const Poset non_pure = Poset::validate(
      {"a", "b", "c1", "c2", "d"},
      {{"a", "b"}, {"b", "d"}, {"a", "c1"}, {"c1", "c2"}, {"c2", "d"}});
  std::pair<Chain, Chain> witness;
  CHECK_FALSE(non_pure.is_pure(&witness));
  std::set<int> lengths{witness.first.length(), witness.second.length()};
  CHECK(lengths == std::set<int>{2, 3});

  const Fixture g2 = get_fixture("gamma2");
  CHECK(g2.poset.poset().is_pure());

  // Pure bounded: degree + codegree is constant.
  const Fixture b4 = get_fixture("boolean-4");
  for (int e = 0; e < b4.poset.poset().size(); ++e)
    CHECK(b4.poset.poset().degree(e) + b4.poset.codegree(e) == 4);
}

TEST_CASE("lower sets") {
  const Fixture g1 = get_fixture("gamma1");
  const Poset& p = g1.poset.poset();
  CHECK(p.lower_set({}).empty());
  CHECK(p.lower_set({g1.poset.top()}).size() == static_cast<size_t>(p.size()));

  const auto below = p.ids_of(p.lower_set({p.index("b"), p.index("d")}));
  CHECK(below == std::vector<std::string>{"bot", "d", "b"});

  // The lower set of the coatoms plus the top is everything.
  auto all = p.lower_set(g1.poset.coatoms());
  all.push_back(g1.poset.top());
  CHECK(all.size() == static_cast<size_t>(p.size()));
}

TEST_CASE("unrefinable chains to the top") {
  const Fixture b3 = get_fixture("boolean-3");
  CHECK(b3.poset.unrefinable_top_chains(0) ==
        std::vector<std::vector<int>>{{b3.poset.top()}});
  CHECK(b3.poset.unrefinable_top_chains(3).size() == 6);

  const Fixture g1 = get_fixture("gamma1");
  CHECK(g1.poset.unrefinable_top_chains(1).size() == 5);

  // Maximal chains in a pure bounded poset start at the bottom.
  for (const auto& c : b3.poset.unrefinable_top_chains(3)) CHECK(c.front() == b3.poset.bottom());
}

TEST_CASE("order complex") {
  const Poset antichain = Poset::validate({"x", "y"}, {});
  const SimplicialComplex k = order_complex(antichain);
  CHECK(k.faces.size() == 2);
  CHECK(k.dimension() == 0);

  // Proper part of the size-4 subset lattice is a 2-sphere.
  const Fixture b4 = get_fixture("boolean-4");
  std::vector<int> proper;
  for (int e = 0; e < b4.poset.poset().size(); ++e)
    if (e != b4.poset.top() && e != b4.poset.bottom()) proper.push_back(e);
  const SimplicialComplex sphere = order_complex(b4.poset.poset().induced(proper));
  const GradedDims expected{{0, 1}, {2, 1}};
  CHECK(testing::simplicial_cohomology(sphere, Field::rationals()) == expected);
}

TEST_CASE("bounded wrap validates and infers bounds") {
  const Poset v = Poset::validate({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  CHECK_THROWS_AS(BoundedPoset::wrap(v), InputError);  // two maxima
  const Poset line = Poset::validate({"a", "b"}, {{"a", "b"}});
  const BoundedPoset b = BoundedPoset::wrap(line);
  CHECK(b.bottom() == 0);
  CHECK(b.top() == 1);
}

TEST_CASE("random posets have consistent degree data") {
  testing::Rng rng(97531);
  for (int trial = 0; trial < 40; ++trial) {
    const Poset p = testing::random_poset(rng, 8);
    for (const auto& [q, pp] : p.cover_pairs()) {
      CHECK(p.less(q, pp));
      CHECK(p.degree(q) < p.degree(pp));
    }
  }
}
