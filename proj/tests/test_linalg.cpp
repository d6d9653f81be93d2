#include <doctest.h>

#include "posetcoh/complex.hpp"
#include "posetcoh/matrix.hpp"
#include "support/test_helpers.hpp"

using namespace posetcoh;

namespace {
const Field kQ = Field::rationals();
const Field kF5 = Field::prime_field(5);

Matrix mat(const Field& f, std::vector<std::vector<long>> rows) {
  std::vector<std::vector<mpq_class>> conv;
  for (auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return Matrix::from_rows(f, conv);
}
}  // namespace

TEST_CASE("field parsing and arithmetic") {
  CHECK(Field::parse("Q").is_rationals());
  CHECK(Field::parse("Fp:5").characteristic() == 5);
  CHECK_THROWS_AS(Field::parse("Fp:6"), InputError);
  CHECK_THROWS_AS(Field::parse("R"), InputError);

  CHECK(parse_scalar(kQ, "2/4").value == mpq_class(1, 2));
  CHECK(parse_scalar(kF5, "7").value == 2);
  CHECK(parse_scalar(kF5, "1/2").value == 3);  // inverse of 2 mod 5
  CHECK(kF5.inv(mpq_class(3)) == 2);
  CHECK_THROWS(kF5.inv(mpq_class(0)));
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(Matrix::identity(kQ, 3)).cols() == 0);
  CHECK(kernel_basis(Matrix::zero(kQ, 2, 3)).cols() == 3);

  const Matrix m = mat(kQ, {{1, 1}, {1, 1}});
  const Matrix k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(k.at(0, 0) == -k.at(1, 0));  // spans (1,-1)

  const Matrix k5 = kernel_basis(mat(kF5, {{1, 1}, {1, 1}}));
  CHECK(k5.cols() == 1);
}

TEST_CASE("injectivity and surjectivity") {
  CHECK(is_injective(Matrix::identity(kQ, 2)));
  CHECK(is_surjective(Matrix::identity(kQ, 2)));
  CHECK_FALSE(is_surjective(Matrix::zero(kQ, 1, 1)));
  const Matrix m = mat(kQ, {{1, 0}, {0, 1}, {0, 0}});
  CHECK(is_injective(m));
  CHECK_FALSE(is_surjective(m));
}

TEST_CASE("solve and inverse") {
  const Matrix a = mat(kQ, {{2, 1}, {1, 1}});
  const Matrix b = mat(kQ, {{1}, {0}});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(*inv * a == Matrix::identity(kQ, 2));

  // Inconsistent system.
  CHECK_FALSE(solve(mat(kQ, {{1, 1}, {1, 1}}), mat(kQ, {{1}, {0}})));

  // Left solve: X A = B.
  auto y = solve_left(a, b.transpose());
  REQUIRE(y);
  CHECK(*y * a == b.transpose());
}

TEST_CASE("cokernel projection") {
  const Matrix m = mat(kQ, {{1}, {1}});
  const Matrix q = cokernel_projection(m);
  CHECK(q.rows() == 1);
  CHECK((q * m).is_zero());
  CHECK(rank(q) == 1);
}

TEST_CASE("determinant and compound matrices") {
  CHECK(determinant(mat(kQ, {{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(mat(kQ, {{1, 2}, {2, 4}})) == 0);
  CHECK(compound(Matrix::identity(kQ, 4), 2) == Matrix::identity(kQ, 6));

  // Multiplicativity on seeded random 3x3 pairs.
  testing::Rng rng(20240817);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a(kQ, 3, 3), b(kQ, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a.set(i, j, entry(rng));
        b.set(i, j, entry(rng));
      }
    CHECK(compound(a * b, 2) == compound(a, 2) * compound(b, 2));
  }
}

TEST_CASE("cochain complex validation and cohomology") {
  // 0 -> K -> K -> 0 with the identity: acyclic.
  CochainComplex acyclic(kQ);
  acyclic.set_dim(0, 1);
  acyclic.set_dim(1, 1);
  acyclic.set_differential(0, Matrix::identity(kQ, 1));
  CHECK(acyclic.cohomology_dims() == GradedDims{});

  CHECK(CochainComplex::concentrated(kQ, 0, 5).cohomology_dims() == GradedDims{{0, 5}});

  CochainComplex bad(kQ);
  bad.set_dim(0, 1);
  bad.set_dim(1, 1);
  bad.set_dim(2, 1);
  bad.set_differential(0, Matrix::identity(kQ, 1));
  bad.set_differential(1, Matrix::identity(kQ, 1));
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("hexagon cochain complex has circle cohomology") {
  // Order complex of the proper part of the subset lattice on three points.
  const Poset b3 = Poset::validate(
      {"1", "2", "3", "12", "13", "23"},
      {{"1", "12"}, {"1", "13"}, {"2", "12"}, {"2", "23"}, {"3", "13"}, {"3", "23"}});
  const SimplicialComplex k = order_complex(b3);
  CHECK(k.vertices.size() == 6);
  int edges = 0;
  for (const auto& f : k.faces) edges += f.size() == 2 ? 1 : 0;
  CHECK(edges == 6);

  const GradedDims expected{{0, 1}, {1, 1}};
  CHECK(testing::simplicial_cohomology(k, kQ) == expected);
  // The boundary matrices are unimodular, so F_5 gives the same answer.
  CHECK(testing::simplicial_cohomology(k, kF5) == expected);
}

TEST_CASE("euler characteristic is preserved by cohomology") {
  const Poset b3 = Poset::validate(
      {"1", "2", "3", "12", "13", "23"},
      {{"1", "12"}, {"1", "13"}, {"2", "12"}, {"2", "23"}, {"3", "13"}, {"3", "23"}});
  const CochainComplex c = testing::simplicial_cochain_complex(order_complex(b3), kQ);
  long chi_dims = 0, chi_coh = 0;
  for (int n = c.lo(); n <= c.hi(); ++n) chi_dims += (n % 2 == 0 ? 1 : -1) * c.dim(n);
  for (const auto& [n, d] : c.cohomology_dims()) chi_coh += (n % 2 == 0 ? 1 : -1) * d;
  CHECK(chi_dims == chi_coh);
}
