#include <catch2/catch_amalgamated.hpp>

#include "semicross/block_algebra.hpp"

using namespace semicross;

TEST_CASE("ideal meet is block intersection") {
  BlockAlgebra a({1, 2, 3});
  Ideal full = Ideal::full(a);
  Ideal i12(a, {0, 1});
  Ideal i23(a, {1, 2});
  REQUIRE(ideal_meet(i12, full) == i12);
  REQUIRE(ideal_meet(i12, i23) == Ideal(a, {1}));

  // The two opposite shift ideals of the two-block algebra meet in zero.
  BlockAlgebra c2({1, 1});
  REQUIRE(ideal_meet(Ideal(c2, {0}), Ideal(c2, {1})).is_zero());
}

TEST_CASE("ideal meet rejects mismatched parents") {
  BlockAlgebra a({1, 2});
  BlockAlgebra b({2, 1});
  REQUIRE_THROWS_MATCHES(
      ideal_meet(Ideal::full(a), Ideal::full(b)), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == ErrorKind::ParentMismatch; }));
}

TEST_CASE("element arithmetic is blockwise") {
  BlockAlgebra a({2, 1});
  Element x = Element::matrix_unit(a, 0, 0, 1);
  Element y = Element::matrix_unit(a, 0, 1, 0);
  Element p = x * y;
  REQUIRE(distance(p, Element::matrix_unit(a, 0, 0, 0)) == 0.0);
  REQUIRE(distance(x.adjoint(), y) == 0.0);

  Element u = Element::unit(a);
  REQUIRE(distance(u * x, x) == 0.0);
  REQUIRE(u.operator_norm() == Catch::Approx(1.0));
}

TEST_CASE("ideal units act as local identities") {
  BlockAlgebra a({2, 2});
  Ideal d(a, {1});
  Element p = Element::unit_of(d);
  Element x = Element::matrix_unit(a, 1, 0, 1);
  Element y = Element::matrix_unit(a, 0, 0, 1);
  REQUIRE(distance(p * x, x) == 0.0);
  REQUIRE((p * y).frobenius_norm() == 0.0);
  REQUIRE(x.supported_in(d, 0.0));
  REQUIRE_FALSE(y.supported_in(d, 1e-12));
  REQUIRE(distance((x + y).restrict_to(d), x) == 0.0);
}

TEST_CASE("matrix unit basis spans each ideal block") {
  BlockAlgebra a({2, 1, 3});
  REQUIRE(matrix_unit_basis(Ideal::full(a)).size() == 4 + 1 + 9);
  REQUIRE(matrix_unit_basis(Ideal(a, {0, 1})).size() == 5);
  REQUIRE(matrix_unit_basis(Ideal::zero(a)).empty());
}
