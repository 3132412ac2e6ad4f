#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "semicross/closure.hpp"
#include "semicross/fuzz.hpp"

using namespace semicross;

TEST_CASE("the shift covariant representation is strict") {
  auto cov = fixtures::two_block_shift_covrep();
  REQUIRE(validate_covrep_partial(cov).ok());
}

TEST_CASE("an honest unitary representation is strict") {
  REQUIRE(validate_covrep_partial(fixtures::swap_covrep()).ok());
}

TEST_CASE("a unitary over a proper ideal passes lax and fails strict") {
  auto cov = fixtures::fixed_ideal_involution_covrep();
  REQUIRE(cov.mode == ValidationMode::Lax);
  REQUIRE(validate_covrep_partial(cov).ok());
  cov.mode = ValidationMode::Strict;
  REQUIRE_THROWS_MATCHES(
      validate_covrep_partial(cov), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == ErrorKind::SpaceMismatch; }));
}

TEST_CASE("tampered families are rejected") {
  SECTION("wrong initial space") {
    auto cov = fixtures::two_block_shift_covrep();
    cov.family[1] = Matrix::Identity(2, 2);
    REQUIRE_THROWS_MATCHES(
        validate_covrep_partial(cov), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e) {
          return e.kind() == ErrorKind::SpaceMismatch ||
                 e.kind() == ErrorKind::CompositionViolated;
        }));
  }
  SECTION("not a partial isometry") {
    auto cov = fixtures::two_block_shift_covrep();
    cov.family[1] *= 0.5;
    cov.family[-1] *= 0.5;
    REQUIRE_THROWS_MATCHES(
        validate_covrep_partial(cov), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e) {
          return e.kind() == ErrorKind::NotPartialIsometry;
        }));
  }
  SECTION("u at the identity must be the identity") {
    auto cov = fixtures::two_block_shift_covrep();
    Matrix bad = Matrix::Identity(2, 2);
    bad(1, 1) = -1.0;
    cov.family[0] = bad;
    REQUIRE_THROWS_MATCHES(
        validate_covrep_partial(cov), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e) {
          return e.kind() == ErrorKind::CompositionViolated;
        }));
  }
}

TEST_CASE("product calculus on the shift representation") {
  auto cov = fixtures::two_block_shift_covrep();
  auto rep = check_product_calculus(cov, 3);
  REQUIRE(rep.ok());

  // Frozen spot checks: u_1 u_{-1} u_1 u_{-1}* = pi(p_1) = diag(0,1).
  Matrix w = cov.u(1) * cov.u(-1);
  Matrix p1 = cov.rep.projection(cov.action.domain_of(1));
  REQUIRE((w * w.adjoint() - p1).norm() < 1e-12);
  REQUIRE(p1(0, 0) == Complex(0, 0));
  REQUIRE(p1(1, 1) == Complex(1, 0));
}

TEST_CASE("fuzzed strict representations pass the word calculus") {
  auto outcome = fuzz_section3(12, 77);
  CAPTURE(outcome.failures);
  REQUIRE(outcome.failures.empty());
}

TEST_CASE("the u family closes into an inverse semigroup of partial isometries") {
  auto cov = fixtures::two_block_shift_covrep();
  MatrixOracle oracle{cov.rep.dim(), 1e-9};
  std::vector<Matrix> gens;
  for (auto g : cov.action.support) gens.push_back(cov.u(g));
  auto c = generate_closure<Matrix>(oracle, gens, 512);
  REQUIRE(c.semigroup.size() == 6);
  for (const auto& w : c.elements)
    REQUIRE(partial_isometry_residual(w) <= 1e-9);
}

TEST_CASE("rotation counterexample") {
  auto r = rotation_counterexample(M_PI / 4);
  for (const auto& [name, res] : r.residuals) {
    CAPTURE(name);
    REQUIRE(res <= 1e-12);
  }
  REQUIRE(r.projection_commutator <= 1e-12);
  REQUIRE(r.squared_product_residual > 1e-3);
  REQUIRE(r.formula_cross_check <= 1e-12);

  SECTION("the defect vanishes as the angle closes") {
    auto small = rotation_counterexample(1e-4);
    REQUIRE(small.squared_product_residual < 1e-7);
  }
  SECTION("angle domain") {
    REQUIRE_THROWS_AS(rotation_counterexample(0.0), Error);
    REQUIRE_THROWS_AS(rotation_counterexample(2.0), Error);
  }
}

TEST_CASE("direct sums of covariant representations stay covariant") {
  auto cov = fixtures::two_block_shift_covrep();
  auto doubled = cov.direct_sum(cov);
  REQUIRE(doubled.rep.dim() == 4);
  REQUIRE(validate_covrep_partial(doubled).ok());
}
