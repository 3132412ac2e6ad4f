#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "fixtures.hpp"
#include "semicross/random_gen.hpp"
#include "semicross/semigroup_action.hpp"

using namespace semicross;

namespace {

const std::vector<std::vector<int>> kMeetTable = {{0, 1}, {1, 1}};

}  // namespace

TEST_CASE("two-element semilattice acting by restricted identities") {
  auto S = verify_inverse_semigroup(kMeetTable);
  BlockAlgebra a({1, 1});
  auto action = make_semilattice_action(S, a, {Ideal::full(a), Ideal(a, {0})});
  REQUIRE(validate_semigroup_action(action).ok());
}

TEST_CASE("the generated semigroup acts tautologically") {
  auto pa = fixtures::two_block_shift_action();
  auto closure = generate_paut_semigroup(pa);
  SemigroupAction action;
  action.S = closure.semigroup;
  action.algebra = pa.algebra;
  for (const auto& alpha : closure.elements) {
    action.ideals.push_back(alpha.cod());
    action.maps.push_back(alpha);
  }
  REQUIRE(validate_semigroup_action(action).ok());
}

TEST_CASE("a broken homomorphism is rejected") {
  auto S = verify_inverse_semigroup({{0, 1}, {1, 0}});  // Z_2
  BlockAlgebra a({2});
  Matrix v(2, 2);
  v << 1, 0, 0, Complex(0, 1);
  SemigroupAction action;
  action.S = S;
  action.algebra = a;
  action.ideals = {Ideal::full(a), Ideal::full(a)};
  action.maps = {PartialAutomorphism::identity(a),
                 PartialAutomorphism(Ideal::full(a), Ideal::full(a), {{0, 0}},
                                     {{0, v}})};
  REQUIRE_THROWS_MATCHES(
      validate_semigroup_action(action), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.kind() == ErrorKind::HomomorphismViolated;
      }));
}

TEST_CASE("pair semigroup of the shift has six elements") {
  auto cov = fixtures::two_block_shift_covrep();
  auto pair = pair_semigroup_action(cov);
  REQUIRE(pair.action.S.size() == 6);
  REQUIRE(pair.action.S.idempotents().size() == 4);
  REQUIRE(pair.action.S.zero().has_value());
  REQUIRE(validate_semigroup_action(pair.action).ok());

  auto cov_v = pair.covrep(cov.rep, ValidationMode::Strict);
  REQUIRE(validate_covrep_semigroup(cov_v).ok());

  // E at the generator pair is D_1, at its star D_{-1}.
  const int s = pair.group_index.at(1);
  REQUIRE(pair.action.E(s) == Ideal(cov.action.algebra, {1}));
  REQUIRE(pair.action.E(pair.action.S.star(s)) ==
          Ideal(cov.action.algebra, {0}));
}

TEST_CASE("pair semigroup of an honest action is the group") {
  auto cov = fixtures::swap_covrep();
  auto pair = pair_semigroup_action(cov);
  REQUIRE(pair.action.S.size() == 2);
  REQUIRE(pair.action.S.idempotents().size() == 1);
}

TEST_CASE("the three semigroups of the involution example differ") {
  auto cov = fixtures::fixed_ideal_involution_covrep();
  REQUIRE(validate_covrep_partial(cov).ok());

  auto alpha_closure = generate_paut_semigroup(cov.action);
  REQUIRE(alpha_closure.semigroup.size() == 2);
  REQUIRE(alpha_closure.semigroup.is_semilattice());

  MatrixOracle oracle{cov.rep.dim(), 1e-9};
  auto u_closure = generate_closure<Matrix>(
      oracle, {cov.u(0), cov.u(1)}, 512);
  REQUIRE(u_closure.semigroup.size() == 2);
  REQUIRE(u_closure.semigroup.idempotents().size() == 1);  // a group

  auto pair = pair_semigroup_action(cov, {});
  REQUIRE(pair.action.S.size() == 3);
  REQUIRE(pair.action.S.idempotents().size() == 2);

  REQUIRE(non_isomorphism_witness(pair.action.S, alpha_closure.semigroup)
              .has_value());
  REQUIRE(non_isomorphism_witness(pair.action.S, u_closure.semigroup)
              .has_value());
  REQUIRE_FALSE(
      non_isomorphism_witness(alpha_closure.semigroup, alpha_closure.semigroup)
          .has_value());
}

TEST_CASE("pair covariant representation of the involution example is lax") {
  auto cov = fixtures::fixed_ideal_involution_covrep();
  auto pair = pair_semigroup_action(cov, {});
  auto cov_v = pair.covrep(cov.rep, ValidationMode::Lax);
  REQUIRE(validate_covrep_semigroup(cov_v).ok());
  cov_v.mode = ValidationMode::Strict;
  REQUIRE_THROWS_AS(validate_covrep_semigroup(cov_v), Error);
}

TEST_CASE("restriction of z recovers the group family") {
  auto cov = fixtures::two_block_shift_covrep();
  auto pair = pair_semigroup_action(cov);

  SECTION("z = v gives back w = u") {
    auto z = pair.covrep(cov.rep, ValidationMode::Strict);
    auto w = restrict_action_covrep(pair, cov, z);
    for (auto g : cov.action.support)
      REQUIRE((w.at(g) - cov.u(g)).norm() <= 1e-12);
  }
  SECTION("z = v + v gives w = u + u and stays covariant") {
    auto z = pair.covrep(cov.rep, ValidationMode::Strict);
    auto zz = z.direct_sum(z);
    REQUIRE(validate_covrep_semigroup(zz).ok());
    auto w = restrict_action_covrep(pair, cov, zz);
    PartialCovariantRep rw;
    rw.action = cov.action;
    rw.rep = zz.rep;
    rw.family = w;
    rw.mode = ValidationMode::Strict;
    REQUIRE(validate_covrep_partial(rw).ok());
    auto doubled = cov.direct_sum(cov);
    for (auto g : cov.action.support)
      REQUIRE((w.at(g) - doubled.u(g)).norm() <= 1e-12);
  }
}

TEST_CASE("trivial semilattice action on the scalars forces v_f = 1") {
  // Covariant representations of the {e,f} action on C with E_f = C exist
  // only with v_f the identity: the pair construction cannot produce an
  // idempotent different from the unit.
  auto S = verify_inverse_semigroup(kMeetTable);
  BlockAlgebra a({1});
  auto action =
      make_semilattice_action(S, a, {Ideal::full(a), Ideal::full(a)});
  REQUIRE(validate_semigroup_action(action).ok());

  HilbertRep rep = HilbertRep::from_multiplicities(a, {2});
  std::mt19937_64 rng(5);
  Matrix w = random_unitary(2, rng);
  Matrix rank1 = Matrix::Zero(2, 2);
  rank1(0, 0) = 1.0;
  const std::vector<Matrix> projections = {
      Matrix::Zero(2, 2), Matrix::Identity(2, 2), rank1,
      Matrix::Identity(2, 2) - rank1, w * rank1 * w.adjoint()};
  int accepted = 0;
  for (const auto& p : projections) {
    SemigroupCovariantRep cov;
    cov.action = action;
    cov.rep = rep;
    cov.family = {Matrix::Identity(2, 2), p};
    cov.mode = ValidationMode::Strict;
    try {
      if (validate_covrep_semigroup(cov).ok()) {
        ++accepted;
        REQUIRE((p - Matrix::Identity(2, 2)).norm() <= 1e-12);
      }
    } catch (const Error&) {
    }
  }
  REQUIRE(accepted == 1);
}
