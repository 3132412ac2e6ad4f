#include <catch2/catch_amalgamated.hpp>

#include "semicross/inverse_semigroup.hpp"
#include "semicross/partial_bijection.hpp"

using namespace semicross;

namespace {

// S = {e, f} with f idempotent and e the identity.
const std::vector<std::vector<int>> kMeetTable = {{0, 1}, {1, 1}};

// Independent count of injective partial maps: sum_k C(m,k)^2 k!.
long expected_sim_size(int m) {
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  long total = 0;
  for (int k = 0; k <= m; ++k) {
    long fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    total += binom(m, k) * binom(m, k) * fact;
  }
  return total;
}

}  // namespace

TEST_CASE("trivial group verifies") {
  auto S = verify_inverse_semigroup({{0}});
  REQUIRE(S.size() == 1);
  REQUIRE(S.star(0) == 0);
  REQUIRE(S.unit() == 0);
  REQUIRE(check_inverse_semigroup_laws(S));
}

TEST_CASE("two-element meet semilattice") {
  auto S = verify_inverse_semigroup(kMeetTable);
  REQUIRE(S.idempotents() == std::vector<int>{0, 1});
  auto io = idempotents_and_order(S);
  REQUIRE(io.is_semilattice);
  REQUIRE(io.leq[1][0]);  // f <= e
  REQUIRE_FALSE(io.leq[0][1]);
}

TEST_CASE("symmetric inverse monoid sizes match the enumeration formula") {
  REQUIRE(expected_sim_size(1) == 2);
  REQUIRE(expected_sim_size(2) == 7);
  REQUIRE(expected_sim_size(3) == 34);
  for (int m = 1; m <= 3; ++m) {
    auto sim = symmetric_inverse_monoid(m);
    REQUIRE(sim.table.size() == expected_sim_size(m));
    REQUIRE(check_inverse_semigroup_laws(sim.table));
  }
  REQUIRE_THROWS_AS(symmetric_inverse_monoid(6), Error);
}

TEST_CASE("symmetric inverse monoid on 2 points: idempotents and order") {
  auto sim = symmetric_inverse_monoid(2);
  auto io = idempotents_and_order(sim.table);
  // Idempotents are exactly the restrictions of the identity to subsets.
  REQUIRE(io.idempotents.size() == 4);
  for (int f : io.idempotents) {
    const auto& p = sim.elements[f];
    for (int x : p.domain()) REQUIRE(p.apply(x) == x);
  }
  // The natural order is the restriction order on partial maps.
  for (int s = 0; s < sim.table.size(); ++s)
    for (int t = 0; t < sim.table.size(); ++t) {
      const auto& ps = sim.elements[s];
      const auto& pt = sim.elements[t];
      bool restriction = true;
      for (int x = 0; x < 2; ++x)
        if (ps.defined_at(x) &&
            (!pt.defined_at(x) || pt.apply(x) != ps.apply(x)))
          restriction = false;
      REQUIRE(io.leq[s][t] == restriction);
    }
}

TEST_CASE("bad tables are rejected") {
  REQUIRE_THROWS_MATCHES(
      verify_inverse_semigroup({{0, 1}, {0, 0}}), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == ErrorKind::NotAssociative; }));
  // Null semigroup: 1 has no generalized inverse.
  REQUIRE_THROWS_MATCHES(
      verify_inverse_semigroup({{0, 0}, {0, 0}}), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == ErrorKind::NoInverse; }));
  // Left-zero semigroup: every element is a generalized inverse of every
  // other, so uniqueness fails.
  REQUIRE_THROWS_MATCHES(
      verify_inverse_semigroup({{0, 0}, {1, 1}}), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.kind() == ErrorKind::NonUniqueInverse;
      }));
}

TEST_CASE("minimum group congruence") {
  SECTION("a group is its own quotient") {
    auto z3 = verify_inverse_semigroup(
        {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    auto cc = min_group_congruence(z3);
    REQUIRE(cc.quotient.size() == 3);
    for (int s = 0; s < 3; ++s) REQUIRE(cc.class_of[s] == s);
  }
  SECTION("semilattice collapses to the trivial group") {
    auto S = verify_inverse_semigroup(kMeetTable);
    auto cc = min_group_congruence(S);
    REQUIRE(cc.quotient.size() == 1);
  }
  SECTION("a zero element collapses everything") {
    auto sim = symmetric_inverse_monoid(2);
    REQUIRE(sim.table.zero().has_value());
    auto cc = min_group_congruence(sim.table);
    REQUIRE(cc.quotient.size() == 1);
  }
  SECTION("sigma quotient of SIM(3) is trivial too") {
    auto cc = min_group_congruence(symmetric_inverse_monoid(3).table);
    REQUIRE(cc.quotient.size() == 1);
  }
}

TEST_CASE("laws hold on every verified semigroup") {
  for (auto table : {std::vector<std::vector<int>>{{0}}, kMeetTable}) {
    REQUIRE(check_inverse_semigroup_laws(verify_inverse_semigroup(table)));
  }
}
