#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "semicross/fuzz.hpp"
#include "semicross/l_algebra.hpp"

using namespace semicross;

namespace {

struct PairFixture {
  PartialCovariantRep source = fixtures::two_block_shift_covrep();
  PairSemigroupAction pair = pair_semigroup_action(source);
  SemigroupCovariantRep cov = pair.covrep(source.rep, ValidationMode::Strict);
};

Element scalar_at(const BlockAlgebra& a, int block, Complex value) {
  Element e(a);
  e.block(block)(0, 0) = value;
  return e;
}

}  // namespace

TEST_CASE("point masses multiply through the action") {
  PairFixture fx;
  const auto& a = fx.pair.action;
  const auto& S = a.S;
  const int s = fx.pair.group_index.at(1);      // the shift pair
  const int t = S.star(s);

  Element as = scalar_at(a.algebra, 1, Complex(2, 1));   // in E_s = D_1
  Element at = scalar_at(a.algebra, 0, Complex(0, -3));  // in E_{s*} = D_-1

  auto product = l_multiply(a, delta(a, as, s), delta(a, at, t));
  // a_s delta_s * a_t delta_t = beta_s(beta_{s*}(a_s) a_t) delta_{st}
  Element expected = a.beta(s).apply(
      a.beta(S.star(s)).apply(as) * at);
  REQUIRE(product.values.size() == 1);
  REQUIRE(distance(product.values.at(S.mul(s, t)), expected) <= 1e-12);

  // Unit law for the full-ideal unit at e.
  auto x = l_add(a, delta(a, as, s), delta(a, at, t));
  auto unit = delta(a, Element::unit(a.algebra), *S.unit());
  REQUIRE(l_distance(a, l_multiply(a, unit, x), x) <= 1e-12);
  REQUIRE(l_distance(a, l_multiply(a, x, unit), x) <= 1e-12);
}

TEST_CASE("involution of a point mass") {
  PairFixture fx;
  const auto& a = fx.pair.action;
  const int s = fx.pair.group_index.at(1);
  Element as = scalar_at(a.algebra, 1, Complex(1, 4));

  auto star = l_star(a, delta(a, as, s));
  Element expected = a.beta(a.S.star(s)).apply(as.adjoint());
  REQUIRE(star.values.size() == 1);
  REQUIRE(distance(star.values.at(a.S.star(s)), expected) <= 1e-12);

  // Self-adjointness at an idempotent with identity action.
  const int f = a.S.mul(s, a.S.star(s));
  Element af = scalar_at(a.algebra, 1, Complex(5, 0));
  auto fstar = l_star(a, delta(a, af, f));
  REQUIRE(distance(fstar.values.at(f), af.adjoint()) <= 1e-12);
}

TEST_CASE("values must live in the ideal") {
  PairFixture fx;
  const auto& a = fx.pair.action;
  const int s = fx.pair.group_index.at(1);
  REQUIRE_THROWS_MATCHES(
      delta(a, scalar_at(a.algebra, 0, 1.0), s), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == ErrorKind::OutsideDomain; }));
}

TEST_CASE("pi x v on point masses") {
  PairFixture fx;
  const auto& a = fx.pair.action;
  Element ae = scalar_at(a.algebra, 0, Complex(2, 0)) +
               scalar_at(a.algebra, 1, Complex(0, 1));
  const Matrix m = pi_times_v(fx.cov, delta(a, ae, *a.S.unit()));
  REQUIRE((m - fx.cov.rep.apply(ae)).norm() <= 1e-12);

  // Multiplicativity on a basis pair.
  const int s = fx.pair.group_index.at(1);
  const int t = a.S.star(s);
  auto xs = delta(a, scalar_at(a.algebra, 1, 1.0), s);
  auto yt = delta(a, scalar_at(a.algebra, 0, 1.0), t);
  REQUIRE((pi_times_v(fx.cov, l_multiply(a, xs, yt)) -
           pi_times_v(fx.cov, xs) * pi_times_v(fx.cov, yt))
              .norm() <= 1e-12);
}

TEST_CASE("generator images of the pair action span all of M2") {
  PairFixture fx;
  std::vector<Matrix> images;
  for (int s = 0; s < fx.pair.action.S.size(); ++s)
    for (const auto& a : matrix_unit_basis(fx.pair.action.E(s)))
      images.push_back(fx.cov.rep.apply(a) * fx.cov.v(s));
  REQUIRE(span_closure(images).dimension() == 4);
}

TEST_CASE("Banach *-algebra laws hold on random elements") {
  PairFixture fx;
  auto outcome = fuzz_l_algebra(fx.cov, 120, 424242);
  CAPTURE(outcome.failures);
  REQUIRE(outcome.failures.empty());
  REQUIRE(outcome.max_residual <= 1e-9);
}

TEST_CASE("double star is exact on random elements") {
  PairFixture fx;
  const auto& a = fx.pair.action;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    auto x = random_lelement(a, rng);
    REQUIRE(l_distance(a, l_star(a, l_star(a, x)), x) <= 1e-12);
  }
}
