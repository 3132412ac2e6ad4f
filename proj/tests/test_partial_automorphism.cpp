#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "semicross/closure.hpp"
#include "semicross/partial_automorphism.hpp"
#include "semicross/random_gen.hpp"

using namespace semicross;

namespace {

// The forward shift of the two-block algebra: D_{-1} = block 0, D_1 = block 1.
PartialAutomorphism forward_shift() {
  BlockAlgebra a({1, 1});
  return PartialAutomorphism(Ideal(a, {0}), Ideal(a, {1}), {{0, 1}},
                             {{0, Matrix::Identity(1, 1)}});
}

PartialAutomorphism random_pauto(const BlockAlgebra& a, std::mt19937_64& rng) {
  // Random dimension-preserving partial matching of blocks.
  std::map<int, std::vector<int>> by_dim_src, by_dim_dst;
  for (int b = 0; b < a.num_blocks(); ++b) {
    by_dim_src[a.dim(b)].push_back(b);
    by_dim_dst[a.dim(b)].push_back(b);
  }
  std::map<int, int> bm;
  std::map<int, Matrix> us;
  std::vector<int> dom, cod;
  for (auto& [d, srcs] : by_dim_src) {
    auto& dsts = by_dim_dst[d];
    std::shuffle(dsts.begin(), dsts.end(), rng);
    for (std::size_t i = 0; i < srcs.size(); ++i) {
      if (rng() % 2 == 0) continue;
      bm[srcs[i]] = dsts[i];
      us[srcs[i]] = random_unitary(d, rng);
      dom.push_back(srcs[i]);
      cod.push_back(dsts[i]);
    }
  }
  return PartialAutomorphism(Ideal(a, dom), Ideal(a, cod), std::move(bm),
                             std::move(us));
}

Element random_element(const BlockAlgebra& a, const Ideal& support,
                       std::mt19937_64& rng) {
  Element e(a);
  for (int b : support.blocks)
    e.block(b) = random_gaussian_matrix(a.dim(b), a.dim(b), rng);
  return e;
}

}  // namespace

TEST_CASE("identity composes neutrally") {
  BlockAlgebra a({1, 1});
  auto alpha = forward_shift();
  auto id = PartialAutomorphism::identity(a);
  REQUIRE(pauto_equal(id.compose(alpha), alpha, 1e-12));
  REQUIRE(pauto_equal(alpha.compose(id), alpha, 1e-12));
  REQUIRE(pauto_equal(id.adjoint(), id, 1e-12));
}

TEST_CASE("shift squared is the zero partial automorphism") {
  auto alpha = forward_shift();
  REQUIRE(alpha.compose(alpha).is_zero());
}

TEST_CASE("composition with the adjoint restricts the identity") {
  std::mt19937_64 rng(7);
  BlockAlgebra a({2, 2, 1});
  for (int i = 0; i < 20; ++i) {
    auto alpha = random_pauto(a, rng);
    auto right = alpha.compose(alpha.adjoint());
    REQUIRE(pauto_equal(right, PartialAutomorphism::identity_on(alpha.cod()),
                        1e-9));
    auto sandwich = alpha.compose(alpha.adjoint()).compose(alpha);
    REQUIRE(pauto_equal(sandwich, alpha, 1e-9));
  }
}

TEST_CASE("adjoint is an involution on random partial automorphisms") {
  std::mt19937_64 rng(13);
  BlockAlgebra a({1, 2, 2, 3});
  for (int i = 0; i < 50; ++i) {
    auto alpha = random_pauto(a, rng);
    REQUIRE(pauto_equal(alpha.adjoint().adjoint(), alpha, 1e-12));
  }
}

TEST_CASE("apply implements the shift of the two-block algebra") {
  BlockAlgebra a({1, 1});
  auto alpha = forward_shift();
  Element x(a);
  x.block(0)(0, 0) = Complex(3, -2);
  Element y = alpha.apply(x);
  REQUIRE(y.block(0)(0, 0) == Complex(0, 0));
  REQUIRE(y.block(1)(0, 0) == Complex(3, -2));

  Element outside(a);
  outside.block(1)(0, 0) = 1.0;
  REQUIRE_THROWS_MATCHES(
      alpha.apply(outside), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == ErrorKind::OutsideDomain; }));
}

TEST_CASE("apply is multiplicative and adjoint-preserving") {
  std::mt19937_64 rng(29);
  BlockAlgebra a({2, 3, 2});
  for (int i = 0; i < 25; ++i) {
    auto alpha = random_pauto(a, rng);
    Element x = random_element(a, alpha.dom(), rng);
    Element y = random_element(a, alpha.dom(), rng);
    REQUIRE(distance(alpha.apply(x * y), alpha.apply(x) * alpha.apply(y)) <
            1e-9);
    REQUIRE(distance(alpha.apply(x.adjoint()), alpha.apply(x).adjoint()) <
            1e-9);
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(31);
  BlockAlgebra a({2, 2, 1, 1});
  for (int i = 0; i < 30; ++i) {
    auto f = random_pauto(a, rng);
    auto g = random_pauto(a, rng);
    auto h = random_pauto(a, rng);
    REQUIRE(pauto_equal(f.compose(g).compose(h), f.compose(g.compose(h)),
                        1e-9));
  }
}

TEST_CASE("partial bijection embedding commutes with compose and star") {
  std::mt19937_64 rng(37);
  auto sim = symmetric_inverse_monoid(3);
  for (int i = 0; i < 40; ++i) {
    const auto& p = sim.elements[rng() % sim.elements.size()];
    const auto& q = sim.elements[rng() % sim.elements.size()];
    REQUIRE(pauto_equal(embed_partial_bijection(p.compose(q)),
                        embed_partial_bijection(p).compose(
                            embed_partial_bijection(q)),
                        0.0));
    REQUIRE(pauto_equal(embed_partial_bijection(p.star()),
                        embed_partial_bijection(p).adjoint(), 0.0));
  }
}

TEST_CASE("closure of shift generators matches the six-element semigroup") {
  BlockAlgebra a({1, 1});
  auto alpha = forward_shift();
  PartialAutomorphismOracle oracle{a, 1e-9};
  auto c = generate_closure<PartialAutomorphism>(
      oracle, {alpha, alpha.adjoint()}, 512);
  REQUIRE(c.semigroup.size() == 6);
  // Expected members: identity, shift, backshift, the two restricted
  // identities, and the zero map.
  std::vector<PartialAutomorphism> expected = {
      PartialAutomorphism::identity(a),
      alpha,
      alpha.adjoint(),
      PartialAutomorphism::identity_on(Ideal(a, {1})),
      PartialAutomorphism::identity_on(Ideal(a, {0})),
      PartialAutomorphism::zero(a)};
  for (const auto& want : expected) {
    bool found = false;
    for (const auto& got : c.elements)
      if (pauto_equal(want, got, 1e-12)) found = true;
    REQUIRE(found);
  }
}
