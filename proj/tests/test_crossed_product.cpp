#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "fixtures.hpp"
#include "semicross/crossed_product.hpp"
#include "semicross/fuzz.hpp"

using namespace semicross;

namespace {

const std::vector<std::vector<int>> kMeetTable = {{0, 1}, {1, 1}};

SemigroupCovariantRep shift_pair_covrep() {
  auto source = fixtures::two_block_shift_covrep();
  auto pair = pair_semigroup_action(source);
  return pair.covrep(source.rep, ValidationMode::Strict);
}

}  // namespace

TEST_CASE("the shift crossed product is the full matrix algebra") {
  auto realization = realize_crossed_product(shift_pair_covrep());
  REQUIRE(realization.checks.ok());
  REQUIRE(realization.report.algebra_dim == 4);
  REQUIRE(realization.report.block_sizes == std::vector<int>{2});
  REQUIRE(realization.report.center_dim == 1);
}

TEST_CASE("semilattice crossed products collapse to the algebra") {
  auto S = verify_inverse_semigroup(kMeetTable);
  SECTION("explicit two-element example") {
    BlockAlgebra a({1, 1});
    auto action =
        make_semilattice_action(S, a, {Ideal::full(a), Ideal(a, {0})});
    auto pi = HilbertRep::from_multiplicities(a, {1, 2});
    auto rep = verify_semilattice_realization(action, pi);
    REQUIRE(rep.checks.ok());
    REQUIRE(rep.realization.algebra_dim == 2);
    REQUIRE(rep.realization.block_sizes == std::vector<int>{1, 1});
  }
  SECTION("the scalars with a full ideal: one dimension, unlike l1(S)") {
    BlockAlgebra c({1});
    auto action =
        make_semilattice_action(S, c, {Ideal::full(c), Ideal::full(c)});
    auto pi = HilbertRep::from_multiplicities(c, {1});
    auto rep = verify_semilattice_realization(action, pi);
    REQUIRE(rep.checks.ok());
    REQUIRE(rep.realization.algebra_dim == 1);
    // The left regular picture of the same semigroup stays two dimensional.
    REQUIRE(left_regular_cstar(S).span.dimension() == 2);
  }
}

TEST_CASE("left regular representations") {
  SECTION("trivial group") {
    auto lr = left_regular_cstar(verify_inverse_semigroup({{0}}));
    REQUIRE(lr.checks.ok());
    REQUIRE(lr.span.dimension() == 1);
  }
  SECTION("two-element semilattice") {
    auto lr = left_regular_cstar(verify_inverse_semigroup(kMeetTable));
    REQUIRE(lr.checks.ok());
    REQUIRE(lr.span.dimension() == 2);
    auto rep = structure_report(lr.span);
    REQUIRE(rep.block_sizes == std::vector<int>{1, 1});
  }
  SECTION("symmetric inverse monoid on two points") {
    auto lr = left_regular_cstar(symmetric_inverse_monoid(2).table);
    REQUIRE(lr.checks.ok());
    REQUIRE(lr.span.dimension() == 7);
    auto rep = structure_report(lr.span);
    REQUIRE(rep.block_sizes == std::vector<int>{1, 1, 1, 2});
  }
}

TEST_CASE("scalar crossed products recover the maximal group image") {
  SECTION("finite groups recover their own group algebras") {
    auto z2 = verify_inverse_semigroup({{0, 1}, {1, 0}});
    auto r2 = verify_scalar_crossed_product(z2);
    REQUIRE(r2.checks.ok());
    REQUIRE(r2.realization.block_sizes == std::vector<int>{1, 1});

    auto z3 = verify_inverse_semigroup({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    auto r3 = verify_scalar_crossed_product(z3);
    REQUIRE(r3.realization.block_sizes == std::vector<int>{1, 1, 1});

    auto s3 = GroupOracle::symmetric3();
    std::vector<std::vector<int>> s3_table(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        s3_table[i][j] = static_cast<int>(s3.product(i, j));
    auto rs3 = verify_scalar_crossed_product(
        verify_inverse_semigroup(s3_table));
    REQUIRE(rs3.checks.ok());
    REQUIRE(rs3.realization.block_sizes == std::vector<int>{1, 1, 2});
  }
  SECTION("semilattices and monoids with zero collapse to the scalars") {
    auto meet = verify_scalar_crossed_product(
        verify_inverse_semigroup(kMeetTable));
    REQUIRE(meet.checks.ok());
    REQUIRE(meet.realization.block_sizes == std::vector<int>{1});

    auto sim = verify_scalar_crossed_product(
        symmetric_inverse_monoid(2).table);
    REQUIRE(sim.checks.ok());
    REQUIRE(sim.realization.block_sizes == std::vector<int>{1});
  }
}

TEST_CASE("idempotent semilattice decomposition of C*(S)") {
  SECTION("a group degenerates to its own algebra") {
    auto z2 = verify_inverse_semigroup({{0, 1}, {1, 0}});
    auto rep = verify_semilattice_idempotent_decomposition(z2);
    REQUIRE(rep.checks.ok());
    REQUIRE(rep.crossed.algebra_dim == 2);
    REQUIRE(rep.crossed.block_sizes == rep.regular.block_sizes);
  }
  SECTION("two-element semilattice") {
    auto rep = verify_semilattice_idempotent_decomposition(
        verify_inverse_semigroup(kMeetTable));
    REQUIRE(rep.checks.ok());
    REQUIRE(rep.crossed.algebra_dim == 2);
    REQUIRE(rep.crossed.block_sizes == std::vector<int>{1, 1});
  }
  SECTION("symmetric inverse monoid on two points") {
    auto rep = verify_semilattice_idempotent_decomposition(
        symmetric_inverse_monoid(2).table);
    REQUIRE(rep.checks.ok());
    REQUIRE(rep.crossed.algebra_dim == 7);
    REQUIRE(rep.crossed.block_sizes == std::vector<int>{1, 1, 1, 2});
    REQUIRE(rep.crossed.block_sizes == rep.regular.block_sizes);
  }
}

TEST_CASE("induced covariant representations") {
  auto cov = shift_pair_covrep();
  auto realization = realize_crossed_product(cov);

  SECTION("identity recovers the source exactly") {
    auto back = induce_covrep(realization, RealizationRep::identity(realization));
    REQUIRE(validate_covrep_semigroup(back).ok());
    for (int s = 0; s < cov.action.S.size(); ++s)
      REQUIRE((back.v(s) - cov.v(s)).norm() <= 1e-9);
    for (const auto& gen : realization.generators) {
      const Element a = Element::matrix_unit(cov.action.algebra, gen.block,
                                             gen.row, gen.col);
      REQUIRE((back.rep.apply(a) * back.v(gen.s) - gen.image).norm() <= 1e-9);
    }
  }
  SECTION("amplification doubles everything") {
    auto twice = induce_covrep(realization,
                               RealizationRep::amplification(realization, 2));
    REQUIRE(twice.rep.dim() == 2 * cov.rep.dim());
    REQUIRE(validate_covrep_semigroup(twice).ok());
    auto doubled = cov.direct_sum(cov);
    for (int s = 0; s < cov.action.S.size(); ++s)
      REQUIRE((twice.v(s) - doubled.v(s)).norm() <= 1e-9);
  }
  SECTION("a degenerate representation is rejected") {
    RealizationRep zero;
    zero.K = 2;
    zero.basis_images.assign(realization.algebra.basis.size(),
                             Matrix::Zero(2, 2));
    REQUIRE_THROWS_MATCHES(
        induce_covrep(realization, zero), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e) {
          return e.kind() == ErrorKind::NotNondegenerate;
        }));
  }
}

TEST_CASE("main theorem on the shift example") {
  auto cov = fixtures::two_block_shift_covrep();
  auto pair = pair_semigroup_action(cov);
  auto v = pair.covrep(cov.rep, ValidationMode::Strict);
  auto report = verify_main_theorem(cov, {v, v.direct_sum(v)});
  REQUIRE(report.checks.ok());
  REQUIRE(report.realization.block_sizes == std::vector<int>{2});
  REQUIRE(report.pair.action.S.size() == 6);
}

TEST_CASE("main theorem on an honest group action") {
  auto cov = fixtures::swap_covrep();
  auto pair = pair_semigroup_action(cov);
  auto v = pair.covrep(cov.rep, ValidationMode::Strict);
  auto report = verify_main_theorem(cov, {v});
  REQUIRE(report.checks.ok());
  REQUIRE(report.pair.action.S.size() == 2);
  // Two points swapped by Z_2: the crossed product is the full M_2.
  REQUIRE(report.realization.block_sizes == std::vector<int>{2});
}

TEST_CASE("random semilattice actions realize pi(A)") {
  std::mt19937_64 rng(31337);
  int done = 0;
  while (done < 20) {
    // Random meet-semilattice: subsets of a three-element universe closed
    // under intersection, with the universe adjoined as the unit.
    std::set<unsigned> subsets = {7u};
    const int extra = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < extra; ++i) subsets.insert(rng() % 8);
    for (;;) {
      std::set<unsigned> next = subsets;
      for (unsigned x : subsets)
        for (unsigned y : subsets) next.insert(x & y);
      if (next == subsets) break;
      subsets = std::move(next);
    }
    if (subsets.size() > 8) continue;
    std::vector<unsigned> elems(subsets.begin(), subsets.end());
    const int n = static_cast<int>(elems.size());
    auto index_of = [&](unsigned v) {
      for (int i = 0; i < n; ++i)
        if (elems[i] == v) return i;
      return -1;
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[i][j] = index_of(elems[i] & elems[j]);
    auto S = verify_inverse_semigroup(table);

    // Random block algebra and a filter-valued ideal assignment: block b
    // belongs to E_f iff f dominates a random threshold element.
    std::vector<int> dims;
    const int blocks = 1 + static_cast<int>(rng() % 3);
    for (int b = 0; b < blocks; ++b)
      dims.push_back(1 + static_cast<int>(rng() % 3));
    BlockAlgebra a(dims);
    std::vector<unsigned> threshold(blocks);
    for (int b = 0; b < blocks; ++b)
      threshold[b] = elems[rng() % n];
    std::vector<Ideal> ideals;
    for (int f = 0; f < n; ++f) {
      std::vector<int> bs;
      for (int b = 0; b < blocks; ++b)
        if ((elems[f] & threshold[b]) == threshold[b]) bs.push_back(b);
      ideals.push_back(Ideal(a, bs));
    }
    auto action = make_semilattice_action(S, a, ideals);

    std::vector<int> mult;
    for (int b = 0; b < blocks; ++b)
      mult.push_back(1 + static_cast<int>(rng() % 2));
    auto pi = HilbertRep::from_multiplicities(a, mult);

    auto rep = verify_semilattice_realization(action, pi);
    REQUIRE(rep.checks.ok());
    REQUIRE(rep.realization.algebra_dim == a.algebra_dim());
    ++done;
  }
}
