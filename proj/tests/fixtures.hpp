#pragma once

#include "semicross/covariant.hpp"
#include "semicross/partial_action.hpp"
#include "semicross/semigroup_action.hpp"

namespace semicross::fixtures {

/// Partial action of the integers on C + C whose only nontrivial map shifts
/// the first coordinate onto the second. Its crossed product is M_2.
inline PartialAction two_block_shift_action() {
  BlockAlgebra a({1, 1});
  PartialAutomorphism shift(Ideal(a, {0}), Ideal(a, {1}), {{0, 1}},
                            {{0, Matrix::Identity(1, 1)}});
  return make_partial_action(a, GroupOracle::integers(),
                             {{1, Ideal(a, {1})}}, {{1, shift}});
}

/// The multiplication-operator covariant representation of the shift action:
/// u_1 the forward shift, u_{-1} the backward shift.
inline PartialCovariantRep two_block_shift_covrep() {
  auto action = two_block_shift_action();
  HilbertRep rep =
      HilbertRep::from_multiplicities(action.algebra, {1, 1});
  Matrix u1 = Matrix::Zero(2, 2);
  u1(1, 0) = 1.0;
  return make_covrep(std::move(action), std::move(rep),
                     {{1, u1}, {-1, u1.adjoint()}});
}

/// Z_2 partial action on the three-block diagonal algebra whose nontrivial
/// automorphism is the identity on the ideal of the first two blocks (the
/// finite stand-in for functions vanishing at a boundary point).
inline PartialAction fixed_ideal_involution_action() {
  BlockAlgebra a({1, 1, 1});
  Ideal d(a, {0, 1});
  return make_partial_action(a, GroupOracle::cyclic(2), {{1, d}},
                             {{1, PartialAutomorphism::identity_on(d)}});
}

/// Doubled representation with u_1 the flip of the two copies: a unitary
/// whose initial space strictly contains pi(D_1)H, hence lax-only.
inline PartialCovariantRep fixed_ideal_involution_covrep() {
  auto action = fixed_ideal_involution_action();
  HilbertRep rep =
      HilbertRep::from_multiplicities(action.algebra, {2, 2, 2});
  Matrix u1 = Matrix::Zero(6, 6);
  for (int b = 0; b < 3; ++b) {
    u1(2 * b, 2 * b + 1) = 1.0;
    u1(2 * b + 1, 2 * b) = 1.0;
  }
  return make_covrep(std::move(action), std::move(rep), {{1, u1}},
                     ValidationMode::Lax);
}

/// Honest global Z_2 action swapping the two blocks of C + C, with its
/// regular covariant representation.
inline PartialAction swap_action() {
  BlockAlgebra a({1, 1});
  PartialAutomorphism swap(Ideal::full(a), Ideal::full(a), {{0, 1}, {1, 0}},
                           {{0, Matrix::Identity(1, 1)},
                            {1, Matrix::Identity(1, 1)}});
  return make_partial_action(a, GroupOracle::cyclic(2), {{1, Ideal::full(a)}},
                             {{1, swap}});
}

inline PartialCovariantRep swap_covrep() {
  auto action = swap_action();
  HilbertRep rep = HilbertRep::from_multiplicities(action.algebra, {1, 1});
  Matrix u1 = Matrix::Zero(2, 2);
  u1(0, 1) = 1.0;
  u1(1, 0) = 1.0;
  return make_covrep(std::move(action), std::move(rep), {{1, u1}});
}

}  // namespace semicross::fixtures
