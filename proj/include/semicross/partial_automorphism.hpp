#pragma once

#include <map>
#include <string>

#include "semicross/block_algebra.hpp"
#include "semicross/partial_bijection.hpp"

namespace semicross {

/// *-isomorphism between two ideals of a block algebra. Every such map is a
/// dimension-preserving bijection of blocks with a unitary conjugation per
/// matched block: a |-> U a U*. The zero map (empty domain) is admitted.
class PartialAutomorphism {
 public:
  PartialAutomorphism() = default;

  PartialAutomorphism(Ideal dom, Ideal cod, std::map<int, int> block_map,
                      std::map<int, Matrix> unitaries, double tol = 1e-9)
      : dom_(std::move(dom)),
        cod_(std::move(cod)),
        block_map_(std::move(block_map)),
        unitaries_(std::move(unitaries)) {
    if (!(dom_.parent == cod_.parent))
      throw Error(ErrorKind::ParentMismatch, "dom and cod in different algebras");
    if (block_map_.size() != dom_.blocks.size())
      throw Error(ErrorKind::Precondition, "block map does not cover domain");
    std::vector<bool> hit(dom_.parent.num_blocks(), false);
    for (auto [b, c] : block_map_) {
      if (!dom_.contains_block(b) || !cod_.contains_block(c) || hit[c])
        throw Error(ErrorKind::Precondition, "block map is not a bijection");
      hit[c] = true;
      if (dom_.parent.dim(b) != dom_.parent.dim(c))
        throw Error(ErrorKind::Precondition, "block map changes dimension");
      auto it = unitaries_.find(b);
      if (it == unitaries_.end())
        throw Error(ErrorKind::Precondition,
                    "missing unitary for block " + std::to_string(b));
      const Matrix& u = it->second;
      const int n = dom_.parent.dim(b);
      if (u.rows() != n || u.cols() != n ||
          (u * u.adjoint() - Matrix::Identity(n, n)).norm() > tol)
        throw Error(ErrorKind::Precondition,
                    "block " + std::to_string(b) + " map is not unitary");
    }
    for (int c : cod_.blocks)
      if (!hit[c])
        throw Error(ErrorKind::Precondition, "block map does not cover range");
  }

  static PartialAutomorphism identity_on(const Ideal& d) {
    std::map<int, int> bm;
    std::map<int, Matrix> us;
    for (int b : d.blocks) {
      bm[b] = b;
      us[b] = Matrix::Identity(d.parent.dim(b), d.parent.dim(b));
    }
    return PartialAutomorphism(d, d, std::move(bm), std::move(us));
  }

  static PartialAutomorphism identity(const BlockAlgebra& a) {
    return identity_on(Ideal::full(a));
  }

  static PartialAutomorphism zero(const BlockAlgebra& a) {
    return PartialAutomorphism(Ideal::zero(a), Ideal::zero(a), {}, {});
  }

  const Ideal& dom() const { return dom_; }
  const Ideal& cod() const { return cod_; }
  const BlockAlgebra& parent() const { return dom_.parent; }
  bool is_zero() const { return dom_.is_zero(); }
  int map_block(int b) const { return block_map_.at(b); }
  const Matrix& unitary(int b) const { return unitaries_.at(b); }
  const std::map<int, int>& block_map() const { return block_map_; }

  Element apply(const Element& a, double tol = 1e-9) const {
    if (!a.supported_in(dom_, tol))
      throw Error(ErrorKind::OutsideDomain,
                  "element has mass outside the domain ideal");
    Element out(dom_.parent);
    for (auto [b, c] : block_map_) {
      const Matrix& u = unitaries_.at(b);
      out.block(c) = u * a.block(b) * u.adjoint();
    }
    return out;
  }

  /// Image of a sub-ideal of the domain under the block bijection.
  Ideal apply_ideal(const Ideal& d) const {
    std::vector<int> out;
    for (int b : d.blocks) {
      if (!dom_.contains_block(b))
        throw Error(ErrorKind::OutsideDomain, "ideal not inside the domain");
      out.push_back(block_map_.at(b));
    }
    return Ideal(dom_.parent, out);
  }

  PartialAutomorphism adjoint() const {
    std::map<int, int> bm;
    std::map<int, Matrix> us;
    for (auto [b, c] : block_map_) {
      bm[c] = b;
      us[c] = unitaries_.at(b).adjoint();
    }
    return PartialAutomorphism(cod_, dom_, std::move(bm), std::move(us));
  }

  /// Composition with the largest possible domain:
  /// dom(this o g) = g^{-1}(dom(this) meet cod(g)).
  PartialAutomorphism compose(const PartialAutomorphism& g) const {
    if (!(parent() == g.parent()))
      throw Error(ErrorKind::ParentMismatch, "different parent algebras");
    std::map<int, int> bm;
    std::map<int, Matrix> us;
    std::vector<int> dom_blocks, cod_blocks;
    for (auto [b, c] : g.block_map_) {
      if (!dom_.contains_block(c)) continue;
      bm[b] = block_map_.at(c);
      us[b] = unitaries_.at(c) * g.unitaries_.at(b);
      dom_blocks.push_back(b);
      cod_blocks.push_back(bm[b]);
    }
    return PartialAutomorphism(Ideal(parent(), dom_blocks),
                               Ideal(parent(), cod_blocks), std::move(bm),
                               std::move(us));
  }

  /// Restriction to a sub-ideal of the domain.
  PartialAutomorphism restrict_to(const Ideal& d) const {
    std::map<int, int> bm;
    std::map<int, Matrix> us;
    std::vector<int> cod_blocks;
    for (int b : d.blocks) {
      if (!dom_.contains_block(b))
        throw Error(ErrorKind::OutsideDomain, "ideal not inside the domain");
      bm[b] = block_map_.at(b);
      us[b] = unitaries_.at(b);
      cod_blocks.push_back(bm[b]);
    }
    return PartialAutomorphism(d, Ideal(parent(), cod_blocks), std::move(bm),
                               std::move(us));
  }

 private:
  Ideal dom_, cod_;
  std::map<int, int> block_map_;
  std::map<int, Matrix> unitaries_;
};

/// Conjugation by U and by lambda U (|lambda| = 1) is the same map, so
/// equality tests per-block agreement of U2* U1 with a unimodular scalar.
inline bool pauto_equal(const PartialAutomorphism& a,
                        const PartialAutomorphism& b, double tol) {
  if (!(a.parent() == b.parent())) return false;
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) return false;
  if (a.block_map() != b.block_map()) return false;
  for (auto [blk, c] : a.block_map()) {
    (void)c;
    const Matrix m = b.unitary(blk).adjoint() * a.unitary(blk);
    const int n = static_cast<int>(m.rows());
    const Complex lambda = m.trace() / static_cast<double>(n);
    if (std::abs(std::abs(lambda) - 1.0) > tol) return false;
    if ((m - lambda * Matrix::Identity(n, n)).norm() > tol) return false;
  }
  return true;
}

/// Oracle over partial automorphisms of a fixed block algebra, used to
/// generate the unital inverse semigroups of composites.
struct PartialAutomorphismOracle {
  BlockAlgebra algebra;
  double tol = 1e-9;

  PartialAutomorphism unit() const {
    return PartialAutomorphism::identity(algebra);
  }
  PartialAutomorphism product(const PartialAutomorphism& a,
                              const PartialAutomorphism& b) const {
    return a.compose(b);
  }
  PartialAutomorphism star(const PartialAutomorphism& a) const {
    return a.adjoint();
  }
  bool equal(const PartialAutomorphism& a, const PartialAutomorphism& b) const {
    return pauto_equal(a, b, tol);
  }
};

/// A partial bijection of an m-point set induces a partial automorphism of
/// the diagonal algebra C^m; compose/adjoint commute with this embedding.
inline PartialAutomorphism embed_partial_bijection(const PartialBijection& p) {
  BlockAlgebra diag(std::vector<int>(p.points(), 1));
  std::map<int, int> bm;
  std::map<int, Matrix> us;
  for (int x : p.domain()) {
    bm[x] = p.apply(x);
    us[x] = Matrix::Identity(1, 1);
  }
  return PartialAutomorphism(Ideal(diag, p.domain()),
                             Ideal(diag, p.range()), std::move(bm),
                             std::move(us));
}

}  // namespace semicross
