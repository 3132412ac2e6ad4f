#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include "semicross/errors.hpp"

namespace semicross {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Finite-dimensional C*-algebra as a direct sum of full complex matrix
/// blocks: A = M_{n_1} + ... + M_{n_k}.
struct BlockAlgebra {
  std::vector<int> block_dims;

  BlockAlgebra() = default;
  explicit BlockAlgebra(std::vector<int> dims) : block_dims(std::move(dims)) {
    if (block_dims.empty())
      throw Error(ErrorKind::Precondition, "algebra needs at least one block");
    for (int d : block_dims)
      if (d <= 0) throw Error(ErrorKind::Precondition, "block dim <= 0");
  }

  int num_blocks() const { return static_cast<int>(block_dims.size()); }
  int dim(int b) const { return block_dims[b]; }

  /// Linear dimension sum n_i^2 of the algebra itself.
  int algebra_dim() const {
    int d = 0;
    for (int n : block_dims) d += n * n;
    return d;
  }

  bool operator==(const BlockAlgebra& o) const {
    return block_dims == o.block_dims;
  }
};

/// Closed two-sided ideal of a block algebra: exactly a subset of the blocks.
/// The empty subset is the zero ideal.
struct Ideal {
  BlockAlgebra parent;
  std::vector<int> blocks;  // sorted, 0-based

  Ideal() = default;
  Ideal(BlockAlgebra algebra, std::vector<int> subset)
      : parent(std::move(algebra)), blocks(std::move(subset)) {
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    for (int b : blocks)
      if (b < 0 || b >= parent.num_blocks())
        throw Error(ErrorKind::Precondition, "ideal block out of range");
  }

  static Ideal full(const BlockAlgebra& a) {
    std::vector<int> all(a.num_blocks());
    for (int i = 0; i < a.num_blocks(); ++i) all[i] = i;
    return Ideal(a, all);
  }
  static Ideal zero(const BlockAlgebra& a) { return Ideal(a, {}); }

  bool contains_block(int b) const {
    return std::binary_search(blocks.begin(), blocks.end(), b);
  }
  bool is_zero() const { return blocks.empty(); }
  bool is_full() const {
    return static_cast<int>(blocks.size()) == parent.num_blocks();
  }
  bool contains(const Ideal& other) const {
    return std::includes(blocks.begin(), blocks.end(), other.blocks.begin(),
                         other.blocks.end());
  }
  bool operator==(const Ideal& o) const {
    return parent == o.parent && blocks == o.blocks;
  }
};

/// Meet of ideals; for block algebras the ideal product IJ equals the
/// intersection, so this is both.
inline Ideal ideal_meet(const Ideal& a, const Ideal& b) {
  if (!(a.parent == b.parent))
    throw Error(ErrorKind::ParentMismatch, "ideals of different algebras");
  std::vector<int> out;
  std::set_intersection(a.blocks.begin(), a.blocks.end(), b.blocks.begin(),
                        b.blocks.end(), std::back_inserter(out));
  return Ideal(a.parent, out);
}

/// Element of a block algebra: one n_i x n_i matrix per block.
class Element {
 public:
  Element() = default;
  explicit Element(const BlockAlgebra& a) {
    blocks_.reserve(a.num_blocks());
    for (int n : a.block_dims) blocks_.push_back(Matrix::Zero(n, n));
  }

  static Element unit(const BlockAlgebra& a) { return unit_of(Ideal::full(a)); }

  /// Identity of an ideal: the sum of the identity matrices of its blocks.
  /// This is the central projection p_D that replaces approximate identities
  /// at finite dimension.
  static Element unit_of(const Ideal& d) {
    Element e(d.parent);
    for (int b : d.blocks)
      e.blocks_[b] = Matrix::Identity(d.parent.dim(b), d.parent.dim(b));
    return e;
  }

  /// Matrix unit e_{jk} of block b.
  static Element matrix_unit(const BlockAlgebra& a, int b, int j, int k) {
    Element e(a);
    e.blocks_[b](j, k) = Complex(1, 0);
    return e;
  }

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const Matrix& block(int b) const { return blocks_[b]; }
  Matrix& block(int b) { return blocks_[b]; }

  bool compatible(const Element& o) const {
    if (num_blocks() != o.num_blocks()) return false;
    for (int b = 0; b < num_blocks(); ++b)
      if (blocks_[b].rows() != o.blocks_[b].rows()) return false;
    return true;
  }

  Element operator+(const Element& o) const {
    Element out = *this;
    for (int b = 0; b < num_blocks(); ++b) out.blocks_[b] += o.blocks_[b];
    return out;
  }
  Element operator-(const Element& o) const {
    Element out = *this;
    for (int b = 0; b < num_blocks(); ++b) out.blocks_[b] -= o.blocks_[b];
    return out;
  }
  Element operator*(const Element& o) const {
    Element out = *this;
    for (int b = 0; b < num_blocks(); ++b) out.blocks_[b] *= o.blocks_[b];
    return out;
  }
  Element operator*(Complex c) const {
    Element out = *this;
    for (auto& m : out.blocks_) m *= c;
    return out;
  }
  Element adjoint() const {
    Element out = *this;
    for (auto& m : out.blocks_) m = m.adjoint().eval();
    return out;
  }

  double frobenius_norm() const {
    double s = 0;
    for (const auto& m : blocks_) s += m.squaredNorm();
    return std::sqrt(s);
  }

  /// Operator norm of the direct sum: max spectral norm over blocks.
  double operator_norm() const {
    double s = 0;
    for (const auto& m : blocks_) {
      if (m.rows() == 0) continue;
      Eigen::JacobiSVD<Matrix> svd(m);
      if (svd.singularValues().size() > 0)
        s = std::max(s, svd.singularValues()(0));
    }
    return s;
  }

  /// Mass outside the ideal's blocks.
  double norm_outside(const Ideal& d) const {
    double s = 0;
    for (int b = 0; b < num_blocks(); ++b)
      if (!d.contains_block(b)) s += blocks_[b].squaredNorm();
    return std::sqrt(s);
  }

  bool supported_in(const Ideal& d, double tol) const {
    return norm_outside(d) <= tol;
  }

  /// Restriction to an ideal (zero out the other blocks).
  Element restrict_to(const Ideal& d) const {
    Element out = *this;
    for (int b = 0; b < num_blocks(); ++b)
      if (!d.contains_block(b)) out.blocks_[b].setZero();
    return out;
  }

 private:
  std::vector<Matrix> blocks_;
};

inline Element operator*(Complex c, const Element& e) { return e * c; }

inline double distance(const Element& a, const Element& b) {
  return (a - b).frobenius_norm();
}

/// Matrix units of the blocks of an ideal, the generator basis used for
/// crossed-product spans.
inline std::vector<Element> matrix_unit_basis(const Ideal& d) {
  std::vector<Element> out;
  for (int b : d.blocks)
    for (int j = 0; j < d.parent.dim(b); ++j)
      for (int k = 0; k < d.parent.dim(b); ++k)
        out.push_back(Element::matrix_unit(d.parent, b, j, k));
  return out;
}

}  // namespace semicross
