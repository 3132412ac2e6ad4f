#pragma once

#include <vector>

#include "semicross/block_algebra.hpp"
#include "semicross/report.hpp"

namespace semicross {

/// Nondegenerate *-representation of a block algebra on C^dim, stored as the
/// images of all matrix units. Covers multiplicity representations, direct
/// sums, unitary conjugates and compositions with further *-homomorphisms in
/// one exact format.
class HilbertRep {
 public:
  HilbertRep() = default;

  static HilbertRep from_multiplicities(const BlockAlgebra& a,
                                        const std::vector<int>& mult) {
    if (static_cast<int>(mult.size()) != a.num_blocks())
      throw Error(ErrorKind::Precondition, "one multiplicity per block");
    HilbertRep r;
    r.algebra_ = a;
    r.dim_ = 0;
    std::vector<int> offset(a.num_blocks());
    for (int b = 0; b < a.num_blocks(); ++b) {
      if (mult[b] < 0) throw Error(ErrorKind::Precondition, "negative multiplicity");
      offset[b] = r.dim_;
      r.dim_ += mult[b] * a.dim(b);
    }
    r.unit_images_.resize(a.num_blocks());
    for (int b = 0; b < a.num_blocks(); ++b) {
      const int n = a.dim(b);
      r.unit_images_[b].assign(n * n, Matrix::Zero(r.dim_, r.dim_));
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int c = 0; c < mult[b]; ++c)
            r.unit_images_[b][j * n + k](offset[b] + c * n + j,
                                         offset[b] + c * n + k) = 1.0;
    }
    return r;
  }

  /// Build from an arbitrary linear map given on matrix units.
  template <class F>
  static HilbertRep from_images(const BlockAlgebra& a, int dim, F&& image) {
    HilbertRep r;
    r.algebra_ = a;
    r.dim_ = dim;
    r.unit_images_.resize(a.num_blocks());
    for (int b = 0; b < a.num_blocks(); ++b) {
      const int n = a.dim(b);
      r.unit_images_[b].reserve(n * n);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          r.unit_images_[b].push_back(image(b, j, k));
    }
    return r;
  }

  int dim() const { return dim_; }
  const BlockAlgebra& algebra() const { return algebra_; }

  Matrix apply(const Element& x) const {
    Matrix out = Matrix::Zero(dim_, dim_);
    for (int b = 0; b < algebra_.num_blocks(); ++b) {
      const int n = algebra_.dim(b);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Complex c = x.block(b)(j, k);
          if (c != Complex(0, 0)) out += c * unit_images_[b][j * n + k];
        }
    }
    return out;
  }

  /// pi(p_D) for the ideal unit p_D; the projection onto pi(D)H.
  Matrix projection(const Ideal& d) const {
    return apply(Element::unit_of(d));
  }

  HilbertRep direct_sum(const HilbertRep& o) const {
    if (!(algebra_ == o.algebra_))
      throw Error(ErrorKind::ParentMismatch, "direct sum over one algebra");
    HilbertRep r;
    r.algebra_ = algebra_;
    r.dim_ = dim_ + o.dim_;
    r.unit_images_.resize(algebra_.num_blocks());
    for (int b = 0; b < algebra_.num_blocks(); ++b) {
      const int n = algebra_.dim(b);
      for (int i = 0; i < n * n; ++i) {
        Matrix m = Matrix::Zero(r.dim_, r.dim_);
        m.topLeftCorner(dim_, dim_) = unit_images_[b][i];
        m.bottomRightCorner(o.dim_, o.dim_) = o.unit_images_[b][i];
        r.unit_images_[b].push_back(std::move(m));
      }
    }
    return r;
  }

  HilbertRep conjugate(const Matrix& w) const {
    HilbertRep r = *this;
    for (auto& blk : r.unit_images_)
      for (auto& m : blk) m = (w * m * w.adjoint()).eval();
    return r;
  }

  /// *-homomorphism laws on the matrix units plus nondegeneracy
  /// (pi maps the unit of A to the identity of H).
  CheckReport validate(double tol) const {
    CheckReport rep;
    double worst = 0;
    for (int b = 0; b < algebra_.num_blocks(); ++b) {
      const int n = algebra_.dim(b);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Matrix& ejk = unit_images_[b][j * n + k];
          worst = std::max(worst,
                           (ejk.adjoint() - unit_images_[b][k * n + j]).norm());
          for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m) {
              Matrix want = (k == l) ? unit_images_[b][j * n + m]
                                     : Matrix::Zero(dim_, dim_);
              worst = std::max(
                  worst, (ejk * unit_images_[b][l * n + m] - want).norm());
            }
        }
      for (int b2 = 0; b2 < algebra_.num_blocks(); ++b2) {
        if (b2 == b) continue;
        const int n2 = algebra_.dim(b2);
        worst = std::max(worst, (unit_images_[b][0] * unit_images_[b2][0] -
                                 Matrix::Zero(dim_, dim_))
                                    .norm());
        (void)n2;
      }
    }
    rep.require("pi is a *-homomorphism", worst <= tol, worst,
                ErrorKind::NotStarHomomorphism);
    const double nd =
        (apply(Element::unit(algebra_)) - Matrix::Identity(dim_, dim_)).norm();
    rep.require("pi is nondegenerate", nd <= tol, nd,
                ErrorKind::NotNondegenerate);
    return rep;
  }

 private:
  BlockAlgebra algebra_;
  int dim_ = 0;
  std::vector<std::vector<Matrix>> unit_images_;  // [block][j*n+k]
};

}  // namespace semicross
