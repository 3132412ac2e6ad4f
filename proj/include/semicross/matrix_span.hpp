#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "semicross/block_algebra.hpp"
#include "semicross/errors.hpp"
#include "semicross/random_gen.hpp"

namespace semicross {

inline Complex hs_inner(const Matrix& a, const Matrix& b) {
  return (a.adjoint() * b).trace();
}

/// *-closed, product-closed linear span of d x d complex matrices, stored as
/// a Hilbert-Schmidt orthonormal basis.
struct MatrixAlgebraSpan {
  int ambient_dim = 0;
  std::vector<Matrix> basis;

  int dimension() const { return static_cast<int>(basis.size()); }

  Matrix project(const Matrix& x) const {
    Matrix p = Matrix::Zero(ambient_dim, ambient_dim);
    for (const auto& b : basis) p += hs_inner(b, x) * b;
    return p;
  }

  double membership_residual(const Matrix& x) const {
    return (x - project(x)).norm();
  }

  bool contains(const Matrix& x, double tol) const {
    return membership_residual(x) <= tol;
  }
};

/// Modified Gram-Schmidt with one re-orthogonalization pass; candidates whose
/// residual falls below the drop threshold contribute no new direction.
inline void mgs_extend(std::vector<Matrix>& basis,
                       const std::vector<Matrix>& candidates,
                       double drop_tol) {
  for (Matrix v : candidates) {
    const double n0 = v.norm();
    if (n0 <= drop_tol) continue;
    v /= n0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= hs_inner(b, v) * b;
    const double nr = v.norm();
    if (nr > drop_tol) basis.push_back(v / nr);
  }
}

/// Smallest adjoint-closed, product-closed span containing the generators.
/// Dimension is bounded by d^2, so the iteration terminates.
inline MatrixAlgebraSpan span_closure(const std::vector<Matrix>& generators,
                                      double drop_tol = 1e-10) {
  MatrixAlgebraSpan span;
  for (const auto& g : generators) {
    if (span.ambient_dim == 0) span.ambient_dim = static_cast<int>(g.rows());
    if (g.rows() != span.ambient_dim || g.cols() != span.ambient_dim)
      throw Error(ErrorKind::DimensionMismatch, "generator shape mismatch");
  }
  mgs_extend(span.basis, generators, drop_tol);
  for (;;) {
    const std::size_t before = span.basis.size();
    std::vector<Matrix> cand;
    for (const auto& a : span.basis) cand.push_back(a.adjoint());
    for (const auto& a : span.basis)
      for (const auto& b : span.basis) cand.push_back(a * b);
    mgs_extend(span.basis, cand, drop_tol);
    if (span.basis.size() == before) break;
  }
  return span;
}

inline bool algebra_equal(const MatrixAlgebraSpan& s1,
                          const MatrixAlgebraSpan& s2, double tol) {
  if (s1.ambient_dim != s2.ambient_dim)
    throw Error(ErrorKind::DimensionMismatch, "ambient dimensions differ");
  for (const auto& b : s1.basis)
    if (s2.membership_residual(b) > tol) return false;
  for (const auto& b : s2.basis)
    if (s1.membership_residual(b) > tol) return false;
  return true;
}

/// Unit of the spanned algebra (a finite-dimensional C*-algebra always has
/// one), found by solving e b = b for all basis elements in least squares.
inline Matrix algebra_unit(const MatrixAlgebraSpan& span, double tol) {
  const int k = span.dimension();
  const int d = span.ambient_dim;
  if (k == 0) return Matrix::Zero(d, d);
  Eigen::MatrixXcd lhs(k * d * d, k);
  Eigen::VectorXcd rhs(k * d * d);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      Matrix prod = span.basis[i] * span.basis[j];
      lhs.block(j * d * d, i, d * d, 1) =
          Eigen::Map<Eigen::VectorXcd>(prod.data(), d * d);
    }
    Matrix target = span.basis[j];
    rhs.segment(j * d * d, d * d) =
        Eigen::Map<Eigen::VectorXcd>(target.data(), d * d);
  }
  Eigen::VectorXcd c = lhs.colPivHouseholderQr().solve(rhs);
  Matrix e = Matrix::Zero(d, d);
  for (int i = 0; i < k; ++i) e += c(i) * span.basis[i];
  for (const auto& b : span.basis)
    if ((e * b - b).norm() > tol * 100 || (b * e - b).norm() > tol * 100)
      throw Error(ErrorKind::IllConditioned, "algebra unit did not resolve");
  return e;
}

/// Wedderburn data of a finite-dimensional C*-algebra: its dimension, the
/// multiset of simple block sizes, and the center dimension (= block count).
struct StructureReport {
  int algebra_dim = 0;
  std::vector<int> block_sizes;  // ascending
  int center_dim = 0;
  std::uint64_t seed = 0;  // seed used for the generic central element

  bool operator==(const StructureReport& o) const {
    return algebra_dim == o.algebra_dim && block_sizes == o.block_sizes &&
           center_dim == o.center_dim;
  }

  std::string to_string() const {
    std::string s = "dim=" + std::to_string(algebra_dim) + " blocks=[";
    for (std::size_t i = 0; i < block_sizes.size(); ++i)
      s += (i ? "," : "") + std::to_string(block_sizes[i]);
    return s + "] center=" + std::to_string(center_dim);
  }
};

namespace detail {

/// Orthonormal basis of the center: null space of the commutation system
/// [X, B_j] = 0 solved within the span.
inline std::vector<Matrix> center_basis(const MatrixAlgebraSpan& span) {
  const int k = span.dimension();
  const int d = span.ambient_dim;
  Eigen::MatrixXcd sys(k * d * d, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Matrix comm = span.basis[i] * span.basis[j] - span.basis[j] * span.basis[i];
      sys.block(j * d * d, i, d * d, 1) =
          Eigen::Map<Eigen::VectorXcd>(comm.data(), d * d);
    }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<Matrix> out;
  for (int i = 0; i < k; ++i) {
    if (i < sv.size() && sv(i) > 1e-7) continue;
    Matrix c = Matrix::Zero(d, d);
    for (int j = 0; j < k; ++j) c += svd.matrixV()(j, i) * span.basis[j];
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Numerical Wedderburn decomposition. The center is computed from the
/// commutation equations; a generic self-adjoint central element is
/// diagonalized and block sizes are recovered from the dimensions of the
/// corner algebras cut by its spectral projections. Retries with a fresh
/// random central element up to 8 times before reporting IllConditioned.
inline StructureReport structure_report(const MatrixAlgebraSpan& span,
                                        std::uint64_t seed = 42,
                                        double tol = 1e-9) {
  StructureReport rep;
  rep.algebra_dim = span.dimension();
  rep.seed = seed;
  if (rep.algebra_dim == 0) return rep;

  const int d = span.ambient_dim;
  const std::vector<Matrix> center = detail::center_basis(span);
  rep.center_dim = static_cast<int>(center.size());

  // Compress onto the range of the algebra unit so the algebra acts
  // unitally and the kernel contributes no spurious eigenvalue.
  const Matrix e = algebra_unit(span, tol);
  Eigen::SelfAdjointEigenSolver<Matrix> es(e);
  std::vector<int> range_cols;
  for (int i = 0; i < d; ++i)
    if (es.eigenvalues()(i) > 0.5) range_cols.push_back(i);
  const int r = static_cast<int>(range_cols.size());
  Matrix q(d, r);
  for (int i = 0; i < r; ++i) q.col(i) = es.eigenvectors().col(range_cols[i]);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(1.0, 2.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix z = Matrix::Zero(d, d);
    for (const auto& c : center) {
      z += coef(rng) * (c + c.adjoint());
      z += coef(rng) * (Complex(0, 1) * (c - c.adjoint()));
    }
    Matrix zc = (q.adjoint() * z * q + (q.adjoint() * z * q).adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> zes(zc);

    std::vector<std::pair<int, int>> clusters;  // [first, last] column ranges
    int start = 0;
    for (int i = 1; i <= r; ++i) {
      if (i == r || zes.eigenvalues()(i) - zes.eigenvalues()(i - 1) > 1e-6) {
        clusters.push_back({start, i - 1});
        start = i;
      }
    }
    if (static_cast<int>(clusters.size()) != rep.center_dim) continue;

    std::vector<int> sizes;
    int total = 0;
    bool bad = false;
    for (auto [a, b] : clusters) {
      Matrix v = zes.eigenvectors().middleCols(a, b - a + 1);
      Matrix p = v * v.adjoint();
      std::vector<Matrix> corner;
      for (const auto& bas : span.basis)
        corner.push_back(p * (q.adjoint() * bas * q) * p);
      std::vector<Matrix> obasis;
      mgs_extend(obasis, corner, 1e-8);
      const int corner_dim = static_cast<int>(obasis.size());
      const int n = static_cast<int>(std::lround(std::sqrt(corner_dim)));
      if (n * n != corner_dim) {
        bad = true;
        break;
      }
      sizes.push_back(n);
      total += corner_dim;
    }
    if (bad || total != rep.algebra_dim) continue;
    std::sort(sizes.begin(), sizes.end());
    rep.block_sizes = sizes;
    return rep;
  }
  throw Error(ErrorKind::IllConditioned,
              "central element eigenvalue gaps below tolerance after retries");
}

}  // namespace semicross
