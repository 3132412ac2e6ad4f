#pragma once

#include <cstdint>
#include <random>

#include "semicross/block_algebra.hpp"

namespace semicross {

/// splitmix64 step; also the stated scheme for deriving per-directive seeds
/// from the root seed (seed ^ ordinal, then one splitmix64 round).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t ordinal) {
  return splitmix64(root ^ (0x9e3779b97f4a7c15ULL * (ordinal + 1)));
}

inline Matrix random_gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

/// Haar-style random unitary via QR of a complex Gaussian matrix with the
/// R-diagonal phases absorbed into Q.
inline Matrix random_unitary(int n, std::mt19937_64& rng) {
  Matrix a = random_gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    Complex d = r(i, i);
    q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1, 0);
  }
  return q;
}

}  // namespace semicross
