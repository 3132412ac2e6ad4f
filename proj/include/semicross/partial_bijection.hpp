#pragma once

#include <algorithm>
#include <vector>

#include "semicross/errors.hpp"
#include "semicross/inverse_semigroup.hpp"

namespace semicross {

/// Injective partial map on {0..m-1}; image[x] == -1 means x is outside the
/// domain. These form the symmetric inverse monoid on m points and serve as
/// the exact commutative test model for partial automorphisms.
class PartialBijection {
 public:
  PartialBijection() = default;
  explicit PartialBijection(int m) : image_(m, -1) {}
  explicit PartialBijection(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int y : image_) {
      if (y == -1) continue;
      if (y < 0 || y >= static_cast<int>(image_.size()) || seen[y])
        throw Error(ErrorKind::Precondition, "map not injective");
      seen[y] = true;
    }
  }

  static PartialBijection identity(int m) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i;
    return PartialBijection(std::move(img));
  }

  int points() const { return static_cast<int>(image_.size()); }
  int apply(int x) const { return image_[x]; }
  bool defined_at(int x) const { return image_[x] != -1; }

  std::vector<int> domain() const {
    std::vector<int> out;
    for (int x = 0; x < points(); ++x)
      if (defined_at(x)) out.push_back(x);
    return out;
  }

  std::vector<int> range() const {
    std::vector<int> out;
    for (int x = 0; x < points(); ++x)
      if (defined_at(x)) out.push_back(image_[x]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Composition with the largest possible domain: x in dom(this o g) iff
  /// g(x) is defined and lies in dom(this).
  PartialBijection compose(const PartialBijection& g) const {
    if (points() != g.points())
      throw Error(ErrorKind::ParentMismatch, "point counts differ");
    PartialBijection out(points());
    for (int x = 0; x < points(); ++x) {
      int y = g.image_[x];
      if (y != -1 && image_[y] != -1) out.image_[x] = image_[y];
    }
    return out;
  }

  PartialBijection star() const {
    PartialBijection out(points());
    for (int x = 0; x < points(); ++x)
      if (image_[x] != -1) out.image_[image_[x]] = x;
    return out;
  }

  bool operator==(const PartialBijection& o) const {
    return image_ == o.image_;
  }

  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
};

inline void enumerate_partial_bijections_rec(int m, int x,
                                             std::vector<int>& img,
                                             std::vector<bool>& used,
                                             std::vector<PartialBijection>& out) {
  if (x == m) {
    out.emplace_back(img);
    return;
  }
  img[x] = -1;
  enumerate_partial_bijections_rec(m, x + 1, img, used, out);
  for (int y = 0; y < m; ++y) {
    if (used[y]) continue;
    img[x] = y;
    used[y] = true;
    enumerate_partial_bijections_rec(m, x + 1, img, used, out);
    used[y] = false;
  }
  img[x] = -1;
}

inline std::vector<PartialBijection> all_partial_bijections(int m) {
  std::vector<int> img(m, -1);
  std::vector<bool> used(m, false);
  std::vector<PartialBijection> out;
  enumerate_partial_bijections_rec(m, 0, img, used, out);
  return out;
}

struct SymmetricInverseMonoid {
  FiniteInverseSemigroup table;
  std::vector<PartialBijection> elements;  // indexed like the table

  int index_of(const PartialBijection& p) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == p) return static_cast<int>(i);
    throw Error(ErrorKind::UnresolvedReference, "partial bijection not found");
  }
};

/// The monoid of all injective partial maps on m points, as a verified table.
/// Sizes grow as sum_k C(m,k)^2 k!, hence the cap.
inline SymmetricInverseMonoid symmetric_inverse_monoid(int m) {
  if (m < 1 || m > 5)
    throw Error(ErrorKind::TooLarge, "point count must be in 1..5");
  SymmetricInverseMonoid out;
  out.elements = all_partial_bijections(m);
  const int n = static_cast<int>(out.elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = out.index_of(out.elements[i].compose(out.elements[j]));
  out.table = verify_inverse_semigroup(table);
  return out;
}

}  // namespace semicross
