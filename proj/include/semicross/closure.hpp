#pragma once

#include <string>
#include <vector>

#include "semicross/errors.hpp"
#include "semicross/inverse_semigroup.hpp"
#include "semicross/partial_bijection.hpp"

namespace semicross {

/// Closure of a generating set inside an ambient inverse monoid given by an
/// oracle with members
///   Elem unit();
///   Elem product(const Elem&, const Elem&);
///   Elem star(const Elem&);
///   bool equal(const Elem&, const Elem&);
/// The unit is always adjoined. Elements are indexed in first-discovered
/// order under breadth-first enumeration (unit, generators, then stars and
/// products round by round), which makes reports deterministic.
template <class Elem>
struct Closure {
  FiniteInverseSemigroup semigroup;
  std::vector<Elem> elements;  // ambient value of each abstract index
};

template <class Elem, class Oracle>
Closure<Elem> generate_closure(const Oracle& oracle,
                               const std::vector<Elem>& generators,
                               int bound) {
  std::vector<Elem> elems;
  auto find = [&](const Elem& x) -> int {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (oracle.equal(elems[i], x)) return static_cast<int>(i);
    return -1;
  };
  auto add = [&](const Elem& x) {
    if (find(x) == -1) {
      elems.push_back(x);
      if (static_cast<int>(elems.size()) > bound)
        throw Error(ErrorKind::BoundExceeded,
                    "closure exceeded bound " + std::to_string(bound));
    }
  };

  add(oracle.unit());
  for (const auto& g : generators) add(g);

  for (;;) {
    const std::size_t m = elems.size();
    for (std::size_t i = 0; i < m; ++i) add(oracle.star(elems[i]));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        add(oracle.product(elems[i], elems[j]));
    if (elems.size() == m) break;
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = find(oracle.product(elems[i], elems[j]));
      if (k == -1)
        throw Error(ErrorKind::BoundExceeded, "closure not actually closed");
      table[i][j] = k;
    }

  Closure<Elem> out;
  out.semigroup = verify_inverse_semigroup(table);
  out.elements = std::move(elems);
  return out;
}

/// Oracle over partial bijections of a fixed ground set.
struct PartialBijectionOracle {
  int points;
  PartialBijection unit() const { return PartialBijection::identity(points); }
  PartialBijection product(const PartialBijection& a,
                           const PartialBijection& b) const {
    return a.compose(b);
  }
  PartialBijection star(const PartialBijection& a) const { return a.star(); }
  bool equal(const PartialBijection& a, const PartialBijection& b) const {
    return a == b;
  }
};

}  // namespace semicross
