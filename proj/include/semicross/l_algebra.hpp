#pragma once

#include <map>

#include "semicross/semigroup_action.hpp"

namespace semicross {

/// Finitely supported function s -> x(s) in E_s, an element of the
/// convolution *-algebra L of a semigroup action. Values are stored where
/// set; the l1 norm sums operator norms of the summands.
struct LElement {
  std::map<int, Element> values;

  bool has(int s) const { return values.find(s) != values.end(); }
};

inline LElement make_lelement(const SemigroupAction& a,
                              std::map<int, Element> values,
                              double tol = 1e-9) {
  for (const auto& [s, x] : values) {
    if (s < 0 || s >= a.S.size())
      throw Error(ErrorKind::Precondition, "support outside S");
    if (!x.supported_in(a.E(s), tol))
      throw Error(ErrorKind::OutsideDomain,
                  "value at " + std::to_string(s) + " not in E_s");
  }
  return LElement{std::move(values)};
}

inline LElement delta(const SemigroupAction& a, const Element& x, int s,
                      double tol = 1e-9) {
  return make_lelement(a, {{s, x}}, tol);
}

inline double l1_norm(const LElement& x) {
  double n = 0;
  for (const auto& [s, v] : x.values) n += v.operator_norm();
  return n;
}

inline LElement l_add(const SemigroupAction& a, const LElement& x,
                      const LElement& y) {
  LElement out = x;
  for (const auto& [s, v] : y.values) {
    if (out.has(s))
      out.values[s] = out.values[s] + v;
    else
      out.values.emplace(s, v);
  }
  (void)a;
  return out;
}

/// Convolution (x*y)(s) = sum over factorizations rt = s of
/// beta_r[beta_{r*}(x(r)) y(t)].
inline LElement l_multiply(const SemigroupAction& a, const LElement& x,
                           const LElement& y, double tol = 1e-9) {
  LElement out;
  for (const auto& [r, xr] : x.values)
    for (const auto& [t, yt] : y.values) {
      const int s = a.S.mul(r, t);
      const Element term = a.beta(r).apply(
          a.beta(a.S.star(r)).apply(xr, tol) * yt, tol);
      if (out.has(s))
        out.values[s] = out.values[s] + term;
      else
        out.values.emplace(s, term);
    }
  return out;
}

/// Involution x*(s) = beta_s(x(s*)^*).
inline LElement l_star(const SemigroupAction& a, const LElement& x,
                       double tol = 1e-9) {
  LElement out;
  for (const auto& [s, v] : x.values) {
    const int ss = a.S.star(s);
    out.values.emplace(ss, a.beta(ss).apply(v.adjoint(), tol));
  }
  return out;
}

/// (pi x v)(x) = sum_s pi(x(s)) v_s.
inline Matrix pi_times_v(const SemigroupCovariantRep& c, const LElement& x) {
  Matrix out = Matrix::Zero(c.rep.dim(), c.rep.dim());
  for (const auto& [s, v] : x.values) out += c.rep.apply(v) * c.v(s);
  return out;
}

inline double l_distance(const SemigroupAction& a, const LElement& x,
                         const LElement& y) {
  double d = 0;
  Element zero(a.algebra);
  for (int s = 0; s < a.S.size(); ++s) {
    const Element xs = x.has(s) ? x.values.at(s) : zero;
    const Element ys = y.has(s) ? y.values.at(s) : zero;
    d = std::max(d, distance(xs, ys));
  }
  return d;
}

}  // namespace semicross
