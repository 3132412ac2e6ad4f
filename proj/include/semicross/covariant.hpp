#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "semicross/config.hpp"
#include "semicross/hilbert_rep.hpp"
#include "semicross/partial_action.hpp"

namespace semicross {

/// Partial-isometry defect of a single operator.
inline double partial_isometry_residual(const Matrix& w) {
  return (w * w.adjoint() * w - w).norm();
}

/// Ambient oracle over complex matrices (tolerance equality), used to close
/// families of partial isometries into inverse semigroups.
struct MatrixOracle {
  int dim;
  double tol = 1e-9;

  Matrix unit() const { return Matrix::Identity(dim, dim); }
  Matrix product(const Matrix& a, const Matrix& b) const { return a * b; }
  Matrix star(const Matrix& a) const { return a.adjoint(); }
  bool equal(const Matrix& a, const Matrix& b) const {
    return (a - b).norm() <= tol;
  }
};

/// Covariant representation data (pi, u, H) for a partial action. The family
/// stores u_g where it is nonzero; lookups outside default to zero.
struct PartialCovariantRep {
  PartialAction action;
  HilbertRep rep;
  std::map<GroupOracle::Elem, Matrix> family;
  ValidationMode mode = ValidationMode::Strict;

  Matrix u(GroupOracle::Elem g) const {
    auto it = family.find(g);
    return it == family.end() ? Matrix::Zero(rep.dim(), rep.dim())
                              : it->second;
  }

  PartialCovariantRep direct_sum(const PartialCovariantRep& o) const {
    PartialCovariantRep out;
    out.action = action;
    out.rep = rep.direct_sum(o.rep);
    out.mode = mode;
    for (const auto& [g, m] : family) {
      Matrix big = Matrix::Zero(out.rep.dim(), out.rep.dim());
      big.topLeftCorner(rep.dim(), rep.dim()) = m;
      big.bottomRightCorner(o.rep.dim(), o.rep.dim()) = o.u(g);
      out.family[g] = std::move(big);
    }
    return out;
  }
};

inline PartialCovariantRep make_covrep(
    PartialAction action, HilbertRep rep,
    std::map<GroupOracle::Elem, Matrix> family,
    ValidationMode mode = ValidationMode::Strict) {
  PartialCovariantRep c{std::move(action), std::move(rep), std::move(family),
                        mode};
  const auto e = c.action.group.identity();
  if (c.family.find(e) == c.family.end())
    c.family[e] = Matrix::Identity(c.rep.dim(), c.rep.dim());
  return c;
}

/// Certifies a covariant representation of a partial action. Strict mode
/// demands the initial/final spaces equal pi(D_{g^-1})H and pi(D_g)H via the
/// ideal-unit projections; lax mode only demands containment, the reading
/// needed for unitary families over proper ideals.
inline CheckReport validate_covrep_partial(const PartialCovariantRep& c,
                                           const Config& cfg = {}) {
  CheckReport rep;
  rep.merge(c.rep.validate(cfg.tol), "pi");
  const auto& G = c.action.group;
  const auto e = G.identity();
  const int h = c.rep.dim();

  {
    const double r = (c.u(e) - Matrix::Identity(h, h)).norm();
    rep.require("u_e = 1_H", r <= cfg.tol, r, ErrorKind::CompositionViolated);
  }

  std::set<GroupOracle::Elem> keys(c.action.support.begin(),
                                   c.action.support.end());
  for (const auto& [g, m] : c.family) keys.insert(g);

  for (auto g : keys) {
    const Matrix w = c.u(g);
    const double pir = partial_isometry_residual(w);
    rep.require("u_" + std::to_string(g) + " is a partial isometry",
                pir <= cfg.tol, pir, ErrorKind::NotPartialIsometry);

    const Matrix init = c.rep.projection(c.action.domain_of(G.inverse(g)));
    const Matrix fin = c.rep.projection(c.action.domain_of(g));
    if (c.mode == ValidationMode::Strict) {
      const double ri = (w.adjoint() * w - init).norm();
      const double rf = (w * w.adjoint() - fin).norm();
      rep.require("initial space of u_" + std::to_string(g),
                  ri <= cfg.tol, ri, ErrorKind::SpaceMismatch);
      rep.require("final space of u_" + std::to_string(g), rf <= cfg.tol, rf,
                  ErrorKind::SpaceMismatch);
    } else {
      // containment P <= W*W  iff  (W*W) P = P
      const double ri = (w.adjoint() * w * init - init).norm();
      const double rf = (w * w.adjoint() * fin - fin).norm();
      rep.require("initial space of u_" + std::to_string(g) + " contains",
                  ri <= cfg.tol, ri, ErrorKind::SpaceMismatch);
      rep.require("final space of u_" + std::to_string(g) + " contains",
                  rf <= cfg.tol, rf, ErrorKind::SpaceMismatch);
    }

    const double radj = (c.u(G.inverse(g)) - w.adjoint()).norm();
    rep.require("u of inverse is the adjoint at " + std::to_string(g),
                radj <= cfg.tol, radj, ErrorKind::CompositionViolated);
  }

  // Covariance on a matrix-unit basis of each D_{g^-1}.
  for (auto g : c.action.support) {
    const Matrix w = c.u(g);
    const Matrix wi = c.u(G.inverse(g));
    double worst = 0;
    for (const auto& a : matrix_unit_basis(c.action.domain_of(G.inverse(g)))) {
      const Matrix lhs = w * c.rep.apply(a) * wi;
      const Matrix rhs = c.rep.apply(c.action.maps.at(g).apply(a, cfg.tol));
      worst = std::max(worst, (lhs - rhs).norm());
    }
    rep.require("covariance at " + std::to_string(g), worst <= cfg.tol, worst,
                ErrorKind::CovarianceViolated);
  }

  // Composition condition on support pairs; other pairs have zero projection
  // and hold vacuously.
  for (auto s : c.action.support)
    for (auto t : c.action.support) {
      const Ideal d = ideal_meet(
          c.action.domain_of(G.inverse(t)),
          c.action.domain_of(G.inverse(G.product(s, t))));
      const Matrix p = c.rep.projection(d);
      const double r =
          (c.u(G.product(s, t)) * p - c.u(s) * c.u(t) * p).norm();
      rep.require("u_st agrees with u_s u_t on the joint domain at " +
                      detail::word_str({s, t}),
                  r <= cfg.tol, r, ErrorKind::CompositionViolated);
    }
  return rep;
}

/// Product calculus over all words of length <= max_len with letters in the
/// support: each product of u's is a partial isometry whose range and source
/// projections are the images of the ideal units given by the closed-form
/// domain/range formulas, and the collapsed u of the word product agrees on
/// the initial space.
inline CheckReport check_product_calculus(const PartialCovariantRep& c,
                                          int max_len, const Config& cfg = {}) {
  CheckReport rep;
  const auto& G = c.action.group;
  std::vector<std::vector<GroupOracle::Elem>> words;
  std::vector<std::vector<GroupOracle::Elem>> frontier = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<GroupOracle::Elem>> next;
    for (const auto& w : frontier)
      for (auto g : c.action.support) {
        auto w2 = w;
        w2.push_back(g);
        next.push_back(w2);
        words.push_back(w2);
      }
    frontier = std::move(next);
  }

  for (const auto& word : words) {
    Matrix w = Matrix::Identity(c.rep.dim(), c.rep.dim());
    Ideal range = Ideal::full(c.action.algebra);
    Ideal domain = Ideal::full(c.action.algebra);
    auto prefix = G.identity();
    for (auto g : word) {
      w = w * c.u(g);
      prefix = G.product(prefix, g);
      range = ideal_meet(range, c.action.domain_of(prefix));
    }
    auto suffix = G.identity();
    for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i) {
      suffix = G.product(word[i], suffix);
      domain = ideal_meet(domain, c.action.domain_of(G.inverse(suffix)));
    }

    const double pir = partial_isometry_residual(w);
    rep.require("word " + detail::word_str(word) + " is a partial isometry",
                pir <= cfg.tol, pir, ErrorKind::NotPartialIsometry);
    const double rfin =
        (w * w.adjoint() - c.rep.projection(range)).norm();
    rep.require("final projection of word " + detail::word_str(word),
                rfin <= cfg.tol, rfin, ErrorKind::SpaceMismatch);
    const double rini =
        (w.adjoint() * w - c.rep.projection(domain)).norm();
    rep.require("initial projection of word " + detail::word_str(word),
                rini <= cfg.tol, rini, ErrorKind::SpaceMismatch);
    const Matrix p = c.rep.projection(domain);
    const double rcol = (c.u(prefix) * p - w * p).norm();
    rep.require("collapse of word " + detail::word_str(word), rcol <= cfg.tol,
                rcol, ErrorKind::CompositionViolated);
  }
  return rep;
}

/// The pair of 3x3 rotation partial isometries whose products stay partial
/// isometries one step but not two: all named residuals for one angle.
struct RotationCounterexample {
  double angle;
  std::map<std::string, double> residuals;  // partial-isometry defects
  double projection_commutator = 0;         // max over the four projections
  double squared_product_residual = 0;      // defect of (UV)^2
  double formula_cross_check = 0;           // matrix arithmetic vs closed form
};

inline RotationCounterexample rotation_counterexample(double angle) {
  if (!(angle > 0 && angle < M_PI / 2))
    throw Error(ErrorKind::Precondition, "angle must be in (0, pi/2)");
  RotationCounterexample out;
  out.angle = angle;
  const double cs = std::cos(angle), sn = std::sin(angle);
  Matrix u = Matrix::Zero(3, 3), v = Matrix::Zero(3, 3);
  u(0, 0) = cs; u(0, 1) = -sn;
  u(1, 0) = sn; u(1, 1) = cs;
  v(1, 1) = cs; v(1, 2) = -sn;
  v(2, 1) = sn; v(2, 2) = cs;

  const std::vector<std::pair<std::string, Matrix>> named = {
      {"U", u},         {"V", v},        {"U^2", u * u}, {"V^2", v * v},
      {"UV", u * v},    {"VU", v * u}};
  for (const auto& [name, m] : named)
    out.residuals[name] = partial_isometry_residual(m);

  const Matrix w = (u * v) * (u * v);
  out.squared_product_residual = partial_isometry_residual(w);

  // Closed forms of (UV)^2 and of its triple product, with entries built
  // from powers of cos and sin.
  Matrix wf = Matrix::Zero(3, 3);
  wf(0, 1) = -sn * std::pow(cs, 3);
  wf(0, 2) = sn * sn * cs * cs;
  wf(1, 1) = std::pow(cs, 4);
  wf(1, 2) = -sn * std::pow(cs, 3);
  Matrix wwf = Matrix::Zero(3, 3);
  wwf(0, 1) = -sn * std::pow(cs, 7);
  wwf(0, 2) = sn * sn * std::pow(cs, 6);
  wwf(1, 1) = std::pow(cs, 8);
  wwf(1, 2) = -sn * std::pow(cs, 7);
  out.formula_cross_check =
      std::max((w - wf).norm(), (w * w.adjoint() * w - wwf).norm());

  const std::vector<Matrix> projections = {u.adjoint() * u, u * u.adjoint(),
                                           v.adjoint() * v, v * v.adjoint()};
  for (const auto& p : projections)
    for (const auto& q : projections)
      out.projection_commutator =
          std::max(out.projection_commutator, (p * q - q * p).norm());
  return out;
}

}  // namespace semicross
