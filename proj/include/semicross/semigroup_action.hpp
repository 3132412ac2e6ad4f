#pragma once

#include <map>
#include <string>
#include <vector>

#include "semicross/covariant.hpp"
#include "semicross/inverse_semigroup.hpp"

namespace semicross {

/// Action of a unital inverse semigroup on a block algebra: a semigroup
/// homomorphism s -> beta_s with dom beta_s = E_{s*}, cod beta_s = E_s and
/// E_e = A. Unlike a partial action there is no extension slack; the
/// homomorphism property holds on the nose.
struct SemigroupAction {
  FiniteInverseSemigroup S;
  BlockAlgebra algebra;
  std::vector<Ideal> ideals;               // E_s per element
  std::vector<PartialAutomorphism> maps;   // beta_s per element

  const Ideal& E(int s) const { return ideals[s]; }
  const PartialAutomorphism& beta(int s) const { return maps[s]; }
};

/// Semilattice actions are determined by the ideals alone: beta_f is the
/// identity on E_f.
inline SemigroupAction make_semilattice_action(
    const FiniteInverseSemigroup& S, const BlockAlgebra& algebra,
    const std::vector<Ideal>& ideals) {
  SemigroupAction a;
  a.S = S;
  a.algebra = algebra;
  a.ideals = ideals;
  for (int f = 0; f < S.size(); ++f)
    a.maps.push_back(PartialAutomorphism::identity_on(ideals[f]));
  return a;
}

inline CheckReport validate_semigroup_action(const SemigroupAction& a,
                                             const Config& cfg = {}) {
  CheckReport rep;
  const int n = a.S.size();
  rep.require("one ideal and one map per element",
              static_cast<int>(a.ideals.size()) == n &&
                  static_cast<int>(a.maps.size()) == n,
              0, ErrorKind::Precondition);
  rep.require("semigroup has a unit", a.S.unit().has_value(), 0,
              ErrorKind::Precondition);
  rep.require("E_e is the whole algebra",
              a.ideals[*a.S.unit()].is_full(), 0, ErrorKind::UnitIdealNotFull);

  for (int s = 0; s < n; ++s) {
    rep.require("beta_" + std::to_string(s) + " maps E_{s*} onto E_s",
                a.maps[s].dom() == a.ideals[a.S.star(s)] &&
                    a.maps[s].cod() == a.ideals[s],
                0, ErrorKind::HomomorphismViolated);
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const bool ok = pauto_equal(a.maps[s].compose(a.maps[t]),
                                  a.maps[a.S.mul(s, t)], cfg.tol);
      rep.require("beta_s beta_t = beta_st at (" + std::to_string(s) + "," +
                      std::to_string(t) + ")",
                  ok, 0, ErrorKind::HomomorphismViolated);
    }
  // beta_t(E_{t*} E_s) = E_{ts}, exact at block level.
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const Ideal lhs = a.maps[t].apply_ideal(
          ideal_meet(a.ideals[a.S.star(t)], a.ideals[s]));
      const bool ok = lhs == a.ideals[a.S.mul(t, s)];
      rep.require("beta_t(E_t* E_s) = E_ts at (" + std::to_string(t) + "," +
                      std::to_string(s) + ")",
                  ok, 0, ErrorKind::TranslationViolated);
    }
  for (int f : a.S.idempotents())
    rep.require("beta of idempotent " + std::to_string(f) + " is an identity",
                pauto_equal(a.maps[f],
                            PartialAutomorphism::identity_on(a.ideals[f]),
                            cfg.tol),
                0, ErrorKind::HomomorphismViolated);
  return rep;
}

/// Covariant representation (pi, v, H) of a semigroup action; v is indexed by
/// every element of S.
struct SemigroupCovariantRep {
  SemigroupAction action;
  HilbertRep rep;
  std::vector<Matrix> family;  // v_s per element
  ValidationMode mode = ValidationMode::Strict;

  const Matrix& v(int s) const { return family[s]; }

  SemigroupCovariantRep direct_sum(const SemigroupCovariantRep& o) const {
    SemigroupCovariantRep out;
    out.action = action;
    out.rep = rep.direct_sum(o.rep);
    out.mode = mode;
    for (int s = 0; s < action.S.size(); ++s) {
      Matrix big = Matrix::Zero(out.rep.dim(), out.rep.dim());
      big.topLeftCorner(rep.dim(), rep.dim()) = family[s];
      big.bottomRightCorner(o.rep.dim(), o.rep.dim()) = o.family[s];
      out.family.push_back(std::move(big));
    }
    return out;
  }
};

inline CheckReport validate_covrep_semigroup(const SemigroupCovariantRep& c,
                                             const Config& cfg = {}) {
  CheckReport rep;
  rep.merge(c.rep.validate(cfg.tol), "pi");
  const auto& S = c.action.S;
  const int n = S.size();
  rep.require("one v per element",
              static_cast<int>(c.family.size()) == n, 0,
              ErrorKind::Precondition);
  const int h = c.rep.dim();

  {
    const double r = (c.v(*S.unit()) - Matrix::Identity(h, h)).norm();
    rep.require("v_e = 1_H", r <= cfg.tol, r, ErrorKind::HomomorphismViolated);
  }
  for (int s = 0; s < n; ++s) {
    const double pir = partial_isometry_residual(c.v(s));
    rep.require("v_" + std::to_string(s) + " is a partial isometry",
                pir <= cfg.tol, pir, ErrorKind::NotPartialIsometry);
    const double radj = (c.v(S.star(s)) - c.v(s).adjoint()).norm();
    rep.require("v of star is the adjoint at " + std::to_string(s),
                radj <= cfg.tol, radj, ErrorKind::HomomorphismViolated);

    const Matrix init = c.rep.projection(c.action.E(S.star(s)));
    const Matrix fin = c.rep.projection(c.action.E(s));
    if (c.mode == ValidationMode::Strict) {
      const double ri = (c.v(s).adjoint() * c.v(s) - init).norm();
      const double rf = (c.v(s) * c.v(s).adjoint() - fin).norm();
      rep.require("initial space of v_" + std::to_string(s), ri <= cfg.tol,
                  ri, ErrorKind::SpaceMismatch);
      rep.require("final space of v_" + std::to_string(s), rf <= cfg.tol, rf,
                  ErrorKind::SpaceMismatch);
    } else {
      const double ri = (c.v(s).adjoint() * c.v(s) * init - init).norm();
      const double rf = (c.v(s) * c.v(s).adjoint() * fin - fin).norm();
      rep.require("initial space of v_" + std::to_string(s) + " contains",
                  ri <= cfg.tol, ri, ErrorKind::SpaceMismatch);
      rep.require("final space of v_" + std::to_string(s) + " contains",
                  rf <= cfg.tol, rf, ErrorKind::SpaceMismatch);
    }
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const double r = (c.v(s) * c.v(t) - c.v(S.mul(s, t))).norm();
      rep.require("v_s v_t = v_st at (" + std::to_string(s) + "," +
                      std::to_string(t) + ")",
                  r <= cfg.tol, r, ErrorKind::HomomorphismViolated);
    }
  for (int s = 0; s < n; ++s) {
    double worst = 0;
    for (const auto& a : matrix_unit_basis(c.action.E(S.star(s)))) {
      const Matrix lhs = c.v(s) * c.rep.apply(a) * c.v(S.star(s));
      const Matrix rhs = c.rep.apply(c.action.beta(s).apply(a, cfg.tol));
      worst = std::max(worst, (lhs - rhs).norm());
    }
    rep.require("covariance at " + std::to_string(s), worst <= cfg.tol, worst,
                ErrorKind::CovarianceViolated);
  }
  return rep;
}

/// The pair semigroup S = {(alpha-word value, u-word value)} of a covariant
/// representation, with the action beta_s = first component and the family
/// v_s = second component. `group_index` locates (alpha_g, u_g) for each
/// support element.
struct PairSemigroupAction {
  SemigroupAction action;
  std::vector<Matrix> family;                       // v_s = u-word value
  std::vector<PartialAutomorphism> alpha_values;    // beta_s realized
  std::map<GroupOracle::Elem, int> group_index;     // g -> abstract index

  SemigroupCovariantRep covrep(const HilbertRep& rep,
                               ValidationMode mode) const {
    return SemigroupCovariantRep{action, rep, family, mode};
  }
};

namespace detail {

struct PairElem {
  PartialAutomorphism alpha;
  Matrix u;
};

struct PairOracle {
  BlockAlgebra algebra;
  int dim;
  double tol;

  PairElem unit() const {
    return {PartialAutomorphism::identity(algebra),
            Matrix::Identity(dim, dim)};
  }
  PairElem product(const PairElem& x, const PairElem& y) const {
    return {x.alpha.compose(y.alpha), x.u * y.u};
  }
  PairElem star(const PairElem& x) const {
    return {x.alpha.adjoint(), x.u.adjoint()};
  }
  bool equal(const PairElem& x, const PairElem& y) const {
    return pauto_equal(x.alpha, y.alpha, tol) && (x.u - y.u).norm() <= tol;
  }
};

}  // namespace detail

/// Closes the pairs (alpha_g, u_g) under product and star and reads off the
/// semigroup action of the pair semigroup together with its covariant family.
/// The ideals come from the domain/range of the composite partial
/// automorphisms, which realize the closed-form ideal products.
inline PairSemigroupAction pair_semigroup_action(const PartialCovariantRep& c,
                                                 const Config& cfg = {}) {
  detail::PairOracle oracle{c.action.algebra, c.rep.dim(), cfg.tol};
  std::vector<detail::PairElem> gens;
  for (auto g : c.action.support)
    gens.push_back({c.action.maps.at(g), c.u(g)});
  auto closure = generate_closure<detail::PairElem>(oracle, gens,
                                                    cfg.closure_bound);

  PairSemigroupAction out;
  out.action.S = closure.semigroup;
  out.action.algebra = c.action.algebra;
  for (const auto& el : closure.elements) {
    out.action.ideals.push_back(el.alpha.cod());
    out.action.maps.push_back(el.alpha);
    out.family.push_back(el.u);
    out.alpha_values.push_back(el.alpha);
  }
  for (auto g : c.action.support) {
    const detail::PairElem pg{c.action.maps.at(g), c.u(g)};
    for (std::size_t i = 0; i < closure.elements.size(); ++i)
      if (oracle.equal(closure.elements[i], pg)) {
        out.group_index[g] = static_cast<int>(i);
        break;
      }
  }
  return out;
}

/// w_g = z evaluated at the pair element (alpha_g, u_g); restriction of a
/// covariant representation of the pair action back to the group.
inline std::map<GroupOracle::Elem, Matrix> restrict_action_covrep(
    const PairSemigroupAction& pair, const PartialCovariantRep& source,
    const SemigroupCovariantRep& z) {
  std::map<GroupOracle::Elem, Matrix> w;
  for (auto g : source.action.support) {
    auto it = pair.group_index.find(g);
    if (it == pair.group_index.end())
      throw Error(ErrorKind::PairNotInS, "g=" + std::to_string(g));
    w[g] = z.v(it->second);
  }
  return w;
}

/// Cheap non-isomorphism witnesses for finite inverse semigroups: order and
/// idempotent count.
inline std::optional<std::string> non_isomorphism_witness(
    const FiniteInverseSemigroup& a, const FiniteInverseSemigroup& b) {
  if (a.size() != b.size())
    return "orders differ: " + std::to_string(a.size()) + " vs " +
           std::to_string(b.size());
  if (a.idempotents().size() != b.idempotents().size())
    return "idempotent counts differ: " +
           std::to_string(a.idempotents().size()) + " vs " +
           std::to_string(b.idempotents().size());
  return std::nullopt;
}

}  // namespace semicross
