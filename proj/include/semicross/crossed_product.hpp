#pragma once

#include <map>
#include <string>
#include <vector>

#include "semicross/l_algebra.hpp"
#include "semicross/matrix_span.hpp"
#include "semicross/semigroup_action.hpp"

namespace semicross {

struct GeneratorImage {
  int s;                  // semigroup element
  int block, row, col;    // matrix unit of E_s
  Matrix image;           // pi(a) v_s
};

/// Concrete crossed product: the C*-algebra generated by {pi(E_s) v_s} under
/// a covariant representation, with its structure report. The order-collapse
/// law (images of a delta_s and a delta_t agree when s <= t) is certified as
/// part of the construction.
struct CrossedProductRealization {
  SemigroupCovariantRep source;
  std::vector<GeneratorImage> generators;
  MatrixAlgebraSpan algebra;
  StructureReport report;
  CheckReport checks;
};

inline CrossedProductRealization realize_crossed_product(
    const SemigroupCovariantRep& c, const Config& cfg = {}) {
  CrossedProductRealization out;
  out.source = c;
  const auto& S = c.action.S;
  std::vector<Matrix> images;
  for (int s = 0; s < S.size(); ++s) {
    for (int b : c.action.E(s).blocks) {
      const int n = c.action.algebra.dim(b);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Matrix img = c.rep.apply(Element::matrix_unit(c.action.algebra, b,
                                                        j, k)) *
                       c.v(s);
          images.push_back(img);
          out.generators.push_back({s, b, j, k, std::move(img)});
        }
    }
  }
  out.algebra = span_closure(images, cfg.span_drop_tol);
  out.algebra.ambient_dim = c.rep.dim();  // covers the no-generator case
  out.report = structure_report(out.algebra, cfg.seed, cfg.tol);

  // Lemma-level collapse: s <= t forces equal images on E_s.
  for (int s = 0; s < S.size(); ++s)
    for (int t = 0; t < S.size(); ++t) {
      if (s == t || !S.leq(s, t)) continue;
      double worst = 0;
      for (const auto& a : matrix_unit_basis(c.action.E(s))) {
        const Matrix pa = c.rep.apply(a);
        worst = std::max(worst, (pa * c.v(s) - pa * c.v(t)).norm());
      }
      out.checks.require("order collapse at " + std::to_string(s) +
                             " <= " + std::to_string(t),
                         worst <= cfg.tol, worst, ErrorKind::StructureMismatch);
    }
  return out;
}

/// *-homomorphism from a realization algebra into K x K matrices, given by
/// the images of the span basis. Arbitrary elements map through their
/// coefficients in the orthonormal basis.
struct RealizationRep {
  int K = 0;
  std::vector<Matrix> basis_images;

  static RealizationRep identity(const CrossedProductRealization& r) {
    return {r.algebra.ambient_dim, r.algebra.basis};
  }

  static RealizationRep amplification(const CrossedProductRealization& r,
                                      int copies) {
    RealizationRep out;
    const int d = r.algebra.ambient_dim;
    out.K = d * copies;
    for (const auto& b : r.algebra.basis) {
      Matrix big = Matrix::Zero(out.K, out.K);
      for (int c = 0; c < copies; ++c) big.block(c * d, c * d, d, d) = b;
      out.basis_images.push_back(std::move(big));
    }
    return out;
  }

  Matrix apply(const MatrixAlgebraSpan& span, const Matrix& x) const {
    Matrix out = Matrix::Zero(K, K);
    for (std::size_t i = 0; i < span.basis.size(); ++i)
      out += hs_inner(span.basis[i], x) * basis_images[i];
    return out;
  }
};

/// Induced covariant representation of a nondegenerate representation of the
/// realization algebra: pi'(a) is the image of a delta_e and v'_s the image
/// of 1_{E_s} delta_s, the ideal unit standing in for an approximate
/// identity. Round trip through the identity representation recovers the
/// source exactly.
inline SemigroupCovariantRep induce_covrep(const CrossedProductRealization& r,
                                           const RealizationRep& Pi,
                                           const Config& cfg = {}) {
  const auto& span = r.algebra;
  CheckReport pre;
  double worst_mult = 0, worst_adj = 0;
  for (std::size_t i = 0; i < span.basis.size(); ++i) {
    worst_adj = std::max(
        worst_adj, (Pi.apply(span, span.basis[i].adjoint()) -
                    Pi.basis_images[i].adjoint())
                       .norm());
    for (std::size_t j = 0; j < span.basis.size(); ++j)
      worst_mult = std::max(
          worst_mult, (Pi.apply(span, span.basis[i] * span.basis[j]) -
                       Pi.basis_images[i] * Pi.basis_images[j])
                          .norm());
  }
  pre.require("Pi preserves products", worst_mult <= cfg.tol, worst_mult,
              ErrorKind::NotStarHomomorphism);
  pre.require("Pi preserves adjoints", worst_adj <= cfg.tol, worst_adj,
              ErrorKind::NotStarHomomorphism);
  const Matrix unit = algebra_unit(span, cfg.tol);
  const double nd =
      (Pi.apply(span, unit) - Matrix::Identity(Pi.K, Pi.K)).norm();
  pre.require("Pi is nondegenerate", nd <= cfg.tol, nd,
              ErrorKind::NotNondegenerate);

  const auto& c = r.source;
  SemigroupCovariantRep out;
  out.action = c.action;
  out.mode = c.mode;
  out.rep = HilbertRep::from_images(
      c.action.algebra, Pi.K, [&](int b, int j, int k) {
        const Element a = Element::matrix_unit(c.action.algebra, b, j, k);
        return Pi.apply(span, c.rep.apply(a));
      });
  for (int s = 0; s < c.action.S.size(); ++s) {
    const Matrix ideal_unit = c.rep.projection(c.action.E(s));
    out.family.push_back(Pi.apply(span, ideal_unit * c.v(s)));
  }
  return out;
}

/// Left regular representation of a finite inverse semigroup on C^|S|:
/// lambda_s delta_x = delta_{sx} when s*s dominates x x*, else 0. The span
/// of the lambdas is already an algebra; its dimension |S| certifies
/// faithfulness at finite scale.
struct LeftRegularRep {
  std::vector<Matrix> lambda;
  MatrixAlgebraSpan span;
  CheckReport checks;
};

inline LeftRegularRep left_regular_cstar(const FiniteInverseSemigroup& S,
                                         const Config& cfg = {}) {
  LeftRegularRep out;
  const int n = S.size();
  for (int s = 0; s < n; ++s) {
    Matrix m = Matrix::Zero(n, n);
    const int ss = S.mul(S.star(s), s);
    for (int x = 0; x < n; ++x) {
      const int xx = S.mul(x, S.star(x));
      if (S.mul(ss, xx) == xx) m(S.mul(s, x), x) = 1.0;
    }
    out.lambda.push_back(std::move(m));
  }
  double worst_pi = 0, worst_hom = 0, worst_star = 0;
  for (int s = 0; s < n; ++s) {
    worst_pi = std::max(worst_pi, partial_isometry_residual(out.lambda[s]));
    worst_star = std::max(
        worst_star, (out.lambda[s].adjoint() - out.lambda[S.star(s)]).norm());
    for (int t = 0; t < n; ++t)
      worst_hom = std::max(worst_hom, (out.lambda[s] * out.lambda[t] -
                                       out.lambda[S.mul(s, t)])
                                          .norm());
  }
  out.checks.require("lambda_s are partial isometries", worst_pi == 0,
                     worst_pi, ErrorKind::NotPartialIsometry);
  out.checks.require("lambda is a *-homomorphism",
                     worst_hom == 0 && worst_star == 0,
                     std::max(worst_hom, worst_star),
                     ErrorKind::HomomorphismViolated);
  out.span = span_closure(out.lambda, cfg.span_drop_tol);
  out.checks.require("left regular span has dimension |S|",
                     out.span.dimension() == n,
                     std::abs(out.span.dimension() - n),
                     ErrorKind::StructureMismatch);
  return out;
}

/// Trivial action of S on the scalars, realized through the regular
/// representation of the maximal group image G = S/sigma. The resulting
/// crossed product must match the group algebra of G, which is decomposed
/// independently; the block count must also equal the conjugacy class count
/// of G.
struct ScalarCrossedProductReport {
  CongruenceClasses congruence;
  StructureReport realization;
  StructureReport group_algebra;
  CheckReport checks;
};

inline ScalarCrossedProductReport verify_scalar_crossed_product(
    const FiniteInverseSemigroup& S, const Config& cfg = {}) {
  ScalarCrossedProductReport out;
  out.congruence = min_group_congruence(S);
  const auto& G = out.congruence.quotient;
  const int m = G.size();

  // beta_s = identity of C for every s.
  SemigroupAction action;
  action.S = S;
  action.algebra = BlockAlgebra({1});
  for (int s = 0; s < S.size(); ++s) {
    action.ideals.push_back(Ideal::full(action.algebra));
    action.maps.push_back(PartialAutomorphism::identity(action.algebra));
  }
  out.checks.merge(validate_semigroup_action(action, cfg), "action");

  // pi(a) = a 1, v_s = regular image of [s] in the group algebra of G.
  auto regular = [&](int g) {
    Matrix r = Matrix::Zero(m, m);
    for (int x = 0; x < m; ++x) r(G.mul(g, x), x) = 1.0;
    return r;
  };
  SemigroupCovariantRep cov;
  cov.action = action;
  cov.rep = HilbertRep::from_multiplicities(action.algebra, {m});
  for (int s = 0; s < S.size(); ++s)
    cov.family.push_back(regular(out.congruence.class_of[s]));
  cov.mode = ValidationMode::Strict;
  out.checks.merge(validate_covrep_semigroup(cov, cfg), "covrep");

  // Psi well defined: congruent elements have equal images.
  double worst = 0;
  for (int s = 0; s < S.size(); ++s)
    for (int t = 0; t < S.size(); ++t)
      if (out.congruence.class_of[s] == out.congruence.class_of[t])
        worst = std::max(worst, (cov.v(s) - cov.v(t)).norm());
  out.checks.require("Psi respects the congruence", worst == 0, worst,
                     ErrorKind::StructureMismatch);

  auto realization = realize_crossed_product(cov, cfg);
  out.checks.merge(realization.checks, "realize");
  out.realization = realization.report;

  // Independent side: the group algebra of G from its own regular
  // representation, plus the conjugacy-class count.
  std::vector<Matrix> group_gens;
  for (int g = 0; g < m; ++g) group_gens.push_back(regular(g));
  auto group_span = span_closure(group_gens, cfg.span_drop_tol);
  out.group_algebra = structure_report(group_span, cfg.seed, cfg.tol);

  std::vector<bool> seen(m, false);
  int classes = 0;
  for (int g = 0; g < m; ++g) {
    if (seen[g]) continue;
    ++classes;
    for (int h = 0; h < m; ++h)
      seen[G.mul(G.mul(h, g), G.star(h))] = true;
  }

  out.checks.require(
      "realization matches the group algebra of S/sigma",
      out.realization.block_sizes == out.group_algebra.block_sizes &&
          out.realization.algebra_dim == out.group_algebra.algebra_dim,
      0, ErrorKind::StructureMismatch,
      out.realization.to_string() + " vs " + out.group_algebra.to_string());
  out.checks.require("block count equals conjugacy class count of S/sigma",
                     static_cast<int>(out.realization.block_sizes.size()) ==
                         classes,
                     0, ErrorKind::StructureMismatch);
  // Generator identity (pi x v)(delta_s) = v_s = [s].
  double gen_res = 0;
  for (int s = 0; s < S.size(); ++s) {
    LElement d = delta(action, Element::unit(action.algebra), s, cfg.tol);
    gen_res = std::max(
        gen_res,
        (pi_times_v(cov, d) - regular(out.congruence.class_of[s])).norm());
  }
  out.checks.require("(pi x v) Psi([s]) = [s]", gen_res <= cfg.tol, gen_res,
                     ErrorKind::StructureMismatch);
  return out;
}

/// C*(S) vs the crossed product of the idempotent semilattice algebra by
/// conjugation: beta_s(delta_f) = delta_{s f s*} on the ideals spanned by
/// {delta_f : f <= s s*}. Realized on l^2(S) with pi the inclusion of C*(E)
/// and v the left regular representation.
struct IdempotentDecompositionReport {
  StructureReport crossed;
  StructureReport regular;
  CheckReport checks;
};

inline IdempotentDecompositionReport
verify_semilattice_idempotent_decomposition(const FiniteInverseSemigroup& S,
                                            const Config& cfg = {}) {
  IdempotentDecompositionReport out;
  if (!S.unit()) throw Error(ErrorKind::Precondition, "unital S required");
  const std::vector<int> idem = S.idempotents();
  const int k = static_cast<int>(idem.size());
  std::vector<int> pos_of(S.size(), -1);
  for (int i = 0; i < k; ++i) pos_of[idem[i]] = i;

  // C*(E) is the diagonal algebra on the idempotents; delta_f has coordinate
  // vector [x <= f] over idempotents x, and the minimal projections are the
  // coordinates themselves.
  BlockAlgebra ae(std::vector<int>(k, 1));
  auto below = [&](int x, int f) { return S.mul(x, f) == x; };  // x <= f in E
  auto delta_f = [&](int f) {
    Element e(ae);
    for (int i = 0; i < k; ++i)
      if (below(idem[i], f)) e.block(i)(0, 0) = 1.0;
    return e;
  };

  // Action data: E_s has the coordinates below s s*; beta_s moves coordinate
  // x to s x s*.
  SemigroupAction action;
  action.S = S;
  action.algebra = ae;
  for (int s = 0; s < S.size(); ++s) {
    const int ss = S.mul(s, S.star(s));
    const int sstar_s = S.mul(S.star(s), s);
    std::vector<int> cod_blocks, dom_blocks;
    std::map<int, int> bm;
    std::map<int, Matrix> us;
    for (int i = 0; i < k; ++i) {
      if (!below(idem[i], sstar_s)) continue;
      const int image = S.mul(S.mul(s, idem[i]), S.star(s));
      if (pos_of[image] == -1)
        throw Error(ErrorKind::ActionIllDefined,
                    "s f s* not idempotent at s=" + std::to_string(s) +
                        " f=" + std::to_string(idem[i]));
      if (!below(image, ss))
        throw Error(ErrorKind::ActionIllDefined,
                    "s f s* escapes E_s at s=" + std::to_string(s));
      bm[i] = pos_of[image];
      us[i] = Matrix::Identity(1, 1);
      dom_blocks.push_back(i);
      cod_blocks.push_back(pos_of[image]);
    }
    action.ideals.push_back(Ideal(ae, cod_blocks));
    action.maps.push_back(PartialAutomorphism(
        Ideal(ae, dom_blocks), Ideal(ae, cod_blocks), bm, us, cfg.tol));
  }
  out.checks.merge(validate_semigroup_action(action, cfg), "action");

  // The inclusion pi of C*(E) into C*(S): minimal projections are resolved
  // against the lambda_f through the order matrix.
  auto reg = left_regular_cstar(S, cfg);
  out.checks.merge(reg.checks, "left-regular");
  Eigen::MatrixXd order(k, k);
  for (int x = 0; x < k; ++x)
    for (int f = 0; f < k; ++f)
      order(x, f) = below(idem[x], idem[f]) ? 1.0 : 0.0;
  Eigen::MatrixXd order_inv = order.inverse();
  std::vector<Matrix> min_proj(k, Matrix::Zero(S.size(), S.size()));
  for (int x = 0; x < k; ++x)
    for (int f = 0; f < k; ++f)
      min_proj[x] += order_inv(f, x) * reg.lambda[idem[f]];

  SemigroupCovariantRep cov;
  cov.action = action;
  cov.rep = HilbertRep::from_images(ae, S.size(), [&](int b, int, int) {
    return min_proj[b];
  });
  cov.family = reg.lambda;
  cov.mode = ValidationMode::Strict;
  out.checks.merge(validate_covrep_semigroup(cov, cfg), "covrep");

  auto realization = realize_crossed_product(cov, cfg);
  out.checks.merge(realization.checks, "realize");
  out.crossed = realization.report;
  out.regular = structure_report(reg.span, cfg.seed, cfg.tol);

  out.checks.require("crossed product realizes C*(S) inside l2(S)",
                     algebra_equal(realization.algebra, reg.span, cfg.tol), 0,
                     ErrorKind::StructureMismatch);
  out.checks.require(
      "structure reports agree",
      out.crossed.block_sizes == out.regular.block_sizes &&
          out.crossed.algebra_dim == out.regular.algebra_dim,
      0, ErrorKind::StructureMismatch,
      out.crossed.to_string() + " vs " + out.regular.to_string());

  // Generator identities (pi x v)(Psi(s)) = lambda_{s s*} lambda_s = lambda_s.
  double worst = 0;
  for (int s = 0; s < S.size(); ++s) {
    const int ss = S.mul(s, S.star(s));
    LElement psi = delta(action, delta_f(ss), s, cfg.tol);
    worst = std::max(worst, (pi_times_v(cov, psi) - reg.lambda[s]).norm());
  }
  out.checks.require("(pi x v) Psi(s) = s", worst <= cfg.tol, worst,
                     ErrorKind::StructureMismatch);
  return out;
}

/// Prop-5.8-style check: for a semilattice action with a faithful pi and
/// v_f the projections onto pi(E_f)H, the realization is exactly pi(A).
struct SemilatticeRealizationReport {
  StructureReport realization;
  CheckReport checks;
};

inline SemilatticeRealizationReport verify_semilattice_realization(
    const SemigroupAction& action, const HilbertRep& pi,
    const Config& cfg = {}) {
  SemilatticeRealizationReport out;
  out.checks.require("S is a semilattice", action.S.is_semilattice(), 0,
                     ErrorKind::Precondition);
  out.checks.merge(validate_semigroup_action(action, cfg), "action");

  SemigroupCovariantRep cov;
  cov.action = action;
  cov.rep = pi;
  for (int f = 0; f < action.S.size(); ++f)
    cov.family.push_back(pi.projection(action.E(f)));
  cov.mode = ValidationMode::Strict;
  out.checks.merge(validate_covrep_semigroup(cov, cfg), "covrep");

  auto realization = realize_crossed_product(cov, cfg);
  out.checks.merge(realization.checks, "realize");
  out.realization = realization.report;

  std::vector<Matrix> pia;
  for (const auto& a : matrix_unit_basis(Ideal::full(action.algebra)))
    pia.push_back(pi.apply(a));
  const auto pia_span = span_closure(pia, cfg.span_drop_tol);
  out.checks.require("realization equals pi(A)",
                     algebra_equal(realization.algebra, pia_span, cfg.tol), 0,
                     ErrorKind::SpanMismatch);
  return out;
}

/// The main isomorphism: starting from a covariant pair (pi, u) designated
/// faithful, the crossed product by the pair semigroup action coincides with
/// the image of the partial crossed product. For each alternate covariant
/// representation (rho, z) of the pair action the restriction w makes the
/// spans match and the generator intertwiner extends to a *-homomorphism.
struct MainTheoremReport {
  PairSemigroupAction pair;
  StructureReport realization;
  CheckReport checks;
};

inline MatrixAlgebraSpan partial_generator_span(const PartialCovariantRep& c,
                                                const Config& cfg) {
  std::vector<Matrix> gens;
  for (auto g : c.action.support)
    for (const auto& a : matrix_unit_basis(c.action.domain_of(g)))
      gens.push_back(c.rep.apply(a) * c.u(g));
  auto span = span_closure(gens, cfg.span_drop_tol);
  span.ambient_dim = c.rep.dim();
  return span;
}

inline MainTheoremReport verify_main_theorem(
    const PartialCovariantRep& c,
    const std::vector<SemigroupCovariantRep>& alternates,
    const Config& cfg = {}) {
  MainTheoremReport out;
  if (c.mode != ValidationMode::Strict)
    throw Error(ErrorKind::Precondition,
                "the designated faithful representation must be strict");
  out.checks.merge(validate_covrep_partial(c, cfg), "covrep-u");

  out.pair = pair_semigroup_action(c, cfg);
  out.checks.merge(validate_semigroup_action(out.pair.action, cfg),
                   "pair-action");
  auto cov_v = out.pair.covrep(c.rep, ValidationMode::Strict);
  out.checks.merge(validate_covrep_semigroup(cov_v, cfg), "covrep-v");

  const auto cstar_u = partial_generator_span(c, cfg);
  auto realization = realize_crossed_product(cov_v, cfg);
  out.checks.merge(realization.checks, "realize");
  out.realization = realization.report;
  out.checks.require("C*(pi,u) = C*(pi,v)",
                     algebra_equal(cstar_u, realization.algebra, cfg.tol), 0,
                     ErrorKind::SpanMismatch);

  int alt_index = 0;
  for (const auto& z : alternates) {
    const std::string tag = "alternate " + std::to_string(alt_index++);
    out.checks.merge(validate_covrep_semigroup(z, cfg), tag + "/covrep-z");

    PartialCovariantRep rw;
    rw.action = c.action;
    rw.rep = z.rep;
    rw.family = restrict_action_covrep(out.pair, c, z);
    rw.mode = ValidationMode::Strict;
    out.checks.merge(validate_covrep_partial(rw, cfg), tag + "/covrep-w");

    const auto cstar_w = partial_generator_span(rw, cfg);
    auto realization_z = realize_crossed_product(z, cfg);
    out.checks.require(tag + ": C*(rho,w) = C*(rho,z)",
                       algebra_equal(cstar_w, realization_z.algebra, cfg.tol),
                       0, ErrorKind::SpanMismatch);

    // Intertwiner Theta on the generator catalog pi(a) v_s -> rho(a) z_s.
    std::vector<Matrix> xs, ys;
    for (const auto& gen : realization.generators) {
      const Element a = Element::matrix_unit(c.action.algebra, gen.block,
                                             gen.row, gen.col);
      xs.push_back(gen.image);
      ys.push_back(z.rep.apply(a) * z.v(gen.s));
    }
    const int dh = c.rep.dim(), dk = z.rep.dim();
    Eigen::MatrixXcd mx(dh * dh, xs.size()), my(dk * dk, ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx.col(i) = Eigen::Map<Eigen::VectorXcd>(xs[i].data(), dh * dh);
      my.col(i) = Eigen::Map<Eigen::VectorXcd>(ys[i].data(), dk * dk);
    }
    // Least-squares linear extension; existence requires ker MX <= ker MY.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        mx, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
    Eigen::MatrixXcd theta = my * svd.solve(Eigen::MatrixXcd(
                                      Eigen::MatrixXcd::Identity(
                                          dh * dh, dh * dh)));
    auto apply_theta = [&](const Matrix& m) {
      Eigen::VectorXcd v =
          theta * Eigen::Map<const Eigen::VectorXcd>(m.data(), dh * dh);
      return Matrix(Eigen::Map<Matrix>(v.data(), dk, dk));
    };

    double worst_gen = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      worst_gen = std::max(worst_gen, (apply_theta(xs[i]) - ys[i]).norm());
    out.checks.require(tag + ": Theta(pi x v)(a delta_s) = (rho x z)(a delta_s)",
                       worst_gen <= cfg.tol, worst_gen,
                       ErrorKind::DiagramViolated);

    double worst_mult = 0, worst_adj = 0;
    for (const auto& b1 : realization.algebra.basis) {
      worst_adj = std::max(worst_adj, (apply_theta(b1.adjoint()) -
                                       apply_theta(b1).adjoint())
                                          .norm());
      for (const auto& b2 : realization.algebra.basis)
        worst_mult = std::max(worst_mult, (apply_theta(b1 * b2) -
                                           apply_theta(b1) * apply_theta(b2))
                                              .norm());
    }
    out.checks.require(tag + ": Theta is a *-homomorphism",
                       worst_mult <= cfg.tol * 100 &&
                           worst_adj <= cfg.tol * 100,
                       std::max(worst_mult, worst_adj),
                       ErrorKind::DiagramViolated);
  }
  return out;
}

}  // namespace semicross
