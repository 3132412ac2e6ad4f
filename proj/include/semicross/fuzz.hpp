#pragma once

#include <random>
#include <string>
#include <vector>

#include "semicross/covariant.hpp"
#include "semicross/crossed_product.hpp"
#include "semicross/l_algebra.hpp"
#include "semicross/partial_action.hpp"
#include "semicross/random_gen.hpp"

namespace semicross {

/// Commutative test model: a partial action on a finite point set carried
/// both as partial bijections (the exact set-level oracle) and as the
/// embedded partial action on the diagonal algebra.
struct CommutativeModelAction {
  PartialAction action;
  std::map<GroupOracle::Elem, PartialBijection> bijections;
  int points = 0;

  PartialBijection bijection(GroupOracle::Elem g) const {
    auto it = bijections.find(g);
    return it == bijections.end() ? PartialBijection(points) : it->second;
  }
};

namespace fuzzgen {

inline PartialBijection random_partial_bijection(int m, std::mt19937_64& rng) {
  std::vector<int> img(m, -1);
  std::vector<int> free;
  for (int i = 0; i < m; ++i) free.push_back(i);
  for (int x = 0; x < m; ++x) {
    if (rng() % 2 == 0 || free.empty()) continue;
    std::size_t pick = rng() % free.size();
    img[x] = free[pick];
    free.erase(free.begin() + pick);
  }
  return PartialBijection(img);
}

/// Global permutation action of a finite group on a disjoint union of small
/// transitive pieces, as one permutation per group element.
inline std::vector<std::vector<int>> random_global_action(
    const GroupOracle& g, int max_points, std::mt19937_64& rng) {
  const int n = g.order();
  std::vector<std::vector<int>> perm(n);
  int base = 0;
  auto add_orbit = [&](auto point_action, int size) {
    for (int e = 0; e < n; ++e) {
      perm[e].resize(base + size);
      for (int x = 0; x < size; ++x) perm[e][base + x] = base + point_action(e, x);
    }
    base += size;
  };
  // Always at least one fixed point; then random extra orbits while room.
  add_orbit([](int, int x) { return x; }, 1);
  while (base + n <= max_points && rng() % 3 != 0) {
    // The regular orbit works for every finite group.
    add_orbit([&](int e, int x) { return static_cast<int>(g.product(e, x)); },
              n);
  }
  while (base + 1 <= max_points && rng() % 2 == 0)
    add_orbit([](int, int x) { return x; }, 1);
  return perm;
}

}  // namespace fuzzgen

/// Random commutative-model partial action. Finite groups act by restricting
/// a random global permutation action to a random subset; the integers act
/// by the powers of a random nilpotent partial bijection (so the support
/// stays within {-2..2}).
inline CommutativeModelAction random_commutative_action(
    const std::string& group_name, int max_points, std::mt19937_64& rng) {
  CommutativeModelAction out;
  std::map<GroupOracle::Elem, PartialBijection> bij;

  if (group_name == "Z") {
    const int m = 2 + static_cast<int>(rng() % (max_points - 1));
    PartialBijection phi(m);
    for (;;) {
      phi = fuzzgen::random_partial_bijection(m, rng);
      auto p3 = phi.compose(phi).compose(phi);
      if (p3.domain().empty()) break;
    }
    out.points = m;
    PartialBijection p = phi;
    for (int k = 1; k <= 2; ++k) {
      if (!p.domain().empty()) {
        bij[k] = p;
        bij[-k] = p.star();
      }
      p = phi.compose(p);
    }
  } else {
    const auto g = GroupOracle::by_name(group_name);
    const auto perm = fuzzgen::random_global_action(g, 8, rng);
    const int total = static_cast<int>(perm[0].size());
    // Random nonempty subset, relabeled to 0..m-1.
    std::vector<int> label(total, -1);
    std::vector<int> member;
    for (int x = 0; x < total; ++x)
      if (rng() % 2 == 0 && static_cast<int>(member.size()) < max_points)
        member.push_back(x);
    if (member.empty()) member.push_back(static_cast<int>(rng() % total));
    for (std::size_t i = 0; i < member.size(); ++i)
      label[member[i]] = static_cast<int>(i);
    const int m = static_cast<int>(member.size());
    out.points = m;
    for (int e = 0; e < g.order(); ++e) {
      if (e == g.identity()) continue;
      std::vector<int> img(m, -1);
      for (int i = 0; i < m; ++i) {
        const int y = perm[e][member[i]];
        if (label[y] != -1) img[i] = label[y];
      }
      PartialBijection p(img);
      if (!p.domain().empty()) bij[e] = p;
    }
  }

  const BlockAlgebra diag(std::vector<int>(out.points, 1));
  const GroupOracle grp = GroupOracle::by_name(group_name);
  std::map<GroupOracle::Elem, Ideal> ideals;
  std::map<GroupOracle::Elem, PartialAutomorphism> maps;
  for (const auto& [g, p] : bij) {
    ideals.emplace(g, Ideal(diag, p.range()));
    maps.emplace(g, embed_partial_bijection(p));
  }
  out.action = make_partial_action(diag, grp, std::move(ideals),
                                   std::move(maps));
  out.bijections = std::move(bij);
  out.bijections.emplace(grp.identity(), PartialBijection::identity(out.points));
  return out;
}

/// Set-level composition oracle checked against the closed-form ideals of
/// the composite: dom/range of the word composition of partial bijections
/// must match the ideal formulas exactly, and the composite map must agree
/// pointwise.
inline CheckReport check_word_formulas_against_model(
    const CommutativeModelAction& model, int max_len) {
  CheckReport rep;
  std::vector<std::vector<GroupOracle::Elem>> frontier = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<GroupOracle::Elem>> next;
    for (const auto& w : frontier)
      for (auto g : model.action.support) {
        auto w2 = w;
        w2.push_back(g);
        next.push_back(w2);

        auto cdr = composite_domain_range(model.action, w2);
        PartialBijection brute = model.bijection(w2[0]);
        for (std::size_t i = 1; i < w2.size(); ++i)
          brute = brute.compose(model.bijection(w2[i]));
        const bool doms = brute.domain() == cdr.domain.blocks;
        const bool rans = brute.range() == cdr.range.blocks;
        bool maps_agree = true;
        for (int x : brute.domain())
          if (cdr.composite.map_block(x) != brute.apply(x)) maps_agree = false;
        rep.require("word " + detail::word_str(w2) + " matches the model",
                    doms && rans && maps_agree, 0, ErrorKind::FormulaMismatch);
      }
    frontier = std::move(next);
  }
  return rep;
}

/// Strict covariant representation of a commutative-model action: partial
/// permutation matrices with uniform multiplicity, conjugated by a random
/// unitary to exercise the tolerances.
inline PartialCovariantRep random_strict_covrep(
    const CommutativeModelAction& model, std::mt19937_64& rng) {
  const int copies = 1 + static_cast<int>(rng() % 2);
  const int m = model.points;
  const Matrix w = random_unitary(m * copies, rng);

  HilbertRep rep = HilbertRep::from_multiplicities(
      model.action.algebra, std::vector<int>(m, copies));
  rep = rep.conjugate(w);

  std::map<GroupOracle::Elem, Matrix> family;
  for (const auto& [g, p] : model.bijections) {
    Matrix pm = Matrix::Zero(m * copies, m * copies);
    for (int x : p.domain())
      for (int c = 0; c < copies; ++c)
        pm(p.apply(x) * copies + c, x * copies + c) = 1.0;
    family[g] = w * pm * w.adjoint();
  }
  return make_covrep(model.action, std::move(rep), std::move(family),
                     ValidationMode::Strict);
}

inline LElement random_lelement(const SemigroupAction& a, std::mt19937_64& rng,
                                int max_support = 4) {
  LElement x;
  const int n = a.S.size();
  for (int pick = 0; pick < max_support; ++pick) {
    const int s = static_cast<int>(rng() % n);
    if (a.E(s).is_zero() || x.has(s)) continue;
    Element v(a.algebra);
    for (int b : a.E(s).blocks)
      v.block(b) = random_gaussian_matrix(a.algebra.dim(b), a.algebra.dim(b),
                                          rng);
    x.values.emplace(s, std::move(v));
  }
  return x;
}

struct FuzzOutcome {
  int instances = 0;
  int checks = 0;
  double max_residual = 0;
  std::vector<std::string> failures;  // replay certificates

  void absorb(const CheckReport& rep, std::uint64_t seed,
              const std::string& what) {
    checks += static_cast<int>(rep.items.size());
    max_residual = std::max(max_residual, rep.max_residual());
    for (const auto& item : rep.items)
      if (!item.pass)
        failures.push_back(what + " seed=" + std::to_string(seed) + ": " +
                           item.name);
  }
};

/// Section-2 law suite: validation under both formulations of the extension
/// condition, closed-form word formulas against the set-level oracle, and
/// the translation identities.
inline FuzzOutcome fuzz_section2(int count, std::uint64_t seed,
                                 const Config& cfg = {}) {
  FuzzOutcome out;
  const std::vector<std::string> groups = {"Z", "Z2", "Z3", "S3"};
  for (int i = 0; i < count; ++i) {
    const std::uint64_t item_seed = derive_seed(seed, i);
    std::mt19937_64 rng(item_seed);
    auto model = random_commutative_action(groups[i % groups.size()], 6, rng);
    const std::string what = "section2[" + std::to_string(i) + "]";
    ++out.instances;
    try {
      auto rep = validate_partial_action(model.action, cfg);
      auto rep2 = validate_partial_action(model.action, cfg, true);
      out.absorb(rep, item_seed, what);
      out.absorb(rep2, item_seed, what + "/reformulated");
      out.absorb(check_word_formulas_against_model(model, 4), item_seed, what);
      for (auto t : model.action.support)
        for (auto s : model.action.support)
          out.absorb(check_translation_identities(model.action, t, {s}),
                     item_seed, what);
      // A few n-ary translation identities per instance.
      for (int k = 0; k < 5; ++k) {
        const auto& sup = model.action.support;
        auto pick = [&] { return sup[rng() % sup.size()]; };
        out.absorb(check_translation_identities(model.action, pick(),
                                                {pick(), pick(), pick()}),
                   item_seed, what + "/n-ary");
      }
    } catch (const Error& e) {
      out.failures.push_back(what + " seed=" + std::to_string(item_seed) +
                             ": " + e.what());
    }
  }
  return out;
}

/// Section-3 suite: random strict covariant representations and the product
/// calculus over words of length <= 3.
inline FuzzOutcome fuzz_section3(int count, std::uint64_t seed,
                                 const Config& cfg = {}) {
  FuzzOutcome out;
  const std::vector<std::string> groups = {"Z", "Z2", "Z3", "S3"};
  for (int i = 0; i < count; ++i) {
    const std::uint64_t item_seed = derive_seed(seed, i);
    std::mt19937_64 rng(item_seed);
    auto model = random_commutative_action(groups[i % groups.size()], 5, rng);
    const std::string what = "section3[" + std::to_string(i) + "]";
    ++out.instances;
    try {
      auto cov = random_strict_covrep(model, rng);
      out.absorb(validate_covrep_partial(cov, cfg), item_seed, what);
      out.absorb(check_product_calculus(cov, 3, cfg), item_seed, what);
    } catch (const Error& e) {
      out.failures.push_back(what + " seed=" + std::to_string(item_seed) +
                             ": " + e.what());
    }
  }
  return out;
}

/// L-algebra suite over a fixed covariant representation: Banach *-algebra
/// laws for random elements, and contractivity of pi x v.
inline FuzzOutcome fuzz_l_algebra(const SemigroupCovariantRep& cov, int count,
                                  std::uint64_t seed, const Config& cfg = {}) {
  FuzzOutcome out;
  const auto& a = cov.action;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t item_seed = derive_seed(seed, i);
    std::mt19937_64 rng(item_seed);
    const std::string what = "l-algebra[" + std::to_string(i) + "]";
    ++out.instances;
    try {
      CheckReport rep;
      auto x = random_lelement(a, rng);
      auto y = random_lelement(a, rng);
      auto z = random_lelement(a, rng);

      const double assoc = l_distance(
          a, l_multiply(a, l_multiply(a, x, y, cfg.tol), z, cfg.tol),
          l_multiply(a, x, l_multiply(a, y, z, cfg.tol), cfg.tol));
      rep.require("associativity", assoc <= cfg.tol, assoc,
                  ErrorKind::IdentityViolated);

      const double invol =
          l_distance(a, l_star(a, l_star(a, x, cfg.tol), cfg.tol), x);
      rep.require("double star", invol <= cfg.tol, invol,
                  ErrorKind::IdentityViolated);

      const double anti = l_distance(
          a, l_star(a, l_multiply(a, x, y, cfg.tol), cfg.tol),
          l_multiply(a, l_star(a, y, cfg.tol), l_star(a, x, cfg.tol),
                     cfg.tol));
      rep.require("star is anti-multiplicative", anti <= cfg.tol, anti,
                  ErrorKind::IdentityViolated);

      const double nx = l1_norm(x), ny = l1_norm(y);
      const double nxy = l1_norm(l_multiply(a, x, y, cfg.tol));
      rep.require("submultiplicative l1 norm",
                  nxy <= nx * ny * (1 + 1e-12) + 1e-12, nxy - nx * ny,
                  ErrorKind::IdentityViolated);
      const double nstar = l1_norm(l_star(a, x, cfg.tol));
      rep.require("star preserves the l1 norm",
                  std::abs(nstar - nx) <= 1e-12 * std::max(1.0, nx),
                  std::abs(nstar - nx), ErrorKind::IdentityViolated);

      const Matrix mx = pi_times_v(cov, x);
      const Matrix my = pi_times_v(cov, y);
      const double mult =
          (pi_times_v(cov, l_multiply(a, x, y, cfg.tol)) - mx * my).norm();
      rep.require("pi x v is multiplicative", mult <= cfg.tol, mult,
                  ErrorKind::CovrepMismatch);
      const double star =
          (pi_times_v(cov, l_star(a, x, cfg.tol)) - mx.adjoint()).norm();
      rep.require("pi x v preserves star", star <= cfg.tol, star,
                  ErrorKind::CovrepMismatch);
      Eigen::JacobiSVD<Matrix> svd(mx);
      const double opnorm =
          svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
      rep.require("contractivity", opnorm <= nx * (1 + 1e-12) + 1e-12,
                  opnorm - nx, ErrorKind::CovrepMismatch);
      out.absorb(rep, item_seed, what);
    } catch (const Error& e) {
      out.failures.push_back(what + " seed=" + std::to_string(item_seed) +
                             ": " + e.what());
    }
  }
  return out;
}

}  // namespace semicross
