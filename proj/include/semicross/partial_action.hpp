#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "semicross/block_algebra.hpp"
#include "semicross/closure.hpp"
#include "semicross/group.hpp"
#include "semicross/partial_automorphism.hpp"
#include "semicross/report.hpp"

namespace semicross {

/// Partial action of a discrete group on a block algebra: ideals D_g and
/// partial automorphisms alpha_g : D_{g^{-1}} -> D_g for g in the finite
/// support {g : D_g != 0}. Outside the support both degenerate to zero.
struct PartialAction {
  using Elem = GroupOracle::Elem;

  BlockAlgebra algebra;
  GroupOracle group;
  std::vector<Elem> support;
  std::map<Elem, Ideal> ideals;
  std::map<Elem, PartialAutomorphism> maps;

  Ideal domain_of(Elem g) const {
    auto it = ideals.find(g);
    return it == ideals.end() ? Ideal::zero(algebra) : it->second;
  }

  PartialAutomorphism alpha(Elem g) const {
    auto it = maps.find(g);
    return it == maps.end() ? PartialAutomorphism::zero(algebra) : it->second;
  }

  bool in_support(Elem g) const {
    return ideals.find(g) != ideals.end();
  }

  /// Support together with all pairwise products, the index set on which the
  /// extension condition is checked.
  std::vector<Elem> support_and_products() const {
    std::set<Elem> out(support.begin(), support.end());
    for (Elem s : support)
      for (Elem t : support) out.insert(group.product(s, t));
    return {out.begin(), out.end()};
  }
};

/// Assembles a partial action from the forward data: the identity map and the
/// adjoints for inverses are filled in automatically, and zero-domain entries
/// are pruned from the support.
inline PartialAction make_partial_action(
    BlockAlgebra algebra, GroupOracle group,
    std::map<GroupOracle::Elem, Ideal> ideals,
    std::map<GroupOracle::Elem, PartialAutomorphism> maps) {
  PartialAction a;
  a.algebra = std::move(algebra);
  a.group = std::move(group);
  const auto e = a.group.identity();
  ideals[e] = Ideal::full(a.algebra);
  maps[e] = PartialAutomorphism::identity(a.algebra);
  for (auto& [g, alpha] : maps) {
    const auto gi = a.group.inverse(g);
    if (maps.find(gi) == maps.end()) maps.emplace(gi, alpha.adjoint());
    if (ideals.find(gi) == ideals.end()) ideals.emplace(gi, alpha.dom());
  }
  for (auto it = ideals.begin(); it != ideals.end();) {
    if (it->second.is_zero()) {
      maps.erase(it->first);
      it = ideals.erase(it);
    } else {
      ++it;
    }
  }
  a.ideals = std::move(ideals);
  a.maps = std::move(maps);
  for (const auto& [g, d] : a.ideals) a.support.push_back(g);
  return a;
}

namespace detail {

inline std::string word_str(const std::vector<GroupOracle::Elem>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace detail

/// Certifies the definition of a partial action: D_e = A and alpha_{st}
/// extends alpha_s alpha_t on all pairs drawn from the support and its
/// pairwise products. The identities alpha_e = id and alpha_{g^{-1}} =
/// alpha_g^{-1} are re-derived as checks rather than assumed. Setting
/// `reformulated` checks the equivalent condition that restricts alpha_{st}
/// to D_{t^{-1}} D_{t^{-1}s^{-1}} instead.
inline CheckReport validate_partial_action(const PartialAction& a,
                                           const Config& cfg = {},
                                           bool reformulated = false) {
  CheckReport rep;
  const auto e = a.group.identity();
  rep.require("D_e is the whole algebra", a.domain_of(e).is_full(), 0,
              ErrorKind::UnitIdealNotFull);

  for (auto g : a.support) {
    const auto gi = a.group.inverse(g);
    rep.require("support closed under inverse at " + std::to_string(g),
                a.in_support(gi), 0, ErrorKind::InverseMismatch);
    rep.require("alpha present at " + std::to_string(g),
                a.maps.find(g) != a.maps.end(), 0,
                ErrorKind::InverseMismatch);
    const auto& alpha = a.maps.at(g);
    rep.require("alpha_" + std::to_string(g) + " has domain D of inverse",
                alpha.dom() == a.domain_of(gi) && alpha.cod() == a.domain_of(g),
                0, ErrorKind::InverseMismatch);
  }

  const auto check_set = a.support_and_products();
  for (auto s : check_set) {
    for (auto t : check_set) {
      const auto st = a.group.product(s, t);
      const auto comp = a.alpha(s).compose(a.alpha(t));
      bool ok;
      if (reformulated) {
        // alpha_{st} | D_{t^{-1}} D_{t^{-1}s^{-1}} = alpha_s alpha_t
        const Ideal restr = ideal_meet(
            a.domain_of(a.group.inverse(t)),
            a.domain_of(a.group.inverse(st)));
        ok = comp.dom() == restr &&
             pauto_equal(a.alpha(st).restrict_to(restr), comp, cfg.tol);
      } else {
        ok = a.domain_of(a.group.inverse(st)).contains(comp.dom()) &&
             pauto_equal(a.alpha(st).restrict_to(comp.dom()), comp, cfg.tol);
      }
      rep.require("alpha_st extends alpha_s alpha_t at " +
                      detail::word_str({s, t}),
                  ok, 0, ErrorKind::ExtensionViolated);
    }
  }

  // Consequences re-derived: alpha_e = id, alpha_{g^{-1}} = alpha_g^{-1}.
  rep.require("alpha_e is the identity",
              pauto_equal(a.alpha(e), PartialAutomorphism::identity(a.algebra),
                          cfg.tol),
              0, ErrorKind::ExtensionViolated);
  for (auto g : a.support)
    rep.require("alpha of inverse is the adjoint at " + std::to_string(g),
                pauto_equal(a.alpha(a.group.inverse(g)),
                            a.alpha(g).adjoint(), cfg.tol),
                0, ErrorKind::InverseMismatch);
  return rep;
}

struct CompositeDomainRange {
  Ideal domain;
  Ideal range;
  PartialAutomorphism composite;
};

/// Composes alpha along a word and checks the closed-form domain and range:
/// dom = D_{s_n^{-1}} D_{s_n^{-1}s_{n-1}^{-1}} ... D_{s_n^{-1}...s_1^{-1}},
/// ran = D_{s_1} D_{s_1 s_2} ... D_{s_1...s_n}. Exact block-set equality.
inline CompositeDomainRange composite_domain_range(
    const PartialAction& a, const std::vector<GroupOracle::Elem>& word) {
  if (word.empty()) throw Error(ErrorKind::Precondition, "empty word");
  const int n = static_cast<int>(word.size());

  PartialAutomorphism comp = a.alpha(word[n - 1]);
  for (int i = n - 2; i >= 0; --i) comp = a.alpha(word[i]).compose(comp);

  Ideal dom = Ideal::full(a.algebra);
  {
    auto suffix = a.group.identity();
    for (int k = n - 1; k >= 0; --k) {
      suffix = a.group.product(word[k], suffix);  // s_k ... s_n
      dom = ideal_meet(dom, a.domain_of(a.group.inverse(suffix)));
    }
  }
  Ideal ran = Ideal::full(a.algebra);
  {
    auto prefix = a.group.identity();
    for (int k = 0; k < n; ++k) {
      prefix = a.group.product(prefix, word[k]);  // s_1 ... s_k
      ran = ideal_meet(ran, a.domain_of(prefix));
    }
  }

  if (!(comp.dom() == dom) || !(comp.cod() == ran))
    throw Error(ErrorKind::FormulaMismatch,
                "word " + detail::word_str(word));
  return {dom, ran, comp};
}

/// Translation identities: alpha_t(D_{t^{-1}} D_{s_1} ... D_{s_n}) =
/// D_t D_{t s_1} ... D_{t s_n}, exact at block level. n = 1 is the binary
/// form used everywhere else.
inline CheckReport check_translation_identities(
    const PartialAction& a, GroupOracle::Elem t,
    const std::vector<GroupOracle::Elem>& ss) {
  CheckReport rep;
  Ideal lhs_arg = a.domain_of(a.group.inverse(t));
  Ideal rhs = a.domain_of(t);
  for (auto s : ss) {
    lhs_arg = ideal_meet(lhs_arg, a.domain_of(s));
    rhs = ideal_meet(rhs, a.domain_of(a.group.product(t, s)));
  }
  const Ideal lhs = a.alpha(t).apply_ideal(lhs_arg);
  rep.require("alpha_t(D_{t^-1} D_s...) = D_t D_{ts}... at t=" +
                  std::to_string(t) + " s=" + detail::word_str(ss),
              lhs == rhs, 0, ErrorKind::IdentityViolated);
  return rep;
}

/// The unital inverse semigroup generated by the partial automorphisms of a
/// validated action, with its abstract table.
inline Closure<PartialAutomorphism> generate_paut_semigroup(
    const PartialAction& a, const Config& cfg = {}) {
  PartialAutomorphismOracle oracle{a.algebra, cfg.tol};
  std::vector<PartialAutomorphism> gens;
  for (auto g : a.support) gens.push_back(a.maps.at(g));
  return generate_closure<PartialAutomorphism>(oracle, gens,
                                               cfg.closure_bound);
}

}  // namespace semicross
