#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "semicross/fuzz.hpp"
#include "semicross/scenario.hpp"

namespace semicross {

struct DirectiveResult {
  std::string name;
  std::string theorem;
  std::string status;  // "pass" | "fail" | "error"
  std::uint64_t seed = 0;
  double max_residual = 0;
  std::vector<CheckItem> items;
  std::string message;
};

struct RunReport {
  std::string scenario_name;
  Config config;
  std::vector<DirectiveResult> results;
  double wall_ms = 0;  // text report only; the machine report stays
                       // byte-identical across runs

  bool all_pass() const {
    for (const auto& r : results)
      if (r.status != "pass") return false;
    return !results.empty() || true;
  }

  bool any_input_error() const {
    for (const auto& r : results)
      if (r.status == "error") return true;
    return false;
  }

  int exit_code() const {
    if (any_input_error()) return 2;
    return all_pass() ? 0 : 1;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "scenario " << scenario_name << "  (seed=" << config.seed
       << ", tol=" << config.tol << ", bound=" << config.closure_bound
       << ", mode="
       << (config.mode == ValidationMode::Lax ? "lax" : "strict") << ")\n";
    for (const auto& r : results) {
      os << (r.status == "pass" ? "[PASS] "
                                : r.status == "fail" ? "[FAIL] " : "[ERROR] ")
         << r.name << " theorem=" << r.theorem << " seed=" << r.seed;
      char buf[48];
      std::snprintf(buf, sizeof buf, " max_residual=%.3e", r.max_residual);
      os << buf << " checks=" << r.items.size();
      if (!r.message.empty()) os << "\n       " << r.message;
      os << "\n";
    }
    os << (all_pass() ? "ALL PASS" : "FAILURES PRESENT");
    char buf[48];
    std::snprintf(buf, sizeof buf, "  (%.1f ms)\n", wall_ms);
    os << buf;
    return os.str();
  }

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["scenario"] = scenario_name;
    j["config"] = {{"tol", config.tol},
                   {"seed", config.seed},
                   {"bound", config.closure_bound},
                   {"mode", config.mode == ValidationMode::Lax ? "lax"
                                                               : "strict"}};
    j["seed_scheme"] = "splitmix64(root_seed ^ golden*(ordinal+1))";
    j["directives"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json d;
      d["name"] = r.name;
      d["theorem"] = r.theorem;
      d["status"] = r.status;
      d["seed"] = r.seed;
      d["max_residual"] = r.max_residual;
      if (!r.message.empty()) d["message"] = r.message;
      d["checks"] = nlohmann::ordered_json::array();
      for (const auto& item : r.items) {
        nlohmann::ordered_json c;
        c["name"] = item.name;
        c["pass"] = item.pass;
        c["residual"] = item.residual;
        if (!item.detail.empty()) c["detail"] = item.detail;
        d["checks"].push_back(std::move(c));
      }
      j["directives"].push_back(std::move(d));
    }
    j["overall"] = all_pass() ? "pass" : "fail";
    return j.dump(2) + "\n";
  }
};

namespace run_detail {

using scenario_detail::Block;
using scenario_detail::Value;
using scenario_detail::as_int;
using scenario_detail::as_int_list;

inline const ScenarioCovrep& covrep_of(const Scenario& sc, const Block& b) {
  const std::string name = b.get("covrep").text;
  return Scenario::lookup(sc.covreps, name, "covrep");
}

/// Pair-action covariant representation behind a directive: either the pair
/// construction applied to a partial covrep, or a semigroup covrep directly.
inline SemigroupCovariantRep directive_semigroup_covrep(
    const Scenario& sc, const Block& b, const Config& cfg) {
  const auto& sv = covrep_of(sc, b);
  if (sv.is_partial()) {
    const auto& c = sv.partial();
    auto pair = pair_semigroup_action(c, cfg);
    return pair.covrep(c.rep, c.mode);
  }
  return sv.semigroup();
}

inline CheckReport run_section2(const Scenario& sc, const Block& b,
                                const Config& cfg) {
  const auto& action = Scenario::lookup(sc.partial_actions,
                                        b.get("action").text,
                                        "partial_action");
  CheckReport rep = validate_partial_action(action, cfg);
  rep.merge(validate_partial_action(action, cfg, true), "reformulated");
  int max_len = 4;
  if (const Value* v = b.find("max_word_len"))
    max_len = static_cast<int>(as_int(*v, "max_word_len"));

  std::vector<std::vector<GroupOracle::Elem>> frontier = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<GroupOracle::Elem>> next;
    for (const auto& w : frontier)
      for (auto g : action.support) {
        auto w2 = w;
        w2.push_back(g);
        auto cdr = composite_domain_range(action, w2);
        (void)cdr;
        next.push_back(std::move(w2));
      }
    frontier = std::move(next);
  }
  rep.add("word formulas hold to length " + std::to_string(max_len), true, 0);
  for (auto t : action.support)
    for (auto s : action.support)
      rep.merge(check_translation_identities(action, t, {s}));
  return rep;
}

inline CheckReport run_section3(const Scenario& sc, const Block& b,
                                const Config& cfg) {
  const auto& sv = covrep_of(sc, b);
  if (!sv.is_partial())
    throw Error(ErrorKind::Precondition,
                "section3 needs a partial-action covrep");
  int max_len = 3;
  if (const Value* v = b.find("max_word_len"))
    max_len = static_cast<int>(as_int(*v, "max_word_len"));
  CheckReport rep = validate_covrep_partial(sv.partial(), cfg);
  rep.merge(check_product_calculus(sv.partial(), max_len, cfg));
  return rep;
}

inline CheckReport run_rotation(const Block& b) {
  double angle = M_PI / 4;
  if (const Value* v = b.find("angle")) angle = v->num;
  auto r = rotation_counterexample(angle);
  CheckReport rep;
  for (const auto& [name, res] : r.residuals)
    rep.add(name + " is a partial isometry", res <= 1e-12, res);
  rep.add("initial/final projections commute",
          r.projection_commutator <= 1e-12, r.projection_commutator);
  rep.add("closed forms match the matrix arithmetic",
          r.formula_cross_check <= 1e-12, r.formula_cross_check);
  rep.add("(UV)^2 fails the partial isometry law",
          r.squared_product_residual > 1e-3, r.squared_product_residual);
  return rep;
}

inline CheckReport run_pair_semigroup(const Scenario& sc, const Block& b,
                                      const Config& cfg) {
  const auto& sv = covrep_of(sc, b);
  if (!sv.is_partial())
    throw Error(ErrorKind::Precondition, "needs a partial-action covrep");
  const auto& c = sv.partial();
  CheckReport rep = validate_covrep_partial(c, cfg);
  auto pair = pair_semigroup_action(c, cfg);
  rep.merge(validate_semigroup_action(pair.action, cfg), "pair-action");
  auto cov_v = pair.covrep(c.rep, c.mode);
  rep.merge(validate_covrep_semigroup(cov_v, cfg), "covrep-v");
  if (const Value* v = b.find("expect_order")) {
    const int want = static_cast<int>(as_int(*v, "expect_order"));
    rep.add("pair semigroup has order " + std::to_string(want),
            pair.action.S.size() == want,
            std::abs(pair.action.S.size() - want));
  }
  // Restricting z = v recovers w = u.
  auto w = restrict_action_covrep(pair, c, cov_v);
  double worst = 0;
  for (auto g : c.action.support)
    worst = std::max(worst, (w.at(g) - c.u(g)).norm());
  rep.add("z = v restricts back to w = u", worst <= cfg.tol, worst);
  return rep;
}

inline CheckReport run_three_semigroups(const Scenario& sc, const Block& b,
                                        const Config& cfg) {
  const auto& sv = covrep_of(sc, b);
  if (!sv.is_partial())
    throw Error(ErrorKind::Precondition, "needs a partial-action covrep");
  const auto& c = sv.partial();
  CheckReport rep = validate_covrep_partial(c, cfg);

  auto alpha_side = generate_paut_semigroup(c.action, cfg);
  MatrixOracle oracle{c.rep.dim(), cfg.tol};
  std::vector<Matrix> ugens;
  for (auto g : c.action.support) ugens.push_back(c.u(g));
  auto u_side = generate_closure<Matrix>(oracle, ugens, cfg.closure_bound);
  auto pair = pair_semigroup_action(c, cfg);

  std::vector<int> orders = {alpha_side.semigroup.size(),
                             u_side.semigroup.size(),
                             pair.action.S.size()};
  if (const Value* v = b.find("expect_orders")) {
    auto want = as_int_list(*v, "expect_orders");
    rep.add("semigroup orders are " + std::to_string(want[0]) + "," +
                std::to_string(want[1]) + "," + std::to_string(want[2]),
            orders == want, 0,
            std::to_string(orders[0]) + "," + std::to_string(orders[1]) +
                "," + std::to_string(orders[2]));
  }
  auto w1 = non_isomorphism_witness(pair.action.S, alpha_side.semigroup);
  auto w2 = non_isomorphism_witness(pair.action.S, u_side.semigroup);
  rep.add("pair semigroup differs from the alpha side", w1.has_value(), 0,
          w1.value_or(""));
  rep.add("pair semigroup differs from the u side", w2.has_value(), 0,
          w2.value_or(""));
  return rep;
}

inline CheckReport run_semilattice_realization(const Scenario& sc,
                                               const Block& b,
                                               const Config& cfg) {
  const auto& action = Scenario::lookup(sc.semigroup_actions,
                                        b.get("action").text,
                                        "semigroup_action");
  const auto& pi = Scenario::lookup(sc.reps, b.get("rep").text, "rep");
  return verify_semilattice_realization(action, pi, cfg).checks;
}

inline CheckReport run_scalar(const Scenario& sc, const Block& b,
                              const Config& cfg) {
  const auto& S = Scenario::lookup(sc.semigroups, b.get("semigroup").text,
                                   "semigroup");
  auto out = verify_scalar_crossed_product(S, cfg);
  CheckReport rep = out.checks;
  if (const Value* v = b.find("expect_blocks")) {
    auto want = as_int_list(*v, "expect_blocks");
    rep.add("blocks are as expected", out.realization.block_sizes == want, 0,
            out.realization.to_string());
  }
  return rep;
}

inline CheckReport run_idempotent(const Scenario& sc, const Block& b,
                                  const Config& cfg) {
  const auto& S = Scenario::lookup(sc.semigroups, b.get("semigroup").text,
                                   "semigroup");
  auto out = verify_semilattice_idempotent_decomposition(S, cfg);
  CheckReport rep = out.checks;
  rep.add("crossed product dimension equals |S|",
          out.crossed.algebra_dim == S.size(),
          std::abs(out.crossed.algebra_dim - S.size()));
  return rep;
}

inline CheckReport run_l_algebra(const Scenario& sc, const Block& b,
                                 const Config& cfg) {
  auto cov = directive_semigroup_covrep(sc, b, cfg);
  CheckReport rep = validate_covrep_semigroup(cov, cfg);
  int count = 100;
  if (const Value* v = b.find("count"))
    count = static_cast<int>(as_int(*v, "count"));
  if (count < 1) throw Error(ErrorKind::Precondition, "count must be >= 1");
  auto outcome = fuzz_l_algebra(cov, count, cfg.seed, cfg);
  rep.add("laws over " + std::to_string(count) + " random elements",
          outcome.failures.empty(), outcome.max_residual,
          outcome.failures.empty() ? "" : outcome.failures.front());
  // Named L-elements, if any, are exercised directly.
  for (const auto& [name, le] : sc.lelements) {
    const auto& action = Scenario::lookup(sc.semigroup_actions, le.action,
                                          "semigroup_action");
    const double d = l_distance(
        action, l_star(action, l_star(action, le.value, cfg.tol), cfg.tol),
        le.value);
    rep.add("double star of " + name, d <= cfg.tol, d);
  }
  return rep;
}

inline CheckReport run_roundtrip(const Scenario& sc, const Block& b,
                                 const Config& cfg) {
  auto cov = directive_semigroup_covrep(sc, b, cfg);
  CheckReport rep = validate_covrep_semigroup(cov, cfg);
  auto realization = realize_crossed_product(cov, cfg);
  rep.merge(realization.checks, "realize");

  int amplify = 2;
  if (const Value* v = b.find("amplify"))
    amplify = static_cast<int>(as_int(*v, "amplify"));

  auto back = induce_covrep(realization, RealizationRep::identity(realization),
                            cfg);
  double worst = 0;
  for (const auto& gen : realization.generators) {
    const Element a = Element::matrix_unit(cov.action.algebra, gen.block,
                                           gen.row, gen.col);
    worst = std::max(
        worst, (back.rep.apply(a) * back.v(gen.s) - gen.image).norm());
  }
  rep.add("identity round trip reproduces the generators", worst <= cfg.tol,
          worst);

  auto amplified = induce_covrep(
      realization, RealizationRep::amplification(realization, amplify), cfg);
  rep.merge(validate_covrep_semigroup(amplified, cfg), "amplified");
  SemigroupCovariantRep expect = cov;
  for (int i = 1; i < amplify; ++i) expect = expect.direct_sum(cov);
  double worst2 = 0;
  for (int s = 0; s < cov.action.S.size(); ++s)
    worst2 = std::max(worst2, (amplified.v(s) - expect.v(s)).norm());
  rep.add("amplified round trip matches the direct sum", worst2 <= cfg.tol,
          worst2);
  return rep;
}

inline CheckReport run_main_theorem(const Scenario& sc, const Block& b,
                                    const Config& cfg) {
  const auto& sv = covrep_of(sc, b);
  if (!sv.is_partial())
    throw Error(ErrorKind::Precondition,
                "the main theorem starts from a partial-action covrep");
  bool faithful = sv.faithful;
  for (const auto& [name, cr] : sc.crossed)
    if (cr.first == b.get("covrep").text && cr.second) faithful = true;
  if (!faithful)
    throw Error(ErrorKind::Precondition,
                "the scenario must designate the covrep as faithful");
  const auto& c = sv.partial();

  std::vector<SemigroupCovariantRep> alternates;
  auto pair = pair_semigroup_action(c, cfg);
  auto v = pair.covrep(c.rep, ValidationMode::Strict);
  if (const Value* alts = b.find("alternates")) {
    for (const auto& a : alts->list) {
      if (a.text == "identity")
        alternates.push_back(v);
      else if (a.text == "double")
        alternates.push_back(v.direct_sum(v));
      else
        throw Error(ErrorKind::UnresolvedReference,
                    "alternate '" + a.text + "'");
    }
  } else {
    alternates.push_back(v);
  }
  auto out = verify_main_theorem(c, alternates, cfg);
  CheckReport rep = out.checks;
  if (const Value* want = b.find("expect_blocks")) {
    auto w = as_int_list(*want, "expect_blocks");
    rep.add("realization blocks as expected",
            out.realization.block_sizes == w, 0,
            out.realization.to_string());
  }
  return rep;
}

inline CheckReport dispatch(const Scenario& sc, const Directive& d,
                            const Config& cfg) {
  const std::string& t = d.theorem;
  if (t == "section2") return run_section2(sc, d.block, cfg);
  if (t == "section3") return run_section3(sc, d.block, cfg);
  if (t == "rotation") return run_rotation(d.block);
  if (t == "4.4") return run_pair_semigroup(sc, d.block, cfg);
  if (t == "6.4") return run_three_semigroups(sc, d.block, cfg);
  if (t == "5.8") return run_semilattice_realization(sc, d.block, cfg);
  if (t == "5.10") return run_scalar(sc, d.block, cfg);
  if (t == "5.11") return run_idempotent(sc, d.block, cfg);
  if (t == "5.1") return run_l_algebra(sc, d.block, cfg);
  if (t == "5.7") return run_roundtrip(sc, d.block, cfg);
  if (t == "6.2") return run_main_theorem(sc, d.block, cfg);
  throw Error(ErrorKind::UnresolvedReference, "theorem '" + t + "'");
}

}  // namespace run_detail

/// Executes the directives in order; each directive gets a seed derived from
/// the root seed by the splitmix scheme recorded in the report.
inline RunReport run_scenario(const Scenario& sc,
                              const std::string& name = "scenario") {
  RunReport out;
  out.scenario_name = name;
  out.config = sc.config;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < sc.directives.size(); ++i) {
    const auto& d = sc.directives[i];
    DirectiveResult r;
    r.name = d.name;
    r.theorem = d.theorem;
    r.seed = derive_seed(sc.config.seed, i);
    Config cfg = sc.config;
    cfg.seed = r.seed;
    try {
      CheckReport rep = run_detail::dispatch(sc, d, cfg);
      r.items = rep.items;
      r.max_residual = rep.max_residual();
      r.status = rep.ok() ? "pass" : "fail";
    } catch (const Error& e) {
      r.status = (e.kind() == ErrorKind::ParseError ||
                  e.kind() == ErrorKind::UnresolvedReference ||
                  e.kind() == ErrorKind::Precondition)
                     ? "error"
                     : "fail";
      r.message = e.what();
    }
    out.results.push_back(std::move(r));
  }
  out.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return out;
}

}  // namespace semicross
