#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "eqcat/adjunction.hpp"
#include "eqcat/coherence.hpp"
#include "eqcat/green.hpp"
#include "eqcat/smash.hpp"

namespace eqcat {

struct SuiteOptions {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool sampled = false;
  std::size_t sample_size = 24;  // tasks kept per suite when sampled
  std::string only;              // keep tasks whose prefix and this string are prefix-related
};

/// Action data, its subgroup lattice and the simples over every subgroup.
struct Context {
  ActionData act;
  std::optional<PointedData> pointed;
  std::vector<Subgroup> subs;
  std::vector<std::vector<SimpleObject>> simples;

  const PointedData* pointed_ptr() const { return pointed ? &*pointed : nullptr; }
};

inline Rng subgroup_rng(std::uint64_t seed, std::size_t h) { return Rng(seed + 0x9e3779b97f4a7c15ULL * (h + 1)); }

inline Context make_context(const ActionData& act, std::optional<PointedData> pointed, const SuiteOptions& opt) {
  Context c{act, std::move(pointed), subgroups(act.group()), {}};
  c.simples.resize(c.subs.size());
  detail::parallel_for(c.subs.size(), opt.jobs, [&](std::size_t h) {
    Rng rng = subgroup_rng(opt.seed, h);
    auto r = simples_of(c.act, c.subs[h], rng);
    if (!r.certificate.ok()) throw SplitError("simple objects failed their certificate");
    c.simples[h] = std::move(r.simples);
  });
  return c;
}

inline std::string subgroup_tag(const Subgroup& H) {
  std::string s = "[";
  for (int g : H.elements()) s += (s.size() > 1 ? "," : "") + std::to_string(g);
  return s + "]";
}

struct Task {
  std::string prefix;
  std::function<CheckReport()> run;
};

/// Runs the tasks (filtered by opt.only, then a seeded subset when sampled) up to opt.jobs at a time and merges the
/// reports in task order.
inline CheckReport run_tasks(std::vector<Task> tasks, const SuiteOptions& opt) {
  if (!opt.only.empty()) {
    std::vector<Task> kept;
    for (auto& t : tasks)
      if (opt.only.starts_with(t.prefix) || t.prefix.starts_with(opt.only)) kept.push_back(std::move(t));
    tasks = std::move(kept);
  }
  if (opt.sampled && tasks.size() > opt.sample_size) {
    std::vector<std::size_t> idx(tasks.size());
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(opt.seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(opt.sample_size);
    std::sort(idx.begin(), idx.end());
    std::vector<Task> kept;
    for (auto i : idx) kept.push_back(std::move(tasks[i]));
    tasks = std::move(kept);
  }
  std::vector<CheckReport> reps(tasks.size());
  detail::parallel_for(tasks.size(), opt.jobs, [&](std::size_t i) { reps[i] = tasks[i].run(); });
  CheckReport out;
  for (std::size_t i = 0; i < tasks.size(); ++i) out.merge(reps[i], tasks[i].prefix);
  return out;
}

/// Mackey witness for every H, K, L <= H and every simple V over L.
inline CheckReport mackey_suite(const Context& c, const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (const auto& H : c.subs)
    for (const auto& K : c.subs)
      for (std::size_t l = 0; l < c.subs.size(); ++l) {
        const Subgroup& L = c.subs[l];
        if (!K.is_subgroup_of(H) || !L.is_subgroup_of(H)) continue;
        for (std::size_t v = 0; v < c.simples[l].size(); ++v)
          tasks.push_back({"mackey/H=" + subgroup_tag(H) + ",K=" + subgroup_tag(K) + ",L=" + subgroup_tag(L) +
                               ",V=" + std::to_string(v) + "/",
                           [&c, H, K, l, v] { return mackey_iso(c.act, K, H, c.simples[l][v].obj).report; }});
      }
  return run_tasks(std::move(tasks), opt);
}

/// Diagrams (I), (IIC), (ICC), (R), (RRC), (RCC), (C) and the degeneracies at every simple.
inline CheckReport coherence_suite(const Context& c, const SuiteOptions& opt) {
  const int n = c.act.group().order();
  std::vector<Task> tasks;
  for (std::size_t j = 0; j < c.subs.size(); ++j)
    for (std::size_t m = 0; m < c.simples[j].size(); ++m) {
      const std::string tag = "coherence/J=" + subgroup_tag(c.subs[j]) + ",M=" + std::to_string(m) + "/";
      tasks.push_back({tag, [&c, j, m, n] {
                         const EqObject& M = c.simples[j][m].obj;
                         const Subgroup& J = c.subs[j];
                         CheckReport rep = check_degeneracies(c.act, M);
                         for (int a = 0; a < n; ++a)
                           for (int b = 0; b < n; ++b)
                             for (int d = 0; d < n; ++d) rep.merge(check_diagram_C(c.act, a, b, d, M));
                         for (const auto& K : c.subs) {
                           if (!J.is_subgroup_of(K)) continue;
                           rep.merge(check_I_degenerate(c.act, K, M));
                           for (int a = 0; a < n; ++a)
                             for (int b = 0; b < n; ++b) rep.merge(check_diagram_ICC(c.act, K, a, b, M));
                           for (const auto& L : c.subs) {
                             if (!K.is_subgroup_of(L)) continue;
                             for (int a = 0; a < n; ++a) rep.merge(check_diagram_IIC(c.act, K, L, a, M));
                             for (const auto& H : c.subs)
                               if (L.is_subgroup_of(H)) rep.merge(check_diagram_I(c.act, K, L, H, M));
                           }
                         }
                         for (const auto& L : c.subs) {
                           if (!L.is_subgroup_of(J)) continue;
                           for (const auto& K : c.subs) {
                             if (!K.is_subgroup_of(L)) continue;
                             rep.merge(check_diagram_R(K, L, M));
                             for (int a = 0; a < n; ++a) rep.merge(check_diagram_RRC(c.act, K, L, a, M));
                           }
                           for (int a = 0; a < n; ++a)
                             for (int b = 0; b < n; ++b) rep.merge(check_diagram_RCC(c.act, L, a, b, M));
                         }
                         return rep;
                       }});
    }
  return run_tasks(std::move(tasks), opt);
}

/// Unit, counit, both triangle identities and the Hom dimension identity for every L <= H
/// over all simple pairs.
inline CheckReport adjunction_suite(const Context& c, const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (std::size_t l = 0; l < c.subs.size(); ++l)
    for (std::size_t h = 0; h < c.subs.size(); ++h) {
      if (!c.subs[l].is_subgroup_of(c.subs[h])) continue;
      tasks.push_back({"adjunction/L=" + subgroup_tag(c.subs[l]) + ",H=" + subgroup_tag(c.subs[h]) + "/", [&c, l, h] {
                         std::vector<EqObject> vs, ms;
                         for (const auto& s : c.simples[l]) vs.push_back(s.obj);
                         for (const auto& s : c.simples[h]) ms.push_back(s.obj);
                         return adjunction_check(c.act, c.subs[l], c.subs[h], vs, ms);
                       }});
    }
  return run_tasks(std::move(tasks), opt);
}

/// Categorical module-functor checks on pointed data: the module structure of induction and
/// its diagrams, the Frobenius witness, and the Mackey/conjugation compatibilities.
inline CheckReport module_suite(const Context& c, const SuiteOptions& opt) {
  require(c.pointed.has_value(), "module_suite: pointed data required");
  const PointedData& P = *c.pointed;
  std::vector<Task> tasks;
  for (std::size_t h = 0; h < c.subs.size(); ++h)
    for (std::size_t l = 0; l < c.subs.size(); ++l) {
      if (!c.subs[l].is_subgroup_of(c.subs[h])) continue;
      const std::string tag = "module/H=" + subgroup_tag(c.subs[h]) + ",L=" + subgroup_tag(c.subs[l]) + "/";
      tasks.push_back({tag, [&c, &P, h, l] {
                         const Subgroup& H = c.subs[h];
                         CheckReport rep;
                         const auto& SH = c.simples[h];
                         const auto& SL = c.simples[l];
                         for (std::size_t a = 0; a < SH.size(); ++a)
                           for (std::size_t v = 0; v < SL.size(); ++v) {
                             const std::string w = "M=" + std::to_string(a) + ",V=" + std::to_string(v);
                             rep.merge(check_eq_iso(c.act, ind_module_structure(P, H, SH[a].obj, SL[v].obj), "structure:" + w));
                             rep.merge(check_module_diagrams(P, H, SH[a].obj, SH.back().obj, SL[v].obj), w + "/");
                             rep.merge(frobenius_iso(P, H, SL[v].obj, SH[a].obj).report, "frobenius/" + w + "/");
                             for (const auto& K : c.subs)
                               if (K.is_subgroup_of(H))
                                 rep.merge(green_categorical_check(P, K, SH[a].obj, SL[v].obj),
                                           "green/K=" + subgroup_tag(K) + "," + w + "/");
                           }
                         return rep;
                       }});
    }
  return run_tasks(std::move(tasks), opt);
}

struct TablesResult {
  K0Table table;
  CheckReport report;
};

inline TablesResult tables_suite(const Context& c, const SuiteOptions& opt) {
  TablesResult out{build_table(c.act, c.subs, {opt.seed, opt.jobs}, c.pointed_ptr()), {}};
  out.report.merge(verify_mackey_axioms(out.table), "mackey-axioms/");
  if (c.pointed) out.report.merge(verify_green_axioms(out.table), "green-axioms/");
  return out;
}

inline CheckReport smash_suite(const GAlgebra& S, const SuiteOptions& opt) {
  CheckReport rep;
  rep.merge(validate_galgebra(S), "algebra/");
  if (!rep.ok()) return rep;
  std::vector<Task> tasks;
  const auto subs = subgroups(S.G);
  for (std::size_t h = 0; h < subs.size(); ++h)
    tasks.push_back({"smash/H=" + subgroup_tag(subs[h]) + "/", [&S, &subs, h, seed = opt.seed] {
                       Rng rng = subgroup_rng(seed, h);
                       if (S.permutation) return compare_with_abstract(S, subs[h], rng);
                       // no abstract model: only split the smash product
                       CheckReport r;
                       json blocks = json::array();
                       for (const auto& b : block_structure(smash_product(S, subs[h]), rng))
                         blocks.push_back({{"size", b.size}, {"degree", b.degree}});
                       r.add("smash-blocks:|H|=" + std::to_string(subs[h].order()), true, {}, {{"blocks", blocks}});
                       return r;
                     }});
  rep.merge(run_tasks(std::move(tasks), opt));
  return rep;
}

}  // namespace eqcat
