#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "eqcat.hpp"

namespace fs = std::filesystem;
using namespace eqcat;
using eqcat::io::Backend;
using eqcat::io::SessionSpec;

namespace {

struct Flags {
  std::string spec;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::string scope;
  std::string out;
  std::string only;
};

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Abstract: return "abstract";
    case Backend::Pointed: return "pointed";
    case Backend::Smash: return "smash";
  }
  return "";
}

SuiteOptions options(const Flags& fl, const SessionSpec& s) {
  SuiteOptions o;
  o.seed = fl.seed.value_or(s.seed);
  o.jobs = std::max(1u, fl.jobs);
  o.sampled = fl.scope.empty() ? s.sampled : fl.scope == "sampled";
  o.only = fl.only;
  return o;
}

/// Action data the categorical suites run on: the session's action, or the abstract model of a
/// permutation algebra.
ActionData action_of(const SessionSpec& s) {
  if (s.action) return *s.action;
  if (s.algebra && s.algebra->permutation) return abstract_model(*s.algebra);
  throw InputError("this backend has no action data for the categorical checks");
}

json group_json(const Group& g) {
  json j = {{"order", g.order()}};
  if (!g.permutations().empty()) j["elements"] = g.permutations();
  return j;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw InputError("cannot write " + p.string());
  out << text;
}

int finish(const Flags& fl, const std::string& command, const SessionSpec* s, const CheckReport& rep, json extra = {}) {
  json r = {{"command", command}, {"status", rep.ok() ? "pass" : "fail"}, {"checks", rep.to_json()}};
  if (s) {
    const SuiteOptions o = options(fl, *s);
    r["backend"] = backend_name(s->backend);
    r["seed"] = o.seed;
    r["scope"] = o.sampled ? "sampled" : "all";
    r["prime"] = s->prime;
    r["group"] = group_json(s->group);
    if (!rep.ok()) {
      std::string cmd = "eqcat-cli " + command + " --spec " + fs::path(fl.spec).filename().string() + " --seed " +
                        std::to_string(o.seed) + " --only '" + rep.first_failure()->id + "'";
      r["reproduce"] = cmd;
    }
  }
  for (auto& [k, v] : extra.items()) r[k] = v;
  const std::string text = r.dump(2) + "\n";
  if (!fl.out.empty()) {
    fs::create_directories(fl.out);
    write_file(fs::path(fl.out) / (command + ".json"), text);
  }
  std::cout << text;
  return rep.ok() ? 0 : 1;
}

int cmd_validate(const Flags& fl) {
  SessionSpec s = io::load_spec(fl.spec);
  CheckReport rep;
  switch (s.backend) {
    case Backend::Abstract: rep = s.action->validate(); break;
    case Backend::Pointed: rep = s.pointed->validate(); break;
    case Backend::Smash: rep = validate_galgebra(*s.algebra); break;
  }
  return finish(fl, "validate", &s, rep);
}

/// Loads the session file and refuses invalid data before any suite runs.
SessionSpec load_valid(const Flags& fl) {
  SessionSpec s = io::load_spec(fl.spec);
  CheckReport rep = s.pointed ? s.pointed->validate() : s.action ? s.action->validate() : validate_galgebra(*s.algebra);
  if (!rep.ok()) throw InputError("spec data is invalid: " + rep.first_failure()->id + " (run validate for details)");
  return s;
}

Context context_of(const SessionSpec& s, const SuiteOptions& o) { return make_context(action_of(s), s.pointed, o); }

int cmd_suite(const Flags& fl, const std::string& command) {
  SessionSpec s = load_valid(fl);
  if (command == "modules" && !s.pointed) throw InputError("modules needs a spec with the pointed backend");
  const SuiteOptions o = options(fl, s);
  Context c = context_of(s, o);
  CheckReport rep;
  if (command == "mackey") rep = mackey_suite(c, o);
  else if (command == "coherence") rep = coherence_suite(c, o);
  else if (command == "adjunction") rep = adjunction_suite(c, o);
  else if (command == "modules") rep = module_suite(c, o);
  return finish(fl, command, &s, rep);
}

int cmd_tables(const Flags& fl) {
  SessionSpec s = load_valid(fl);
  const SuiteOptions o = options(fl, s);
  Context c = context_of(s, o);
  TablesResult t = tables_suite(c, o);
  CheckReport rep = t.report;
  if (s.algebra) rep.merge(smash_suite(*s.algebra, o));
  json table = to_json(t.table);
  if (!fl.out.empty()) {
    fs::create_directories(fl.out);
    write_file(fs::path(fl.out) / "tables.json", table.dump(2) + "\n");
    write_file(fs::path(fl.out) / "tables.txt", to_text(t.table));
  }
  return finish(fl, "tables", &s, rep, {{"table", table}});
}

int cmd_smash(const Flags& fl) {
  SessionSpec s = load_valid(fl);
  if (!s.algebra) throw InputError("smash-compare needs a spec with the smash backend");
  return finish(fl, "smash-compare", &s, smash_suite(*s.algebra, options(fl, s)));
}

/// The three shipped configurations, built in: tables for trivial S3 and pointed C3 by
/// inversion, and the smash comparison for S3 permuting three coordinates.
int cmd_demo(const Flags& fl) {
  SuiteOptions o;
  o.jobs = std::max(1u, fl.jobs);
  o.seed = fl.seed.value_or(1);
  CheckReport rep;
  std::string text;
  const Group s3 = Group::symmetric(3);
  const PrimeField f7(7), f5(5);
  {
    Context c = make_context(ActionData::trivial(f7, s3, 1), std::nullopt, o);
    TablesResult t = tables_suite(c, o);
    rep.merge(t.report, "trivial-s3/");
    text += "# trivial action of S3 on Vec over F7\n" + to_text(t.table);
  }
  {
    PointedData P = c3_by_inversion(f7);
    Context c = make_context(P.action(), P, o);
    TablesResult t = tables_suite(c, o);
    rep.merge(t.report, "pointed-c3/");
    text += "# C2 acting on Vec_C3 by inversion over F7\n" + to_text(t.table);
  }
  {
    GAlgebra S = permutation_galgebra(f5, s3, s3.permutations());
    rep.merge(smash_suite(S, o), "smash-s3/");
    Rng rng(o.seed);
    text += "# F5^3 # F5[H] for H <= S3 permuting coordinates\n";
    for (const auto& H : subgroups(s3)) {
      text += "H = " + subgroup_tag(H) + ": blocks";
      for (const auto& b : block_structure(smash_product(S, H), rng))
        text += " (" + std::to_string(b.size) + "," + std::to_string(b.degree) + ")";
      text += "\n";
    }
  }
  if (!fl.out.empty()) {
    fs::create_directories(fl.out);
    write_file(fs::path(fl.out) / "demo.txt", text);
  }
  std::cerr << text;
  return finish(fl, "demo", nullptr, rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for equivariantized semisimple categories over prime fields"};
  app.require_subcommand(1);
  Flags fl;
  auto add_common = [&fl](CLI::App* sub, bool needs_spec) {
    auto* spec = sub->add_option("--spec", fl.spec, "session spec (JSON)");
    if (needs_spec) spec->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", fl.seed, "override the session seed");
    sub->add_option("--jobs", fl.jobs, "concurrent checks")->check(CLI::PositiveNumber);
    sub->add_option("--scope", fl.scope, "all or sampled")->check(CLI::IsMember({"all", "sampled"}));
    sub->add_option("--out", fl.out, "directory for report and table files");
    sub->add_option("--only", fl.only, "run only tasks matching a check id prefix");
  };
  struct Cmd {
    const char* name;
    const char* help;
  };
  const std::vector<Cmd> cmds{{"validate", "validate the action, pointed or algebra data"},
                              {"mackey", "Mackey isomorphism for every H, K, L <= H and simple V"},
                              {"coherence", "coherence diagrams and degeneracies at every simple"},
                              {"adjunction", "induction/restriction adjunction at every simple pair"},
                              {"modules", "module-functor, Frobenius and Green compatibility checks (pointed)"},
                              {"tables", "K0 tables with Mackey (and Green) axiom verification"},
                              {"smash-compare", "smash product blocks against the abstract simples"},
                              {"demo", "run the built-in example configurations"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : cmds) {
    subs[c.name] = app.add_subcommand(c.name, c.help);
    add_common(subs[c.name], std::string(c.name) != "demo");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (subs["validate"]->parsed()) return cmd_validate(fl);
    if (subs["tables"]->parsed()) return cmd_tables(fl);
    if (subs["smash-compare"]->parsed()) return cmd_smash(fl);
    if (subs["demo"]->parsed()) return cmd_demo(fl);
    for (const char* name : {"mackey", "coherence", "adjunction", "modules"})
      if (subs[name]->parsed()) return cmd_suite(fl, name);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
