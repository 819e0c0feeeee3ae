#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqcat/pointed.hpp"
#include "eqcat/smash.hpp"

namespace eqcat::io {

using json = nlohmann::json;

enum class Backend { Abstract, Pointed, Smash };

/// Parsed session input. Exactly one of `action` (abstract and pointed backends, with
/// `pointed` set for the latter) or `algebra` (smash backend) is meaningful.
struct SessionSpec {
  std::uint32_t prime = 0;
  std::uint64_t seed = 1;
  std::size_t d_max = 2;
  Backend backend = Backend::Abstract;
  Group group;
  std::optional<ActionData> action;
  std::optional<PointedData> pointed;
  std::optional<GAlgebra> algebra;
  bool sampled = false;
};

namespace detail {

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing key '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(where + "." + key + ": " + e.what());
  }
}

inline Group parse_group(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  if (j.contains("table")) return Group::from_table(get<std::vector<std::vector<int>>>(j, "table", where));
  if (j.contains("generators"))
    return Group::from_permutations(get<std::vector<std::vector<int>>>(j, "generators", where));
  throw InputError(where + ": give either 'table' or 'generators'");
}

using Elems = std::vector<PrimeField::Elem>;

inline std::vector<std::vector<Elems>> reduce3(const PrimeField& f, const std::vector<std::vector<std::vector<std::int64_t>>>& v) {
  std::vector<std::vector<Elems>> out;
  for (const auto& a : v) {
    out.emplace_back();
    for (const auto& b : a) {
      Elems e;
      for (auto x : b) e.push_back(f.reduce(x));
      out.back().push_back(std::move(e));
    }
  }
  return out;
}

inline ActionData parse_action(const PrimeField& f, const Group& G, const json& j, std::optional<std::size_t> n_default,
                               const std::string& where) {
  std::size_t n = 0;
  if (j.contains("n"))
    n = get<std::size_t>(j, "n", where);
  else if (n_default)
    n = *n_default;
  else
    throw InputError(where + ": missing key 'n'");
  const int order = G.order();
  std::vector<std::vector<int>> sigma(order, std::vector<int>(n));
  for (auto& s : sigma)
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<int>(i);
  if (j.contains("sigma")) sigma = get<std::vector<std::vector<int>>>(j, "sigma", where);
  std::vector<std::vector<Elems>> lambda(order, std::vector<Elems>(order, Elems(n, 1)));
  if (j.contains("lambda"))
    lambda = reduce3(f, get<std::vector<std::vector<std::vector<std::int64_t>>>>(j, "lambda", where));
  return ActionData(f, G, n, std::move(sigma), std::move(lambda));
}

inline GAlgebra parse_algebra(const PrimeField& f, const Group& G, const json& j, const std::string& where) {
  if (j.contains("coordinate_permutations")) {
    const json& cp = j.at("coordinate_permutations");
    if (cp.is_string()) {
      if (cp.get<std::string>() != "natural" || G.permutations().empty())
        throw InputError(where + ".coordinate_permutations: only \"natural\" is accepted as a string, for permutation groups");
      return permutation_galgebra(f, G, G.permutations());
    }
    return permutation_galgebra(f, G, get<std::vector<std::vector<int>>>(j, "coordinate_permutations", where));
  }
  GAlgebra A;
  A.S.field = f;
  A.S.dim = get<std::size_t>(j, "dim", where);
  A.S.mult = reduce3(f, get<std::vector<std::vector<std::vector<std::int64_t>>>>(j, "structure_constants", where));
  for (auto x : get<std::vector<std::int64_t>>(j, "unit", where)) A.S.unit.push_back(f.reduce(x));
  A.G = G;
  for (const auto& m : get<std::vector<std::vector<std::vector<std::int64_t>>>>(j, "action", where))
    A.action.push_back(Matrix::from_rows(f, m));
  return A;
}

}  // namespace detail

/// Parses a session spec; every schema or invariant violation is an InputError.
inline SessionSpec parse_spec(const json& j) {
  if (!j.is_object()) throw InputError("spec: expected a JSON object");
  SessionSpec s;
  s.prime = detail::get<std::uint32_t>(j, "prime", "spec");
  if (j.contains("seed")) s.seed = detail::get<std::uint64_t>(j, "seed", "spec");
  if (j.contains("d_max")) s.d_max = detail::get<std::size_t>(j, "d_max", "spec");
  if (j.contains("scope")) {
    auto scope = detail::get<std::string>(j, "scope", "spec");
    if (scope != "all" && scope != "sampled") throw InputError("spec.scope: expected \"all\" or \"sampled\"");
    s.sampled = scope == "sampled";
  }
  const PrimeField f(s.prime);
  s.group = detail::parse_group(j.contains("group") ? j.at("group") : json(), "spec.group");
  if (s.group.order() % static_cast<int>(s.prime) == 0)
    throw InputError("spec: the prime divides the group order, so the equivariantization is not semisimple");
  if (s.prime <= s.d_max) throw InputError("spec: the prime must exceed d_max");
  const std::string backend = j.contains("backend") ? detail::get<std::string>(j, "backend", "spec") : "abstract";
  if (backend == "abstract") {
    s.backend = Backend::Abstract;
    s.action = detail::parse_action(f, s.group, j.contains("action") ? j.at("action") : json::object(), std::nullopt,
                                    "spec.action");
  } else if (backend == "pointed") {
    s.backend = Backend::Pointed;
    const json& p = j.contains("pointed") ? j.at("pointed") : throw InputError("spec: missing key 'pointed'");
    Group E = detail::parse_group(p.contains("labels") ? p.at("labels") : json(), "spec.pointed.labels");
    ActionData act = detail::parse_action(f, s.group, j.contains("action") ? j.at("action") : json::object(),
                                          static_cast<std::size_t>(E.order()), "spec.action");
    if (p.contains("tau")) {
      auto tau = detail::reduce3(f, detail::get<std::vector<std::vector<std::vector<std::int64_t>>>>(p, "tau", "spec.pointed"));
      s.pointed = PointedData(act, E, std::move(tau));
    } else {
      s.pointed = PointedData::untwisted(act, E);
    }
    s.action = std::move(act);
  } else if (backend == "smash") {
    s.backend = Backend::Smash;
    s.algebra = detail::parse_algebra(f, s.group, j.contains("algebra") ? j.at("algebra") : json::object(), "spec.algebra");
  } else {
    throw InputError("spec.backend: expected \"abstract\", \"pointed\" or \"smash\"");
  }
  return s;
}

inline SessionSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("spec file " + path + " is not valid JSON: " + e.what());
  }
  return parse_spec(j);
}

}  // namespace eqcat::io
