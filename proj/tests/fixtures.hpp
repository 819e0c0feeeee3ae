#pragma once

#include <vector>

#include "eqcat/functors.hpp"
#include "eqcat/random_data.hpp"
#include "eqcat/split.hpp"

namespace eqcat::testing {

inline Group dihedral4() { return Group::from_permutations({{1, 2, 3, 0}, {3, 2, 1, 0}}); }

inline Subgroup subgroup_of_order(const Group& g, int order, int skip = 0) {
  for (const auto& s : subgroups(g))
    if (s.order() == order && skip-- == 0) return s;
  throw ContractError("no subgroup of that order");
}

inline int element_of_order(const Group& g, int order) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == order) return x;
  throw ContractError("no element of that order");
}

/// C2 acting on Vec (one simple) with lambda^{g,g} = c.
inline ActionData c2_scalar(const PrimeField& f, PrimeField::Elem c) {
  ActionData triv = ActionData::trivial(f, Group::cyclic(2), 1);
  auto lambda = triv.lambda_table();
  lambda[1][1][0] = c;
  return ActionData(f, Group::cyclic(2), 1, triv.sigma_table(), lambda);
}

inline bool has_nontrivial_lambda(const ActionData& act) {
  for (const auto& row : act.lambda_table())
    for (const auto& v : row)
      for (auto x : v)
        if (x != 1) return true;
  return false;
}

/// Seeded random valid action with at least one lambda different from 1.
inline ActionData nontrivial_action(const PrimeField& f, const Group& g, std::size_t n, Rng& rng,
                                    bool permute = true) {
  for (;;) {
    ActionData a = random_action(f, g, n, rng, permute);
    if (has_nontrivial_lambda(a)) return a;
  }
}

/// The simple object i with trivial structure over the trivial subgroup.
inline EqObject bare_simple(const ActionData& act, std::size_t i) {
  Obj o = simple_obj(act.n(), i);
  return EqObject{trivial_subgroup(act.group()), o, {identity_mor(act.field(), o)}};
}

/// A few valid objects over J: inductions of simples from the trivial subgroup,
/// restrictions of inductions to G and, when J is nontrivial, a sum of two of them.
inline std::vector<EqObject> sample_objects(const ActionData& act, const Subgroup& J) {
  std::vector<EqObject> out;
  const Subgroup G = whole(act.group());
  for (std::size_t i = 0; i < act.n(); ++i) out.push_back(ind(act, J, bare_simple(act, i)));
  if (J.order() > 1 && !(J == G)) out.push_back(res(J, ind(act, G, bare_simple(act, 0))));
  if (out.size() >= 2) out.push_back(direct_sum(act, {out[0], out[1]}).sum);
  return out;
}

/// Small objects over J: up to two simples and their direct sum.
inline std::vector<EqObject> small_objects(const ActionData& act, const Subgroup& J, std::uint64_t seed = 1) {
  Rng rng(seed);
  std::vector<EqObject> out;
  for (const auto& s : simples_of(act, J, rng).simples) {
    if (out.size() == 2) break;
    out.push_back(s.obj);
  }
  if (out.size() == 2) out.push_back(direct_sum(act, {out[0], out[1]}).sum);
  return out;
}

/// Dimension of the equivariant Hom space, by enumerating every morphism.
inline std::size_t brute_force_hom_dim(const ActionData& act, const EqObject& M, const EqObject& N) {
  const PrimeField& f = act.field();
  std::size_t unknowns = 0;
  for (std::size_t j = 0; j < act.n(); ++j) unknowns += M.obj.m[j] * N.obj.m[j];
  std::size_t total = 1;
  for (std::size_t k = 0; k < unknowns; ++k) total *= f.p();
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<PrimeField::Elem> v(unknowns);
    std::size_t c = code;
    for (auto& x : v) {
      x = static_cast<PrimeField::Elem>(c % f.p());
      c /= f.p();
    }
    if (is_eq_morphism(act, {M, N, mor_from_vector(f, M.obj, N.obj, v)})) ++count;
  }
  std::size_t dim = 0;
  while (count > 1) {
    count /= f.p();
    ++dim;
  }
  return dim;
}

/// Random equivariant morphism between two objects, from the Hom basis.
inline EqMorphism random_eq_morphism(const ActionData& act, const EqObject& a, const EqObject& b, Rng& rng) {
  auto basis = hom_basis(act, a, b);
  std::vector<Mor> mors;
  for (const auto& m : basis) mors.push_back(m.f);
  if (mors.empty()) return {a, b, zero_mor(act.field(), a.obj, b.obj)};
  return {a, b, random_combination(act.field(), mors, rng)};
}

}  // namespace eqcat::testing
