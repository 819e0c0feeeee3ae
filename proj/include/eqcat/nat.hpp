#pragma once

#include <vector>

#include "eqcat/functors.hpp"

namespace eqcat {

/// Component at M of c_{H,ab} -> c_{bH,a} c_{H,b}: the inverse of T_2^{a,b} at M.
inline EqMorphism nat_C(const ActionData& act, int a, int b, const EqObject& M) {
  EqObject src = conj(act, act.group().mul(a, b), M);
  EqObject tgt = conj(act, a, conj(act, b, M));
  Mor f = (a == 0 || b == 0) ? identity_mor(act.field(), src.obj) : act.t2_inv(a, b, M.obj);
  EqMorphism out{std::move(src), std::move(tgt), std::move(f)};
  EQCAT_DEBUG_CHECK_MORPHISM(act, out, "nat_C");
  return out;
}

/// Component at M (over L) of c_{H,x} Ind_L^H -> Ind_{xL}^{xH} c_{L,x}: on the summand
/// of rep r it is (T_2^{x r x^-1, x})^{-1} T_2^{x,r}, landing in the induction along
/// x R x^-1, followed by reindexing to the canonical representatives.
inline EqMorphism nat_CI(const ActionData& act, int x, const Subgroup& H, const EqObject& M) {
  const Group& G = act.group();
  const std::size_t n = act.n();
  require(M.H.is_subgroup_of(H), "nat_CI: L is not contained in H");
  auto reps = coset_reps(G, M.H, H);
  EqObject src = conj(act, x, ind(act, H, M));
  EqObject cM = conj(act, x, M);
  Subgroup xH = conjugate(G, H, x);
  std::vector<int> xreps;
  for (int r : reps) xreps.push_back(G.conj(x, r));
  EqObject mid = ind_with(act, xH, cM, xreps);
  Mor m = zero_mor(act.field(), src.obj, mid.obj);
  // summand r of src at simple j sits where summand r of Ind(M) sits at sigma_x^-1 j
  auto off_ind = summand_offsets(translates(act, M.obj, reps), n);
  auto off_mid = summand_offsets(translates(act, cM.obj, xreps), n);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    Mor c = act.t2_inv(xreps[k], x, M.obj) * act.t2(x, reps[k], M.obj);
    std::vector<std::size_t> col(n);
    for (std::size_t j = 0; j < n; ++j) col[j] = off_ind[k][act.sigma_inv(x, j)];
    place_component(m, c, off_mid[k], col);
  }
  EqMorphism first{std::move(src), mid, std::move(m)};
  EQCAT_DEBUG_CHECK_MORPHISM(act, first, "nat_CI(raw)");
  auto canon = coset_reps(G, cM.H, xH);
  EqMorphism re = reindex_induction(act, xH, cM, xreps, canon);
  EqMorphism out = eq_compose(re, first);
  out.tgt = ind(act, xH, cM);
  EQCAT_DEBUG_CHECK_MORPHISM(act, out, "nat_CI");
  return out;
}

/// Transversal of H/J formed by the products r s (r over canonical reps of H/K,
/// s over canonical reps of K/J), r-major.
inline std::vector<int> product_reps(const Group& G, const Subgroup& J, const Subgroup& K, const Subgroup& H) {
  std::vector<int> out;
  for (int r : coset_reps(G, K, H))
    for (int s : coset_reps(G, J, K)) out.push_back(G.mul(r, s));
  return out;
}

/// Component at M (over J) of Ind_J^H -> Ind_K^H Ind_J^K: reindex the canonical
/// representatives of H/J to the products r s, then (T_2^{r,s})^{-1} on each summand.
inline EqMorphism nat_I(const ActionData& act, const Subgroup& K, const Subgroup& H, const EqObject& M) {
  const Group& G = act.group();
  require(M.H.is_subgroup_of(K) && K.is_subgroup_of(H), "nat_I: subgroups do not form a tower");
  EqObject src = ind(act, H, M);
  EqObject tgt = ind(act, H, ind(act, K, M));
  if (M.H == K || K == H) {
    EqMorphism id{src, tgt, identity_mor(act.field(), src.obj)};
    EQCAT_DEBUG_CHECK_MORPHISM(act, id, "nat_I");
    return id;
  }
  auto canon = coset_reps(G, M.H, H);
  auto rs = product_reps(G, M.H, K, H);
  EqMorphism re = reindex_induction(act, H, M, canon, rs);
  auto rk = coset_reps(G, K, H);
  auto sj = coset_reps(G, M.H, K);
  std::vector<Mor> comps;
  for (int r : rk)
    for (int s : sj) comps.push_back(act.t2_inv(r, s, M.obj));
  Mor d = mor_direct_sum(comps);
  EqMorphism out{src, tgt, compose(d, re.f)};
  EQCAT_DEBUG_CHECK_MORPHISM(act, out, "nat_I");
  return out;
}

/// The inverse orientation Ind_K^H Ind_J^K -> Ind_J^H, built from T_2^{r,s}.
inline EqMorphism nat_I_inverse(const ActionData& act, const Subgroup& K, const Subgroup& H, const EqObject& M) {
  EqMorphism fwd = nat_I(act, K, H, M);
  auto inv = eq_inverse(fwd);
  require(inv.has_value(), "nat_I is not invertible");
  return *inv;
}

}  // namespace eqcat
