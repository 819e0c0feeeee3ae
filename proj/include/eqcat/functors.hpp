#pragma once

#include <vector>

#include "eqcat/equivariant.hpp"

namespace eqcat {

/// offsets[k][j]: first row of summand k inside simple j of the direct sum.
inline std::vector<std::vector<std::size_t>> summand_offsets(const std::vector<Obj>& parts, std::size_t n) {
  std::vector<std::vector<std::size_t>> off(parts.size(), std::vector<std::size_t>(n, 0));
  std::vector<std::size_t> acc(n, 0);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      off[k][j] = acc[j];
      acc[j] += parts[k].m[j];
    }
  return off;
}

/// Adds `c` (a morphism from summand col of the source sum to summand row of the target sum).
inline void place_component(Mor& into, const Mor& c, const std::vector<std::size_t>& row_off,
                            const std::vector<std::size_t>& col_off) {
  for (std::size_t j = 0; j < c.blocks.size(); ++j)
    if (c.blocks[j].rows() && c.blocks[j].cols()) into.blocks[j].set_block(row_off[j], col_off[j], c.blocks[j]);
}

// ---- restriction ----------------------------------------------------------

inline EqObject res(const Subgroup& K, const EqObject& M) {
  require(K.is_subgroup_of(M.H), "res: K is not contained in H");
  if (K == M.H) return M;
  EqObject r{K, M.obj, {}};
  for (int g : K.elements()) r.mu.push_back(M.mu_of(g));
  return r;
}

inline EqMorphism res(const Subgroup& K, const EqMorphism& f) { return {res(K, f.src), res(K, f.tgt), f.f}; }

// ---- induction ------------------------------------------------------------

/// Underlying object of the sum of T^t(V) over the listed elements.
inline std::vector<Obj> translates(const ActionData& act, const Obj& v, const std::vector<int>& reps) {
  std::vector<Obj> parts;
  for (int t : reps) parts.push_back(act.act_obj(t, v));
  return parts;
}

/// The sum over t in `reps` of T^t(V) with the structure maps, for g in A,
/// whose (s,t) component with g t = s h (h in L) is T^s(mu^h) (T_2^{s,h})^{-1} T_2^{g,t}.
/// Throws ContractError if some g t leaves the listed cosets (sum not A-stable).
inline EqObject induced_structure(const ActionData& act, const EqObject& V, const std::vector<int>& reps,
                                  const Subgroup& A) {
  const Group& G = act.group();
  const PrimeField& f = act.field();
  const std::size_t n = act.n();
  auto parts = translates(act, V.obj, reps);
  Obj total{std::vector<std::size_t>(n, 0)};
  for (const auto& p : parts) total = obj_sum(total, p);
  auto off = summand_offsets(parts, n);
  EqObject out{A, total, {}};
  for (int g : A.elements()) {
    Obj src = act.act_obj(g, total);
    Mor nu = zero_mor(f, src, total);
    for (std::size_t t = 0; t < reps.size(); ++t) {
      auto [s, h] = coset_split(G, V.H, reps, G.mul(g, reps[t]));
      int se = reps[s];
      Mor c = act.act_mor(se, V.mu_of(h)) * act.t2_inv(se, h, V.obj) * act.t2(g, reps[t], V.obj);
      // column offsets of summand t inside T^g(total)
      std::vector<std::size_t> col(n);
      for (std::size_t j = 0; j < n; ++j) col[j] = off[t][act.sigma_inv(g, j)];
      place_component(nu, c, off[s], col);
    }
    out.mu.push_back(std::move(nu));
  }
  EQCAT_DEBUG_CHECK_OBJECT(act, out, "induced_structure");
  return out;
}

/// Induction from L = V.H to H along the given transversal of H/L.
inline EqObject ind_with(const ActionData& act, const Subgroup& H, const EqObject& V, const std::vector<int>& reps) {
  require(V.H.is_subgroup_of(H), "ind: L is not contained in H");
  require(is_transversal(act.group(), V.H, H, reps), "ind: representative list is not a transversal");
  return induced_structure(act, V, reps, H);
}

/// Induction along the canonical (minimal element) coset representatives.
inline EqObject ind(const ActionData& act, const Subgroup& H, const EqObject& V) {
  require(V.H.is_subgroup_of(H), "ind: L is not contained in H");
  if (V.H == H) return V;
  return induced_structure(act, V, coset_reps(act.group(), V.H, H), H);
}

/// Induction on morphisms: the sum over t of T^t(f).
inline Mor ind_mor(const ActionData& act, const std::vector<int>& reps, const Mor& f) {
  std::vector<Mor> parts;
  for (int t : reps) parts.push_back(act.act_mor(t, f));
  return mor_direct_sum(parts);
}

inline EqMorphism ind(const ActionData& act, const Subgroup& H, const EqMorphism& f) {
  if (f.src.H == H) return f;
  auto reps = coset_reps(act.group(), f.src.H, H);
  return {ind(act, H, f.src), ind(act, H, f.tgt), ind_mor(act, reps, f.f)};
}

/// Isomorphism between the inductions of V along two transversals: for t' = t l
/// the component T^{t'}(V) -> T^t(V) is T^t(mu^l) (T_2^{t,l})^{-1}.
inline EqMorphism reindex_induction(const ActionData& act, const Subgroup& H, const EqObject& V,
                                    const std::vector<int>& reps1, const std::vector<int>& reps2) {
  const Group& G = act.group();
  const std::size_t n = act.n();
  EqObject A = ind_with(act, H, V, reps1), B = ind_with(act, H, V, reps2);
  Mor m = zero_mor(act.field(), A.obj, B.obj);
  auto off1 = summand_offsets(translates(act, V.obj, reps1), n);
  auto off2 = summand_offsets(translates(act, V.obj, reps2), n);
  for (std::size_t a = 0; a < reps1.size(); ++a) {
    auto [t, l] = coset_split(G, V.H, reps2, reps1[a]);
    int te = reps2[t];
    Mor c = act.act_mor(te, V.mu_of(l)) * act.t2_inv(te, l, V.obj);
    place_component(m, c, off2[t], off1[a]);
  }
  EqMorphism out{std::move(A), std::move(B), std::move(m)};
  EQCAT_DEBUG_CHECK_MORPHISM(act, out, "reindex_induction");
  return out;
}

// ---- conjugation ----------------------------------------------------------

/// c_{H,x}(M): the object T^x(M) over xHx^-1 with structure at k = x h x^-1 given
/// by T^x(mu^h) (T_2^{x,h})^{-1} T_2^{k,x}.
inline EqObject conj(const ActionData& act, int x, const EqObject& M) {
  const Group& G = act.group();
  if (x == 0) return M;
  Subgroup xH = conjugate(G, M.H, x);
  EqObject out{xH, act.act_obj(x, M.obj), {}};
  const int xi = G.inv(x);
  for (int k : xH.elements()) {
    int h = G.conj(xi, k);
    out.mu.push_back(act.act_mor(x, M.mu_of(h)) * act.t2_inv(x, h, M.obj) * act.t2(k, x, M.obj));
  }
  EQCAT_DEBUG_CHECK_OBJECT(act, out, "conj");
  return out;
}

inline EqMorphism conj(const ActionData& act, int x, const EqMorphism& f) {
  return {conj(act, x, f.src), conj(act, x, f.tgt), x == 0 ? f.f : act.act_mor(x, f.f)};
}

}  // namespace eqcat
