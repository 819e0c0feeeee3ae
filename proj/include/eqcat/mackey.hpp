#pragma once

#include <string>
#include <vector>

#include "eqcat/nat.hpp"

namespace eqcat {

inline bool same_data(const EqObject& a, const EqObject& b) {
  return a.H == b.H && a.obj == b.obj && a.mu == b.mu;
}

struct MackeySummand {
  int x;                    // double coset representative
  Subgroup K_cap_xL;        // K ∩ xLx^-1
  std::vector<int> reps;    // R_x, the elements k x
  EqObject F;               // sum of T^a(V), a in R_x, as a K-object
  EqObject G;               // Ind_{K∩xL}^K Res c_{L,x}(V)
  EqMorphism N;             // F -> G
};

struct MackeyResult {
  std::vector<MackeySummand> summands;
  EqMorphism witness;       // Res_K Ind_L^H V -> sum of the G_x
  CheckReport report;
};

/// Explicit isomorphism Res_K^H Ind_L^H(V) -> sum over x in K\H/L of
/// Ind_{K∩xL}^K Res_{K∩xL}^{xL} c_{L,x}(V), with every claim verified in the report.
inline MackeyResult mackey_iso(const ActionData& act, const Subgroup& K, const Subgroup& H, const EqObject& V) {
  const Group& G = act.group();
  const Subgroup& L = V.H;
  require(K.is_subgroup_of(H) && L.is_subgroup_of(H), "mackey_iso: K or L is not contained in H");
  MackeyResult out;
  CheckReport& rep = out.report;
  auto dc = double_cosets(G, K, H, L);
  std::vector<int> all_reps;
  for (const auto& c : dc.cosets) all_reps.insert(all_reps.end(), c.reps.begin(), c.reps.end());
  auto canon = coset_reps(G, L, H);
  EqMorphism rho = res(K, reindex_induction(act, H, V, canon, all_reps));

  std::vector<EqObject> Fs, Gs;
  std::vector<EqMorphism> Ns;
  std::size_t count = 0;
  for (const auto& c : dc.cosets) {
    MackeySummand s;
    s.x = c.x;
    s.K_cap_xL = intersect(G, K, conjugate(G, L, c.x));
    s.reps = c.reps;
    s.F = induced_structure(act, V, c.reps, K);
    s.G = ind(act, K, res(s.K_cap_xL, conj(act, c.x, V)));
    std::vector<Mor> comps;
    for (int k : c.k_reps) comps.push_back(act.t2_inv(k, c.x, V.obj));
    s.N = EqMorphism{s.F, s.G, mor_direct_sum(comps)};
    std::string id = "N_x:x=" + std::to_string(c.x);
    rep.merge(check_eq_iso(act, s.N, id));
    count += static_cast<std::size_t>(K.order() / s.K_cap_xL.order());
    Fs.push_back(s.F);
    Gs.push_back(s.G);
    Ns.push_back(s.N);
    out.summands.push_back(std::move(s));
  }
  // the K-object on the concatenated transversal splits literally into the F_x
  EqObject sumF = direct_sum(act, Fs).sum;
  if (same_data(sumF, rho.tgt))
    rep.pass("stable-blocks:all");
  else
    rep.fail("stable-blocks:all", "induction along the double coset transversal does not split into the F_x blocks");

  std::vector<Mor> nparts;
  for (const auto& n : Ns) nparts.push_back(n.f);
  EqObject sumG = direct_sum(act, Gs).sum;
  out.witness = EqMorphism{rho.src, sumG, compose(mor_direct_sum(nparts), rho.f)};
  rep.merge(check_eq_iso(act, out.witness, "witness:total"));

  const std::size_t lhs = count * V.obj.total();
  const std::size_t rhs = static_cast<std::size_t>(H.order() / L.order()) * V.obj.total();
  if (lhs == rhs && out.witness.tgt.obj.total() == rhs)
    rep.pass("dimension:identity");
  else
    rep.fail("dimension:identity", "sum of [K:K∩xL]|V| differs from [H:L]|V|",
             {{"lhs", lhs}, {"rhs", rhs}, {"target_total", out.witness.tgt.obj.total()}});
  return out;
}

}  // namespace eqcat
