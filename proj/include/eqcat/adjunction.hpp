#pragma once

#include <string>
#include <vector>

#include "eqcat/mackey.hpp"

namespace eqcat {

/// V -> Res_L^H Ind_L^H(V): inclusion of the summand of the identity representative.
inline EqMorphism adjunction_unit(const ActionData& act, const Subgroup& H, const EqObject& V) {
  EqObject I = ind(act, H, V);
  EqObject RI = res(V.H, I);
  Mor m = zero_mor(act.field(), V.obj, RI.obj);
  for (std::size_t j = 0; j < act.n(); ++j) m.blocks[j].set_block(0, 0, Matrix::identity(act.field(), V.obj.m[j]));
  EqMorphism out{V, std::move(RI), std::move(m)};
  EQCAT_DEBUG_CHECK_MORPHISM(act, out, "adjunction_unit");
  return out;
}

/// Ind_L^H Res_L^H(M) -> M: on the summand of representative t it is mu_M^t.
inline EqMorphism adjunction_counit(const ActionData& act, const Subgroup& L, const EqObject& M) {
  EqObject R = res(L, M);
  EqObject IR = ind(act, M.H, R);
  auto reps = coset_reps(act.group(), L, M.H);
  Mor m = zero_mor(act.field(), IR.obj, M.obj);
  auto off = summand_offsets(translates(act, M.obj, reps), act.n());
  std::vector<std::size_t> zero(act.n(), 0);
  for (std::size_t k = 0; k < reps.size(); ++k) place_component(m, M.mu_of(reps[k]), zero, off[k]);
  EqMorphism out{std::move(IR), M, std::move(m)};
  EQCAT_DEBUG_CHECK_MORPHISM(act, out, "adjunction_counit");
  return out;
}

/// Unit/counit equivariance, both triangle identities and the Hom-dimension equality
/// for every pair (V over L, M over H) of samples.
inline CheckReport adjunction_check(const ActionData& act, const Subgroup& L, const Subgroup& H,
                                    const std::vector<EqObject>& vs, const std::vector<EqObject>& ms) {
  CheckReport rep;
  require(L.is_subgroup_of(H), "adjunction_check: L is not contained in H");
  for (std::size_t a = 0; a < vs.size(); ++a) {
    const EqObject& V = vs[a];
    std::string tag = "V" + std::to_string(a);
    EqMorphism eta = adjunction_unit(act, H, V);
    rep.merge(check_eq_morphism(act, eta), "unit:" + tag + "/");
    EqObject I = ind(act, H, V);
    EqMorphism eps = adjunction_counit(act, L, I);
    rep.merge(check_eq_morphism(act, eps), "counit:" + tag + "/");
    EqMorphism tri = eq_compose(eps, ind(act, H, eta));
    if (is_identity(tri.f))
      rep.pass("triangle-ind:" + tag);
    else
      rep.fail("triangle-ind:" + tag, "counit after Ind(unit) is not the identity", {{"composite", to_json(tri.f)}});
  }
  for (std::size_t b = 0; b < ms.size(); ++b) {
    const EqObject& M = ms[b];
    std::string tag = "M" + std::to_string(b);
    EqObject R = res(L, M);
    EqMorphism eta = adjunction_unit(act, H, R);
    EqMorphism eps = adjunction_counit(act, L, M);
    EqMorphism tri = eq_compose(res(L, eps), eta);
    if (is_identity(tri.f))
      rep.pass("triangle-res:" + tag);
    else
      rep.fail("triangle-res:" + tag, "Res(counit) after unit is not the identity", {{"composite", to_json(tri.f)}});
  }
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b) {
      std::size_t lhs = hom_dim(act, ind(act, H, vs[a]), ms[b]);
      std::size_t rhs = hom_dim(act, vs[a], res(L, ms[b]));
      std::string id = "hom-dim:V" + std::to_string(a) + ",M" + std::to_string(b);
      if (lhs == rhs)
        rep.pass(id);
      else
        rep.fail(id, "dim Hom(Ind V, M) differs from dim Hom(V, Res M)", {{"ind_side", lhs}, {"res_side", rhs}});
    }
  return rep;
}

}  // namespace eqcat
