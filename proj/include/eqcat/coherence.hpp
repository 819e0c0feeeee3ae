#pragma once

#include <string>

#include "eqcat/mackey.hpp"

namespace eqcat {

/// Both composites must agree as equivariant morphisms (same endpoints, same entries).
inline void compare_paths(CheckReport& rep, const std::string& id, const EqMorphism& p1, const EqMorphism& p2) {
  if (!same_data(p1.src, p2.src) || !same_data(p1.tgt, p2.tgt)) {
    rep.fail(id, "the two composites have different endpoints",
             {{"path1_target", to_json(p1.tgt.obj)}, {"path2_target", to_json(p2.tgt.obj)}});
    return;
  }
  if (!(p1.f == p2.f)) {
    rep.fail(id, "the two composites differ", {{"path1", to_json(p1.f)}, {"path2", to_json(p2.f)}});
    return;
  }
  rep.pass(id);
}

inline std::string ctx(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += std::string(s.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return s;
}

/// c_{H,abc} -> c_{bcH,a} c_{cH,b} c_{H,c}, through C_{ab,c} or through C_{a,bc}.
inline CheckReport check_diagram_C(const ActionData& act, int a, int b, int c, const EqObject& M) {
  const Group& G = act.group();
  CheckReport rep;
  EqMorphism p1 = eq_compose(nat_C(act, a, b, conj(act, c, M)), nat_C(act, G.mul(a, b), c, M));
  EqMorphism p2 = eq_compose(conj(act, a, nat_C(act, b, c, M)), nat_C(act, a, G.mul(b, c), M));
  compare_paths(rep, "C:" + ctx({{"a", a}, {"b", b}, {"c", c}}), p1, p2);
  return rep;
}

/// Tower J = M.H <= K <= L <= H: both ways from Ind_J^H to Ind_L^H Ind_K^L Ind_J^K.
inline CheckReport check_diagram_I(const ActionData& act, const Subgroup& K, const Subgroup& L, const Subgroup& H,
                                   const EqObject& M) {
  CheckReport rep;
  EqMorphism p1 = eq_compose(nat_I(act, L, H, ind(act, K, M)), nat_I(act, K, H, M));
  EqMorphism p2 = eq_compose(ind(act, H, nat_I(act, K, L, M)), nat_I(act, L, H, M));
  compare_paths(rep, "I:" + ctx({{"|J|", M.H.order()}, {"|K|", K.order()}, {"|L|", L.order()}, {"|H|", H.order()}}), p1,
                p2);
  return rep;
}

/// K = M.H <= L <= H and a in G: both ways from c_{H,a} Ind_K^H to Ind_{aL}^{aH} Ind_{aK}^{aL} c_{K,a}.
inline CheckReport check_diagram_IIC(const ActionData& act, const Subgroup& L, const Subgroup& H, int a,
                                     const EqObject& M) {
  const Group& G = act.group();
  CheckReport rep;
  EqMorphism p1 = eq_compose(ind(act, conjugate(G, H, a), nat_CI(act, a, L, M)),
                             eq_compose(nat_CI(act, a, H, ind(act, L, M)), conj(act, a, nat_I(act, L, H, M))));
  EqMorphism p2 = eq_compose(nat_I(act, conjugate(G, L, a), conjugate(G, H, a), conj(act, a, M)), nat_CI(act, a, H, M));
  compare_paths(rep, "IIC:" + ctx({{"|K|", M.H.order()}, {"|L|", L.order()}, {"|H|", H.order()}, {"a", a}}), p1, p2);
  return rep;
}

/// L = M.H <= H and a, b in G: both ways from c_{H,ab} Ind_L^H to Ind_{abL}^{abH} c_{bL,a} c_{L,b}.
inline CheckReport check_diagram_ICC(const ActionData& act, const Subgroup& H, int a, int b, const EqObject& M) {
  const Group& G = act.group();
  CheckReport rep;
  int ab = G.mul(a, b);
  EqMorphism p1 = eq_compose(ind(act, conjugate(G, H, ab), nat_C(act, a, b, M)), nat_CI(act, ab, H, M));
  EqMorphism p2 = eq_compose(nat_CI(act, a, conjugate(G, H, b), conj(act, b, M)),
                             eq_compose(conj(act, a, nat_CI(act, b, H, M)), nat_C(act, a, b, ind(act, H, M))));
  compare_paths(rep, "ICC:" + ctx({{"|L|", M.H.order()}, {"|H|", H.order()}, {"a", a}, {"b", b}}), p1, p2);
  return rep;
}

/// Restriction is strictly transitive: Res_K Res_L (M) = Res_K (M) as data.
inline CheckReport check_diagram_R(const Subgroup& K, const Subgroup& L, const EqObject& M) {
  CheckReport rep;
  std::string id = "R:" + ctx({{"|K|", K.order()}, {"|L|", L.order()}, {"|H|", M.H.order()}});
  if (same_data(res(K, res(L, M)), res(K, M)))
    rep.pass(id);
  else
    rep.fail(id, "iterated restriction differs from direct restriction");
  return rep;
}

/// Conjugation commutes with restriction on the nose, so with the restriction
/// transformations taken as identities the diagram reduces to data equalities
/// along K <= L <= H.
inline CheckReport check_diagram_RRC(const ActionData& act, const Subgroup& K, const Subgroup& L, int a,
                                     const EqObject& M) {
  const Group& G = act.group();
  CheckReport rep;
  std::string id = "RRC:" + ctx({{"|K|", K.order()}, {"|L|", L.order()}, {"|H|", M.H.order()}, {"a", a}});
  Subgroup aK = conjugate(G, K, a), aL = conjugate(G, L, a);
  EqObject top = conj(act, a, res(K, res(L, M)));
  EqObject mid = res(aK, conj(act, a, res(L, M)));
  EqObject bottom = res(aK, res(aL, conj(act, a, M)));
  if (same_data(top, mid) && same_data(mid, bottom))
    rep.pass(id);
  else
    rep.fail(id, "conjugation and restriction do not commute as data");
  return rep;
}

/// Res(C_{a,b} at M) equals C_{a,b} at Res(M), as data.
inline CheckReport check_diagram_RCC(const ActionData& act, const Subgroup& L, int a, int b, const EqObject& M) {
  const Group& G = act.group();
  CheckReport rep;
  std::string id = "RCC:" + ctx({{"|L|", L.order()}, {"|H|", M.H.order()}, {"a", a}, {"b", b}});
  EqMorphism lhs = res(conjugate(G, L, G.mul(a, b)), nat_C(act, a, b, M));
  EqMorphism rhs = nat_C(act, a, b, res(L, M));
  compare_paths(rep, id, lhs, rhs);
  return rep;
}

/// Degenerate cases: identity transformations at trivial parameters, and
/// c_{H,h} isomorphic to the identity through mu^h for h in H.
inline CheckReport check_degeneracies(const ActionData& act, const EqObject& M) {
  const Group& G = act.group();
  CheckReport rep;
  const Subgroup& H = M.H;
  for (int a = 0; a < G.order(); ++a) {
    std::string ia = std::to_string(a);
    if (is_identity(nat_C(act, a, 0, M).f) && is_identity(nat_C(act, 0, a, M).f))
      rep.pass("C-unit:a=" + ia);
    else
      rep.fail("C-unit:a=" + ia, "C_{a,1} or C_{1,a} is not the identity");
  }
  if (same_data(ind(act, H, M), M) && same_data(res(H, M), M))
    rep.pass("I-R-trivial:self");
  else
    rep.fail("I-R-trivial:self", "Ind_H^H or Res_H^H is not the identity");
  for (int h : H.elements()) {
    EqMorphism w{conj(act, h, M), M, M.mu_of(h)};
    rep.merge(check_eq_iso(act, w, "conj-inner:h=" + std::to_string(h)));
  }
  return rep;
}

/// nat_I with J = K or K = H is the identity.
inline CheckReport check_I_degenerate(const ActionData& act, const Subgroup& H, const EqObject& M) {
  CheckReport rep;
  std::string id = "I-unit:|J|=" + std::to_string(M.H.order()) + ",|H|=" + std::to_string(H.order());
  if (is_identity(nat_I(act, M.H, H, M).f) && is_identity(nat_I(act, H, H, M).f))
    rep.pass(id);
  else
    rep.fail(id, "I_{J,H}^J or I_{J,H}^H is not the identity");
  return rep;
}

}  // namespace eqcat
