#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "eqcat/coherence.hpp"
#include "eqcat/random_data.hpp"

namespace eqcat {

/// Action on a pointed category with trivial associator: simple labels are the
/// elements of a group E (tensor is the group law) and tau^g_{i,j} is the scalar of
/// the monoidal structure T^g(X_i) ⊗ T^g(X_j) -> T^g(X_i ⊗ X_j).
class PointedData {
 public:
  using Tau = std::vector<std::vector<std::vector<PrimeField::Elem>>>;  // [g][i][j]

  PointedData(ActionData act, Group e, Tau tau) : act_(std::move(act)), e_(std::move(e)), tau_(std::move(tau)) {
    const std::size_t n = act_.n();
    if (static_cast<std::size_t>(e_.order()) != n) throw InputError("pointed data: |E| differs from the number of simples");
    if (tau_.size() != static_cast<std::size_t>(act_.group().order()))
      throw InputError("pointed data: tau must have one table per group element");
    for (const auto& t : tau_) {
      if (t.size() != n) throw InputError("pointed data: tau table has the wrong size");
      for (const auto& row : t) {
        if (row.size() != n) throw InputError("pointed data: tau table has the wrong size");
        for (auto v : row)
          if (v == 0 || v >= act_.field().p()) throw InputError("pointed data: tau entries must be nonzero residues");
      }
    }
  }

  /// tau = 1 everywhere.
  static PointedData untwisted(ActionData act, Group e) {
    const std::size_t n = act.n();
    Tau tau(act.group().order(), std::vector<std::vector<PrimeField::Elem>>(n, std::vector<PrimeField::Elem>(n, 1)));
    return PointedData(std::move(act), std::move(e), std::move(tau));
  }

  const ActionData& action() const { return act_; }
  const Group& labels() const { return e_; }
  const PrimeField& field() const { return act_.field(); }
  PrimeField::Elem tau(int g, int i, int j) const { return tau_[g][i][j]; }
  const Tau& tau_table() const { return tau_; }

  /// The label k = i j, and the partner j = i^-1 k of i inside the label k.
  int mul(int i, int j) const { return e_.mul(i, j); }
  int partner(int i, int k) const { return e_.mul(e_.inv(i), k); }

  /// Automorphism, unit, hexagon and compatibility axioms, plus the base action axioms.
  CheckReport validate() const {
    CheckReport rep = act_.validate();
    const PrimeField& f = field();
    const int n = e_.order();
    const int go = act_.group().order();
    for (int g = 0; g < go; ++g) {
      bool aut = true;
      for (int i = 0; i < n && aut; ++i)
        for (int j = 0; j < n && aut; ++j)
          if (act_.sigma(g, mul(i, j)) != mul(act_.sigma(g, i), act_.sigma(g, j))) {
            rep.fail("automorphism:g=" + std::to_string(g), "sigma_g is not an automorphism of the label group",
                     {{"g", g}, {"i", i}, {"j", j}});
            aut = false;
          }
      if (aut) rep.pass("automorphism:g=" + std::to_string(g));
    }
    for (int g = 0; g < go; ++g)
      for (int i = 0; i < n; ++i)
        if (tau_[g][0][i] != 1 || tau_[g][i][0] != 1)
          rep.fail("unit:g=" + std::to_string(g) + ",i=" + std::to_string(i), "tau with a unit label is not 1",
                   {{"g", g}, {"i", i}, {"tau_ei", tau_[g][0][i]}, {"tau_ie", tau_[g][i][0]}});
    rep.pass("unit:checked");
    for (int g = 0; g < go; ++g)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            auto lhs = f.mul(tau_[g][i][j], tau_[g][mul(i, j)][k]);
            auto rhs = f.mul(tau_[g][j][k], tau_[g][i][mul(j, k)]);
            if (lhs != rhs)
              rep.fail("hexagon:g=" + std::to_string(g), "tau violates the hexagon identity",
                       {{"g", g}, {"i", i}, {"j", j}, {"k", k}, {"lhs", lhs}, {"rhs", rhs}});
          }
    rep.pass("hexagon:checked");
    for (int g = 0; g < go; ++g)
      for (int h = 0; h < go; ++h)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            const int gh = act_.group().mul(g, h);
            auto lhs = f.mul(tau_[gh][i][j], act_.lambda(g, h, mul(i, j)));
            auto rhs = f.mul(f.mul(act_.lambda(g, h, i), act_.lambda(g, h, j)),
                             f.mul(tau_[g][act_.sigma(h, i)][act_.sigma(h, j)], tau_[h][i][j]));
            if (lhs != rhs)
              rep.fail("compatibility:g=" + std::to_string(g) + ",h=" + std::to_string(h),
                       "tau and lambda are not compatible",
                       {{"g", g}, {"h", h}, {"i", i}, {"j", j}, {"lhs", lhs}, {"rhs", rhs}});
          }
    rep.pass("compatibility:checked");
    return rep;
  }

 private:
  ActionData act_;
  Group e_;
  Tau tau_;
};

// ---- tensor products --------------------------------------------------------

/// off[k][i]: offset of the piece X_i ⊗ X_{i^-1 k} inside the block of label k of M ⊗ N
/// (pieces ordered by i).
inline std::vector<std::vector<std::size_t>> piece_offsets(const PointedData& P, const Obj& M, const Obj& N) {
  const std::size_t n = M.n();
  std::vector<std::vector<std::size_t>> off(n, std::vector<std::size_t>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      off[k][i] = acc;
      acc += M.m[i] * N.m[P.partner(static_cast<int>(i), static_cast<int>(k))];
    }
  }
  return off;
}

inline Obj tensor_obj(const PointedData& P, const Obj& M, const Obj& N) {
  require(M.n() == N.n() && M.n() == P.action().n(), "tensor_obj: label sets differ");
  Obj out{std::vector<std::size_t>(M.n(), 0)};
  for (std::size_t i = 0; i < M.n(); ++i)
    for (std::size_t j = 0; j < N.n(); ++j) out.m[P.mul(static_cast<int>(i), static_cast<int>(j))] += M.m[i] * N.m[j];
  return out;
}

/// f ⊗ g: on each piece (i, j) the Kronecker product f_i ⊗ g_j.
inline Mor tensor_mor(const PointedData& P, const Mor& f, const Mor& g) {
  const std::size_t n = P.action().n();
  Mor out = zero_mor(P.field(), tensor_obj(P, f.src, g.src), tensor_obj(P, f.tgt, g.tgt));
  auto so = piece_offsets(P, f.src, g.src), to = piece_offsets(P, f.tgt, g.tgt);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = static_cast<std::size_t>(P.partner(static_cast<int>(i), static_cast<int>(k)));
      out.blocks[k].set_block(to[k][i], so[k][i], f.blocks[i].kron(g.blocks[j]));
    }
  return out;
}

/// The monoidal structure of T^g: T^g(M ⊗ N) -> T^g(M) ⊗ T^g(N), scalar tau^g_{i,j} on the
/// piece X_i ⊗ X_j; with `inverse` the map in the other direction.
inline Mor monoidal_map(const PointedData& P, int g, const Obj& M, const Obj& N, bool inverse = false) {
  const ActionData& act = P.action();
  const PrimeField& f = P.field();
  const std::size_t n = act.n();
  Obj gM = act.act_obj(g, M), gN = act.act_obj(g, N), MN = tensor_obj(P, M, N);
  Obj split = tensor_obj(P, gM, gN), joined = act.act_obj(g, MN);
  Mor out = inverse ? zero_mor(f, split, joined) : zero_mor(f, joined, split);
  auto so = piece_offsets(P, gM, gN), mo = piece_offsets(P, M, N);
  for (std::size_t k = 0; k < n; ++k) {
    const int kk = act.sigma_inv(g, static_cast<int>(k));
    for (std::size_t a = 0; a < n; ++a) {
      const int i = act.sigma_inv(g, static_cast<int>(a));
      const int j = P.partner(i, kk);
      const std::size_t size = M.m[i] * N.m[j];
      if (size == 0) continue;
      auto t = P.tau(g, i, j);
      if (inverse)
        out.blocks[k].set_block(mo[kk][i], so[k][a], Matrix::scalar(f, size, f.inv(t)));
      else
        out.blocks[k].set_block(so[k][a], mo[kk][i], Matrix::scalar(f, size, t));
    }
  }
  return out;
}

/// The subgroup over which A ⊗ B lives: the smaller of A.H and B.H (one must contain the other).
inline Subgroup tensor_group(const EqObject& A, const EqObject& B) {
  if (B.H.is_subgroup_of(A.H)) return B.H;
  require(A.H.is_subgroup_of(B.H), "tensor_eq: neither subgroup contains the other");
  return A.H;
}

/// A ⊗ B with structure (mu_A^h ⊗ mu_B^h) ∘ (monoidal map of T^h), over the smaller subgroup.
inline EqObject tensor_eq(const PointedData& P, const EqObject& A0, const EqObject& B0) {
  Subgroup S = tensor_group(A0, B0);
  EqObject A = res(S, A0), B = res(S, B0);
  EqObject out{S, tensor_obj(P, A.obj, B.obj), {}};
  for (std::size_t k = 0; k < S.elements().size(); ++k) {
    int h = S.elements()[k];
    out.mu.push_back(tensor_mor(P, A.mu[k], B.mu[k]) * monoidal_map(P, h, A.obj, B.obj));
  }
  EQCAT_DEBUG_CHECK_OBJECT(P.action(), out, "tensor_eq");
  return out;
}

/// f ⊗ g for equivariant morphisms, between the tensor products of sources and targets.
inline EqMorphism tensor_eq(const PointedData& P, const EqMorphism& f, const EqMorphism& g) {
  return {tensor_eq(P, f.src, g.src), tensor_eq(P, f.tgt, g.tgt), tensor_mor(P, f.f, g.f)};
}

/// The unit object X_e over H with identity structure.
inline EqObject unit_object(const PointedData& P, const Subgroup& H) {
  return trivial_structure(P.action(), H, simple_obj(P.action().n(), 0));
}

/// (A ⊗ B) ⊗ C -> A ⊗ (B ⊗ C): the associator is trivial, so this only reorders basis vectors.
inline Mor associator_mor(const PointedData& P, const Obj& A, const Obj& B, const Obj& C) {
  const std::size_t n = P.action().n();
  Obj AB = tensor_obj(P, A, B), BC = tensor_obj(P, B, C);
  Mor out = zero_mor(P.field(), tensor_obj(P, AB, C), tensor_obj(P, A, BC));
  auto oAB = piece_offsets(P, A, B), oBC = piece_offsets(P, B, C);
  auto oL = piece_offsets(P, AB, C), oR = piece_offsets(P, A, BC);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t i2 = 0; i2 < n; ++i2)
      for (std::size_t j = 0; j < n; ++j) {
        const int ab = P.mul(static_cast<int>(i), static_cast<int>(i2));
        const int bc = P.mul(static_cast<int>(i2), static_cast<int>(j));
        const int k = P.mul(ab, static_cast<int>(j));
        for (std::size_t a = 0; a < A.m[i]; ++a)
          for (std::size_t b = 0; b < B.m[i2]; ++b)
            for (std::size_t c = 0; c < C.m[j]; ++c) {
              std::size_t left = oL[k][ab] + (oAB[ab][i] + a * B.m[i2] + b) * C.m[j] + c;
              std::size_t right = oR[k][i] + a * BC.m[bc] + oBC[bc][i2] + b * C.m[j] + c;
              out.blocks[k](right, left) = 1;
            }
      }
  return out;
}

inline EqMorphism associator(const PointedData& P, const EqObject& A, const EqObject& B, const EqObject& C) {
  EqMorphism out{tensor_eq(P, tensor_eq(P, A, B), C), tensor_eq(P, A, tensor_eq(P, B, C)),
                 associator_mor(P, A.obj, B.obj, C.obj)};
  EQCAT_DEBUG_CHECK_MORPHISM(P.action(), out, "associator");
  return out;
}

// ---- module structures of induction -----------------------------------------

/// Inclusion of summand k of the sum of T^t(V) over `reps`.
inline Mor summand_inclusion(const ActionData& act, const Obj& v, const std::vector<int>& reps, std::size_t k) {
  auto parts = translates(act, v, reps);
  Obj total{std::vector<std::size_t>(act.n(), 0)};
  for (const auto& p : parts) total = obj_sum(total, p);
  auto off = summand_offsets(parts, act.n());
  Mor m = zero_mor(act.field(), parts[k], total);
  std::vector<std::size_t> zero(act.n(), 0);
  place_component(m, identity_mor(act.field(), parts[k]), off[k], zero);
  return m;
}

/// Projection onto summand k of the sum of T^t(V) over `reps`.
inline Mor summand_projection(const ActionData& act, const Obj& v, const std::vector<int>& reps, std::size_t k) {
  auto parts = translates(act, v, reps);
  Obj total{std::vector<std::size_t>(act.n(), 0)};
  for (const auto& p : parts) total = obj_sum(total, p);
  auto off = summand_offsets(parts, act.n());
  Mor m = zero_mor(act.field(), total, parts[k]);
  std::vector<std::size_t> zero(act.n(), 0);
  place_component(m, identity_mor(act.field(), parts[k]), zero, off[k]);
  return m;
}

/// Left module structure of the sum over `reps` as an A-object:
/// sum_a T^a(M ⊗ V) -> M ⊗ sum_a T^a(V), on summand a the map (mu_M^a ⊗ 1) after the
/// monoidal map of T^a. M must be defined on every rep and on A.
inline EqMorphism induced_module_map(const PointedData& P, const EqObject& M, const EqObject& V,
                                     const std::vector<int>& reps, const Subgroup& A) {
  const ActionData& act = P.action();
  const PrimeField& f = P.field();
  EqObject MV = tensor_eq(P, M, V);
  EqObject src = induced_structure(act, MV, reps, A);
  EqObject IV = induced_structure(act, V, reps, A);
  EqObject tgt = tensor_eq(P, M, IV);
  Mor total = zero_mor(f, src.obj, tgt.obj);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const int a = reps[k];
    Mor c = tensor_mor(P, M.mu_of(a), identity_mor(f, act.act_obj(a, V.obj))) *
            monoidal_map(P, a, M.obj, V.obj);
    Mor into = tensor_mor(P, identity_mor(f, M.obj), summand_inclusion(act, V.obj, reps, k));
    total = mor_add(total, into * c * summand_projection(act, MV.obj, reps, k));
  }
  EqMorphism out{std::move(src), std::move(tgt), std::move(total)};
  EQCAT_DEBUG_CHECK_MORPHISM(act, out, "induced_module_map");
  return out;
}

/// Ind_L^H(M ⊗ V) -> M ⊗ Ind_L^H(V) for M over H and V over L.
inline EqMorphism ind_module_structure(const PointedData& P, const Subgroup& H, const EqObject& M, const EqObject& V) {
  require(V.H.is_subgroup_of(H) && H.is_subgroup_of(M.H), "ind_module_structure: subgroups do not nest");
  EqObject MH = res(H, M);
  if (V.H == H) return eq_identity(P.action(), tensor_eq(P, MH, V));
  return induced_module_map(P, MH, V, coset_reps(P.action().group(), V.H, H), H);
}

struct FrobeniusResult {
  EqMorphism witness;  // Ind(M ⊗ Res V) -> Ind(M) ⊗ V
  CheckReport report;
};

/// Ind_L^H(M ⊗ Res V) -> Ind_L^H(M) ⊗ V for M over L and V over H: on summand a the map
/// (1 ⊗ mu_V^a) after the monoidal map of T^a.
inline FrobeniusResult frobenius_iso(const PointedData& P, const Subgroup& H, const EqObject& M, const EqObject& V) {
  const ActionData& act = P.action();
  const PrimeField& f = P.field();
  require(M.H.is_subgroup_of(H) && H.is_subgroup_of(V.H), "frobenius_iso: subgroups do not nest");
  EqObject VH = res(H, V);
  EqObject MV = tensor_eq(P, M, VH);
  auto reps = coset_reps(act.group(), M.H, H);
  EqObject src = ind(act, H, MV);
  EqObject IM = ind(act, H, M);
  EqObject tgt = tensor_eq(P, IM, VH);
  Mor total = zero_mor(f, src.obj, tgt.obj);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const int a = reps[k];
    Mor c = tensor_mor(P, identity_mor(f, act.act_obj(a, M.obj)), VH.mu_of(a)) *
            monoidal_map(P, a, M.obj, VH.obj);
    Mor into = tensor_mor(P, summand_inclusion(act, M.obj, reps, k), identity_mor(f, VH.obj));
    total = mor_add(total, into * c * summand_projection(act, MV.obj, reps, k));
  }
  FrobeniusResult out{EqMorphism{src, tgt, std::move(total)}, {}};
  std::string tag = "|L|=" + std::to_string(M.H.order()) + ",|H|=" + std::to_string(H.order());
  out.report.merge(check_eq_iso(act, out.witness, "frobenius:" + tag));
  const std::size_t e1 = hom_dim(act, src, src), e2 = hom_dim(act, tgt, tgt);
  if (e1 == e2)
    out.report.pass("frobenius-end-dim:" + tag);
  else
    out.report.fail("frobenius-end-dim:" + tag, "End dimensions of the two sides differ", {{"ind_side", e1}, {"tensor_side", e2}});
  return out;
}

// ---- monoidal structure of conjugation ------------------------------------------

/// c_x(A ⊗ B) -> c_x(A) ⊗ c_x(B): the monoidal map of T^x.
inline EqMorphism conj_monoidal(const PointedData& P, int x, const EqObject& A, const EqObject& B) {
  const ActionData& act = P.action();
  return {conj(act, x, tensor_eq(P, A, B)), tensor_eq(P, conj(act, x, A), conj(act, x, B)),
          monoidal_map(P, x, A.obj, B.obj)};
}

/// c_{L,x}(M ⊗ V) -> M ⊗ c_{L,x}(V) for x in M.H: (mu_M^x ⊗ 1) after the monoidal map of T^x.
inline EqMorphism conj_module_map(const PointedData& P, int x, const EqObject& M, const EqObject& V) {
  const ActionData& act = P.action();
  require(M.H.contains(x), "conj_module_map: x is not in the acting subgroup");
  EqObject src = conj(act, x, tensor_eq(P, M, V));
  EqObject tgt = tensor_eq(P, M, conj(act, x, V));
  Mor m = tensor_mor(P, M.mu_of(x), identity_mor(P.field(), act.act_obj(x, V.obj))) *
          monoidal_map(P, x, M.obj, V.obj);
  return {std::move(src), std::move(tgt), std::move(m)};
}

/// Categorical Green checks at M over H and V over L (L <= H):
/// (a) restriction is strictly monoidal, (b) conjugation is monoidal,
/// (c) each Mackey witness N_x commutes with the module structures,
/// (d) C_{a,b} is a monoidal transformation.
inline CheckReport green_categorical_check(const PointedData& P, const Subgroup& K, const EqObject& M,
                                           const EqObject& V) {
  const ActionData& act = P.action();
  const Group& G = act.group();
  const Subgroup& H = M.H;
  const Subgroup& L = V.H;
  require(L.is_subgroup_of(H) && K.is_subgroup_of(H), "green_categorical_check: subgroups do not nest");
  CheckReport rep;
  std::string tag = ctx({{"|K|", K.order()}, {"|H|", H.order()}, {"|L|", L.order()}});
  EqObject ML = res(L, M);
  // (a)
  {
    Subgroup KL = intersect(G, K, L);
    EqObject lhs = res(KL, tensor_eq(P, ML, V));
    EqObject rhs = tensor_eq(P, res(KL, ML), res(KL, V));
    if (same_data(lhs, rhs))
      rep.pass("res-monoidal:" + tag);
    else
      rep.fail("res-monoidal:" + tag, "restriction of a tensor product differs from the tensor of restrictions");
  }
  // (b)
  for (int x = 0; x < G.order(); ++x) {
    EqMorphism m = conj_monoidal(P, x, ML, V);
    rep.merge(check_eq_iso(act, m, "conj-monoidal:" + tag + ",x=" + std::to_string(x)));
    if (same_data(conj(act, x, unit_object(P, L)), unit_object(P, conjugate(G, L, x))))
      rep.pass("conj-unit:" + tag + ",x=" + std::to_string(x));
    else
      rep.fail("conj-unit:" + tag + ",x=" + std::to_string(x), "conjugate of the unit is not the unit");
  }
  // (c)
  MackeyResult mk = mackey_iso(act, K, H, V);
  EqObject MV = tensor_eq(P, ML, V);
  MackeyResult mk2 = mackey_iso(act, K, H, MV);
  for (std::size_t s = 0; s < mk.summands.size(); ++s) {
    const MackeySummand& sv = mk.summands[s];
    const MackeySummand& smv = mk2.summands[s];
    const int x = sv.x;
    // (F_x)_2 : F_x(M ⊗ V) -> M ⊗ F_x(V)
    EqMorphism F2 = induced_module_map(P, M, V, sv.reps, K);
    // (G_x c)_2 : Ind Res c(M ⊗ V) -> M ⊗ Ind Res c(V)
    const Subgroup& D = sv.K_cap_xL;
    EqMorphism cmod = conj_module_map(P, x, M, V);  // c(M ⊗ V) -> M ⊗ c(V)
    EqMorphism resc = res(D, cmod);
    EqMorphism indres = ind(act, K, resc);
    EqMorphism s2 = ind_module_structure(P, K, M, res(D, conj(act, x, V)));
    EqMorphism G2 = eq_compose(s2, indres);
    EqMorphism lhs = eq_compose(G2, smv.N);
    EqMorphism rhs = eq_compose(tensor_eq(P, eq_identity(act, res(K, M)), sv.N), F2);
    compare_paths(rep, "mackey-module:" + tag + ",x=" + std::to_string(x), lhs, rhs);
  }
  // (d)
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) {
      const int ab = G.mul(a, b);
      // T^a T^b(M ⊗ V) -> T^a T^b M ⊗ T^a T^b V
      Obj bM = act.act_obj(b, ML.obj), bV = act.act_obj(b, V.obj);
      Mor split = monoidal_map(P, a, bM, bV) * act.act_mor(a, monoidal_map(P, b, ML.obj, V.obj));
      Mor lhs = split * nat_C(act, a, b, MV).f;
      Mor rhs = tensor_mor(P, nat_C(act, a, b, ML).f, nat_C(act, a, b, V).f) * monoidal_map(P, ab, ML.obj, V.obj);
      std::string id = "C-monoidal:" + tag + ",a=" + std::to_string(a) + ",b=" + std::to_string(b);
      if (lhs == rhs)
        rep.pass(id);
      else
        rep.fail(id, "C_{a,b} is not compatible with the monoidal structures", {{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
    }
  return rep;
}

/// Module-functor diagrams of Ind_L^H at M, M2 over H and V over L: (UM) the structure at the
/// unit is the identity, (HM) the structure at M ⊗ M2 factors through the structures at M and M2.
inline CheckReport check_module_diagrams(const PointedData& P, const Subgroup& H, const EqObject& M,
                                         const EqObject& M2, const EqObject& V) {
  const ActionData& act = P.action();
  CheckReport rep;
  std::string tag = ctx({{"|L|", V.H.order()}, {"|H|", H.order()}});
  EqMorphism u = ind_module_structure(P, H, unit_object(P, H), V);
  if (same_data(u.src, u.tgt) && is_identity(u.f))
    rep.pass("UM:" + tag);
  else
    rep.fail("UM:" + tag, "module structure at the unit is not the identity");
  EqObject MH = res(H, M), M2H = res(H, M2);
  EqObject IV = ind(act, H, V);
  // Ind((M ⊗ M2) ⊗ V) -> (M ⊗ M2) ⊗ Ind V -> M ⊗ (M2 ⊗ Ind V)
  EqMorphism p1 = eq_compose(associator(P, MH, M2H, IV), ind_module_structure(P, H, tensor_eq(P, MH, M2H), V));
  // Ind((M ⊗ M2) ⊗ V) -> Ind(M ⊗ (M2 ⊗ V)) -> M ⊗ Ind(M2 ⊗ V) -> M ⊗ (M2 ⊗ Ind V)
  EqMorphism a = ind(act, H, associator(P, res(V.H, MH), res(V.H, M2H), V));
  EqMorphism s1 = ind_module_structure(P, H, MH, tensor_eq(P, M2H, V));
  EqMorphism s2 = tensor_eq(P, eq_identity(act, MH), ind_module_structure(P, H, M2H, V));
  EqMorphism p2 = eq_compose(s2, eq_compose(s1, a));
  compare_paths(rep, "HM:" + tag, p1, p2);
  return rep;
}

// ---- random pointed data ------------------------------------------------------------

/// All automorphisms of E as permutations of its elements (brute force, small E only).
inline std::vector<std::vector<int>> automorphisms(const Group& E) {
  const int n = E.order();
  require(n <= 8, "automorphisms: label group too large");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = perm[0] == 0;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = perm[E.mul(i, j)] == E.mul(perm[i], perm[j]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

/// Characters E -> F_p^x fixed by every permutation in `sigma`.
inline std::vector<std::vector<PrimeField::Elem>> invariant_characters(const PrimeField& f, const Group& E,
                                                                       const std::vector<std::vector<int>>& sigma) {
  const int n = E.order();
  std::vector<std::vector<PrimeField::Elem>> out;
  std::vector<PrimeField::Elem> chi(n, 1);
  // enumerate values on all elements, pruning by the homomorphism law on assigned pairs
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (chi[E.mul(a, b)] != f.mul(chi[a], chi[b])) return;
      for (const auto& s : sigma)
        for (int a = 0; a < n; ++a)
          if (chi[s[a]] != chi[a]) return;
      out.push_back(chi);
      return;
    }
    for (PrimeField::Elem v = 1; v < f.p(); ++v) {
      if (f.pow(v, static_cast<std::uint64_t>(E.element_order(i))) != 1) continue;
      chi[i] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

/// Gauge of pointed data by beta[g][i] (beta[1] = 1, beta[g][e] = 1):
/// tau^g_{i,j} beta^g_{ij} / (beta^g_i beta^g_j), and the matching change of lambda.
inline PointedData gauge_pointed(const PointedData& P, const std::vector<std::vector<PrimeField::Elem>>& beta) {
  const PrimeField& f = P.field();
  ActionData act = gauge_action(P.action(), beta);
  auto tau = P.tau_table();
  const int n = P.labels().order();
  for (std::size_t g = 0; g < tau.size(); ++g)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        tau[g][i][j] = f.mul(tau[g][i][j], f.div(beta[g][P.mul(i, j)], f.mul(beta[g][i], beta[g][j])));
  return PointedData(std::move(act), P.labels(), std::move(tau));
}

/// Random valid pointed data for G acting on the label group E: G acts through a random
/// map to a cyclic group of automorphisms, lambda^{g,h}_i = chi(i)^{carry(g,h)} for an
/// invariant character chi, then a random gauge.
inline PointedData random_pointed(const PrimeField& f, const Group& G, const Group& E, Rng& rng) {
  const int n = E.order();
  auto auts = automorphisms(E);
  const auto& alpha = auts[rng() % auts.size()];
  // order of alpha
  int m = 1;
  {
    std::vector<int> cur = alpha;
    while (!std::is_sorted(cur.begin(), cur.end())) {
      std::vector<int> next(n);
      for (int i = 0; i < n; ++i) next[i] = alpha[cur[i]];
      cur = std::move(next);
      ++m;
    }
  }
  auto phi = random_hom_to_cyclic(G, m, rng);
  std::vector<std::vector<int>> sigma(G.order());
  for (int g = 0; g < G.order(); ++g) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int r = 0; r < phi[g]; ++r)
      for (auto& x : p) x = alpha[x];
    sigma[g] = std::move(p);
  }
  auto chars = invariant_characters(f, E, sigma);
  const auto& chi = chars[rng() % chars.size()];
  const int mc = 2 + static_cast<int>(rng() % 3);
  auto psi = random_hom_to_cyclic(G, mc, rng);
  std::vector<std::vector<std::vector<PrimeField::Elem>>> lambda(
      G.order(), std::vector<std::vector<PrimeField::Elem>>(G.order(), std::vector<PrimeField::Elem>(n, 1)));
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      if (carry(psi, mc, g, h)) lambda[g][h] = chi;
  PointedData base = PointedData::untwisted(ActionData(f, G, n, std::move(sigma), std::move(lambda)), E);
  auto beta = random_gauge(f, G.order(), n, rng);
  for (auto& b : beta) b[0] = 1;
  return gauge_pointed(base, beta);
}

/// E = C3 with G = C2 acting by inversion, lambda = tau = 1.
inline PointedData c3_by_inversion(const PrimeField& f) {
  Group c2 = Group::cyclic(2);
  std::vector<std::vector<int>> sigma{{0, 1, 2}, {0, 2, 1}};
  std::vector<std::vector<std::vector<PrimeField::Elem>>> lambda(
      2, std::vector<std::vector<PrimeField::Elem>>(2, std::vector<PrimeField::Elem>(3, 1)));
  return PointedData::untwisted(ActionData(f, c2, 3, std::move(sigma), std::move(lambda)), Group::cyclic(3));
}

}  // namespace eqcat
