#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqcat/category.hpp"

namespace eqcat {

/// Equivariant object over H: an object M with mu^g : T^g(M) -> M for every g in H,
/// stored in the order of H.elements().
struct EqObject {
  Subgroup H;
  Obj obj;
  std::vector<Mor> mu;

  const Mor& mu_of(int g) const {
    int k = H.position(g);
    require(k >= 0, "structure map requested for an element outside the subgroup");
    return mu[k];
  }
};

struct EqMorphism {
  EqObject src, tgt;
  Mor f;
};

// ---- validation -----------------------------------------------------------

/// Blockwise check that mu is invertible, unital and satisfies
/// mu^g_j mu^h_{sigma_g^-1 j} = lambda^{g,h}_{sigma_gh^-1 j} mu^{gh}_j.
inline CheckReport check_eq_object(const ActionData& act, const EqObject& M) {
  CheckReport rep;
  const Group& G = act.group();
  if (static_cast<int>(M.mu.size()) != M.H.order() || M.obj.n() != act.n()) {
    rep.fail("eq-object:shape", "structure map count or label count mismatch");
    return rep;
  }
  for (int k = 0; k < M.H.order(); ++k) {
    int g = M.H[k];
    const Mor& mu = M.mu[k];
    if (!is_shape_valid(mu) || !(mu.src == act.act_obj(g, M.obj)) || !(mu.tgt == M.obj)) {
      rep.fail("eq-object:shape", "mu^g has the wrong source or target", {{"g", g}});
      return rep;
    }
    if (!mor_inverse(mu)) {
      rep.fail("eq-object:invertible", "mu^g is not invertible", {{"g", g}});
      return rep;
    }
  }
  if (!is_identity(M.mu[0])) {
    rep.fail("eq-object:unit", "mu^1 is not the identity", {{"mu", to_json(M.mu[0])}});
    return rep;
  }
  for (int a = 0; a < M.H.order(); ++a)
    for (int b = 0; b < M.H.order(); ++b) {
      int g = M.H[a], h = M.H[b], gh = G.mul(g, h);
      const Mor& mg = M.mu[a];
      const Mor& mh = M.mu[b];
      const Mor& mgh = M.mu_of(gh);
      for (std::size_t j = 0; j < act.n(); ++j) {
        Matrix lhs = mg.blocks[j] * mh.blocks[act.sigma_inv(g, j)];
        Matrix rhs = mgh.blocks[j].scaled(act.lambda(g, h, act.sigma_inv(gh, j)));
        if (!(lhs == rhs)) {
          rep.fail("eq-object:cocycle", "structure maps violate the cocycle condition",
                   {{"g", g}, {"h", h}, {"label", j}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
          return rep;
        }
      }
    }
  rep.pass("eq-object:valid");
  return rep;
}

inline bool is_eq_object(const ActionData& act, const EqObject& M) { return check_eq_object(act, M).ok(); }

/// nu^g_j f_{sigma_g^-1 j} = f_j mu^g_j for all g in H.
inline CheckReport check_eq_morphism(const ActionData& act, const EqMorphism& phi) {
  CheckReport rep;
  if (!(phi.src.H == phi.tgt.H)) {
    rep.fail("eq-morphism:subgroup", "source and target live over different subgroups");
    return rep;
  }
  if (!is_shape_valid(phi.f) || !(phi.f.src == phi.src.obj) || !(phi.f.tgt == phi.tgt.obj)) {
    rep.fail("eq-morphism:shape", "underlying morphism has the wrong shape");
    return rep;
  }
  const Subgroup& H = phi.src.H;
  for (int k = 0; k < H.order(); ++k) {
    int g = H[k];
    const Mor& mu = phi.src.mu[k];
    const Mor& nu = phi.tgt.mu[k];
    for (std::size_t j = 0; j < act.n(); ++j) {
      Matrix lhs = nu.blocks[j] * phi.f.blocks[act.sigma_inv(g, j)];
      Matrix rhs = phi.f.blocks[j] * mu.blocks[j];
      if (!(lhs == rhs)) {
        rep.fail("eq-morphism:commute", "morphism does not commute with the structure maps",
                 {{"g", g}, {"label", j}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
        return rep;
      }
    }
  }
  rep.pass("eq-morphism:valid");
  return rep;
}

inline bool is_eq_morphism(const ActionData& act, const EqMorphism& phi) { return check_eq_morphism(act, phi).ok(); }

/// Report for a claimed isomorphism: equivariance plus invertibility.
inline CheckReport check_eq_iso(const ActionData& act, const EqMorphism& phi, const std::string& id) {
  CheckReport rep;
  auto eq = check_eq_morphism(act, phi);
  if (!eq.ok()) {
    rep.merge(eq, id + "/");
    return rep;
  }
  if (!mor_inverse(phi.f)) {
    rep.fail(id + "/invertible", "witness is not invertible", {{"f", to_json(phi.f)}});
    return rep;
  }
  rep.pass(id);
  return rep;
}

#ifdef EQCAT_DEBUG_VALIDATE
#define EQCAT_DEBUG_CHECK_OBJECT(act, M, where)                                      \
  do {                                                                               \
    auto eqcat_rep_ = ::eqcat::check_eq_object((act), (M));                          \
    if (!eqcat_rep_.ok())                                                            \
      throw ::eqcat::ContractError(std::string(where) + ": invalid equivariant object: " + \
                                   eqcat_rep_.first_failure()->message);             \
  } while (0)
#define EQCAT_DEBUG_CHECK_MORPHISM(act, phi, where)                                  \
  do {                                                                               \
    auto eqcat_rep_ = ::eqcat::check_eq_morphism((act), (phi));                       \
    if (!eqcat_rep_.ok())                                                            \
      throw ::eqcat::ContractError(std::string(where) + ": invalid equivariant morphism: " + \
                                   eqcat_rep_.first_failure()->message);             \
  } while (0)
#else
#define EQCAT_DEBUG_CHECK_OBJECT(act, M, where) ((void)0)
#define EQCAT_DEBUG_CHECK_MORPHISM(act, phi, where) ((void)0)
#endif

// ---- basic constructions --------------------------------------------------

inline EqMorphism eq_identity(const ActionData& act, const EqObject& M) {
  return {M, M, identity_mor(act.field(), M.obj)};
}

/// a ∘ b
inline EqMorphism eq_compose(const EqMorphism& a, const EqMorphism& b) {
  require(a.src.H == b.tgt.H, "composition across different subgroups");
  return {b.src, a.tgt, compose(a.f, b.f)};
}

inline std::optional<EqMorphism> eq_inverse(const EqMorphism& a) {
  auto inv = mor_inverse(a.f);
  if (!inv) return std::nullopt;
  return EqMorphism{a.tgt, a.src, std::move(*inv)};
}

/// The object with trivial structure: requires every g in H to fix the support of M
/// and all lambda on that support to be one; used for unit objects.
inline EqObject trivial_structure(const ActionData& act, const Subgroup& H, const Obj& o) {
  EqObject M{H, o, {}};
  for (int g : H.elements()) {
    require(act.act_obj(g, o) == o, "trivial structure on an object that is not stable");
    M.mu.push_back(identity_mor(act.field(), o));
  }
  EQCAT_DEBUG_CHECK_OBJECT(act, M, "trivial_structure");
  return M;
}

/// Structure maps on the generators of H extended to all of H through
/// mu^{gs} = mu^g T^g(mu^s) (T_2^{g,s})^{-1}; the result is validated for all pairs.
inline EqObject eq_from_generators(const ActionData& act, const Subgroup& H, const Obj& o,
                                   const std::map<int, Mor>& gen_mu) {
  const Group& G = act.group();
  std::vector<std::optional<Mor>> mu(H.order());
  mu[0] = identity_mor(act.field(), o);
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int g = queue[q];
    for (const auto& [s, ms] : gen_mu) {
      require(H.contains(s), "generator outside the subgroup");
      int gs = G.mul(g, s);
      int k = H.position(gs);
      if (mu[k]) continue;
      mu[k] = compose(compose(*mu[H.position(g)], act.act_mor(g, ms)), act.t2_inv(g, s, o));
      queue.push_back(gs);
    }
  }
  EqObject M{H, o, {}};
  for (auto& m : mu) {
    if (!m) throw InputError("generators do not generate the subgroup");
    M.mu.push_back(std::move(*m));
  }
  auto rep = check_eq_object(act, M);
  if (!rep.ok()) throw InputError("generator data does not define an equivariant object: " + rep.first_failure()->message);
  return M;
}

/// Block-diagonal sum of morphisms (per simple).
inline Mor mor_direct_sum(const std::vector<Mor>& fs) {
  require(!fs.empty(), "direct sum of no morphisms");
  const std::size_t n = fs.front().src.n();
  const PrimeField f = fs.front().blocks.at(0).field();
  Obj src{std::vector<std::size_t>(n, 0)}, tgt{std::vector<std::size_t>(n, 0)};
  for (const auto& a : fs) {
    src = obj_sum(src, a.src);
    tgt = obj_sum(tgt, a.tgt);
  }
  Mor r = zero_mor(f, src, tgt);
  std::vector<std::size_t> ro(n, 0), co(n, 0);
  for (const auto& a : fs)
    for (std::size_t j = 0; j < n; ++j) {
      r.blocks[j].set_block(ro[j], co[j], a.blocks[j]);
      ro[j] += a.tgt.m[j];
      co[j] += a.src.m[j];
    }
  return r;
}

struct DirectSum {
  EqObject sum;
  std::vector<EqMorphism> inj;   // summand -> sum
  std::vector<EqMorphism> proj;  // sum -> summand
};

inline DirectSum direct_sum(const ActionData& act, const std::vector<EqObject>& parts) {
  require(!parts.empty(), "direct sum of no objects");
  const Subgroup& H = parts.front().H;
  for (const auto& p : parts) require(p.H == H, "direct sum across different subgroups");
  const PrimeField& f = act.field();
  DirectSum out;
  out.sum.H = H;
  out.sum.obj = Obj{std::vector<std::size_t>(act.n(), 0)};
  for (const auto& p : parts) out.sum.obj = obj_sum(out.sum.obj, p.obj);
  for (int k = 0; k < H.order(); ++k) {
    std::vector<Mor> ms;
    for (const auto& p : parts) ms.push_back(p.mu[k]);
    out.sum.mu.push_back(mor_direct_sum(ms));
  }
  std::vector<std::size_t> off(act.n(), 0);
  for (const auto& p : parts) {
    Mor in = zero_mor(f, p.obj, out.sum.obj), pr = zero_mor(f, out.sum.obj, p.obj);
    for (std::size_t j = 0; j < act.n(); ++j) {
      in.blocks[j].set_block(off[j], 0, Matrix::identity(f, p.obj.m[j]));
      pr.blocks[j].set_block(0, off[j], Matrix::identity(f, p.obj.m[j]));
      off[j] += p.obj.m[j];
    }
    out.inj.push_back({p, out.sum, std::move(in)});
    out.proj.push_back({out.sum, p, std::move(pr)});
  }
  EQCAT_DEBUG_CHECK_OBJECT(act, out.sum, "direct_sum");
  return out;
}

/// The underlying morphism of a direct sum of equivariant morphisms.
inline EqMorphism eq_direct_sum(const ActionData& act, const std::vector<EqMorphism>& fs) {
  std::vector<EqObject> srcs, tgts;
  std::vector<Mor> ms;
  for (const auto& a : fs) {
    srcs.push_back(a.src);
    tgts.push_back(a.tgt);
    ms.push_back(a.f);
  }
  return {direct_sum(act, srcs).sum, direct_sum(act, tgts).sum, mor_direct_sum(ms)};
}

// ---- Hom spaces -----------------------------------------------------------

/// Basis of Hom(M, N) in the equivariant category. On each orbit of simples a morphism is
/// determined by its block at the orbit's first label j0, which must commute with the
/// structure maps of the stabilizer of j0; the other blocks are nu^h X (mu^h)^-1.
inline std::vector<EqMorphism> hom_basis(const ActionData& act, const EqObject& M, const EqObject& N) {
  require(M.H == N.H, "hom_basis across different subgroups");
  const PrimeField& f = act.field();
  const Group& G = act.group();
  const std::size_t n = act.n();
  std::vector<EqMorphism> out;
  std::vector<int> reached(n, -1);  // element of H carrying j0 to j
  for (std::size_t j0 = 0; j0 < n; ++j0) {
    if (reached[j0] >= 0) continue;
    std::vector<int> stab;
    std::vector<std::size_t> orbit;
    for (int h : M.H.elements()) {
      const std::size_t j = act.sigma(h, j0);
      if (j == j0) stab.push_back(h);
      if (reached[j] < 0) {
        reached[j] = h;
        orbit.push_back(j);
      }
    }
    const std::size_t rows = N.obj.m[j0], cols = M.obj.m[j0];
    if (rows * cols == 0) continue;
    auto gens = generators(G, Subgroup(G.order(), stab));
    Matrix A(f, gens.size() * rows * cols, rows * cols);
    std::size_t row = 0;
    for (int g : gens) {
      const Matrix& nu = N.mu_of(g).blocks[j0];
      const Matrix& mu = M.mu_of(g).blocks[j0];
      // (nu X - X mu)(r, c) with X(s, t) at column s * cols + t
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c, ++row) {
          for (std::size_t s = 0; s < rows; ++s)
            if (nu(r, s)) A(row, s * cols + c) = f.add(A(row, s * cols + c), nu(r, s));
          for (std::size_t t = 0; t < cols; ++t)
            if (mu(t, c)) A(row, r * cols + t) = f.sub(A(row, r * cols + t), mu(t, c));
        }
    }
    std::vector<Matrix> spread(n);
    for (std::size_t j : orbit)
      if (j != j0) {
        auto inv = inverse(M.mu_of(reached[j]).blocks[j]);
        require(inv.has_value(), "hom_basis: structure map is not invertible");
        spread[j] = *inv;
      }
    for (const auto& v : nullspace(A)) {
      Matrix X(f, rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) X(r, c) = v(r * cols + c, 0);
      Mor m = zero_mor(f, M.obj, N.obj);
      for (std::size_t j : orbit) m.blocks[j] = j == j0 ? X : N.mu_of(reached[j]).blocks[j] * X * spread[j];
      out.push_back({M, N, std::move(m)});
    }
  }
  return out;
}

inline std::size_t hom_dim(const ActionData& act, const EqObject& M, const EqObject& N) {
  return hom_basis(act, M, N).size();
}

/// Random linear combination of a list of morphisms sharing one shape.
inline Mor random_combination(PrimeField f, const std::vector<Mor>& basis, Rng& rng) {
  require(!basis.empty(), "random combination of an empty basis");
  Mor r = zero_mor(f, basis.front().src, basis.front().tgt);
  for (const auto& b : basis) r = mor_add(r, mor_scale(b, f.random(rng)));
  return r;
}

struct IsoResult {
  bool iso = false;
  bool certified = false;          // true for every "yes" and for dimension-based "no"
  std::optional<EqMorphism> witness;
  std::string reason;
};

/// Isomorphism test. "Yes" comes with a verified invertible witness. "No" is certified
/// when multiplicities differ or when dim Hom(M,N), dim End(M), dim End(N) are not all
/// equal (this characterizes isomorphism for semisimple categories). If the dimensions
/// agree but no invertible combination turns up in `trials` draws, the answer is an
/// uncertified "no" with error at most (D/p)^trials, D the total dimension.
inline IsoResult is_iso(const ActionData& act, const EqObject& M, const EqObject& N, Rng& rng, int trials = 20) {
  IsoResult r;
  if (!(M.H == N.H)) {
    r.certified = true;
    r.reason = "different subgroups";
    return r;
  }
  if (!(M.obj == N.obj)) {
    r.certified = true;
    r.reason = "different multiplicity vectors";
    return r;
  }
  if (M.obj.total() == 0) {
    r.iso = r.certified = true;
    r.witness = EqMorphism{M, N, identity_mor(act.field(), M.obj)};
    r.reason = "zero objects";
    return r;
  }
  auto basis = hom_basis(act, M, N);
  std::size_t dmm = hom_dim(act, M, M), dnn = hom_dim(act, N, N);
  if (basis.size() != dmm || basis.size() != dnn) {
    r.certified = true;
    r.reason = "dim Hom(M,N)=" + std::to_string(basis.size()) + ", dim End(M)=" + std::to_string(dmm) +
               ", dim End(N)=" + std::to_string(dnn);
    return r;
  }
  std::vector<Mor> fs;
  for (const auto& b : basis) fs.push_back(b.f);
  for (int t = 0; t < trials; ++t) {
    Mor c = random_combination(act.field(), fs, rng);
    if (mor_inverse(c)) {
      EqMorphism w{M, N, std::move(c)};
      if (is_eq_morphism(act, w)) {
        r.iso = r.certified = true;
        r.witness = std::move(w);
        r.reason = "invertible witness found";
        return r;
      }
    }
  }
  r.reason = "no invertible combination found in " + std::to_string(trials) + " trials";
  return r;
}

inline json to_json(const EqObject& M) {
  json mu = json::array();
  for (std::size_t k = 0; k < M.mu.size(); ++k) mu.push_back({{"g", M.H[k]}, {"mu", to_json(M.mu[k])}});
  return {{"subgroup", M.H.elements()}, {"object", to_json(M.obj)}, {"structure", mu}};
}

}  // namespace eqcat
