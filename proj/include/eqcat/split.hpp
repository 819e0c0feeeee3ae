#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "eqcat/functors.hpp"
#include "eqcat/poly.hpp"

namespace eqcat {

/// Subalgebra of square matrices given by a basis; `unit` is its identity element.
struct MatAlgebra {
  PrimeField field;
  std::size_t size = 0;
  std::vector<Matrix> basis;
  Matrix unit;

  std::size_t dim() const { return basis.size(); }
};

/// Independent subfamily spanning the same space, in input order.
inline std::vector<Matrix> independent_subset(const PrimeField& f, std::size_t size, const std::vector<Matrix>& mats) {
  SpanBuilder span(f, size * size);
  std::vector<Matrix> out;
  for (const auto& m : mats)
    if (span.add(m.flatten())) out.push_back(m);
  return out;
}

/// Corner e A e of A, for an idempotent e of A.
inline MatAlgebra corner(const MatAlgebra& A, const Matrix& e) {
  std::vector<Matrix> mats;
  for (const auto& b : A.basis) mats.push_back(e * b * e);
  return {A.field, A.size, independent_subset(A.field, A.size, mats), e};
}

/// Throws SplitError unless the span of the basis is closed under products and contains the unit.
inline void check_algebra(const MatAlgebra& A) {
  SpanBuilder span(A.field, A.size * A.size);
  for (const auto& b : A.basis)
    if (!span.add(b.flatten())) throw SplitError("algebra basis is linearly dependent");
  if (!span.contains(A.unit.flatten())) throw SplitError("algebra does not contain its unit");
  for (const auto& a : A.basis)
    for (const auto& b : A.basis)
      if (!span.contains((a * b).flatten())) throw SplitError("algebra is not closed under multiplication");
}

inline Matrix random_element(const MatAlgebra& A, Rng& rng) {
  Matrix x(A.field, A.size, A.size);
  for (const auto& b : A.basis) x = x + b.scaled(A.field.random(rng));
  return x;
}

/// Basis of {z in A : z b = b z for all basis elements b}.
inline MatAlgebra center(const MatAlgebra& A) {
  const PrimeField& f = A.field;
  const std::size_t d = A.dim(), s2 = A.size * A.size;
  Matrix sys(f, d * s2, d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t k = 0; k < d; ++k) {
      Matrix c = A.basis[k] * A.basis[l] + (A.basis[l] * A.basis[k]).scaled(f.neg(1));
      auto v = c.flatten();
      for (std::size_t r = 0; r < s2; ++r) sys(l * s2 + r, k) = v[r];
    }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(sys)) {
    Matrix z(f, A.size, A.size);
    for (std::size_t k = 0; k < d; ++k) z = z + A.basis[k].scaled(v(k, 0));
    basis.push_back(std::move(z));
  }
  return {f, A.size, std::move(basis), A.unit};
}

inline bool is_commutative(const MatAlgebra& A) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j)
      if (!(A.basis[i] * A.basis[j] == A.basis[j] * A.basis[i])) return false;
  return true;
}

/// Idempotents of A from a factorization of the minimal polynomial of x (relative to A.unit):
/// one per distinct irreducible factor, via the Chinese remainder theorem.
inline std::vector<Matrix> crt_idempotents(const Matrix& x, const Matrix& unit, const Poly& mp,
                                           const std::vector<Factor>& factors) {
  std::vector<Matrix> out;
  for (const auto& fa : factors) {
    Poly q = Poly::constant(mp.field(), 1);
    for (int k = 0; k < fa.mult; ++k) q = q * fa.poly;
    Poly g = mp / q;
    Poly u = (g * inverse_mod(g % q, q)) % mp;
    out.push_back(evaluate_with_unit(u, x, unit));
  }
  return out;
}

struct Idempotent {
  Matrix e;
  std::size_t degree;  // dimension of the corner e C e, a field
};

/// Primitive idempotents of a commutative semisimple algebra, by recursive splitting along
/// minimal polynomials of random elements. Throws SplitError on a repeated factor (a nilpotent
/// element, so the algebra is not semisimple) or when the retry budget runs out.
inline std::vector<Idempotent> primitive_idempotents(const MatAlgebra& C, Rng& rng, int budget = 64) {
  std::vector<Idempotent> out;
  std::vector<MatAlgebra> todo{C};
  while (!todo.empty()) {
    MatAlgebra A = std::move(todo.back());
    todo.pop_back();
    if (A.dim() == 1) {
      out.push_back({A.unit, 1});
      continue;
    }
    bool done = false;
    for (int attempt = 0; attempt < budget && !done; ++attempt) {
      Matrix x = random_element(A, rng);
      Poly mp = min_poly(x, A.unit);
      Rng frng(rng());
      auto factors = factor(mp, frng);
      for (const auto& fa : factors)
        if (fa.mult > 1) throw SplitError("commutative algebra has a nilpotent element; it is not semisimple");
      if (factors.size() == 1) {
        if (static_cast<std::size_t>(mp.degree()) == A.dim()) {
          out.push_back({A.unit, A.dim()});
          done = true;
        }
        continue;
      }
      auto es = crt_idempotents(x, A.unit, mp, factors);
      for (auto it = es.rbegin(); it != es.rend(); ++it) todo.push_back(corner(A, *it));
      done = true;
    }
    if (!done) throw SplitError("primitive_idempotents: retry budget exhausted");
  }
  return out;
}

/// A primitive idempotent of the simple algebra e A e whose center has dimension `degree`:
/// split off smaller corners until the corner is a field of that dimension.
inline Matrix primitive_in_block(const MatAlgebra& A, const Matrix& e, std::size_t degree, Rng& rng,
                                 int budget = 256) {
  MatAlgebra B = corner(A, e);
  int attempts = 0;
  while (B.dim() > degree) {
    if (++attempts > budget) throw SplitError("primitive_in_block: retry budget exhausted");
    Matrix x = random_element(B, rng);
    Poly mp = min_poly(x, B.unit);
    Rng frng(rng());
    auto factors = factor(mp, frng);
    if (factors.size() < 2) continue;
    auto es = crt_idempotents(x, B.unit, mp, factors);
    auto smallest = std::min_element(es.begin(), es.end(),
                                     [](const Matrix& a, const Matrix& b) { return rank(a) < rank(b); });
    B = corner(B, *smallest);
  }
  return B.unit;
}

// ---- equivariant objects ------------------------------------------------------------

/// Block-diagonal matrix of a morphism (blocks in label order).
inline Matrix block_diagonal(const Mor& m) {
  std::size_t r = 0, c = 0;
  for (const auto& b : m.blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix out(m.blocks.at(0).field(), r, c);
  r = c = 0;
  for (const auto& b : m.blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

inline Mor from_block_diagonal(const Matrix& x, const Obj& src, const Obj& tgt) {
  Mor out{src, tgt, {}};
  std::size_t r = 0, c = 0;
  for (std::size_t j = 0; j < src.n(); ++j) {
    out.blocks.push_back(x.block(r, c, tgt.m[j], src.m[j]));
    r += tgt.m[j];
    c += src.m[j];
  }
  return out;
}

/// End(M) as a matrix algebra of block-diagonal matrices.
inline MatAlgebra end_algebra(const ActionData& act, const EqObject& M) {
  std::vector<Matrix> basis;
  for (const auto& b : hom_basis(act, M, M)) basis.push_back(block_diagonal(b.f));
  return {act.field(), M.obj.total(), std::move(basis), block_diagonal(identity_mor(act.field(), M.obj))};
}

struct Image {
  EqObject obj;
  EqMorphism incl;  // image -> M
  EqMorphism proj;  // M -> image
};

/// Image of an idempotent endomorphism e of M with the induced structure maps.
inline Image idempotent_image(const ActionData& act, const EqObject& M, const Mor& e) {
  const PrimeField& f = act.field();
  const std::size_t n = act.n();
  std::vector<Matrix> B(n), P(n);
  Obj S{std::vector<std::size_t>(n, 0)};
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix& ej = e.blocks[j];
    auto piv = row_reduce(ej).pivots;
    B[j] = Matrix(f, ej.rows(), piv.size());
    for (std::size_t c = 0; c < piv.size(); ++c)
      for (std::size_t r = 0; r < ej.rows(); ++r) B[j](r, c) = ej(r, piv[c]);
    auto sol = solve(B[j], ej);
    require(sol.consistent, "idempotent_image: image basis does not span the image");
    P[j] = sol.particular;
    S.m[j] = piv.size();
  }
  Mor incl{S, M.obj, B}, proj{M.obj, S, P};
  EqObject out{M.H, S, {}};
  for (int g : M.H.elements()) {
    Mor mu{act.act_obj(g, S), S, {}};
    const Mor& m = M.mu_of(g);
    for (std::size_t j = 0; j < n; ++j) mu.blocks.push_back(P[j] * m.blocks[j] * B[act.sigma_inv(g, j)]);
    out.mu.push_back(std::move(mu));
  }
  EQCAT_DEBUG_CHECK_OBJECT(act, out, "idempotent_image");
  return {out, {out, M, incl}, {M, out, proj}};
}

/// The simple label i with identity structure over the trivial subgroup.
inline EqObject point_object(const ActionData& act, std::size_t i) {
  Obj o = simple_obj(act.n(), i);
  return EqObject{trivial_subgroup(act.group()), o, {identity_mor(act.field(), o)}};
}

struct SimpleObject {
  EqObject obj;
  std::size_t end_dim;  // degree of the residue field End(S)
};

struct SimplesResult {
  std::vector<SimpleObject> simples;
  CheckReport certificate;
};

/// One representative per isomorphism class of simple objects of C^H, extracted from the
/// isotypic blocks of End(Ind_1^H X_i), sorted by (total dimension, discovery order).
inline SimplesResult simples_of(const ActionData& act, const Subgroup& H, Rng& rng) {
  SimplesResult out;
  std::vector<SimpleObject>& found = out.simples;
  std::vector<EqObject> gens;
  std::vector<bool> seen(act.n(), false);
  for (std::size_t i = 0; i < act.n(); ++i) {
    if (seen[i]) continue;
    for (int h : H.elements()) seen[act.sigma(h, i)] = true;
    EqObject A = ind(act, H, point_object(act, i));
    gens.push_back(A);
    MatAlgebra E = end_algebra(act, A);
    MatAlgebra Z = center(E);
    for (const auto& c : primitive_idempotents(Z, rng)) {
      Matrix e = primitive_in_block(E, c.e, c.degree, rng);
      Image im = idempotent_image(act, A, from_block_diagonal(e, A.obj, A.obj));
      bool known = false;
      for (const auto& s : found)
        if (hom_dim(act, s.obj, im.obj) > 0) known = true;
      if (!known) found.push_back({im.obj, c.degree});
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const SimpleObject& a, const SimpleObject& b) {
    return a.obj.obj.total() < b.obj.obj.total();
  });
  // certificate: Schur orthogonality and dim End(A) = sum m_S^2 d_S for every generator
  CheckReport& rep = out.certificate;
  for (std::size_t a = 0; a < found.size(); ++a)
    for (std::size_t b = 0; b < found.size(); ++b) {
      std::size_t d = hom_dim(act, found[a].obj, found[b].obj);
      std::size_t want = a == b ? found[a].end_dim : 0;
      std::string id = "schur:" + std::to_string(a) + "," + std::to_string(b);
      if (d == want)
        rep.pass(id);
      else
        rep.fail(id, "Hom dimension between listed simples is wrong", {{"dim", d}, {"expected", want}});
    }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::size_t total = 0;
    for (const auto& s : found) {
      std::size_t h = hom_dim(act, s.obj, gens[g]);
      std::size_t m = h / s.end_dim;
      total += m * m * s.end_dim;
    }
    std::size_t end = hom_dim(act, gens[g], gens[g]);
    std::string id = "completeness:generator=" + std::to_string(g);
    if (end == total)
      rep.pass(id);
    else
      rep.fail(id, "End dimension of a generator is not accounted for by the listed simples",
               {{"end_dim", end}, {"weighted_sum", total}});
  }
  return out;
}

}  // namespace eqcat
