#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "eqcat/split.hpp"

namespace eqcat {

/// Finite-dimensional unital algebra by structure constants: e_i e_j = sum_k mult[i][j][k] e_k.
struct Algebra {
  PrimeField field;
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<PrimeField::Elem>>> mult;
  std::vector<PrimeField::Elem> unit;

  std::vector<PrimeField::Elem> product(const std::vector<PrimeField::Elem>& x,
                                        const std::vector<PrimeField::Elem>& y) const {
    std::vector<PrimeField::Elem> out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (y[j] == 0) continue;
        const auto c = field.mul(x[i], y[j]);
        for (std::size_t k = 0; k < dim; ++k) out[k] = field.add(out[k], field.mul(c, mult[i][j][k]));
      }
    }
    return out;
  }

  /// Matrix of left multiplication by e_i in the basis e_j.
  Matrix left(std::size_t i) const {
    Matrix m(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) m(k, j) = mult[i][j][k];
    return m;
  }
};

inline std::vector<PrimeField::Elem> basis_coords(std::size_t dim, std::size_t i) {
  std::vector<PrimeField::Elem> v(dim, 0);
  v[i] = 1;
  return v;
}

/// Shape, associativity and two-sided unit checks.
inline CheckReport validate_algebra(const Algebra& A) {
  CheckReport rep;
  bool shape = A.unit.size() == A.dim && A.mult.size() == A.dim;
  for (const auto& row : A.mult) {
    shape = shape && row.size() == A.dim;
    for (const auto& v : row) shape = shape && v.size() == A.dim;
  }
  if (!shape) {
    rep.fail("algebra-shape", "structure constants or unit have the wrong size", {{"dim", A.dim}});
    return rep;
  }
  rep.pass("algebra-shape");
  for (std::size_t i = 0; i < A.dim; ++i) {
    auto ei = basis_coords(A.dim, i);
    if (A.product(A.unit, ei) != ei || A.product(ei, A.unit) != ei) {
      rep.fail("algebra-unit:i=" + std::to_string(i), "unit is not two-sided on a basis element");
      return rep;
    }
  }
  rep.pass("algebra-unit");
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j)
      for (std::size_t k = 0; k < A.dim; ++k) {
        auto ei = basis_coords(A.dim, i), ej = basis_coords(A.dim, j), ek = basis_coords(A.dim, k);
        if (A.product(A.product(ei, ej), ek) != A.product(ei, A.product(ej, ek))) {
          rep.fail("algebra-assoc:i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" + std::to_string(k),
                   "product is not associative on these basis elements");
          return rep;
        }
      }
  rep.pass("algebra-assoc");
  return rep;
}

/// Algebra with a group acting by automorphisms; column j of action[g] holds g·e_j.
struct GAlgebra {
  Algebra S;
  Group G;
  std::vector<Matrix> action;
  /// Set for F_p^d with G permuting the coordinate idempotents: g·e_i = e_{perm[g][i]}.
  std::optional<std::vector<std::vector<int>>> permutation;
};

inline std::vector<PrimeField::Elem> mat_vec(const Matrix& m, const std::vector<PrimeField::Elem>& v) {
  std::vector<PrimeField::Elem> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] = m.field().add(out[r], m.field().mul(m(r, c), v[c]));
  return out;
}

inline CheckReport validate_galgebra(const GAlgebra& A) {
  CheckReport rep = validate_algebra(A.S);
  if (!rep.ok()) return rep;
  const Group& G = A.G;
  const std::size_t d = A.S.dim;
  if (A.action.size() != static_cast<std::size_t>(G.order())) {
    rep.fail("action-shape", "one automorphism matrix per group element is required");
    return rep;
  }
  for (const auto& m : A.action)
    if (m.rows() != d || m.cols() != d) {
      rep.fail("action-shape", "automorphism matrix has the wrong size");
      return rep;
    }
  rep.pass("action-shape");
  for (int g = 0; g < G.order(); ++g) {
    const std::string gs = std::to_string(g);
    if (mat_vec(A.action[g], A.S.unit) != A.S.unit) rep.fail("action-unit:g=" + gs, "automorphism does not fix the unit");
    bool mult = true;
    for (std::size_t i = 0; i < d && mult; ++i)
      for (std::size_t j = 0; j < d && mult; ++j) {
        auto ei = basis_coords(d, i), ej = basis_coords(d, j);
        mult = mat_vec(A.action[g], A.S.product(ei, ej)) ==
               A.S.product(mat_vec(A.action[g], ei), mat_vec(A.action[g], ej));
      }
    if (!mult) rep.fail("action-mult:g=" + gs, "automorphism is not multiplicative");
    for (int h = 0; h < G.order(); ++h)
      if (!(A.action[G.mul(g, h)] == A.action[g] * A.action[h]))
        rep.fail("action-law:g=" + gs + ",h=" + std::to_string(h), "action does not respect the group law");
  }
  if (!A.action[0].is_identity()) rep.fail("action-identity", "the identity element does not act trivially");
  if (rep.ok()) rep.pass("action");
  return rep;
}

/// F_p^d with G permuting coordinates.
inline GAlgebra permutation_galgebra(const PrimeField& f, const Group& G, const std::vector<std::vector<int>>& perm) {
  require(perm.size() == static_cast<std::size_t>(G.order()), "permutation_galgebra: one permutation per element");
  const std::size_t d = perm.empty() ? 0 : perm[0].size();
  GAlgebra A;
  A.S.field = f;
  A.S.dim = d;
  A.S.mult.assign(d, std::vector<std::vector<PrimeField::Elem>>(d, std::vector<PrimeField::Elem>(d, 0)));
  for (std::size_t i = 0; i < d; ++i) A.S.mult[i][i][i] = 1;
  A.S.unit.assign(d, 1);
  A.G = G;
  for (const auto& p : perm) {
    if (p.size() != d) throw InputError("permutation has the wrong length");
    Matrix m(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (p[i] < 0 || static_cast<std::size_t>(p[i]) >= d) throw InputError("permutation entry out of range");
      m(p[i], i) = 1;
    }
    A.action.push_back(m);
  }
  A.permutation = perm;
  return A;
}

/// S # F_p[H] with basis s_i # h (index i*|H| + position of h) and
/// (s # h)(s' # h') = s (h·s') # hh'.
inline Algebra smash_product(const GAlgebra& S, const Subgroup& H) {
  if (!validate_galgebra(S).ok()) throw InputError("smash_product: invalid algebra with group action");
  const PrimeField& f = S.S.field;
  const std::size_t d = S.S.dim, m = static_cast<std::size_t>(H.order());
  const auto& el = H.elements();
  Algebra A;
  A.field = f;
  A.dim = d * m;
  A.mult.assign(A.dim, std::vector<std::vector<PrimeField::Elem>>(A.dim, std::vector<PrimeField::Elem>(A.dim, 0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t j = 0; j < d; ++j) {
        auto s = S.S.product(basis_coords(d, i), mat_vec(S.action[el[a]], basis_coords(d, j)));
        for (std::size_t b = 0; b < m; ++b) {
          const std::size_t hb = static_cast<std::size_t>(H.position(S.G.mul(el[a], el[b])));
          for (std::size_t k = 0; k < d; ++k) A.mult[i * m + a][j * m + b][k * m + hb] = s[k];
        }
      }
  A.unit.assign(A.dim, 0);
  for (std::size_t i = 0; i < d; ++i) A.unit[i * m + static_cast<std::size_t>(H.position(0))] = S.S.unit[i];
  auto rep = validate_algebra(A);
  if (!rep.ok()) throw Error("smash_product: assembled algebra failed " + rep.first_failure()->id);
  return A;
}

struct Block {
  std::size_t size;    // matrix size over the residue field
  std::size_t degree;  // residue field degree over F_p
};

/// Wedderburn blocks of a semisimple algebra through its left regular representation.
inline std::vector<Block> block_structure(const Algebra& A, Rng& rng) {
  MatAlgebra M{A.field, A.dim, {}, Matrix::identity(A.field, A.dim)};
  for (std::size_t i = 0; i < A.dim; ++i) M.basis.push_back(A.left(i));
  M.basis = independent_subset(A.field, A.dim, M.basis);
  std::vector<Block> out;
  std::size_t total = 0;
  for (const auto& c : primitive_idempotents(center(M), rng)) {
    const std::size_t bdim = corner(M, c.e).dim();
    const auto size = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(bdim / c.degree))));
    if (size * size * c.degree != bdim) throw SplitError("block dimension is not size^2 times degree");
    out.push_back({size, c.degree});
    total += bdim;
  }
  if (total != A.dim) throw SplitError("blocks do not exhaust the algebra; it is not semisimple");
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return std::pair(a.size, a.degree) < std::pair(b.size, b.degree); });
  return out;
}

/// The action on the permuted simples matching a permutation algebra: sigma = the permutation,
/// lambda = 1.
inline ActionData abstract_model(const GAlgebra& S) {
  require(S.permutation.has_value(), "abstract_model: only permutation algebras have an abstract model");
  const int order = S.G.order();
  const std::size_t d = S.S.dim;
  std::vector<std::vector<std::vector<PrimeField::Elem>>> lambda(
      order, std::vector<std::vector<PrimeField::Elem>>(order, std::vector<PrimeField::Elem>(d, 1)));
  return ActionData(S.S.field, S.G, d, *S.permutation, std::move(lambda));
}

/// Block data of S # F_p[H] against the simples of the abstract model over H: block count,
/// residue degrees, and module dimensions (size times degree) against underlying dimensions.
inline CheckReport compare_with_abstract(const GAlgebra& S, const Subgroup& H, Rng& rng) {
  if (!S.permutation) throw InputError("compare_with_abstract: the algebra is not a permutation product of fields");
  CheckReport rep;
  std::string ctx = "|H|=" + std::to_string(H.order()) + ",H=[";
  for (int g : H.elements()) ctx += (ctx.back() == '[' ? "" : ",") + std::to_string(g);
  ctx += "]";
  Algebra A = smash_product(S, H);
  if (A.dim == S.S.dim * static_cast<std::size_t>(H.order()))
    rep.pass("smash-dim:" + ctx);
  else
    rep.fail("smash-dim:" + ctx, "smash product has the wrong dimension");
  auto blocks = block_structure(A, rng);
  ActionData act = abstract_model(S);
  auto simples = simples_of(act, H, rng);
  rep.merge(simples.certificate, "abstract:");
  std::vector<std::size_t> deg_a, deg_b, mod_a, mod_b;
  for (const auto& b : blocks) {
    deg_a.push_back(b.degree);
    mod_a.push_back(b.size * b.degree);
  }
  for (const auto& s : simples.simples) {
    deg_b.push_back(s.end_dim);
    mod_b.push_back(s.obj.obj.total());
  }
  for (auto* v : {&deg_a, &deg_b, &mod_a, &mod_b}) std::sort(v->begin(), v->end());
  json w = {{"blocks", blocks.size()}, {"simples", simples.simples.size()}};
  if (blocks.size() == simples.simples.size())
    rep.pass("smash-count:" + ctx);
  else
    rep.fail("smash-count:" + ctx, "block count differs from the number of simples", w);
  if (deg_a == deg_b)
    rep.pass("smash-degrees:" + ctx);
  else
    rep.fail("smash-degrees:" + ctx, "residue degrees differ", {{"blocks", deg_a}, {"simples", deg_b}});
  if (mod_a == mod_b)
    rep.pass("smash-module-dims:" + ctx);
  else
    rep.fail("smash-module-dims:" + ctx, "simple module dimensions differ from underlying dimensions",
             {{"blocks", mod_a}, {"simples", mod_b}});
  return rep;
}

}  // namespace eqcat
