#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "eqcat/green.hpp"
#include "fixtures.hpp"

namespace eqcat::testing {

using Character = std::vector<PrimeField::Elem>;  // values on H.elements()

inline Character character(const ActionData& act, const EqObject& S) {
  Character chi;
  for (std::size_t k = 0; k < S.H.elements().size(); ++k) {
    const Matrix& m = S.mu[k].blocks[0];
    PrimeField::Elem t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t = act.field().add(t, m(i, i));
    chi.push_back(t);
  }
  return chi;
}

// Irreducible characters of subgroups of S3 over F_p with 3 | p - 1: homomorphisms to F_p^x for the
// abelian ones, and trivial / sign / (permutation - trivial) for S3 itself.
inline std::vector<Character> classical_irreducibles(const PrimeField& f, const Group& G, const Subgroup& H) {
  const auto& el = H.elements();
  std::vector<Character> out;
  if (H.order() == 6) {
    Character triv, sign, two;
    for (int g : el) {
      const auto& p = G.permutations()[g];
      int fixed = 0, inversions = 0;
      for (int i = 0; i < 3; ++i) {
        fixed += p[i] == i;
        for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
      }
      triv.push_back(1);
      sign.push_back(inversions % 2 ? f.p() - 1 : 1);
      two.push_back(f.reduce(fixed - 1));
    }
    return {triv, sign, two};
  }
  Character chi(el.size(), 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == el.size()) {
      for (std::size_t a = 0; a < el.size(); ++a)
        for (std::size_t b = 0; b < el.size(); ++b)
          if (chi[H.position(G.mul(el[a], el[b]))] != f.mul(chi[a], chi[b])) return;
      out.push_back(chi);
      return;
    }
    for (PrimeField::Elem v = 1; v < f.p(); ++v) {
      chi[i] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

inline std::int64_t inner(const PrimeField& f, const Group& G, const Subgroup& H, const Character& a, const Character& b) {
  PrimeField::Elem s = 0;
  for (int h : H.elements()) s = f.add(s, f.mul(a[H.position(h)], b[H.position(G.inv(h))]));
  return f.div(s, static_cast<PrimeField::Elem>(H.order()));
}

inline Character restrict_char(const Subgroup& H, const Subgroup& K, const Character& chi) {
  Character out;
  for (int k : K.elements()) out.push_back(chi[H.position(k)]);
  return out;
}

inline Character induce_char(const PrimeField& f, const Group& G, const Subgroup& K, const Subgroup& H, const Character& chi) {
  Character out;
  for (int g : H.elements()) {
    PrimeField::Elem s = 0;
    for (int x : H.elements()) {
      int y = G.mul(G.mul(x, g), G.inv(x));
      if (K.contains(y)) s = f.add(s, chi[K.position(y)]);
    }
    out.push_back(f.div(s, static_cast<PrimeField::Elem>(K.order())));
  }
  return out;
}

inline int index_of_char(const std::vector<Character>& chars, const Character& c) {
  auto it = std::find(chars.begin(), chars.end(), c);
  return it == chars.end() ? -1 : static_cast<int>(it - chars.begin());
}

/// Fusion constants of S[a] (x) S[b] by counting morphisms from each simple into the product.
inline K0Vector brute_force_fusion(const PointedData& P, const std::vector<SimpleObject>& S, std::size_t a,
                                   std::size_t b) {
  EqObject ab = tensor_eq(P, S[a].obj, S[b].obj);
  K0Vector v;
  for (const auto& s : S) v.push_back(static_cast<std::int64_t>(brute_force_hom_dim(P.action(), s.obj, ab) / s.end_dim));
  return v;
}

}  // namespace eqcat::testing
