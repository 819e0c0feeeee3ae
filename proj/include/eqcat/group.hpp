#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eqcat/error.hpp"

namespace eqcat {

/// Finite group given by its multiplication table. Element 0 is the identity.
class Group {
 public:
  Group() = default;

  /// Validates associativity, identity and inverses. Row a, column b holds a*b.
  static Group from_table(std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw InputError("group table is empty");
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n) throw InputError("group table is not square");
      for (int v : row)
        if (v < 0 || v >= n) throw InputError("group table entry out of range");
    }
    for (int a = 0; a < n; ++a)
      if (table[0][a] != a || table[a][0] != a) throw InputError("element 0 is not the identity");
    Group g;
    g.n_ = n;
    g.mul_ = std::move(table);
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (g.mul_[a][b] == 0 && g.mul_[b][a] == 0) g.inv_[a] = b;
    for (int a = 0; a < n; ++a)
      if (g.inv_[a] < 0) throw InputError("element " + std::to_string(a) + " has no inverse");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul_[g.mul_[a][b]][c] != g.mul_[a][g.mul_[b][c]])
            throw InputError("group table is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
    return g;
  }

  /// Closure of permutation generators (images of 0..d-1). Elements are numbered in
  /// breadth-first order from the identity, trying generators in the given order;
  /// the product is composition, (gh)(x) = g(h(x)).
  static Group from_permutations(const std::vector<std::vector<int>>& gens, std::size_t max_order = 5040) {
    std::size_t d = gens.empty() ? 0 : gens.front().size();
    for (const auto& p : gens) {
      if (p.size() != d) throw InputError("permutation generators of different degrees");
      std::vector<bool> seen(d, false);
      for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= d || seen[v]) throw InputError("generator is not a permutation");
        seen[v] = true;
      }
    }
    std::vector<int> id(d);
    for (std::size_t i = 0; i < d; ++i) id[i] = static_cast<int>(i);
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (const auto& s : gens) {
        std::vector<int> prod(d);
        for (std::size_t x = 0; x < d; ++x) prod[x] = s[elems[k][x]];
        if (index.emplace(prod, static_cast<int>(elems.size())).second) {
          elems.push_back(prod);
          if (elems.size() > max_order) throw InputError("permutation group exceeds the order bound");
        }
      }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<int> prod(d);
        for (std::size_t x = 0; x < d; ++x) prod[x] = elems[a][elems[b][x]];
        table[a][b] = index.at(prod);
      }
    Group g = from_table(std::move(table));
    g.perms_ = std::move(elems);
    return g;
  }

  static Group cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t));
  }

  /// Symmetric group on d points, generated by a transposition and a d-cycle.
  static Group symmetric(int d) {
    if (d <= 1) return cyclic(1);
    std::vector<int> t(d), c(d);
    for (int i = 0; i < d; ++i) t[i] = c[i] = i;
    std::swap(t[0], t[1]);
    for (int i = 0; i < d; ++i) c[i] = (i + 1) % d;
    return from_permutations({t, c});
  }

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  /// x a x^-1
  int conj(int x, int a) const { return mul_[mul_[x][a]][inv_[x]]; }
  int element_order(int a) const {
    int k = 1;
    for (int p = a; p != 0; p = mul_[p][a]) ++k;
    return k;
  }
  const std::vector<std::vector<int>>& table() const { return mul_; }
  /// Permutation images when the group was built from generators; empty otherwise.
  const std::vector<std::vector<int>>& permutations() const { return perms_; }

  friend bool operator==(const Group& a, const Group& b) { return a.mul_ == b.mul_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> perms_;
};

/// Subgroup as a sorted element list plus a position lookup.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(int group_order, std::vector<int> elems) : pos_(group_order, -1), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    for (std::size_t k = 0; k < elems_.size(); ++k) pos_.at(elems_[k]) = static_cast<int>(k);
  }

  int order() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elements() const { return elems_; }
  int operator[](std::size_t k) const { return elems_[k]; }
  bool contains(int g) const { return g >= 0 && g < static_cast<int>(pos_.size()) && pos_[g] >= 0; }
  /// Position of g in elements(); -1 if absent.
  int position(int g) const { return contains(g) ? pos_[g] : -1; }
  bool is_subgroup_of(const Subgroup& h) const {
    for (int g : elems_)
      if (!h.contains(g)) return false;
    return true;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems_ == b.elems_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elems_.size() != b.elems_.size()) return a.elems_.size() < b.elems_.size();
    return a.elems_ < b.elems_;
  }

 private:
  std::vector<int> pos_;
  std::vector<int> elems_;
};

inline Subgroup whole(const Group& g) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup(g.order(), all);
}

inline Subgroup trivial_subgroup(const Group& g) { return Subgroup(g.order(), {0}); }

/// Subgroup generated by the given elements.
inline Subgroup generate(const Group& g, const std::vector<int>& gens) {
  std::vector<int> elems{0};
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (int s : gens) {
      int p = g.mul(elems[k], s);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  return Subgroup(g.order(), std::move(elems));
}

inline bool is_closed_subgroup(const Group& g, const std::vector<int>& elems) {
  std::vector<bool> in(g.order(), false);
  for (int e : elems) in.at(e) = true;
  if (!in[0]) return false;
  for (int a : elems) {
    if (!in[g.inv(a)]) return false;
    for (int b : elems)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

/// x H x^-1
inline Subgroup conjugate(const Group& g, const Subgroup& h, int x) {
  std::vector<int> out;
  for (int a : h.elements()) out.push_back(g.conj(x, a));
  return Subgroup(g.order(), std::move(out));
}

inline Subgroup intersect(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  for (int e : a.elements())
    if (b.contains(e)) out.push_back(e);
  return Subgroup(g.order(), std::move(out));
}

/// A small generating set, chosen greedily in element order.
inline std::vector<int> generators(const Group& g, const Subgroup& h) {
  std::vector<int> gens;
  Subgroup span = trivial_subgroup(g);
  for (int e : h.elements()) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = generate(g, gens);
  }
  return gens;
}

/// Every subgroup of g, sorted by (order, element list).
inline std::vector<Subgroup> subgroups(const Group& g, int order_bound = 48) {
  if (g.order() > order_bound)
    throw InputError("group order " + std::to_string(g.order()) + " exceeds the subgroup enumeration bound");
  std::set<Subgroup> found{trivial_subgroup(g)};
  std::deque<Subgroup> queue{trivial_subgroup(g)};
  while (!queue.empty()) {
    Subgroup h = queue.front();
    queue.pop_front();
    for (int x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      std::vector<int> gens = h.elements();
      gens.push_back(x);
      Subgroup k = generate(g, gens);
      if (found.insert(k).second) queue.push_back(k);
    }
  }
  return {found.begin(), found.end()};
}

/// Conjugacy classes of subgroups as index lists into `subs`.
inline std::vector<std::vector<int>> subgroup_classes(const Group& g, const std::vector<Subgroup>& subs) {
  std::vector<int> cls(subs.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls[i] >= 0) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    for (int x = 0; x < g.order(); ++x) {
      Subgroup k = conjugate(g, subs[i], x);
      for (std::size_t j = i; j < subs.size(); ++j)
        if (cls[j] < 0 && subs[j] == k) {
          cls[j] = c;
          out[c].push_back(static_cast<int>(j));
        }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

/// Representatives t of the left cosets tL in H: the smallest element index of
/// each coset, listed in increasing order (so the identity comes first).
inline std::vector<int> coset_reps(const Group& g, const Subgroup& l, const Subgroup& h) {
  require(l.is_subgroup_of(h), "coset_reps: L is not contained in H");
  std::vector<bool> covered(g.order(), false);
  std::vector<int> reps;
  for (int t : h.elements()) {
    if (covered[t]) continue;
    reps.push_back(t);
    for (int a : l.elements()) covered[g.mul(t, a)] = true;
  }
  return reps;
}

/// Checks that reps is a transversal of H/L (one element in each left coset).
inline bool is_transversal(const Group& g, const Subgroup& l, const Subgroup& h, const std::vector<int>& reps) {
  if (static_cast<int>(reps.size()) * l.order() != h.order()) return false;
  std::vector<bool> covered(g.order(), false);
  for (int t : reps) {
    if (!h.contains(t)) return false;
    for (int a : l.elements()) {
      int x = g.mul(t, a);
      if (covered[x]) return false;
      covered[x] = true;
    }
  }
  return true;
}

/// Writes g = reps[s] * l with l in L; returns (s, l).
inline std::pair<int, int> coset_split(const Group& grp, const Subgroup& l, const std::vector<int>& reps, int g) {
  for (std::size_t s = 0; s < reps.size(); ++s) {
    int rest = grp.mul(grp.inv(reps[s]), g);
    if (l.contains(rest)) return {static_cast<int>(s), rest};
  }
  throw ContractError("element " + std::to_string(g) + " lies in no listed coset");
}

struct DoubleCoset {
  int x;                     // smallest element of KxL
  std::vector<int> elements; // sorted
  /// Transversal of the left L-cosets inside KxL, of the form k*x where the k
  /// run over coset_reps(K ∩ xLx^-1, K).
  std::vector<int> reps;
  std::vector<int> k_reps;   // the k above, same order
};

struct DoubleCosetDecomposition {
  std::vector<DoubleCoset> cosets;  // ordered by representative
  /// For each h in H (indexed by group element, -1 outside H): (coset index, k, l) with h = k x l.
  std::vector<std::array<int, 3>> factor;
};

/// Double cosets K\H/L.
inline DoubleCosetDecomposition double_cosets(const Group& g, const Subgroup& k, const Subgroup& h, const Subgroup& l) {
  require(k.is_subgroup_of(h) && l.is_subgroup_of(h), "double_cosets: K or L is not contained in H");
  DoubleCosetDecomposition out;
  out.factor.assign(g.order(), {-1, -1, -1});
  for (int x : h.elements()) {
    if (out.factor[x][0] >= 0) continue;
    DoubleCoset dc;
    dc.x = x;
    int idx = static_cast<int>(out.cosets.size());
    for (int a : k.elements())
      for (int b : l.elements()) {
        int e = g.mul(g.mul(a, x), b);
        if (out.factor[e][0] < 0) {
          out.factor[e] = {idx, a, b};
          dc.elements.push_back(e);
        }
      }
    std::sort(dc.elements.begin(), dc.elements.end());
    Subgroup kx = intersect(g, k, conjugate(g, l, x));
    dc.k_reps = coset_reps(g, kx, k);
    for (int a : dc.k_reps) dc.reps.push_back(g.mul(a, x));
    out.cosets.push_back(std::move(dc));
  }
  return out;
}

}  // namespace eqcat
