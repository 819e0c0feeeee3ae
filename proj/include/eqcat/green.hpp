#pragma once

#include <cstdint>
#include <future>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eqcat/pointed.hpp"
#include "eqcat/split.hpp"

namespace eqcat {

using K0Vector = std::vector<std::int64_t>;
/// Integer matrix, rows indexed by target simples and columns by source simples.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix int_zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, std::vector<std::int64_t>(cols, 0)); }

inline IntMatrix int_identity(std::size_t n) {
  IntMatrix m = int_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline std::size_t int_cols(const IntMatrix& m, std::size_t fallback = 0) { return m.empty() ? fallback : m[0].size(); }

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, std::size_t b_cols) {
  IntMatrix out = int_zero(a.size(), b_cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b_cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline IntMatrix int_add(IntMatrix a, const IntMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

inline K0Vector int_apply(const IntMatrix& m, const K0Vector& v) {
  K0Vector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

/// Multiplicities of the listed simples in M: dim Hom(S, M) / dim End(S).
inline K0Vector decompose(const ActionData& act, const std::vector<SimpleObject>& simples, const EqObject& M) {
  K0Vector out;
  for (const auto& s : simples) {
    require(s.obj.H == M.H, "decompose: object and simples live over different subgroups");
    std::size_t h = hom_dim(act, s.obj, M);
    if (h % s.end_dim != 0) throw Error("decompose: Hom dimension is not a multiple of the endomorphism degree");
    out.push_back(static_cast<std::int64_t>(h / s.end_dim));
  }
  return out;
}

/// The direct sum of the simples with multiplicities v (the zero object when v = 0).
inline EqObject assemble(const ActionData& act, const Subgroup& H, const std::vector<SimpleObject>& simples,
                         const K0Vector& v) {
  std::vector<EqObject> parts;
  for (std::size_t s = 0; s < simples.size(); ++s)
    for (std::int64_t k = 0; k < v[s]; ++k) parts.push_back(simples[s].obj);
  if (parts.empty()) return trivial_structure(act, H, Obj{std::vector<std::size_t>(act.n(), 0)});
  return direct_sum(act, parts).sum;
}

/// Certifies a decomposition by an explicit isomorphism from the assembled sum to M.
inline CheckReport certify_decomposition(const ActionData& act, const std::vector<SimpleObject>& simples,
                                         const EqObject& M, const K0Vector& v, Rng& rng, const std::string& id) {
  CheckReport rep;
  IsoResult r = is_iso(act, assemble(act, M.H, simples, v), M, rng);
  if (r.iso)
    rep.pass(id);
  else
    rep.fail(id, "sum of simples with the computed multiplicities is not isomorphic to the object",
             {{"multiplicities", v}, {"reason", r.reason}});
  return rep;
}

struct K0Table {
  Group group;
  std::vector<Subgroup> subs;
  std::vector<std::vector<SimpleObject>> simples;  // per subgroup index
  std::map<std::pair<int, int>, IntMatrix> R;      // (H, K) for K <= H: K0(H) -> K0(K)
  std::map<std::pair<int, int>, IntMatrix> I;      // (H, K) for K <= H: K0(K) -> K0(H)
  std::map<std::pair<int, int>, IntMatrix> c;      // (H, x): K0(H) -> K0(xH)
  bool monoidal = false;
  /// fusion[H][a][b] = class of S_a ⊗ S_b
  std::vector<std::vector<std::vector<K0Vector>>> fusion;
  std::vector<K0Vector> unit;

  int index_of(const Subgroup& H) const {
    for (std::size_t k = 0; k < subs.size(); ++k)
      if (subs[k] == H) return static_cast<int>(k);
    throw ContractError("subgroup outside the table scope; the scope must be closed under conjugation");
  }
  std::size_t rank(int h) const { return simples[h].size(); }
  std::vector<std::size_t> degrees(int h) const {
    std::vector<std::size_t> d;
    for (const auto& s : simples[h]) d.push_back(s.end_dim);
    return d;
  }
};

struct TableOptions {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

namespace detail {

template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::future<void>> running;
  std::size_t next = 0;
  while (next < count || !running.empty()) {
    while (next < count && running.size() < jobs) {
      running.push_back(std::async(std::launch::async, [&body, k = next] { body(k); }));
      ++next;
    }
    running.front().get();
    running.erase(running.begin());
  }
}

inline IntMatrix columns_of(std::size_t rows, const std::vector<K0Vector>& cols) {
  IntMatrix m = int_zero(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  return m;
}

}  // namespace detail

/// Simples per subgroup, then restriction, induction and conjugation matrices by decomposing
/// the functor images of each simple. With pointed data the fusion constants are added.
inline K0Table build_table(const ActionData& act, const std::vector<Subgroup>& scope, const TableOptions& opt = {},
                           const PointedData* pointed = nullptr) {
  const Group& G = act.group();
  K0Table T;
  T.group = G;
  T.subs = scope;
  for (const auto& H : scope)
    for (int x = 0; x < G.order(); ++x) T.index_of(conjugate(G, H, x));
  const std::size_t ns = scope.size();
  T.simples.resize(ns);
  detail::parallel_for(ns, opt.jobs, [&](std::size_t h) {
    Rng rng(opt.seed + 0x9e3779b97f4a7c15ULL * (h + 1));
    auto r = simples_of(act, scope[h], rng);
    if (!r.certificate.ok()) throw SplitError("simple objects failed their certificate at subgroup " + std::to_string(h));
    T.simples[h] = std::move(r.simples);
  });

  struct Cell {
    char kind;
    int a, b;
  };
  std::vector<Cell> cells;
  for (std::size_t h = 0; h < ns; ++h)
    for (std::size_t k = 0; k < ns; ++k)
      if (scope[k].is_subgroup_of(scope[h])) {
        cells.push_back({'R', static_cast<int>(h), static_cast<int>(k)});
        cells.push_back({'I', static_cast<int>(h), static_cast<int>(k)});
      }
  for (std::size_t h = 0; h < ns; ++h)
    for (int x = 0; x < G.order(); ++x) cells.push_back({'c', static_cast<int>(h), x});
  std::vector<IntMatrix> results(cells.size());
  detail::parallel_for(cells.size(), opt.jobs, [&](std::size_t i) {
    const Cell& cl = cells[i];
    std::vector<K0Vector> cols;
    if (cl.kind == 'R') {
      for (const auto& s : T.simples[cl.a]) cols.push_back(decompose(act, T.simples[cl.b], res(scope[cl.b], s.obj)));
      results[i] = detail::columns_of(T.simples[cl.b].size(), cols);
    } else if (cl.kind == 'I') {
      for (const auto& s : T.simples[cl.b]) cols.push_back(decompose(act, T.simples[cl.a], ind(act, scope[cl.a], s.obj)));
      results[i] = detail::columns_of(T.simples[cl.a].size(), cols);
    } else {
      const int tgt = T.index_of(conjugate(G, scope[cl.a], cl.b));
      for (const auto& s : T.simples[cl.a]) cols.push_back(decompose(act, T.simples[tgt], conj(act, cl.b, s.obj)));
      results[i] = detail::columns_of(T.simples[tgt].size(), cols);
    }
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto key = std::make_pair(cells[i].a, cells[i].b);
    (cells[i].kind == 'R' ? T.R : cells[i].kind == 'I' ? T.I : T.c)[key] = std::move(results[i]);
  }

  if (pointed) {
    T.monoidal = true;
    T.fusion.resize(ns);
    T.unit.resize(ns);
    detail::parallel_for(ns, opt.jobs, [&](std::size_t h) {
      const auto& S = T.simples[h];
      T.unit[h] = decompose(act, S, unit_object(*pointed, scope[h]));
      T.fusion[h].assign(S.size(), std::vector<K0Vector>(S.size()));
      for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = 0; b < S.size(); ++b) T.fusion[h][a][b] = decompose(act, S, tensor_eq(*pointed, S[a].obj, S[b].obj));
    });
  }
  return T;
}

namespace detail {

inline std::string sub_name(const K0Table& T, int h) {
  std::string s = "[";
  for (int g : T.subs[h].elements()) s += (s.size() > 1 ? "," : "") + std::to_string(g);
  return s + "]";
}

inline void compare(CheckReport& rep, const std::string& id, const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs == rhs)
    rep.pass(id);
  else
    rep.fail(id, "integer matrices differ", {{"lhs", lhs}, {"rhs", rhs}});
}

inline void compare(CheckReport& rep, const std::string& id, const K0Vector& lhs, const K0Vector& rhs) {
  if (lhs == rhs)
    rep.pass(id);
  else
    rep.fail(id, "classes differ", {{"lhs", lhs}, {"rhs", rhs}});
}

/// Product of two classes in K0 of subgroup h.
inline K0Vector product(const K0Table& T, int h, const K0Vector& x, const K0Vector& y) {
  K0Vector out(T.rank(h), 0);
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] != 0)
      for (std::size_t b = 0; b < y.size(); ++b)
        if (y[b] != 0)
          for (std::size_t s = 0; s < out.size(); ++s) out[s] += x[a] * y[b] * T.fusion[h][a][b][s];
  return out;
}

inline K0Vector basis_vector(std::size_t n, std::size_t i) {
  K0Vector v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace detail

/// Mackey functor axioms on the table as exact integer identities, plus the Frobenius
/// reciprocity shadow and the permutation shape of conjugation.
inline CheckReport verify_mackey_axioms(const K0Table& T) {
  using detail::compare;
  using detail::sub_name;
  const Group& G = T.group;
  CheckReport rep;
  const int ns = static_cast<int>(T.subs.size());
  auto R = [&](int h, int k) -> const IntMatrix& { return T.R.at({h, k}); };
  auto I = [&](int h, int k) -> const IntMatrix& { return T.I.at({h, k}); };
  auto C = [&](int h, int x) -> const IntMatrix& { return T.c.at({h, x}); };
  auto conj_idx = [&](int h, int x) { return T.index_of(conjugate(G, T.subs[h], x)); };
  auto le = [&](int k, int h) { return T.subs[k].is_subgroup_of(T.subs[h]); };

  for (int h = 0; h < ns; ++h) {
    const std::string H = sub_name(T, h);
    const IntMatrix id = int_identity(T.rank(h));
    compare(rep, "M0:R,H=" + H, R(h, h), id);
    compare(rep, "M0:I,H=" + H, I(h, h), id);
    for (int x : T.subs[h].elements()) compare(rep, "M0:c,H=" + H + ",x=" + std::to_string(x), C(h, x), id);
  }
  for (int h = 0; h < ns; ++h)
    for (int l = 0; l < ns; ++l) {
      if (!le(l, h)) continue;
      for (int k = 0; k < ns; ++k) {
        if (!le(k, l)) continue;
        const std::string ctx = "H=" + sub_name(T, h) + ",L=" + sub_name(T, l) + ",K=" + sub_name(T, k);
        compare(rep, "M1:" + ctx, int_mul(R(l, k), R(h, l), T.rank(h)), R(h, k));
        compare(rep, "M2:" + ctx, int_mul(I(h, l), I(l, k), T.rank(k)), I(h, k));
      }
    }
  for (int h = 0; h < ns; ++h)
    for (int x = 0; x < G.order(); ++x) {
      const int xh = conj_idx(h, x);
      for (int y = 0; y < G.order(); ++y) {
        const std::string ctx = "H=" + sub_name(T, h) + ",x=" + std::to_string(x) + ",y=" + std::to_string(y);
        compare(rep, "M3:cc," + ctx, int_mul(C(xh, y), C(h, x), T.rank(h)), C(h, G.mul(y, x)));
      }
      for (int k = 0; k < ns; ++k) {
        if (!le(k, h)) continue;
        const int xk = conj_idx(k, x);
        const std::string ctx = "H=" + sub_name(T, h) + ",K=" + sub_name(T, k) + ",x=" + std::to_string(x);
        compare(rep, "M3:cR," + ctx, int_mul(C(k, x), R(h, k), T.rank(h)), int_mul(R(xh, xk), C(h, x), T.rank(h)));
        compare(rep, "M3:cI," + ctx, int_mul(C(h, x), I(h, k), T.rank(k)), int_mul(I(xh, xk), C(k, x), T.rank(k)));
      }
    }
  for (int h = 0; h < ns; ++h)
    for (int k = 0; k < ns; ++k)
      for (int l = 0; l < ns; ++l) {
        if (!le(k, h) || !le(l, h)) continue;
        IntMatrix rhs = int_zero(T.rank(k), T.rank(l));
        for (const auto& dc : double_cosets(G, T.subs[k], T.subs[h], T.subs[l]).cosets) {
          const int xl = conj_idx(l, dc.x);
          const int m = T.index_of(intersect(G, T.subs[k], T.subs[xl]));
          IntMatrix term = int_mul(I(k, m), int_mul(R(xl, m), C(l, dc.x), T.rank(l)), T.rank(l));
          rhs = int_add(rhs, term);
        }
        const std::string ctx = "H=" + sub_name(T, h) + ",K=" + sub_name(T, k) + ",L=" + sub_name(T, l);
        compare(rep, "M4:" + ctx, int_mul(R(h, k), I(h, l), T.rank(l)), rhs);
      }
  // <I a, b>_H = <a, R b>_K with <x, y> = sum x_S y_S deg(S)
  for (int h = 0; h < ns; ++h)
    for (int k = 0; k < ns; ++k) {
      if (!le(k, h)) continue;
      const auto dh = T.degrees(h), dk = T.degrees(k);
      bool ok = true;
      for (std::size_t a = 0; a < T.rank(k) && ok; ++a)
        for (std::size_t b = 0; b < T.rank(h) && ok; ++b) {
          const std::int64_t lhs = I(h, k)[b][a] * static_cast<std::int64_t>(dh[b]);
          const std::int64_t rhs = R(h, k)[a][b] * static_cast<std::int64_t>(dk[a]);
          ok = lhs == rhs;
        }
      const std::string id = "frobenius-shadow:H=" + sub_name(T, h) + ",K=" + sub_name(T, k);
      if (ok)
        rep.pass(id);
      else
        rep.fail(id, "induction and restriction are not adjoint for the degree-weighted pairing",
                 {{"I", I(h, k)}, {"R", R(h, k)}});
    }
  for (const auto& [key, m] : T.c) {
    bool perm = m.size() == int_cols(m, m.size());
    for (std::size_t i = 0; i < m.size() && perm; ++i) {
      int ones = 0;
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (m[i][j] == 1) ++ones;
        else if (m[i][j] != 0) perm = false;
        if (m[j][i] != 0 && m[j][i] != 1) perm = false;
      }
      perm = perm && ones == 1;
    }
    const std::string id = "conj-permutation:H=" + sub_name(T, key.first) + ",x=" + std::to_string(key.second);
    if (perm)
      rep.pass(id);
    else
      rep.fail(id, "conjugation does not permute simple classes", {{"c", m}});
  }
  return rep;
}

/// Green functor axioms on the fusion constants: associative commutative unital rings,
/// restriction and conjugation unital ring maps, and both projection formulas.
inline CheckReport verify_green_axioms(const K0Table& T) {
  using detail::basis_vector;
  using detail::compare;
  using detail::product;
  using detail::sub_name;
  require(T.monoidal, "verify_green_axioms: the table has no fusion constants");
  const Group& G = T.group;
  CheckReport rep;
  const int ns = static_cast<int>(T.subs.size());
  for (int h = 0; h < ns; ++h) {
    const std::size_t n = T.rank(h);
    const std::string H = sub_name(T, h);
    bool unital = true, assoc = true;
    for (std::size_t a = 0; a < n; ++a) {
      const K0Vector ea = basis_vector(n, a);
      unital = unital && product(T, h, T.unit[h], ea) == ea && product(T, h, ea, T.unit[h]) == ea;
      for (std::size_t b = 0; b < n && assoc; ++b)
        for (std::size_t c = 0; c < n && assoc; ++c)
          assoc = product(T, h, T.fusion[h][a][b], basis_vector(n, c)) ==
                  product(T, h, ea, T.fusion[h][b][c]);
    }
    rep.add("ring-unit:H=" + H, unital, unital ? "" : "unit class is not a two-sided unit");
    rep.add("ring-assoc:H=" + H, assoc, assoc ? "" : "fusion constants are not associative");
  }
  for (int h = 0; h < ns; ++h)
    for (int k = 0; k < ns; ++k) {
      if (!T.subs[k].is_subgroup_of(T.subs[h])) continue;
      const std::string ctx = "H=" + sub_name(T, h) + ",K=" + sub_name(T, k);
      const IntMatrix& R = T.R.at({h, k});
      const IntMatrix& I = T.I.at({h, k});
      compare(rep, "G1:R-unit," + ctx, int_apply(R, T.unit[h]), T.unit[k]);
      for (std::size_t a = 0; a < T.rank(h); ++a)
        for (std::size_t b = 0; b < T.rank(h); ++b) {
          const K0Vector ea = basis_vector(T.rank(h), a), eb = basis_vector(T.rank(h), b);
          compare(rep, "G1:R-mult," + ctx + ",a=" + std::to_string(a) + ",b=" + std::to_string(b),
                  int_apply(R, T.fusion[h][a][b]), product(T, k, int_apply(R, ea), int_apply(R, eb)));
        }
      for (std::size_t a = 0; a < T.rank(k); ++a)
        for (std::size_t b = 0; b < T.rank(h); ++b) {
          const K0Vector ea = basis_vector(T.rank(k), a), eb = basis_vector(T.rank(h), b);
          const std::string w = ctx + ",a=" + std::to_string(a) + ",b=" + std::to_string(b);
          // I(a R(b)) = I(a) b and I(R(b) a) = b I(a)
          compare(rep, "G2:" + w, int_apply(I, product(T, k, ea, int_apply(R, eb))), product(T, h, int_apply(I, ea), eb));
          compare(rep, "G3:" + w, int_apply(I, product(T, k, int_apply(R, eb), ea)), product(T, h, eb, int_apply(I, ea)));
        }
    }
  for (int h = 0; h < ns; ++h)
    for (int x = 0; x < G.order(); ++x) {
      const IntMatrix& C = T.c.at({h, x});
      const int xh = T.index_of(conjugate(G, T.subs[h], x));
      const std::string ctx = "H=" + sub_name(T, h) + ",x=" + std::to_string(x);
      compare(rep, "G1:c-unit," + ctx, int_apply(C, T.unit[h]), T.unit[xh]);
      for (std::size_t a = 0; a < T.rank(h); ++a)
        for (std::size_t b = 0; b < T.rank(h); ++b) {
          const K0Vector ea = basis_vector(T.rank(h), a), eb = basis_vector(T.rank(h), b);
          compare(rep, "G1:c-mult," + ctx + ",a=" + std::to_string(a) + ",b=" + std::to_string(b),
                  int_apply(C, T.fusion[h][a][b]), product(T, xh, int_apply(C, ea), int_apply(C, eb)));
        }
    }
  return rep;
}

/// Table as JSON: subgroups, simple dimensions and degrees, and all matrices.
inline json to_json(const K0Table& T) {
  json out;
  json subs = json::array();
  for (std::size_t h = 0; h < T.subs.size(); ++h) {
    json s;
    s["elements"] = T.subs[h].elements();
    json dims = json::array(), degs = json::array();
    for (const auto& x : T.simples[h]) {
      dims.push_back(x.obj.obj.total());
      degs.push_back(x.end_dim);
    }
    s["simple_dims"] = dims;
    s["end_degrees"] = degs;
    if (T.monoidal) {
      s["unit"] = T.unit[h];
      s["fusion"] = T.fusion[h];
    }
    subs.push_back(s);
  }
  out["subgroups"] = subs;
  auto dump = [](const std::map<std::pair<int, int>, IntMatrix>& m, const char* a, const char* b) {
    json arr = json::array();
    for (const auto& [k, v] : m) arr.push_back({{a, k.first}, {b, k.second}, {"matrix", v}});
    return arr;
  };
  out["restriction"] = dump(T.R, "H", "K");
  out["induction"] = dump(T.I, "H", "K");
  out["conjugation"] = dump(T.c, "H", "x");
  return out;
}

/// Aligned plain-text rendering of ranks and the restriction/induction matrices.
inline std::string to_text(const K0Table& T) {
  std::string out;
  auto pad = [](std::string s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  for (std::size_t h = 0; h < T.subs.size(); ++h) {
    out += "subgroup " + std::to_string(h) + " " + detail::sub_name(T, static_cast<int>(h)) + ": rank " +
           std::to_string(T.rank(static_cast<int>(h))) + ", dims";
    for (const auto& s : T.simples[h]) out += " " + std::to_string(s.obj.obj.total());
    out += "\n";
  }
  auto print = [&](const char* name, const std::map<std::pair<int, int>, IntMatrix>& ms) {
    for (const auto& [key, m] : ms) {
      if (key.first == key.second) continue;
      out += std::string(name) + " H=" + std::to_string(key.first) + " K=" + std::to_string(key.second) + "\n";
      std::size_t w = 1;
      for (const auto& row : m)
        for (auto v : row) w = std::max(w, std::to_string(v).size());
      for (const auto& row : m) {
        out += " ";
        for (auto v : row) out += " " + pad(std::to_string(v), w);
        out += "\n";
      }
    }
  };
  print("R", T.R);
  print("I", T.I);
  return out;
}

}  // namespace eqcat
