#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "eqcat/group.hpp"
#include "eqcat/linalg.hpp"
#include "eqcat/report.hpp"

namespace eqcat {

/// Object of the semisimple category: multiplicity of each simple label.
struct Obj {
  std::vector<std::size_t> m;

  std::size_t n() const { return m.size(); }
  std::size_t total() const { return std::accumulate(m.begin(), m.end(), std::size_t{0}); }
  friend bool operator==(const Obj&, const Obj&) = default;
};

inline Obj simple_obj(std::size_t n, std::size_t i, std::size_t mult = 1) {
  Obj o{std::vector<std::size_t>(n, 0)};
  o.m.at(i) = mult;
  return o;
}

inline Obj obj_sum(const Obj& a, const Obj& b) {
  require(a.n() == b.n(), "object sum over different label sets");
  Obj o = a;
  for (std::size_t i = 0; i < a.n(); ++i) o.m[i] += b.m[i];
  return o;
}

/// Morphism: one block of shape target.m[i] x source.m[i] per simple i.
struct Mor {
  Obj src, tgt;
  std::vector<Matrix> blocks;

  friend bool operator==(const Mor& a, const Mor& b) {
    return a.src == b.src && a.tgt == b.tgt && a.blocks == b.blocks;
  }
};

inline Mor zero_mor(PrimeField f, const Obj& src, const Obj& tgt) {
  require(src.n() == tgt.n(), "morphism between objects over different label sets");
  Mor r{src, tgt, {}};
  for (std::size_t i = 0; i < src.n(); ++i) r.blocks.emplace_back(f, tgt.m[i], src.m[i]);
  return r;
}

inline Mor identity_mor(PrimeField f, const Obj& o) {
  Mor r{o, o, {}};
  for (std::size_t i = 0; i < o.n(); ++i) r.blocks.push_back(Matrix::identity(f, o.m[i]));
  return r;
}

inline bool is_shape_valid(const Mor& f) {
  if (f.src.n() != f.tgt.n() || f.blocks.size() != f.src.n()) return false;
  for (std::size_t i = 0; i < f.blocks.size(); ++i)
    if (f.blocks[i].rows() != f.tgt.m[i] || f.blocks[i].cols() != f.src.m[i]) return false;
  return true;
}

/// a ∘ b
inline Mor compose(const Mor& a, const Mor& b) {
  require(a.src == b.tgt, "composition of non-composable morphisms");
  Mor r{b.src, a.tgt, {}};
  for (std::size_t i = 0; i < a.blocks.size(); ++i) r.blocks.push_back(a.blocks[i] * b.blocks[i]);
  return r;
}

inline Mor operator*(const Mor& a, const Mor& b) { return compose(a, b); }

inline Mor mor_add(const Mor& a, const Mor& b) {
  require(a.src == b.src && a.tgt == b.tgt, "sum of morphisms with different shapes");
  Mor r = a;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) r.blocks[i] = a.blocks[i] + b.blocks[i];
  return r;
}

inline Mor mor_scale(const Mor& a, PrimeField::Elem c) {
  Mor r = a;
  for (auto& b : r.blocks) b = b.scaled(c);
  return r;
}

inline bool is_zero(const Mor& a) {
  for (const auto& b : a.blocks)
    if (!b.is_zero()) return false;
  return true;
}

inline bool is_identity(const Mor& a) {
  if (!(a.src == a.tgt)) return false;
  for (const auto& b : a.blocks)
    if (!b.is_identity()) return false;
  return true;
}

inline std::optional<Mor> mor_inverse(const Mor& a) {
  if (!(a.src == a.tgt)) return std::nullopt;
  Mor r{a.tgt, a.src, {}};
  for (const auto& b : a.blocks) {
    auto inv = inverse(b);
    if (!inv) return std::nullopt;
    r.blocks.push_back(std::move(*inv));
  }
  return r;
}

/// Flattened entries of every block, in block order; used as coordinates.
inline std::vector<PrimeField::Elem> mor_vector(const Mor& a) {
  std::vector<PrimeField::Elem> v;
  for (const auto& b : a.blocks) {
    auto d = b.data();
    v.insert(v.end(), d.begin(), d.end());
  }
  return v;
}

inline Mor mor_from_vector(PrimeField f, const Obj& src, const Obj& tgt, const std::vector<PrimeField::Elem>& v) {
  Mor r = zero_mor(f, src, tgt);
  std::size_t k = 0;
  for (auto& b : r.blocks)
    for (auto& x : b.data()) x = v.at(k++);
  require(k == v.size(), "coordinate vector length does not match morphism shape");
  return r;
}

inline json to_json(const Obj& o) { return json(o.m); }

inline json to_json(const Mor& f) {
  json blocks = json::array();
  for (const auto& b : f.blocks) blocks.push_back(to_json(b));
  return {{"source", to_json(f.src)}, {"target", to_json(f.tgt)}, {"blocks", blocks}};
}

/// Action of a finite group on the semisimple category with n simples:
/// T^g permutes labels by sigma[g], and (T_2^{g,h})_{X_i} is the scalar lambda[g][h][i].
class ActionData {
 public:
  using Elem = PrimeField::Elem;

  ActionData() = default;
  ActionData(PrimeField f, Group g, std::size_t n, std::vector<std::vector<int>> sigma,
             std::vector<std::vector<std::vector<Elem>>> lambda)
      : f_(f), g_(std::move(g)), n_(n), sigma_(std::move(sigma)), lambda_(std::move(lambda)) {
    const int order = g_.order();
    if (static_cast<int>(sigma_.size()) != order) throw InputError("sigma must list one permutation per group element");
    for (const auto& s : sigma_) {
      if (s.size() != n_) throw InputError("sigma permutation has the wrong length");
      std::vector<bool> seen(n_, false);
      for (int v : s) {
        if (v < 0 || static_cast<std::size_t>(v) >= n_ || seen[v]) throw InputError("sigma entry is not a permutation");
        seen[v] = true;
      }
    }
    if (static_cast<int>(lambda_.size()) != order) throw InputError("lambda has the wrong outer size");
    for (const auto& row : lambda_) {
      if (static_cast<int>(row.size()) != order) throw InputError("lambda has the wrong middle size");
      for (const auto& v : row)
        if (v.size() != n_) throw InputError("lambda has the wrong inner size");
    }
    sigma_inv_.assign(order, std::vector<int>(n_));
    for (int g = 0; g < order; ++g)
      for (std::size_t i = 0; i < n_; ++i) sigma_inv_[g][sigma_[g][i]] = static_cast<int>(i);
  }

  /// Trivial permutation and scalars identically one.
  static ActionData trivial(PrimeField f, Group g, std::size_t n) {
    const int order = g.order();
    std::vector<std::vector<int>> sigma(order, std::vector<int>(n));
    for (auto& s : sigma) std::iota(s.begin(), s.end(), 0);
    std::vector<std::vector<std::vector<Elem>>> lambda(order, std::vector<std::vector<Elem>>(order, std::vector<Elem>(n, 1)));
    return ActionData(f, std::move(g), n, std::move(sigma), std::move(lambda));
  }

  const PrimeField& field() const { return f_; }
  const Group& group() const { return g_; }
  std::size_t n() const { return n_; }
  int sigma(int g, std::size_t i) const { return sigma_[g][i]; }
  int sigma_inv(int g, std::size_t j) const { return sigma_inv_[g][j]; }
  Elem lambda(int g, int h, std::size_t i) const { return lambda_[g][h][i]; }
  const std::vector<std::vector<int>>& sigma_table() const { return sigma_; }
  const std::vector<std::vector<std::vector<Elem>>>& lambda_table() const { return lambda_; }

  /// T^g(M): result[j] = m[sigma_g^{-1}(j)].
  Obj act_obj(int g, const Obj& o) const {
    Obj r{std::vector<std::size_t>(n_)};
    for (std::size_t j = 0; j < n_; ++j) r.m[j] = o.m[sigma_inv_[g][j]];
    return r;
  }

  Mor act_mor(int g, const Mor& f) const {
    Mor r{act_obj(g, f.src), act_obj(g, f.tgt), {}};
    for (std::size_t j = 0; j < n_; ++j) r.blocks.push_back(f.blocks[sigma_inv_[g][j]]);
    return r;
  }

  /// (T_2^{g,h})_M : T^g T^h(M) -> T^{gh}(M).
  Mor t2(int g, int h, const Obj& o) const {
    const int gh = g_.mul(g, h);
    Obj t = act_obj(gh, o);
    Mor r{t, t, {}};
    for (std::size_t j = 0; j < n_; ++j)
      r.blocks.push_back(Matrix::scalar(f_, t.m[j], lambda_[g][h][sigma_inv_[gh][j]]));
    return r;
  }

  Mor t2_inv(int g, int h, const Obj& o) const {
    const int gh = g_.mul(g, h);
    Obj t = act_obj(gh, o);
    Mor r{t, t, {}};
    for (std::size_t j = 0; j < n_; ++j)
      r.blocks.push_back(Matrix::scalar(f_, t.m[j], f_.inv(lambda_[g][h][sigma_inv_[gh][j]])));
    return r;
  }

  /// Homomorphism, normalization and cocycle conditions, every triple checked.
  CheckReport validate() const {
    CheckReport rep;
    const int order = g_.order();
    auto tag = [](std::initializer_list<int> v) {
      std::string s = "(";
      bool first = true;
      for (int x : v) {
        s += (first ? "" : ",") + std::to_string(x);
        first = false;
      }
      return s + ")";
    };
    bool hom = true;
    for (std::size_t i = 0; i < n_ && hom; ++i)
      if (sigma_[0][i] != static_cast<int>(i)) {
        rep.fail("homomorphism:identity", "sigma of the identity is not the identity permutation",
                 {{"label", i}});
        hom = false;
      }
    for (int g = 0; g < order && hom; ++g)
      for (int h = 0; h < order && hom; ++h)
        for (std::size_t i = 0; i < n_; ++i)
          if (sigma_[g][sigma_[h][i]] != sigma_[g_.mul(g, h)][i]) {
            rep.fail("homomorphism:" + tag({g, h}), "sigma_g sigma_h != sigma_gh",
                     {{"g", g}, {"h", h}, {"label", i}});
            hom = false;
            break;
          }
    if (hom) rep.pass("homomorphism:all");
    bool zero_free = true;
    for (int g = 0; g < order; ++g)
      for (int h = 0; h < order; ++h)
        for (std::size_t i = 0; i < n_; ++i)
          if (lambda_[g][h][i] == 0 && zero_free) {
            rep.fail("invertible:" + tag({g, h, int(i)}), "lambda entry is zero", {{"g", g}, {"h", h}, {"i", i}});
            zero_free = false;
          }
    if (zero_free) rep.pass("invertible:all");
    bool norm = true;
    for (int g = 0; g < order && norm; ++g)
      for (std::size_t i = 0; i < n_; ++i)
        if (lambda_[g][0][i] != 1 || lambda_[0][g][i] != 1) {
          rep.fail("normalization:" + tag({g, int(i)}), "lambda^{g,1} or lambda^{1,g} differs from 1",
                   {{"g", g}, {"i", i}, {"lambda_g_1", lambda_[g][0][i]}, {"lambda_1_g", lambda_[0][g][i]}});
          norm = false;
          break;
        }
    if (norm) rep.pass("normalization:all");
    if (!hom) return rep;
    bool coc = true;
    for (int g = 0; g < order && coc; ++g)
      for (int h = 0; h < order && coc; ++h)
        for (int l = 0; l < order && coc; ++l)
          for (std::size_t i = 0; i < n_; ++i) {
            Elem lhs = f_.mul(lambda_[g_.mul(g, h)][l][i], lambda_[g][h][sigma_[l][i]]);
            Elem rhs = f_.mul(lambda_[g][g_.mul(h, l)][i], lambda_[h][l][i]);
            if (lhs != rhs) {
              rep.fail("cocycle:" + tag({g, h, l, int(i)}), "cocycle identity fails",
                       {{"g", g}, {"h", h}, {"l", l}, {"i", i}, {"lhs", lhs}, {"rhs", rhs}});
              coc = false;
              break;
            }
          }
    if (coc) rep.pass("cocycle:all");
    return rep;
  }

 private:
  PrimeField f_;
  Group g_;
  std::size_t n_ = 0;
  std::vector<std::vector<int>> sigma_;
  std::vector<std::vector<int>> sigma_inv_;
  std::vector<std::vector<std::vector<Elem>>> lambda_;
};

}  // namespace eqcat
