#pragma once

#include <algorithm>
#include <ostream>
#include <utility>
#include <vector>

#include "eqcat/linalg.hpp"

namespace eqcat {

/// Univariate polynomial over F_p, coefficients stored low degree first.
/// Canonical form: no trailing zero coefficients (the zero polynomial is empty).
class Poly {
 public:
  using Elem = PrimeField::Elem;

  Poly() = default;
  Poly(PrimeField f, std::vector<Elem> c) : f_(f), c_(std::move(c)) { trim(); }
  static Poly from_ints(PrimeField f, std::initializer_list<std::int64_t> c) {
    std::vector<Elem> v;
    for (auto x : c) v.push_back(f.reduce(x));
    return Poly(f, std::move(v));
  }
  static Poly constant(PrimeField f, Elem c) { return Poly(f, {c}); }
  static Poly x(PrimeField f) { return Poly(f, {0, 1}); }
  /// t - a
  static Poly linear(PrimeField f, Elem a) { return Poly(f, {f.neg(a), 1}); }

  const PrimeField& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(f_.inv(lead()));
  }
  Poly scaled(Elem a) const {
    std::vector<Elem> v = c_;
    for (auto& x : v) x = f_.mul(x, a);
    return Poly(f_, std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_.add(a[i], b[i]);
    return Poly(a.f_, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_.sub(a[i], b[i]);
    return Poly(a.f_, std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.f_, {});
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = a.f_.add(v[i + j], a.f_.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.f_, std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws ContractError on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require(!b.is_zero(), "polynomial division by zero");
    const PrimeField& f = a.f_;
    std::vector<Elem> r = a.c_;
    if (a.degree() < b.degree()) return {Poly(f, {}), a};
    std::vector<Elem> q(a.c_.size() - b.c_.size() + 1, 0);
    Elem inv = f.inv(b.lead());
    for (std::size_t k = q.size(); k-- > 0;) {
      Elem c = f.mul(r[k + b.c_.size() - 1], inv);
      q[k] = c;
      if (!c) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(c, b.c_[j]));
    }
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

  Poly derivative() const {
    std::vector<Elem> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(f_.mul(f_.reduce(static_cast<std::int64_t>(i)), c_[i]));
    return Poly(f_, std::move(v));
  }

  Elem evaluate(Elem x) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, x), c_[i]);
    return r;
  }

  /// p(A) for a square matrix A.
  Matrix evaluate(const Matrix& a) const {
    require(a.square(), "polynomial evaluated at non-square matrix");
    Matrix r(f_, a.rows(), a.cols());
    for (std::size_t i = c_.size(); i-- > 0;) r = r * a + Matrix::scalar(f_, a.rows(), c_[i]);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.c_.size(); i-- > 0;) {
      if (!p.c_[i]) continue;
      if (!first) os << " + ";
      first = false;
      if (p.c_[i] != 1 || i == 0) os << p.c_[i];
      if (i >= 1) os << "t";
      if (i > 1) os << "^" << i;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeField f_;
  std::vector<Elem> c_;
};

/// Monic gcd (zero if both arguments are zero).
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^e mod m.
inline Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(m.field(), 1) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

namespace detail {

// f(t) = g(t^p); returns g.
inline Poly pth_root(const Poly& f) {
  const std::uint32_t p = f.field().p();
  std::vector<PrimeField::Elem> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
  return Poly(f.field(), std::move(v));
}

// t^(p^k) mod m, by repeated p-th powering.
inline Poly frobenius_power(const Poly& m, std::size_t k) {
  Poly r = Poly::x(m.field()) % m;
  for (std::size_t i = 0; i < k; ++i) r = powmod(r, m.field().p(), m);
  return r;
}

// Square-free factorization of a monic polynomial: pairs (square-free part, multiplicity).
inline std::vector<std::pair<Poly, int>> squarefree(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  const PrimeField& F = f.field();
  if (f.degree() < 1) return out;
  Poly d = f.derivative();
  if (d.is_zero()) {
    for (auto& [g, m] : squarefree(pth_root(f))) out.push_back({g, m * static_cast<int>(F.p())});
    return out;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree(pth_root(c.monic()))) out.push_back({g, m * static_cast<int>(F.p())});
  }
  return out;
}

// Distinct-degree factorization of a monic square-free polynomial.
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const PrimeField& F = f.field();
  Poly h = Poly::x(F) % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, F.p(), f);
    Poly g = gcd(f, h - Poly::x(F));
    if (!g.is_one()) {
      out.push_back({g, d});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f.monic(), f.degree()});
  return out;
}

// Splits a monic square-free product of irreducibles of degree d into its factors.
inline void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const PrimeField& F = f.field();
  const std::uint32_t p = F.p();
  for (;;) {
    std::vector<PrimeField::Elem> a(static_cast<std::size_t>(f.degree()));
    for (auto& x : a) x = F.random(rng);
    Poly r(F, std::move(a));
    if (r.degree() < 1) continue;
    Poly b;
    if (p == 2) {
      // trace map r + r^2 + ... + r^(2^(d-1))
      Poly acc = r % f, pw = r % f;
      for (int i = 1; i < d; ++i) {
        pw = (pw * pw) % f;
        acc = acc + pw;
      }
      b = acc;
    } else {
      // r^((p^d-1)/2) = (r * r^p * ... * r^(p^(d-1)))^((p-1)/2)
      Poly prod = r % f, pw = r % f;
      for (int i = 1; i < d; ++i) {
        pw = powmod(pw, p, f);
        prod = (prod * pw) % f;
      }
      b = powmod(prod, (p - 1) / 2, f) - Poly::constant(F, 1);
    }
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

struct Factor {
  Poly poly;   // monic irreducible
  int mult;
};

/// Rabin irreducibility test.
inline bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  Poly m = f.monic();
  const Poly x = Poly::x(f.field());
  std::vector<int> primes;
  for (int q = 2, r = n; q <= r; ++q)
    if (r % q == 0) {
      primes.push_back(q);
      while (r % q == 0) r /= q;
    }
  for (int q : primes) {
    Poly h = detail::frobenius_power(m, static_cast<std::size_t>(n / q));
    if (!gcd(m, h - x).is_one()) return false;
  }
  return (detail::frobenius_power(m, static_cast<std::size_t>(n)) - x) % m == Poly();
}

/// Factorization of f into monic irreducibles with multiplicity, sorted by
/// (degree, coefficients). The leading coefficient of f is dropped.
inline std::vector<Factor> factor(const Poly& f, Rng& rng) {
  if (f.is_zero()) throw ContractError("factor of the zero polynomial");
  std::vector<Factor> out;
  for (auto& [sf, mult] : detail::squarefree(f.monic()))
    for (auto& [g, d] : detail::distinct_degree(sf)) {
      std::vector<Poly> parts;
      detail::equal_degree(g, d, rng, parts);
      for (auto& q : parts) out.push_back({q, mult});
    }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    if (a.poly.coeffs() != b.poly.coeffs()) return a.poly.coeffs() < b.poly.coeffs();
    return a.mult < b.mult;
  });
  // merge equal irreducibles arising from different square-free layers
  std::vector<Factor> merged;
  for (auto& fa : out) {
    if (!merged.empty() && merged.back().poly == fa.poly)
      merged.back().mult += fa.mult;
    else
      merged.push_back(fa);
  }
  return merged;
}

/// Inverse of a modulo m (a and m coprime), by the extended Euclidean algorithm.
inline Poly inverse_mod(const Poly& a, const Poly& m) {
  const PrimeField& f = m.field();
  Poly r0 = m, r1 = a % m;
  Poly s0 = Poly::constant(f, 0), s1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = Poly::divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  require(r0.degree() == 0, "inverse_mod: polynomials are not coprime");
  return (s0.scaled(f.inv(r0.lead()))) % m;
}

/// Minimal polynomial of x inside a matrix algebra whose unit is `unit` (an idempotent
/// with x = unit x unit); the constant term stands for a multiple of `unit`.
inline Poly min_poly(const Matrix& x, const Matrix& unit) {
  require(x.square() && unit.rows() == x.rows() && unit.cols() == x.cols(), "min_poly: shape mismatch");
  const PrimeField& f = x.field();
  const std::size_t n = x.rows();
  SpanBuilder span(f, n * n);
  Matrix pw = unit;
  for (;;) {
    auto v = pw.flatten();
    if (auto c = span.coordinates(v)) {
      std::vector<PrimeField::Elem> coeffs(c->size() + 1, 0);
      for (std::size_t k = 0; k < c->size(); ++k) coeffs[k] = f.neg((*c)[k]);
      coeffs.back() = 1;
      return Poly(f, std::move(coeffs));
    }
    span.add(v);
    pw = pw * x;
  }
}

/// p(x) with the constant term taken as a multiple of `unit`.
inline Matrix evaluate_with_unit(const Poly& p, const Matrix& x, const Matrix& unit) {
  const PrimeField& f = x.field();
  Matrix r(f, x.rows(), x.cols());
  for (int k = p.degree(); k >= 0; --k) r = r * x + unit.scaled(p[static_cast<std::size_t>(k)]);
  return r;
}

/// Minimal polynomial of the square matrix x (monic, annihilates x, minimal degree).
inline Poly min_poly(const Matrix& x) {
  require(x.square(), "min_poly of non-square matrix");
  const PrimeField& f = x.field();
  const std::size_t n = x.rows();
  SpanBuilder span(f, n * n);
  Matrix pw = Matrix::identity(f, n);
  for (;;) {
    auto v = pw.flatten();
    if (auto c = span.coordinates(v)) {
      // pw = sum c_k x^k, so t^d - sum c_k t^k annihilates x
      std::vector<PrimeField::Elem> coeffs(c->size() + 1, 0);
      for (std::size_t k = 0; k < c->size(); ++k) coeffs[k] = f.neg((*c)[k]);
      coeffs.back() = 1;
      return Poly(f, std::move(coeffs));
    }
    span.add(v);
    pw = pw * x;
  }
}

}  // namespace eqcat
