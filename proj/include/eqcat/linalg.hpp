#pragma once

#include <optional>
#include <vector>

#include "eqcat/matrix.hpp"

namespace eqcat {

struct Echelon {
  Matrix rref;                       // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

inline Echelon row_reduce(Matrix a) {
  const PrimeField& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    auto inv = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      auto factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

inline std::optional<Matrix> inverse(const Matrix& a) {
  require(a.square(), "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(a.field(), n));
  auto e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || (n && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.rref.block(0, n, n, n);
}

/// Basis of {x : A x = 0}, one column vector per element.
inline std::vector<Matrix> nullspace(const Matrix& a) {
  auto e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  const PrimeField& f = a.field();
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(f, a.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r], 0) = f.neg(e.rref(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

struct SolveResult {
  bool consistent = false;
  Matrix particular;             // A.cols() x b.cols()
  std::vector<Matrix> kernel;    // basis of the homogeneous solution space
};

/// All X with A X = b, as a particular solution plus the kernel of A.
inline SolveResult solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "solve: A and b have different row counts");
  const PrimeField& f = a.field();
  const std::size_t n = a.cols();
  Matrix aug(f, a.rows(), n + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  auto e = row_reduce(std::move(aug));
  SolveResult out;
  for (auto c : e.pivots)
    if (c >= n) return out;
  out.consistent = true;
  out.particular = Matrix(f, n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) out.particular(e.pivots[r], j) = e.rref(r, n + j);
  out.kernel = nullspace(a);
  return out;
}

/// Incrementally maintained echelon basis of a subspace of F_p^dim.
/// Supports membership tests and coordinates relative to the inserted vectors.
class SpanBuilder {
 public:
  using Elem = PrimeField::Elem;

  SpanBuilder(PrimeField f, std::size_t dim) : f_(f), dim_(dim) {}

  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

  /// Inserts v; returns false (and leaves the span unchanged) if v is dependent.
  bool add(const std::vector<Elem>& v) {
    auto [rem, coeff] = reduce(v);
    std::size_t lead = 0;
    while (lead < dim_ && rem[lead] == 0) ++lead;
    if (lead == dim_) return false;
    auto inv = f_.inv(rem[lead]);
    for (auto& x : rem) x = f_.mul(x, inv);
    // rem = v - sum coeff_k row_k; express it in the originally inserted vectors
    const std::size_t n = coeffs_.size();
    std::vector<Elem> orig(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (!coeff[k]) continue;
      for (std::size_t j = 0; j < coeffs_[k].size(); ++j)
        orig[j] = f_.sub(orig[j], f_.mul(coeff[k], coeffs_[k][j]));
    }
    orig[n] = 1;
    for (auto& x : orig) x = f_.mul(x, inv);
    for (auto& c : coeffs_) c.push_back(0);
    rows_.push_back(std::move(rem));
    leads_.push_back(lead);
    coeffs_.push_back(std::move(orig));
    return true;
  }

  bool contains(const std::vector<Elem>& v) const {
    auto rem = reduce(v).first;
    for (auto x : rem)
      if (x) return false;
    return true;
  }

  /// Coordinates c with v = sum c_k * (k-th successfully inserted vector).
  std::optional<std::vector<Elem>> coordinates(const std::vector<Elem>& v) const {
    auto [rem, coeff] = reduce(v);
    for (auto x : rem)
      if (x) return std::nullopt;
    // v - sum(coeff_k * row_k) = 0 and row_k = sum coeffs_[k][j] * orig_j
    std::vector<Elem> out(rows_.size(), 0);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (!coeff[k]) continue;
      for (std::size_t j = 0; j < coeffs_[k].size(); ++j)
        out[j] = f_.add(out[j], f_.mul(coeff[k], coeffs_[k][j]));
    }
    return out;
  }

 private:
  // Returns the remainder of v and the multipliers of each echelon row used.
  std::pair<std::vector<Elem>, std::vector<Elem>> reduce(const std::vector<Elem>& v) const {
    require(v.size() == dim_, "SpanBuilder: vector length mismatch");
    std::vector<Elem> rem = v;
    std::vector<Elem> coeff(rows_.size(), 0);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto c = rem[leads_[k]];
      if (!c) continue;
      coeff[k] = c;
      const auto& row = rows_[k];
      for (std::size_t j = leads_[k]; j < dim_; ++j)
        if (row[j]) rem[j] = f_.sub(rem[j], f_.mul(c, row[j]));
    }
    return {std::move(rem), std::move(coeff)};
  }

  PrimeField f_;
  std::size_t dim_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> leads_;
  std::vector<std::vector<Elem>> coeffs_;
};

}  // namespace eqcat
