#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "eqcat/error.hpp"
#include "eqcat/field.hpp"

namespace eqcat {

/// Dense row-major matrix over F_p. Empty shapes (0 x n, n x 0) are legal.
class Matrix {
 public:
  using Elem = PrimeField::Elem;

  Matrix() = default;
  Matrix(PrimeField f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(PrimeField f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix scalar(PrimeField f, std::size_t n, Elem c) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }
  static Matrix from_rows(PrimeField f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      require(row.size() == c, "ragged matrix literal");
      std::size_t j = 0;
      for (auto v : row) m(i, j++) = f.reduce(v);
      ++i;
    }
    return m;
  }
  static Matrix from_rows(PrimeField f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.front().size() : 0;
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      require(rows[i].size() == c, "ragged matrix literal");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = f.reduce(rows[i][j]);
    }
    return m;
  }
  static Matrix column(PrimeField f, std::span<const Elem> v) {
    Matrix m(f, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  const PrimeField& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const Elem> data() const { return a_; }
  std::span<Elem> data() { return a_; }
  std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

  bool is_zero() const {
    for (auto v : a_)
      if (v) return false;
    return true;
  }
  bool is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  Matrix operator*(const Matrix& b) const {
    require(cols_ == b.rows_, "matrix product shape mismatch");
    Matrix out(f_, rows_, b.cols_);
    const std::uint64_t p = f_.p();
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t aik = (*this)(i, k);
        if (!aik) continue;
        const Elem* brow = b.a_.data() + k * b.cols_;
        Elem* orow = out.a_.data() + i * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j)
          orow[j] = static_cast<Elem>((orow[j] + aik * brow[j]) % p);
      }
    }
    return out;
  }
  Matrix operator+(const Matrix& b) const {
    require(rows_ == b.rows_ && cols_ == b.cols_, "matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(a_[i], b.a_[i]);
    return out;
  }
  Matrix operator-(const Matrix& b) const {
    require(rows_ == b.rows_ && cols_ == b.cols_, "matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.sub(a_[i], b.a_[i]);
    return out;
  }
  Matrix scaled(Elem c) const {
    Matrix out = *this;
    for (auto& v : out.a_) v = f_.mul(v, c);
    return out;
  }
  Matrix transpose() const {
    Matrix out(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }
  /// Kronecker product; row index of the result is i * b.rows() + k.
  Matrix kron(const Matrix& b) const {
    Matrix out(f_, rows_ * b.rows_, cols_ * b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        Elem x = (*this)(i, j);
        if (!x) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            out(i * b.rows_ + k, j * b.cols_ + l) = f_.mul(x, b(k, l));
      }
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    Matrix out(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Elem trace() const {
    require(square(), "trace of non-square matrix");
    Elem t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t = f_.add(t, (*this)(i, i));
    return t;
  }

  /// Row-major flattening, used to treat matrices as vectors in an algebra.
  std::vector<Elem> flatten() const { return a_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? " [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  PrimeField f_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> a_;
};

inline Matrix random_matrix(PrimeField f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (auto& v : m.data()) v = f.random(rng);
  return m;
}

}  // namespace eqcat
