#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "eqcat/error.hpp"

namespace eqcat {

using Rng = std::mt19937_64;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_p. Elements are plain residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31))
      throw InputError("modulus " + std::to_string(p) + " is not a usable prime");
  }

  std::uint32_t p() const { return p_; }

  Elem reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw ContractError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem random(Rng& rng) const {
    return static_cast<Elem>(std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng));
  }
  Elem random_nonzero(Rng& rng) const {
    return static_cast<Elem>(std::uniform_int_distribution<std::uint32_t>(1, p_ - 1)(rng));
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 2;
};

}  // namespace eqcat
