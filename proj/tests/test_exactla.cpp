#include <gtest/gtest.h>

#include <set>

#include "eqcat/poly.hpp"

using namespace eqcat;

namespace {

const PrimeField F5(5);
const PrimeField F7(7);

// All monic polynomials of the given degree, enumerated directly.
std::vector<Poly> all_monic(PrimeField f, int deg) {
  std::vector<Poly> out;
  std::size_t count = 1;
  for (int i = 0; i < deg; ++i) count *= f.p();
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<PrimeField::Elem> c(deg + 1, 0);
    std::size_t k = code;
    for (int i = 0; i < deg; ++i) {
      c[i] = static_cast<PrimeField::Elem>(k % f.p());
      k /= f.p();
    }
    c[deg] = 1;
    out.emplace_back(f, c);
  }
  return out;
}

bool irreducible_by_trial_division(const Poly& g) {
  for (int d = 1; 2 * d <= g.degree(); ++d)
    for (const auto& q : all_monic(g.field(), d))
      if ((g % q).is_zero()) return false;
  return g.degree() >= 1;
}

}  // namespace

TEST(Solve, IdentitySystem) {
  auto r = solve(Matrix::identity(F5, 2), Matrix::from_rows(F5, {{1}, {2}}));
  ASSERT_TRUE(r.consistent);
  EXPECT_EQ(r.particular, Matrix::from_rows(F5, {{1}, {2}}));
  EXPECT_TRUE(r.kernel.empty());
}

TEST(Solve, ZeroSystemHasFullKernel) {
  auto r = solve(Matrix(F5, 2, 2), Matrix(F5, 2, 1));
  ASSERT_TRUE(r.consistent);
  EXPECT_EQ(r.kernel.size(), 2u);
}

TEST(Solve, RankOneFamilyMatchesExhaustiveSearch) {
  auto a = Matrix::from_rows(F5, {{1, 2}, {2, 4}});
  auto b = Matrix::from_rows(F5, {{1}, {2}});
  auto r = solve(a, b);
  ASSERT_TRUE(r.consistent);
  ASSERT_EQ(r.kernel.size(), 1u);
  // every x in F_5^2 solving Ax=b is particular + c*kernel, and vice versa
  std::set<std::pair<unsigned, unsigned>> brute, param;
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y) {
      auto v = Matrix::from_rows(F5, {{x}, {y}});
      if (a * v == b) brute.insert({x, y});
    }
  for (unsigned c = 0; c < 5; ++c) {
    auto v = r.particular + r.kernel[0].scaled(c);
    param.insert({v(0, 0), v(1, 0)});
  }
  EXPECT_EQ(brute, param);
  EXPECT_EQ(brute.size(), 5u);
}

TEST(Solve, InconsistentSystem) {
  auto r = solve(Matrix::from_rows(F5, {{1, 2}, {2, 4}}), Matrix::from_rows(F5, {{1}, {1}}));
  EXPECT_FALSE(r.consistent);
}

TEST(Solve, ShapeMismatchThrows) {
  EXPECT_THROW(solve(Matrix(F5, 2, 2), Matrix(F5, 3, 1)), ContractError);
}

TEST(RankInverse, Examples) {
  EXPECT_EQ(rank(Matrix::identity(F5, 3)), 3u);
  EXPECT_EQ(*inverse(Matrix::identity(F5, 3)), Matrix::identity(F5, 3));
  auto s = Matrix::from_rows(F5, {{1, 2}, {2, 4}});
  EXPECT_EQ(rank(s), 1u);
  EXPECT_FALSE(inverse(s).has_value());
  auto a = Matrix::from_rows(F5, {{0, 2}, {1, 0}});
  auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, Matrix::from_rows(F5, {{0, 1}, {3, 0}}));
  EXPECT_TRUE((*inv * a).is_identity());
}

TEST(RankInverse, EmptyShapes) {
  EXPECT_EQ(rank(Matrix(F5, 0, 3)), 0u);
  EXPECT_EQ(nullspace(Matrix(F5, 0, 3)).size(), 3u);
  EXPECT_TRUE(inverse(Matrix(F5, 0, 0)).has_value());
}

TEST(RankInverse, RandomMatricesReverify) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    PrimeField f(trial % 2 ? 7 : 2);
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    auto a = random_matrix(f, r, c, rng);
    auto b = random_matrix(f, r, 1 + rng() % 3, rng);
    auto sol = solve(a, b);
    std::size_t rk = rank(a);
    auto ker = nullspace(a);
    EXPECT_EQ(ker.size(), c - rk);
    for (const auto& k : ker) EXPECT_TRUE((a * k).is_zero());
    if (sol.consistent) {
      EXPECT_EQ(sol.kernel.size(), ker.size());
      EXPECT_EQ(a * sol.particular, b);
    }
    // consistency agrees with rank of the augmented matrix
    Matrix aug(f, r, c + b.cols());
    aug.set_block(0, 0, a);
    aug.set_block(0, c, b);
    EXPECT_EQ(sol.consistent, rank(aug) == rk);
    if (r == c) {
      auto inv = inverse(a);
      EXPECT_EQ(inv.has_value(), rk == r);
      if (inv) {
        EXPECT_TRUE((*inv * a).is_identity());
        EXPECT_TRUE((a * *inv).is_identity());
      }
    }
  }
}

TEST(SpanBuilder, CoordinatesReconstructVector) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    SpanBuilder span(F7, 5);
    std::vector<std::vector<PrimeField::Elem>> inserted;
    for (int k = 0; k < 4; ++k) {
      auto v = random_matrix(F7, 1, 5, rng).flatten();
      if (k == 3 && !inserted.empty()) {
        // force a dependent vector
        for (std::size_t j = 0; j < 5; ++j) v[j] = F7.add(inserted[0][j], F7.mul(2, inserted.back()[j]));
      }
      if (span.add(v)) inserted.push_back(v);
    }
    auto target = std::vector<PrimeField::Elem>(5, 0);
    for (std::size_t k = 0; k < inserted.size(); ++k)
      for (std::size_t j = 0; j < 5; ++j) target[j] = F7.add(target[j], F7.mul(k + 1, inserted[k][j]));
    auto c = span.coordinates(target);
    ASSERT_TRUE(c.has_value());
    std::vector<PrimeField::Elem> back(5, 0);
    for (std::size_t k = 0; k < inserted.size(); ++k)
      for (std::size_t j = 0; j < 5; ++j) back[j] = F7.add(back[j], F7.mul((*c)[k], inserted[k][j]));
    EXPECT_EQ(back, target);
  }
}

TEST(Factor, Examples) {
  Rng rng(1);
  auto f1 = factor(Poly::from_ints(F5, {-1, 0, 1}), rng);
  ASSERT_EQ(f1.size(), 2u);
  EXPECT_EQ(f1[0].poly, Poly::from_ints(F5, {1, 1}));   // t + 1
  EXPECT_EQ(f1[1].poly, Poly::from_ints(F5, {-1, 1}));  // t - 1
  auto f2 = factor(Poly::from_ints(F5, {-2, 0, 1}), rng);
  ASSERT_EQ(f2.size(), 1u);
  EXPECT_EQ(f2[0].poly.degree(), 2);
  EXPECT_TRUE(is_irreducible(Poly::from_ints(F5, {-2, 0, 1})));
  auto f3 = factor(Poly::from_ints(F7, {0, -1, 0, 1}), rng);
  ASSERT_EQ(f3.size(), 3u);
  for (auto& fa : f3) {
    EXPECT_EQ(fa.poly.degree(), 1);
    EXPECT_EQ(fa.mult, 1);
  }
  EXPECT_THROW(factor(Poly(F5, {}), rng), ContractError);
}

TEST(Factor, RepeatedAndInseparableFactors) {
  Rng rng(2);
  // (t+1)^5 (t^2+2)^2 over F_5: the first factor has zero derivative
  Poly a = Poly::from_ints(F5, {1, 1}), b = Poly::from_ints(F5, {2, 0, 1});
  Poly f = a * a * a * a * a * b * b;
  auto fs = factor(f, rng);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].poly, a);
  EXPECT_EQ(fs[0].mult, 5);
  EXPECT_EQ(fs[1].poly, b);
  EXPECT_EQ(fs[1].mult, 2);
}

TEST(Factor, RandomPolynomialsReassemble) {
  Rng rng(2024);
  const std::uint32_t primes[] = {2, 3, 5, 7, 31};
  for (int trial = 0; trial < 1200; ++trial) {
    PrimeField f(primes[trial % 5]);
    int deg = 1 + static_cast<int>(rng() % 12);
    std::vector<PrimeField::Elem> c(deg + 1);
    for (auto& x : c) x = f.random(rng);
    c[deg] = f.random_nonzero(rng);
    Poly p(f, c);
    auto fs = factor(p, rng);
    Poly prod = Poly::constant(f, p.lead());
    for (auto& fa : fs) {
      EXPECT_TRUE(fa.poly.is_monic());
      for (int k = 0; k < fa.mult; ++k) prod = prod * fa.poly;
      // root test plus Rabin test, and trial division where cheap
      if (fa.poly.degree() > 1) {
        for (std::uint32_t x = 0; x < f.p(); ++x) EXPECT_NE(fa.poly.evaluate(x), 0u);
      }
      EXPECT_TRUE(is_irreducible(fa.poly));
      if (f.p() <= 3) {
        EXPECT_TRUE(irreducible_by_trial_division(fa.poly));
      }
    }
    ASSERT_EQ(prod, p) << "p=" << f.p() << " f=" << p;
  }
}

TEST(Factor, IrreducibilityAgreesWithTrialDivision) {
  for (std::uint32_t pr : {2u, 3u}) {
    PrimeField f(pr);
    for (int d = 1; d <= 5; ++d)
      for (const auto& q : all_monic(f, d)) EXPECT_EQ(is_irreducible(q), irreducible_by_trial_division(q)) << q;
  }
}

TEST(MinPoly, Examples) {
  EXPECT_EQ(min_poly(Matrix::identity(F5, 3)), Poly::from_ints(F5, {-1, 1}));
  auto d = Matrix::from_rows(F5, {{1, 0}, {0, 2}});
  EXPECT_EQ(min_poly(d), Poly::from_ints(F5, {-1, 1}) * Poly::from_ints(F5, {-2, 1}));
  auto j = Matrix::from_rows(F5, {{0, 1}, {0, 0}});
  EXPECT_EQ(min_poly(j), Poly::from_ints(F5, {0, 0, 1}));
}

TEST(MinPoly, AnnihilatesAndIsMinimal) {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 5;
    auto x = random_matrix(F7, n, n, rng);
    auto m = min_poly(x);
    EXPECT_TRUE(m.is_monic());
    EXPECT_TRUE(m.evaluate(x).is_zero());
    // no nonzero polynomial of smaller degree kills x: powers are independent
    SpanBuilder span(F7, n * n);
    Matrix pw = Matrix::identity(F7, n);
    for (int k = 0; k < m.degree(); ++k) {
      EXPECT_TRUE(span.add(pw.flatten()));
      pw = pw * x;
    }
  }
}
