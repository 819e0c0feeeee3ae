#include <gtest/gtest.h>

#include "eqcat/smash.hpp"
#include "eqcat/suite.hpp"
#include "fixtures.hpp"

using namespace eqcat;
using namespace eqcat::testing;

namespace {

const PrimeField F5(5);

void expect_ok(const CheckReport& rep) { EXPECT_TRUE(rep.ok()) << rep.to_json().dump(); }

GAlgebra trivial_on(const PrimeField& f, const Group& G, std::size_t d) {
  std::vector<std::vector<int>> perm(G.order(), std::vector<int>(d));
  for (auto& p : perm)
    for (std::size_t i = 0; i < d; ++i) p[i] = static_cast<int>(i);
  return permutation_galgebra(f, G, perm);
}

Algebra matrix_algebra(const PrimeField& f, std::size_t n) {
  // basis E_{ab} at index a*n + b
  Algebra A{f, n * n, {}, std::vector<PrimeField::Elem>(n * n, 0)};
  A.mult.assign(n * n, std::vector<std::vector<PrimeField::Elem>>(n * n, std::vector<PrimeField::Elem>(n * n, 0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) A.mult[a * n + b][b * n + c][a * n + c] = 1;
  for (std::size_t a = 0; a < n; ++a) A.unit[a * n + a] = 1;
  return A;
}

// F25 = F5[t]/(t^2 - 2) with C2 acting by the Frobenius t -> t^5 = -t
GAlgebra f25_galois() {
  GAlgebra A;
  A.S = Algebra{F5, 2, {{{1, 0}, {0, 1}}, {{0, 1}, {2, 0}}}, {1, 0}};
  A.G = Group::cyclic(2);
  A.action = {Matrix::identity(F5, 2), Matrix::from_rows(F5, {{1, 0}, {0, 4}})};
  return A;
}

}  // namespace

TEST(Algebra, Validation) {
  expect_ok(validate_algebra(matrix_algebra(F5, 2)));
  Algebra bad = matrix_algebra(F5, 2);
  bad.mult[0][0][3] = 1;
  EXPECT_FALSE(validate_algebra(bad).ok());
  Algebra no_unit = matrix_algebra(F5, 2);
  no_unit.unit = {1, 0, 0, 0};
  EXPECT_FALSE(validate_algebra(no_unit).ok());
  expect_ok(validate_galgebra(f25_galois()));
  GAlgebra wrong = f25_galois();
  wrong.action[1] = Matrix::from_rows(F5, {{1, 0}, {0, 2}});
  EXPECT_FALSE(validate_galgebra(wrong).ok());
}

TEST(SmashProduct, Examples) {
  Group s3 = Group::symmetric(3);
  GAlgebra S = permutation_galgebra(F5, s3, s3.permutations());
  Algebra one = smash_product(S, trivial_subgroup(s3));
  EXPECT_EQ(one.mult, S.S.mult);
  EXPECT_EQ(one.unit, S.S.unit);
  Algebra full = smash_product(S, whole(s3));
  EXPECT_EQ(full.dim, 18u);
  Algebra group_alg = smash_product(trivial_on(F5, Group::cyclic(2), 1), whole(Group::cyclic(2)));
  EXPECT_EQ(group_alg.dim, 2u);
  // g * g = 1
  EXPECT_EQ(group_alg.product({0, 1}, {0, 1}), (std::vector<PrimeField::Elem>{1, 0}));
  for (const auto& H : subgroups(s3)) EXPECT_EQ(smash_product(S, H).dim, 3u * H.order());
}

TEST(BlockStructure, Examples) {
  Rng rng(1);
  auto two = block_structure(smash_product(trivial_on(F5, Group::cyclic(2), 1), whole(Group::cyclic(2))), rng);
  ASSERT_EQ(two.size(), 2u);
  for (const auto& b : two) {
    EXPECT_EQ(b.size, 1u);
    EXPECT_EQ(b.degree, 1u);
  }
  auto m2 = block_structure(matrix_algebra(F5, 2), rng);
  ASSERT_EQ(m2.size(), 1u);
  EXPECT_EQ(m2[0].size, 2u);
  EXPECT_EQ(m2[0].degree, 1u);
  // F25 # F5[C2] is 2x2 matrices over F5; F25 alone is one block of degree 2
  auto gal = block_structure(smash_product(f25_galois(), whole(Group::cyclic(2))), rng);
  ASSERT_EQ(gal.size(), 1u);
  EXPECT_EQ(gal[0].size, 2u);
  EXPECT_EQ(gal[0].degree, 1u);
  auto field = block_structure(f25_galois().S, rng);
  ASSERT_EQ(field.size(), 1u);
  EXPECT_EQ(field[0].degree, 2u);
  // F5[C5] is not semisimple
  Group c5 = Group::cyclic(5);
  EXPECT_THROW(block_structure(smash_product(trivial_on(F5, c5, 1), whole(c5)), rng), SplitError);
}

TEST(CompareWithAbstract, Examples) {
  Rng rng(2);
  expect_ok(compare_with_abstract(trivial_on(F5, Group::cyclic(1), 1), whole(Group::cyclic(1)), rng));
  Group c2 = Group::cyclic(2);
  GAlgebra swap = permutation_galgebra(F5, c2, {{0, 1}, {1, 0}});
  auto blocks = block_structure(smash_product(swap, whole(c2)), rng);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].size, 2u);
  expect_ok(compare_with_abstract(swap, whole(c2), rng));
  EXPECT_THROW(compare_with_abstract(f25_galois(), whole(c2), rng), InputError);
}

TEST(CompareWithAbstract, S3PermutingThreeCoordinates) {
  Rng rng(3);
  Group s3 = Group::symmetric(3);
  GAlgebra S = permutation_galgebra(F5, s3, s3.permutations());
  std::map<int, std::size_t> counts;
  for (const auto& H : subgroups(s3)) {
    expect_ok(compare_with_abstract(S, H, rng));
    counts[H.order()] = block_structure(smash_product(S, H), rng).size();
  }
  // orbits and stabilizers: {1}: three points; C2: a fixed point (two characters) and a
  // free orbit; C3: one free orbit; S3: one orbit with stabilizer C2
  EXPECT_EQ(counts, (std::map<int, std::size_t>{{1, 3}, {2, 3}, {3, 1}, {6, 2}}));
}

TEST(CompareWithAbstract, RandomPermutationActions) {
  Rng rng(4);
  const std::vector<Group> gs{Group::cyclic(2), Group::cyclic(4), Group::symmetric(3), dihedral4()};
  for (int trial = 0; trial < 12; ++trial) {
    const Group& G = gs[trial % gs.size()];
    const PrimeField f(trial % 2 ? 7 : 13);
    auto perm = random_permutation_action(G, 1 + trial % 4, rng);
    GAlgebra S = permutation_galgebra(f, G, perm);
    expect_ok(validate_galgebra(S));
    for (const auto& H : subgroups(G)) expect_ok(compare_with_abstract(S, H, rng));
  }
}

TEST(SmashSuite, StructureConstantAlgebraIsSplitWithoutComparison) {
  CheckReport rep = smash_suite(f25_galois(), SuiteOptions{});
  expect_ok(rep);
  std::size_t split = 0;
  for (const auto& item : rep.items()) split += item.id.find("smash-blocks:") != std::string::npos;
  EXPECT_EQ(split, 2u);
}
