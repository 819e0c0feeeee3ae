#include <gtest/gtest.h>

#include <map>

#include "eqcat/split.hpp"
#include "fixtures.hpp"

using namespace eqcat;
using namespace eqcat::testing;

namespace {

const PrimeField F5(5);
const PrimeField F7(7);

MatAlgebra full_matrices(const PrimeField& f, std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(f, n, n);
      e(i, j) = 1;
      basis.push_back(e);
    }
  return {f, n, basis, Matrix::identity(f, n)};
}

MatAlgebra diagonal(const PrimeField& f, std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix e(f, n, n);
    e(i, i) = 1;
    basis.push_back(e);
  }
  return {f, n, basis, Matrix::identity(f, n)};
}

void check_idempotent_family(const MatAlgebra& A, const std::vector<Idempotent>& es) {
  Matrix sum(A.field, A.size, A.size);
  for (std::size_t a = 0; a < es.size(); ++a) {
    EXPECT_EQ(es[a].e * es[a].e, es[a].e);
    sum = sum + es[a].e;
    for (std::size_t b = 0; b < es.size(); ++b)
      if (a != b) {
        EXPECT_TRUE((es[a].e * es[b].e).is_zero());
      }
  }
  EXPECT_EQ(sum, A.unit);
}

std::vector<std::size_t> dims(const SimplesResult& r) {
  std::vector<std::size_t> out;
  for (const auto& s : r.simples) out.push_back(s.obj.obj.total());
  return out;
}

}  // namespace

TEST(Center, Examples) {
  EXPECT_EQ(center(full_matrices(F5, 2)).dim(), 1u);
  EXPECT_EQ(center(diagonal(F5, 2)).dim(), 2u);
  ActionData triv = ActionData::trivial(F5, Group::cyclic(2), 1);
  EqObject A = ind(triv, whole(triv.group()), point_object(triv, 0));
  MatAlgebra E = end_algebra(triv, A);
  check_algebra(E);
  MatAlgebra Z = center(E);
  EXPECT_EQ(Z.dim(), 2u);
  EXPECT_TRUE(is_commutative(Z));
}

TEST(PrimitiveIdempotents, Examples) {
  Rng rng(1);
  MatAlgebra scal{F5, 2, {Matrix::identity(F5, 2)}, Matrix::identity(F5, 2)};
  auto one = primitive_idempotents(scal, rng);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].e.is_identity());

  auto diag = primitive_idempotents(diagonal(F5, 2), rng);
  ASSERT_EQ(diag.size(), 2u);
  check_idempotent_family(diagonal(F5, 2), diag);
  for (const auto& e : diag) EXPECT_EQ(rank(e.e), 1u);

  // F25 as F5[t]/(t^2 - 2) inside 2x2 matrices
  Matrix t = Matrix::from_rows(F5, {{0, 2}, {1, 0}});
  MatAlgebra field{F5, 2, {Matrix::identity(F5, 2), t}, Matrix::identity(F5, 2)};
  auto fe = primitive_idempotents(field, rng);
  ASSERT_EQ(fe.size(), 1u);
  EXPECT_TRUE(fe[0].e.is_identity());
  EXPECT_EQ(fe[0].degree, 2u);

  Matrix nil = Matrix::from_rows(F5, {{0, 1}, {0, 0}});
  MatAlgebra dual{F5, 2, {Matrix::identity(F5, 2), nil}, Matrix::identity(F5, 2)};
  EXPECT_THROW(primitive_idempotents(dual, rng), SplitError);
}

TEST(PrimitiveIdempotents, RandomDiagonalizable) {
  // conjugates of diagonal algebras with repeated eigen-blocks
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    Matrix P = random_matrix(F7, n, n, rng);
    while (!inverse(P)) P = random_matrix(F7, n, n, rng);
    Matrix Pi = *inverse(P);
    MatAlgebra D = diagonal(F7, n);
    for (auto& b : D.basis) b = P * b * Pi;
    auto es = primitive_idempotents(D, rng);
    EXPECT_EQ(es.size(), n);
    check_idempotent_family(D, es);
  }
}

TEST(PrimitiveInBlock, FullMatrixAlgebra) {
  Rng rng(2);
  MatAlgebra M3 = full_matrices(F5, 3);
  Matrix e = primitive_in_block(M3, M3.unit, 1, rng);
  EXPECT_EQ(e * e, e);
  EXPECT_EQ(rank(e), 1u);
}

TEST(Simples, TrivialS3) {
  Rng rng(3);
  Group s3 = Group::symmetric(3);
  ActionData act = ActionData::trivial(F7, s3, 1);
  auto r = simples_of(act, whole(s3), rng);
  EXPECT_TRUE(r.certificate.ok()) << r.certificate.to_json().dump();
  EXPECT_EQ(dims(r), (std::vector<std::size_t>{1, 1, 2}));
  std::map<int, std::size_t> count;
  for (const auto& H : subgroups(s3)) count[H.order()] = simples_of(act, H, rng).simples.size();
  EXPECT_EQ(count, (std::map<int, std::size_t>{{1, 1}, {2, 2}, {3, 3}, {6, 3}}));
}

TEST(Simples, TwistedC2) {
  Rng rng(4);
  auto sq = simples_of(c2_scalar(F5, 4), whole(Group::cyclic(2)), rng);
  EXPECT_TRUE(sq.certificate.ok());
  ASSERT_EQ(sq.simples.size(), 2u);
  std::vector<PrimeField::Elem> roots;
  for (const auto& s : sq.simples) {
    EXPECT_EQ(s.obj.obj.total(), 1u);
    roots.push_back(s.obj.mu[1].blocks[0](0, 0));
  }
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<PrimeField::Elem>{2, 3}));

  auto ns = simples_of(c2_scalar(F5, 2), whole(Group::cyclic(2)), rng);
  EXPECT_TRUE(ns.certificate.ok());
  ASSERT_EQ(ns.simples.size(), 1u);
  EXPECT_EQ(ns.simples[0].obj.obj.total(), 2u);
  EXPECT_EQ(ns.simples[0].end_dim, 2u);
  EXPECT_EQ(hom_dim(c2_scalar(F5, 2), ns.simples[0].obj, ns.simples[0].obj), 2u);
}

TEST(Simples, RandomActionsCertified) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Group g = trial % 4 == 0 ? Group::cyclic(4)
                    : trial % 4 == 1 ? Group::symmetric(3)
                    : trial % 4 == 2 ? dihedral4()
                                     : Group::cyclic(2);
    const PrimeField f(trial % 2 ? 5 : 7);
    if (g.order() % 5 == 0 || (g.order() % 7 == 0)) continue;
    ActionData act = random_action(f, g, 1 + trial % 4, rng);
    for (const auto& H : subgroups(g)) {
      auto r = simples_of(act, H, rng);
      EXPECT_TRUE(r.certificate.ok()) << r.certificate.to_json().dump();
      for (const auto& s : r.simples) EXPECT_TRUE(is_eq_object(act, s.obj));
    }
  }
}
