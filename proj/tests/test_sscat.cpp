#include <gtest/gtest.h>

#include "eqcat/functors.hpp"
#include "eqcat/random_data.hpp"

using namespace eqcat;

namespace {

const PrimeField F5(5);

ActionData c2_scalar(PrimeField f, PrimeField::Elem c) {
  ActionData triv = ActionData::trivial(f, Group::cyclic(2), 1);
  auto lambda = triv.lambda_table();
  lambda[1][1][0] = c;
  return ActionData(f, Group::cyclic(2), 1, triv.sigma_table(), lambda);
}

// One-dimensional object over C2 with mu^g = u (valid iff u^2 = lambda^{g,g}).
EqObject line_c2(const ActionData& act, PrimeField::Elem u) {
  Obj o{{1}};
  Mor g{o, o, {Matrix::scalar(act.field(), 1, u)}};
  return EqObject{whole(act.group()), o, {identity_mor(act.field(), o), g}};
}

// Dimension of the equivariant Hom space by enumerating every morphism.
std::size_t brute_force_hom_dim(const ActionData& act, const EqObject& M, const EqObject& N) {
  const PrimeField& f = act.field();
  std::size_t unknowns = 0;
  for (std::size_t j = 0; j < act.n(); ++j) unknowns += M.obj.m[j] * N.obj.m[j];
  std::size_t total = 1;
  for (std::size_t k = 0; k < unknowns; ++k) total *= f.p();
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<PrimeField::Elem> v(unknowns);
    std::size_t c = code;
    for (auto& x : v) {
      x = static_cast<PrimeField::Elem>(c % f.p());
      c /= f.p();
    }
    if (is_eq_morphism(act, {M, N, mor_from_vector(f, M.obj, N.obj, v)})) ++count;
  }
  std::size_t dim = 0;
  while (count > 1) {
    count /= f.p();
    ++dim;
  }
  return dim;
}

}  // namespace

TEST(ValidateAction, Examples) {
  EXPECT_TRUE(ActionData::trivial(F5, Group::symmetric(3), 2).validate().ok());
  for (PrimeField::Elem c = 1; c < 5; ++c) EXPECT_TRUE(c2_scalar(F5, c).validate().ok());
  ActionData triv = ActionData::trivial(F5, Group::cyclic(2), 1);
  auto lambda = triv.lambda_table();
  lambda[1][0][0] = 2;
  ActionData bad(F5, Group::cyclic(2), 1, triv.sigma_table(), lambda);
  auto rep = bad.validate();
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.first_failure()->id.substr(0, 13), "normalization");
}

TEST(ValidateAction, CocycleViolationNamesTriple) {
  // C3 on one simple with lambda^{g,g} = 2 and everything else 1 is not a cocycle
  ActionData triv = ActionData::trivial(F5, Group::cyclic(3), 1);
  auto lambda = triv.lambda_table();
  lambda[1][1][0] = 2;
  ActionData bad(F5, Group::cyclic(3), 1, triv.sigma_table(), lambda);
  auto rep = bad.validate();
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.first_failure()->id.substr(0, 7), "cocycle");
  EXPECT_TRUE(rep.first_failure()->witness.contains("g"));
}

TEST(ValidateAction, NonHomomorphismRejected) {
  Group c2 = Group::cyclic(2);
  std::vector<std::vector<int>> sigma{{0, 1, 2}, {1, 2, 0}};  // order-3 permutation for an involution
  std::vector<std::vector<std::vector<PrimeField::Elem>>> lambda(2, std::vector<std::vector<PrimeField::Elem>>(2, {1, 1, 1}));
  ActionData a(F5, c2, 3, sigma, lambda);
  EXPECT_FALSE(a.validate().ok());
}

TEST(ValidateAction, RandomActionsAreValid) {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Group g = trial % 3 == 0 ? Group::cyclic(4) : trial % 3 == 1 ? Group::symmetric(3) : Group::cyclic(6);
    auto act = random_action(PrimeField(7), g, 1 + trial % 4, rng);
    EXPECT_TRUE(act.validate().ok()) << act.validate().first_failure()->message;
  }
}

TEST(Act, ObjectsAndMorphisms) {
  Group c2 = Group::cyclic(2);
  std::vector<std::vector<int>> sigma{{0, 1}, {1, 0}};
  std::vector<std::vector<std::vector<PrimeField::Elem>>> lambda(2, std::vector<std::vector<PrimeField::Elem>>(2, {1, 1}));
  ActionData swap(F5, c2, 2, sigma, lambda);
  Obj m{{3, 0}};
  EXPECT_EQ(swap.act_obj(0, m), m);
  EXPECT_EQ(swap.act_obj(1, m), (Obj{{0, 3}}));
  Rng rng(1);
  ActionData act = random_action(F5, Group::symmetric(3), 3, rng);
  Obj a{{1, 2, 0}}, b{{2, 1, 1}}, c{{0, 1, 2}};
  Mor f = zero_mor(F5, a, b), h = zero_mor(F5, b, c);
  for (auto& blk : f.blocks) blk = random_matrix(F5, blk.rows(), blk.cols(), rng);
  for (auto& blk : h.blocks) blk = random_matrix(F5, blk.rows(), blk.cols(), rng);
  for (int g = 0; g < 6; ++g) {
    EXPECT_EQ(act.act_mor(g, h * f), act.act_mor(g, h) * act.act_mor(g, f));
    for (int k = 0; k < 6; ++k) EXPECT_EQ(act.act_obj(g, act.act_obj(k, a)), act.act_obj(act.group().mul(g, k), a));
  }
}

TEST(T2, ScalarsAndNaturality) {
  ActionData act = c2_scalar(F5, 3);
  Obj m{{2}};
  EXPECT_EQ(act.t2(1, 1, m).blocks[0], Matrix::scalar(F5, 2, 3));
  EXPECT_TRUE(is_identity(act.t2(0, 1, m)));
  EXPECT_TRUE(is_identity(act.t2(1, 0, m)));
  Rng rng(4);
  ActionData r = random_action(F5, Group::cyclic(4), 3, rng);
  Obj a{{1, 2, 1}}, b{{2, 0, 3}};
  Mor f = zero_mor(F5, a, b);
  for (auto& blk : f.blocks) blk = random_matrix(F5, blk.rows(), blk.cols(), rng);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      Mor lhs = r.act_mor(r.group().mul(g, h), f) * r.t2(g, h, a);
      Mor rhs = r.t2(g, h, b) * r.act_mor(g, r.act_mor(h, f));
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(HomBasis, Examples) {
  ActionData triv = c2_scalar(F5, 1);
  EqObject plus = line_c2(triv, 1), minus = line_c2(triv, 4);
  EXPECT_TRUE(is_eq_object(triv, plus));
  EXPECT_TRUE(is_eq_object(triv, minus));
  EXPECT_EQ(hom_dim(triv, plus, plus), 1u);
  EXPECT_EQ(hom_dim(triv, plus, minus), 0u);
  // disjoint supports
  ActionData t2 = ActionData::trivial(F5, Group::cyclic(2), 2);
  EqObject x0 = trivial_structure(t2, whole(t2.group()), simple_obj(2, 0));
  EqObject x1 = trivial_structure(t2, whole(t2.group()), simple_obj(2, 1));
  EXPECT_EQ(hom_dim(t2, x0, x1), 0u);
}

TEST(HomBasis, InvalidStructureDetected) {
  ActionData act = c2_scalar(F5, 4);
  EXPECT_TRUE(is_eq_object(act, line_c2(act, 2)));
  EXPECT_TRUE(is_eq_object(act, line_c2(act, 3)));
  EXPECT_FALSE(is_eq_object(act, line_c2(act, 1)));
}

TEST(HomBasis, AgreesWithEnumerationAndIsSymmetric) {
  Rng rng(9);
  const PrimeField F3(3);
  for (int trial = 0; trial < 12; ++trial) {
    Group g = trial % 2 ? Group::cyclic(2) : Group::cyclic(4);
    ActionData act = random_action(F3, g, 1 + trial % 2, rng);
    // small inductions from the trivial subgroup and from an intermediate subgroup
    Subgroup one = trivial_subgroup(g);
    std::vector<EqObject> objs;
    for (std::size_t i = 0; i < act.n(); ++i) {
      EqObject xi{one, simple_obj(act.n(), i), {identity_mor(act.field(), simple_obj(act.n(), i))}};
      objs.push_back(ind(act, whole(g), xi));
    }
    for (const auto& M : objs)
      for (const auto& N : objs) {
        auto basis = hom_basis(act, M, N);
        for (const auto& b : basis) EXPECT_TRUE(is_eq_morphism(act, b));
        EXPECT_EQ(basis.size(), hom_dim(act, N, M));
        std::size_t unknowns = 0;
        for (std::size_t j = 0; j < act.n(); ++j) unknowns += M.obj.m[j] * N.obj.m[j];
        if (unknowns <= 8) {
          EXPECT_EQ(basis.size(), brute_force_hom_dim(act, M, N));
        }
      }
  }
}

TEST(IsIso, Examples) {
  Rng rng(1);
  ActionData act = c2_scalar(F5, 4);
  EqObject a = line_c2(act, 2), b = line_c2(act, 3);
  auto same = is_iso(act, a, a, rng);
  EXPECT_TRUE(same.iso);
  ASSERT_TRUE(same.witness.has_value());
  EXPECT_TRUE(is_eq_morphism(act, *same.witness));
  auto diff = is_iso(act, a, b, rng);
  EXPECT_FALSE(diff.iso);
  EXPECT_TRUE(diff.certified);
  auto big = direct_sum(act, {a, a}).sum;
  auto r = is_iso(act, a, big, rng);
  EXPECT_FALSE(r.iso);
  EXPECT_TRUE(r.certified);
  // a ⊕ b against b ⊕ a: isomorphic by a swap
  auto ab = direct_sum(act, {a, b}).sum, ba = direct_sum(act, {b, a}).sum;
  auto sw = is_iso(act, ab, ba, rng);
  EXPECT_TRUE(sw.iso);
  EXPECT_TRUE(sw.certified);
}

TEST(DirectSum, Examples) {
  ActionData triv = c2_scalar(F5, 1);
  EqObject plus = line_c2(triv, 1), minus = line_c2(triv, 4);
  auto single = direct_sum(triv, {plus});
  EXPECT_EQ(single.sum.mu, plus.mu);
  auto both = direct_sum(triv, {plus, minus});
  EXPECT_EQ(both.sum.mu[1].blocks[0], Matrix::from_rows(F5, {{1, 0}, {0, -1}}));
  for (const auto& i : both.inj) EXPECT_TRUE(is_eq_morphism(triv, i));
  for (const auto& p : both.proj) EXPECT_TRUE(is_eq_morphism(triv, p));
  EXPECT_TRUE(is_identity(compose(both.proj[0].f, both.inj[0].f)));
  EXPECT_TRUE(is_zero(compose(both.proj[1].f, both.inj[0].f)));
  auto left = direct_sum(triv, {direct_sum(triv, {plus, minus}).sum, plus}).sum;
  auto right = direct_sum(triv, {plus, direct_sum(triv, {minus, plus}).sum}).sum;
  EXPECT_TRUE(is_eq_morphism(triv, {left, right, identity_mor(F5, left.obj)}));
}

TEST(EqFromGenerators, ExtendsAndValidates) {
  ActionData act = c2_scalar(F5, 4);
  Obj o{{1}};
  auto M = eq_from_generators(act, whole(act.group()), o, {{1, Mor{o, o, {Matrix::scalar(F5, 1, 2)}}}});
  EXPECT_TRUE(is_eq_object(act, M));
  EXPECT_THROW(eq_from_generators(act, whole(act.group()), o, {{1, Mor{o, o, {Matrix::scalar(F5, 1, 1)}}}}),
               InputError);
}
