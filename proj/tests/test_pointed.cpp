#include <gtest/gtest.h>

#include "eqcat/pointed.hpp"
#include "fixtures.hpp"

using namespace eqcat;
using namespace eqcat::testing;

namespace {

const PrimeField F7(7);

void expect_ok(const CheckReport& rep) { EXPECT_TRUE(rep.ok()) << rep.to_json().dump(); }

Group klein() { return Group::from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}}); }

std::vector<PointedData> pointed_samples(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PointedData> out;
  const std::vector<Group> gs{Group::cyclic(2), Group::cyclic(4), Group::symmetric(3), dihedral4()};
  const std::vector<Group> es{Group::cyclic(2), Group::cyclic(3), Group::cyclic(4), klein()};
  for (int k = 0; k < count; ++k) {
    const PrimeField f(k % 2 ? 13 : 37);
    out.push_back(random_pointed(f, gs[k % gs.size()], es[(k / 2) % es.size()], rng));
  }
  return out;
}

}  // namespace

TEST(ValidatePointed, Examples) {
  Group c2 = Group::cyclic(2);
  expect_ok(PointedData::untwisted(ActionData::trivial(F7, c2, 3), Group::cyclic(3)).validate());
  expect_ok(c3_by_inversion(F7).validate());
  auto tau = c3_by_inversion(F7).tau_table();
  tau[1][0][1] = 2;
  PointedData bad(c3_by_inversion(F7).action(), Group::cyclic(3), tau);
  auto rep = bad.validate();
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.first_failure()->id.substr(0, 5), "unit:");
  // a 3-cycle on C3 labels is not an automorphism
  std::vector<std::vector<int>> sigma{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::vector<PrimeField::Elem>>> lambda(
      3, std::vector<std::vector<PrimeField::Elem>>(3, std::vector<PrimeField::Elem>(3, 1)));
  PointedData shifted = PointedData::untwisted(ActionData(F7, Group::cyclic(3), 3, sigma, lambda), Group::cyclic(3));
  EXPECT_EQ(shifted.validate().first_failure()->id.substr(0, 12), "automorphism");
}

TEST(ValidatePointed, CompatibilityViolationNamed) {
  PointedData P = c3_by_inversion(F7);
  auto tau = P.tau_table();
  // changing a single tau^g value breaks compatibility with lambda = 1
  tau[1][1][1] = 3;
  PointedData bad(P.action(), P.labels(), tau);
  auto rep = bad.validate();
  ASSERT_FALSE(rep.ok());
  bool named = false;
  for (const auto& it : rep.items())
    if (!it.ok && it.id.rfind("compatibility", 0) == 0) named = it.witness.contains("i") && it.witness.contains("j");
  EXPECT_TRUE(named);
}

TEST(ValidatePointed, RandomAndGaugedDataValid) {
  Rng rng(99);
  for (const auto& P : pointed_samples(24, 1)) {
    expect_ok(P.validate());
    auto beta = random_gauge(P.field(), P.action().group().order(), P.action().n(), rng);
    for (auto& b : beta) b[0] = 1;
    expect_ok(gauge_pointed(P, beta).validate());
  }
}

TEST(Tensor, Objects) {
  PointedData P = c3_by_inversion(F7);
  Obj unit = simple_obj(3, 0);
  Obj M{{2, 1, 3}};
  EXPECT_EQ(tensor_obj(P, unit, M), M);
  EXPECT_EQ(tensor_obj(P, M, unit), M);
  EXPECT_EQ(tensor_obj(P, simple_obj(3, 1), simple_obj(3, 2)), unit);
  EXPECT_EQ(tensor_obj(P, M, Obj{{1, 1, 1}}), (Obj{{6, 6, 6}}));
}

TEST(Tensor, BifunctorialityOnRandomMorphisms) {
  Rng rng(3);
  for (const auto& P : pointed_samples(6, 5)) {
    const std::size_t n = P.action().n();
    auto rnd_obj = [&] {
      Obj o{std::vector<std::size_t>(n)};
      for (auto& x : o.m) x = rng() % 3;
      return o;
    };
    auto rnd_mor = [&](const Obj& a, const Obj& b) {
      Mor m = zero_mor(P.field(), a, b);
      for (auto& blk : m.blocks) blk = random_matrix(P.field(), blk.rows(), blk.cols(), rng);
      return m;
    };
    Obj a = rnd_obj(), b = rnd_obj(), c = rnd_obj(), x = rnd_obj(), y = rnd_obj(), z = rnd_obj();
    Mor f1 = rnd_mor(a, b), f2 = rnd_mor(b, c), g1 = rnd_mor(x, y), g2 = rnd_mor(y, z);
    EXPECT_EQ(tensor_mor(P, f2, g2) * tensor_mor(P, f1, g1), tensor_mor(P, f2 * f1, g2 * g1));
    EXPECT_TRUE(is_identity(tensor_mor(P, identity_mor(P.field(), a), identity_mor(P.field(), x))));
    // the monoidal maps are natural
    const Group& G = P.action().group();
    for (int g = 0; g < G.order(); ++g) {
      Mor lhs = monoidal_map(P, g, b, y) * P.action().act_mor(g, tensor_mor(P, f1, g1));
      Mor rhs = tensor_mor(P, P.action().act_mor(g, f1), P.action().act_mor(g, g1)) * monoidal_map(P, g, a, x);
      EXPECT_EQ(lhs, rhs);
      EXPECT_TRUE(is_identity(monoidal_map(P, g, a, x, true) * monoidal_map(P, g, a, x)));
    }
  }
}

TEST(TensorEq, ValidUnitAndAssociator) {
  for (const auto& P : pointed_samples(8, 7)) {
    const ActionData& act = P.action();
    for (const auto& H : subgroups(act.group())) {
      auto objs = sample_objects(act, H);
      EqObject u = unit_object(P, H);
      for (const auto& A : objs) {
        EXPECT_TRUE(same_data(tensor_eq(P, u, A), A));
        EXPECT_TRUE(same_data(tensor_eq(P, A, u), A));
        for (const auto& B : objs) expect_ok(check_eq_object(act, tensor_eq(P, A, B)));
      }
      const EqObject& A = objs[0];
      const EqObject& B = objs.back();
      EqMorphism as = associator(P, A, B, A);
      expect_ok(check_eq_iso(act, as, "associator"));
    }
  }
}

TEST(TensorEq, RegularTimesSimple) {
  PointedData P = c3_by_inversion(F7);
  const ActionData& act = P.action();
  Subgroup all = whole(act.group());
  EqObject reg = ind(act, all, bare_simple(act, 0));
  for (std::size_t i = 0; i < 3; ++i) {
    EqObject s = ind(act, all, bare_simple(act, i));
    expect_ok(check_eq_object(act, tensor_eq(P, reg, s)));
  }
}

TEST(TensorEq, DistributesOverDirectSum) {
  Rng rng(12);
  for (const auto& P : pointed_samples(6, 8)) {
    const ActionData& act = P.action();
    auto objs = sample_objects(act, trivial_subgroup(act.group()));
    const EqObject& M = objs[0];
    EqObject sum = direct_sum(act, std::vector<EqObject>{objs[0], objs[1]}).sum;
    EqObject lhs = tensor_eq(P, M, sum);
    EqObject rhs = direct_sum(act, std::vector<EqObject>{tensor_eq(P, M, objs[0]), tensor_eq(P, M, objs[1])}).sum;
    auto r = is_iso(act, lhs, rhs, rng);
    EXPECT_TRUE(r.iso);
    EXPECT_TRUE(r.certified);
  }
}

TEST(ModuleStructure, DegenerateCases) {
  PointedData P = c3_by_inversion(F7);
  const ActionData& act = P.action();
  Subgroup all = whole(act.group());
  for (const auto& V : sample_objects(act, trivial_subgroup(act.group()))) {
    EqMorphism u = ind_module_structure(P, all, unit_object(P, all), V);
    EXPECT_TRUE(is_identity(u.f));
  }
  for (const auto& V : sample_objects(act, all))
    for (const auto& M : sample_objects(act, all)) EXPECT_TRUE(is_identity(ind_module_structure(P, all, M, V).f));
}

TEST(ModuleStructure, ValidAndDiagramsClose) {
  std::vector<PointedData> data = pointed_samples(8, 21);
  data.push_back(c3_by_inversion(F7));
  for (const auto& P : data) {
    const ActionData& act = P.action();
    const Subgroup G = whole(act.group());
    auto ms = small_objects(act, G);
    for (const auto& H : subgroups(act.group()))
      for (const auto& L : subgroups(act.group())) {
        if (!L.is_subgroup_of(H)) continue;
        for (const auto& V : small_objects(act, L)) {
          expect_ok(check_eq_iso(act, ind_module_structure(P, H, ms[0], V), "module"));
          expect_ok(check_module_diagrams(P, H, ms[0], ms.back(), V));
        }
      }
  }
}

TEST(Frobenius, Examples) {
  PointedData P = c3_by_inversion(F7);
  const ActionData& act = P.action();
  Subgroup all = whole(act.group()), one = trivial_subgroup(act.group());
  for (const auto& M : small_objects(act, one)) {
    auto r = frobenius_iso(P, all, M, unit_object(P, all));
    expect_ok(r.report);
    EXPECT_TRUE(is_identity(r.witness.f));
    for (const auto& V : small_objects(act, all)) expect_ok(frobenius_iso(P, all, M, V).report);
  }
}

TEST(Frobenius, AllPairs) {
  for (const auto& P : pointed_samples(6, 31)) {
    const ActionData& act = P.action();
    const Subgroup G = whole(act.group());
    for (const auto& H : subgroups(act.group()))
      for (const auto& L : subgroups(act.group())) {
        if (!L.is_subgroup_of(H)) continue;
        for (const auto& M : small_objects(act, L))
          for (const auto& V : small_objects(act, G)) expect_ok(frobenius_iso(P, H, M, V).report);
      }
  }
}

TEST(GreenCategorical, InversionAndRandom) {
  std::vector<PointedData> data = pointed_samples(6, 41);
  data.push_back(c3_by_inversion(F7));
  for (const auto& P : data) {
    const ActionData& act = P.action();
    auto subs = subgroups(act.group());
    for (const auto& H : subs) {
      auto ms = small_objects(act, H);
      for (const auto& K : subs)
        for (const auto& L : subs) {
          if (!K.is_subgroup_of(H) || !L.is_subgroup_of(H)) continue;
          for (const auto& V : small_objects(act, L)) expect_ok(green_categorical_check(P, K, ms.back(), V));
        }
    }
  }
}
