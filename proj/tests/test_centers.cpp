#include <gtest/gtest.h>

#include "catcore/centers.hpp"
#include "catcore/errors.hpp"
#include "fixture_set.hpp"
#include "oracles.hpp"

using namespace catcore;

namespace {

ActionPtr inv_c4() { return fixtures::action_cases()[2].action; }
ActionPtr trivial_c2_on_c2() { return fixtures::action_cases()[1].action; }

std::vector<ActionPtr> strict_cases() {
  std::vector<ActionPtr> out;
  for (const auto& c : fixtures::action_cases())
    if (c.action->is_strict()) out.push_back(c.action);
  return out;
}

int grade_count(const GCrossedCat& z, int g) { return static_cast<int>(z.objects_of_grade(g).size()); }

}  // namespace

TEST(Centers, GradeSizesMatchOracle) {
  const FinGroup c2 = cyclic_group(2), c4 = cyclic_group(4);
  const GCrossedCat triv = build_ZG(fixtures::ptr(trivial_action(c2, fixtures::sigma(c4))));
  for (int g = 0; g < 2; ++g) EXPECT_EQ(grade_count(triv, g), oracle::center_size(c4));
  const GCrossedCat inv = build_ZG(inv_c4());
  EXPECT_EQ(grade_count(inv, 0), oracle::twisted_central(c4, oracle::identity_map(4)));
  EXPECT_EQ(grade_count(inv, 1), oracle::twisted_central(c4, oracle::inversion_map(c4)));
  EXPECT_EQ(grade_count(inv, 0), 4);
  EXPECT_EQ(grade_count(inv, 1), 0);
  const FinGroup s3 = symmetric_group3();
  const GCrossedCat s = build_ZG(fixtures::ptr(trivial_action(c2, fixtures::sigma(s3))));
  EXPECT_EQ(grade_count(s, 0), oracle::center_size(s3));
}

TEST(Centers, TrivialGroupHasOneGrade) {
  const GCrossedCat z =
      build_ZG(fixtures::ptr(trivial_action(trivial_group(), fixtures::sigma(cyclic_group(4)))));
  EXPECT_EQ(z.group.order(), 1);
  EXPECT_EQ(grade_count(z, 0), 4);
  EXPECT_TRUE(check_g_crossed_axioms(z).pass());
}

TEST(Centers, GCrossedAxiomsHold) {
  for (const ActionPtr& a : strict_cases()) {
    SCOPED_TRACE(a->name);
    const GCrossedCat z = build_ZG(a);
    const ValidationReport r = check_g_crossed_axioms(z);
    EXPECT_TRUE(r.pass()) << r.summary();
    EXPECT_GT(r.checked(), 0u);
  }
}

TEST(Centers, TwoGroupWithTwoCells) {
  const FinGroup c2 = cyclic_group(2);
  const GCrossedCat z = build_ZG(fixtures::ptr(trivial_action(c2, fixtures::shared(two_group_2cat(c2, 2)))));
  const ValidationReport r = check_g_crossed_axioms(z);
  EXPECT_TRUE(r.pass()) << r.summary();
  EXPECT_GT(z.mon.cat.num_morphisms(), z.mon.cat.num_objects);
}

TEST(Centers, PermutedBraidBreaksAxiom2) {
  const FinGroup c2 = cyclic_group(2);
  GCrossedCat z = build_ZG(fixtures::ptr(trivial_action(c2, fixtures::shared(two_group_2cat(c2, 2)))));
  const FinCat& c = z.mon.cat;
  const int u = z.mon.unit;
  bool mutated = false;
  for (int x = 0; x < c.num_objects && !mutated; ++x) {
    ASSERT_EQ(z.braid(x, u), c.identity[x]);
    for (int p : c.hom(x, x))
      if (p != c.identity[x]) {
        z.braid.at(x, u) = p;
        mutated = true;
        break;
      }
  }
  ASSERT_TRUE(mutated);
  const ValidationReport r = check_g_crossed_axioms(z);
  EXPECT_FALSE(r.pass());
  EXPECT_TRUE(r.has_tag("BraidAxiom2")) << r.summary();
}

TEST(Centers, TrivialComponentIsTheCenter) {
  const FinGroup c2 = cyclic_group(2), c4 = cyclic_group(4), s3 = symmetric_group3();
  const BraidedCenter zc4 = trivial_component_center(fixtures::sigma(c4));
  EXPECT_EQ(zc4.center.nats.cat.num_objects, oracle::center_size(c4));
  const BraidedCenter zs3 = trivial_component_center(fixtures::sigma(s3));
  EXPECT_EQ(zs3.center.nats.cat.num_objects, oracle::center_size(s3));
  EXPECT_TRUE(validate_braiding(zc4.center.mon, zc4.braid).pass());

  for (const ActionPtr& a : strict_cases()) {
    SCOPED_TRACE(a->name);
    const GCrossedCat zg = build_ZG(a);
    const BraidedCenter z = trivial_component_center(a->base);
    const ValidationReport r = compare_trivial_component(zg, z);
    EXPECT_TRUE(r.pass()) << r.summary();
    EXPECT_TRUE(validate_braiding(z.center.mon, z.braid).pass());
  }
}

TEST(Centers, RefusesNonStrictActions) {
  EXPECT_THROW(build_ZG(fixtures::pseudo_functor_action()), NotStrictAction);
  EXPECT_THROW(build_ZG(fixtures::action_cases()[7].action), NotStrictAction);
  EXPECT_THROW(check_center_theorem(fixtures::pseudo_functor_action()), NotStrictAction);
}

TEST(Centers, EpsilonIdentities) {
  for (const ActionPtr& a : strict_cases()) {
    SCOPED_TRACE(a->name);
    const Equivariantization e = enumerate_equivariant(a);
    for (const EqZeroCell& c : e.cells0) {
      const ValidationReport r = check_epsilon_identities(*a, c, epsilon_data(*a, c));
      EXPECT_TRUE(r.pass()) << r.summary();
    }
  }
}

TEST(Centers, EpsilonCheckCatchesTampering) {
  const ActionPtr a = inv_c4();
  const Equivariantization e = enumerate_equivariant(a);
  ASSERT_FALSE(e.cells0.empty());
  std::vector<int> eps = epsilon_data(*a, e.cells0[0]);
  eps[3] = kNone;
  EXPECT_TRUE(check_epsilon_identities(*a, e.cells0[0], eps).has_tag("EpsilonPi"));
}

TEST(Centers, ActionOnZPhi) {
  for (const ActionPtr& a : {trivial_c2_on_c2(), inv_c4()}) {
    SCOPED_TRACE(a->name);
    const ZPhiAction za = action_on_ZPhi(a);
    const MonCatGAction& m = za.action;
    const ValidationReport r = validate_mon_action(m);
    EXPECT_TRUE(r.pass()) << r.summary();
    const int e = m.group.unit, n = m.n();
    for (int x = 0; x < m.base.cat.num_objects; ++x) {
      EXPECT_EQ(m.act_obj[e][x], x);
      for (int g = 0; g < n; ++g) {
        EXPECT_EQ(m.nu[g * n + e][x], m.base.cat.identity[m.act_obj[g][x]]);
        EXPECT_EQ(m.nu[e * n + g][x], m.base.cat.identity[m.act_obj[g][x]]);
      }
    }
  }
}

TEST(Centers, BrokenNuIsReported) {
  ZPhiAction za = action_on_ZPhi(inv_c4());
  MonCatGAction& m = za.action;
  const FinCat& c = m.base.cat;
  ASSERT_GT(c.num_objects, 1);
  const int n = m.n();
  m.nu[1 * n + 1][0] = c.identity[1];
  const ValidationReport r = validate_mon_action(m);
  EXPECT_FALSE(r.pass());
}

TEST(Centers, EquivariantObjectsValidate) {
  for (const ActionPtr& a : {trivial_c2_on_c2(), inv_c4()}) {
    SCOPED_TRACE(a->name);
    const ZPhiAction za = action_on_ZPhi(a);
    const MonoidalEquivariantization e = equivariantize_monoidal(za.action);
    const ValidationReport r = check_equivariant_objects(za.action, e);
    EXPECT_TRUE(r.pass()) << r.summary();
    EXPECT_TRUE(validate_monoidal(e.mon).pass());
    EXPECT_NE(e.mon.unit, kNone);
  }
}

TEST(Centers, TheoremHolds) {
  for (const ActionPtr& a : {trivial_c2_on_c2(), inv_c4()}) {
    SCOPED_TRACE(a->name);
    const CenterTheoremResult t = check_center_theorem(a);
    EXPECT_TRUE(t.report.pass()) << t.report.summary();
    EXPECT_EQ(t.lhs_objects, t.rhs_objects);
    EXPECT_EQ(t.lhs_morphisms, t.rhs_morphisms);
    EXPECT_GT(t.lhs_objects, 0);
  }
  const CenterTheoremResult inv = check_center_theorem(inv_c4());
  EXPECT_EQ(inv.bg_objects, 4);
  EXPECT_EQ(inv.bg_one_cells, 16);
}

TEST(Centers, TheoremOnMoreFixtures) {
  for (const ActionPtr& a : strict_cases()) {
    if (enumerate_equivariant(a).cells0.empty()) continue;
    SCOPED_TRACE(a->name);
    const CenterTheoremResult t = check_center_theorem(a);
    EXPECT_TRUE(t.report.pass()) << t.report.summary();
    EXPECT_EQ(t.lhs_objects, t.rhs_objects);
  }
}
