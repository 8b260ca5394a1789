#include <gtest/gtest.h>

#include "catcore/errors.hpp"
#include "catcore/gaction.hpp"
#include "fixture_set.hpp"
#include "oracles.hpp"

using namespace catcore;

TEST(Action, FixturesValidate) {
  for (const auto& c : fixtures::action_cases()) {
    const ValidationReport r = validate_action(*c.action);
    EXPECT_TRUE(r.pass()) << c.name << ": " << r.summary();
    EXPECT_GT(r.checked(), 0u);
  }
}

TEST(Action, StrictFlags) {
  for (const auto& c : fixtures::action_cases()) {
    const bool anomaly = c.name == "B2C2/anomaly";
    EXPECT_EQ(c.action->is_strict(), !anomaly) << c.name;
    EXPECT_TRUE(c.action->by_2functors());
  }
}

TEST(Action, TrivialActionsValidate) {
  const FinGroup s3 = symmetric_group3();
  const GroupAction2 a = trivial_action(s3, fixtures::sigma(cyclic_group(4)));
  EXPECT_TRUE(validate_action(a).pass());
  EXPECT_TRUE(a.is_strict());
  const GroupAction2 u = trivial_action(cyclic_group(2), fixtures::shared(unit_2cat()));
  EXPECT_TRUE(validate_action(u).pass());
}

TEST(Action, UnitIndicesAreIdentities) {
  for (const auto& c : fixtures::action_cases()) {
    const GroupAction2& a = *c.action;
    const int e = a.group.unit;
    for (int g = 0; g < a.n(); ++g) {
      const PseudoNat idg = identity_pseudonat(a.F[g]);
      EXPECT_EQ(a.chi_at(g, e).c0, idg.c0);
      EXPECT_EQ(a.chi_at(g, e).c2, idg.c2);
      EXPECT_EQ(a.chi_at(e, g).c0, idg.c0);
      EXPECT_EQ(a.chi_at(e, g).c2, idg.c2);
    }
  }
}

TEST(Action, AutomorphismHomomorphismIsChecked) {
  const FinGroup c2 = cyclic_group(2);
  const FinGroup c4 = cyclic_group(4);
  auto b = fixtures::sigma(c4);
  // x ↦ x (identity) for e, x ↦ x⁻¹ for s is a homomorphism; the shift by
  // the automorphism of order 2 composed wrongly is not.
  std::vector<int> id = oracle::identity_map(4);
  auto make = [&](const std::vector<int>& p) {
    std::vector<int> m2;
    for (int x : p) m2.push_back(b->id(x));
    return make_2functor(b, b, {0}, p, m2);
  };
  EXPECT_NO_THROW(action_from_automorphisms(c2, b, {make(id), make(oracle::inversion_map(c4))}));
  EXPECT_NO_THROW(action_from_automorphisms(c2, fixtures::sigma(c2),
                                            {identity_pseudofunctor(fixtures::sigma(c2)),
                                             identity_pseudofunctor(fixtures::sigma(c2))}));
  // C4 acting on ΣC4 through inversion at the generator: inv∘inv = id != inv.
  const std::vector<int> inv = oracle::inversion_map(c4);
  try {
    action_from_automorphisms(c4, b, {make(id), make(inv), make(inv), make(inv)});
    FAIL() << "expected NotHomomorphism";
  } catch (const NotHomomorphism& e) {
    const auto& w = e.witness();
    ASSERT_EQ(w.size(), 2u);
    EXPECT_NE(c4.mul(w[0], w[1]), -1);
  }
}

TEST(Action, MistypedOmegaFailsPentagon) {
  const FinGroup c4 = cyclic_group(4);
  GroupAction2 a = inversion_action(fixtures::sigma(c4), c4);
  // ω_{s,s,s} at * replaced by the identity of a different 1-cell.
  a.omega[7][0] = a.base->id(1);
  const ValidationReport r = validate_action(a);
  EXPECT_TRUE(r.has_tag("PentagonMN2")) << r.summary();
}

TEST(Action, AnomalyFailsWithTrivialOmegaNowhere) {
  // The ω of the anomaly action is a normalized 3-cocycle: mn2 holds, while
  // a non-cocycle choice of ω does not.
  auto b = fixtures::shared(two_group_2cat(trivial_group(), 2));
  GroupAction2 a = anomaly_action(b);
  EXPECT_TRUE(validate_action(a).pass());
  a.omega[(1 * 2 + 1) * 2 + 0][0] = 1;  // ω_{s,s,e} breaks unitality
  const ValidationReport r = validate_action(a);
  EXPECT_TRUE(r.has_tag("UnitalityMN1")) << r.summary();
}

TEST(Action, NonUnitalFunctorRejected) {
  const FinGroup c2 = cyclic_group(2);
  auto b = fixtures::shared(two_group_2cat(c2, 2));
  auto id = std::make_shared<const PseudoFunctor>(identity_pseudofunctor(b));
  PseudoFunctor f = identity_pseudofunctor(b);
  f.unitc[0] = 1;
  GroupAction2 a = make_action(c2, b, {id, std::make_shared<const PseudoFunctor>(f)});
  EXPECT_TRUE(validate_action(a).has_tag("Unitality"));
}

TEST(GPseudofunctor, IdentityValidates) {
  for (const auto& c : fixtures::action_cases()) {
    const GPseudoFunctor h = identity_g_pseudofunctor(c.action);
    const ValidationReport r = validate_g_pseudofunctor(h);
    EXPECT_TRUE(r.pass()) << c.name << ": " << r.summary();
  }
}

TEST(GPseudofunctor, NonIdentityPiAtUnitFails) {
  const GroupAction2& a = *fixtures::action_cases()[7].action;
  GPseudoFunctor h = identity_g_pseudofunctor(fixtures::action_cases()[7].action);
  (void)a;
  h.Pi[0 * 2 + 1][0] = 1;  // Π_{1,s}
  const ValidationReport r = validate_g_pseudofunctor(h);
  EXPECT_TRUE(r.has_tag("Unitality")) << r.summary();
}

TEST(GPseudonat, IdentityAndComposition) {
  for (const auto& c : fixtures::action_cases()) {
    auto h = std::make_shared<const GPseudoFunctor>(identity_g_pseudofunctor(c.action));
    const GPseudoNat t = identity_g_pseudonat(h);
    EXPECT_TRUE(validate_g_pseudonat(t).pass()) << c.name;
    const GPseudoNat tt = compose_g_pseudonats(t, t);
    EXPECT_TRUE(validate_g_pseudonat(tt).pass()) << c.name;
    EXPECT_EQ(tt.theta_g, t.theta_g);
    const GModification m{std::make_shared<const GPseudoNat>(t),
                          std::make_shared<const GPseudoNat>(t),
                          identity_modification(t.theta).comp};
    EXPECT_TRUE(validate_g_modification(m).pass());
  }
}

TEST(GPseudonat, CentralElementsOfInversionAction) {
  // Pseudonats Id ⇒ Id on ΣC4 with component z lift to G-pseudonats of the
  // identity G-pseudofunctor exactly when F_s(z) = z, i.e. z = z⁻¹; θ_s is
  // then forced to be the identity 2-cell.
  const FinGroup c4 = cyclic_group(4);
  auto act = fixtures::ptr(inversion_action(fixtures::sigma(c4), c4));
  auto h = std::make_shared<const GPseudoFunctor>(identity_g_pseudofunctor(act));
  const Fin2Cat& b = *act->base;
  int lifts = 0;
  for (int z = 0; z < 4; ++z) {
    PseudoNat n;
    n.from = h->H;
    n.to = h->H;
    n.c0 = {z};
    for (int x = 0; x < 4; ++x) n.c2.push_back(b.id(b.h1(z, x)));
    GPseudoNat t;
    t.from = h;
    t.to = h;
    t.theta = std::make_shared<const PseudoNat>(n);
    const int fz = act->Fg(1).on1(z);
    const int zs = b.h1(z, b.unit(0));
    t.theta_g = {{b.id(zs)}, {b.id(b.h1(fz, b.unit(0)))}};
    const bool ok = validate_g_pseudonat(t).pass();
    lifts += ok;
    EXPECT_EQ(ok, fz == z) << z;
  }
  int involutions = 0;
  for (int z = 0; z < 4; ++z) involutions += c4.mul(z, z) == c4.unit;
  EXPECT_EQ(lifts, involutions);
}

TEST(GPseudonat, ComposeRejectsMismatch) {
  auto cases = fixtures::action_cases();
  auto h1 = std::make_shared<const GPseudoFunctor>(identity_g_pseudofunctor(cases[1].action));
  auto h2 = std::make_shared<const GPseudoFunctor>(identity_g_pseudofunctor(cases[2].action));
  EXPECT_THROW(compose_g_pseudonats(identity_g_pseudonat(h1), identity_g_pseudonat(h2)),
               ShapeMismatch);
}
