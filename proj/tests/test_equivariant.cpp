#include <gtest/gtest.h>

#include "catcore/equivariant.hpp"
#include "catcore/errors.hpp"
#include "fixture_set.hpp"
#include "oracles.hpp"

using namespace catcore;

namespace {

struct DeloopCase {
  std::string name;
  FinGroup g;
  FinGroup k;
  std::vector<std::vector<int>> psi;
};

std::vector<std::vector<int>> trivial_psi(int n, int k) {
  return std::vector<std::vector<int>>(n, oracle::identity_map(k));
}

std::vector<DeloopCase> deloop_cases() {
  const FinGroup c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
  std::vector<DeloopCase> out;
  out.push_back({"C2 on SigmaC2 trivially", c2, c2, trivial_psi(2, 2)});
  out.push_back({"C2 on SigmaC4 by inversion", c2, c4, {oracle::identity_map(4), oracle::inversion_map(c4)}});
  out.push_back({"C2 on SigmaC3 by inversion", c2, c3, {oracle::identity_map(3), oracle::inversion_map(c3)}});
  out.push_back({"C4 on SigmaC2 trivially", c4, c2, trivial_psi(4, 2)});
  out.push_back({"C2xC2 on SigmaC4 by inversion", klein_four(), c4,
                 {oracle::identity_map(4), oracle::inversion_map(c4), oracle::inversion_map(c4),
                  oracle::identity_map(4)}});
  out.push_back({"C2 on SigmaS3 trivially", c2, symmetric_group3(), trivial_psi(2, 6)});
  return out;
}

ActionPtr action_of(const DeloopCase& c) {
  return fixtures::ptr(delooping_action(c.g, fixtures::sigma(c.k), c.psi, c.name));
}

std::vector<int> as_map(const FinGroup& g, const EqZeroCell& c) {
  std::vector<int> u(g.order());
  for (int x = 0; x < g.order(); ++x) u[x] = c.U[x];
  return u;
}

}  // namespace

TEST(Equivariant, HeadlineCounts) {
  const FinGroup c2 = cyclic_group(2), c4 = cyclic_group(4);
  const Equivariantization a = enumerate_equivariant(fixtures::action_cases()[1].action);
  EXPECT_EQ(static_cast<int>(a.cells0.size()), oracle::equivariant_zero_cells(c2, c2, trivial_psi(2, 2)));
  EXPECT_EQ(a.cells0.size(), 2u);
  const Equivariantization b = enumerate_equivariant(fixtures::action_cases()[2].action);
  EXPECT_EQ(static_cast<int>(b.cells0.size()),
            oracle::equivariant_zero_cells(c2, c4, {oracle::identity_map(4), oracle::inversion_map(c4)}));
  EXPECT_EQ(b.cells0.size(), 4u);
}

TEST(Equivariant, ZeroCellCountsMatchOracle) {
  for (const auto& c : deloop_cases()) {
    const Equivariantization e = enumerate_equivariant(action_of(c));
    EXPECT_EQ(static_cast<int>(e.cells0.size()), oracle::equivariant_zero_cells(c.g, c.k, c.psi)) << c.name;
  }
}

TEST(Equivariant, TrivialActionCountsHomomorphisms) {
  for (const auto& g : fixtures::groups()) {
    auto act = fixtures::ptr(trivial_action(g, fixtures::sigma(g)));
    const Equivariantization e = enumerate_equivariant(act);
    EXPECT_EQ(static_cast<int>(e.cells0.size()), oracle::homomorphisms(g, g)) << g.name;
  }
}

TEST(Equivariant, OneCellCountsMatchOracle) {
  for (const auto& c : deloop_cases()) {
    const Equivariantization e = enumerate_equivariant(action_of(c));
    const int n0 = static_cast<int>(e.cells0.size());
    for (int p = 0; p < n0; ++p)
      for (int q = 0; q < n0; ++q)
        EXPECT_EQ(static_cast<int>(e.cat->hom1(p, q).size()),
                  oracle::equivariant_one_cells(c.g, c.k, c.psi, as_map(c.g, e.cells0[p]),
                                                as_map(c.g, e.cells0[q])))
            << c.name;
  }
}

TEST(Equivariant, SearchAgreesWithValidatorOnAllCandidates) {
  // Every (U, Π) family of the right shape, filtered by the validator alone.
  for (const auto& fc : fixtures::action_cases()) {
    const GroupAction2& a = *fc.action;
    const Fin2Cat& b = *a.base;
    const int n = a.n();
    if (n != 2) continue;
    const Equivariantization e = enumerate_equivariant(fc.action);
    int count = 0;
    for (int A = 0; A < b.n0; ++A)
      for (int u : b.hom1(A, a.Fg(1 - a.group.unit).on0(A)))
        for (int pi = 0; pi < b.num2(); ++pi) {
          EqZeroCell c;
          c.A = A;
          c.U.assign(n, b.unit(A));
          c.U[1 - a.group.unit] = u;
          c.Pi.assign(n * n, kNone);
          for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
              c.Pi[g * n + h] = b.id(c.U[a.group.mul(g, h)]);
          const int s = 1 - a.group.unit;
          c.Pi[s * n + s] = pi;
          if (validate_eq_0cell(a, c).pass()) {
            ++count;
            EXPECT_NE(e.find0(c), kNone) << fc.name;
          }
        }
    EXPECT_EQ(count, static_cast<int>(e.cells0.size())) << fc.name;
  }
}

TEST(Equivariant, AnomalyHasNoEquivariantObjects) {
  const Equivariantization e = enumerate_equivariant(fixtures::action_cases()[7].action);
  EXPECT_TRUE(e.cells0.empty());
  // A Fin2Cat needs a 0-cell, so the only complaint is emptiness.
  const ValidationReport r = validate_2category(*e.cat);
  EXPECT_TRUE(r.has_tag("Empty"));
  EXPECT_EQ(r.total(), 1u);
}

TEST(Equivariant, UnitTwoCategory) {
  const Equivariantization e = enumerate_equivariant(fixtures::action_cases()[0].action);
  EXPECT_EQ(e.cat->num0(), 1);
  EXPECT_EQ(e.cat->num1(), 1);
  EXPECT_EQ(e.cat->num2(), 1);
}

TEST(Equivariant, AssembledCategoryValidates) {
  for (const auto& fc : fixtures::action_cases()) {
    const Equivariantization e = enumerate_equivariant(fc.action);
    const GroupAction2& a = *fc.action;
    if (e.cells0.empty()) continue;
    const ValidationReport r = validate_2category(*e.cat);
    EXPECT_TRUE(r.pass()) << fc.name << ": " << r.summary();
    for (const auto& c : e.cells0) EXPECT_TRUE(validate_eq_0cell(a, c).pass()) << fc.name;
    for (const auto& x : e.cells1)
      EXPECT_TRUE(validate_eq_1cell(a, e.cells0[x.src], e.cells0[x.tgt], x).pass()) << fc.name;
    for (const auto& m : e.cells2) {
      const Eq1Cell& x = e.cells1[m.src];
      const Eq1Cell& y = e.cells1[m.tgt];
      EXPECT_TRUE(validate_eq_2cell(a, e.cells0[x.src], e.cells0[x.tgt], x, y, m.alpha).pass());
    }
  }
}

TEST(Equivariant, CompositionValidatesAndAssociates) {
  for (const auto& fc : fixtures::action_cases()) {
    const Equivariantization e = enumerate_equivariant(fc.action);
    const GroupAction2& a = *fc.action;
    const int n1 = static_cast<int>(e.cells1.size());
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n1; ++j) {
        if (e.cells1[j].tgt != e.cells1[i].src) continue;
        const Eq1Cell z = compose_eq_1cells(a, e.cells1[i], e.cells1[j]);
        EXPECT_TRUE(validate_eq_1cell(a, e.cells0[z.src], e.cells0[z.tgt], z).pass()) << fc.name;
        for (int k = 0; k < n1; ++k) {
          if (e.cells1[k].tgt != e.cells1[j].src) continue;
          const Eq1Cell l = compose_eq_1cells(a, z, e.cells1[k]);
          const Eq1Cell r = compose_eq_1cells(a, e.cells1[i], compose_eq_1cells(a, e.cells1[j], e.cells1[k]));
          EXPECT_EQ(l, r) << fc.name;
        }
      }
    for (int i = 0; i < n1; ++i) {
      const Eq1Cell& x = e.cells1[i];
      const Eq1Cell id = identity_eq_1cell(a, e.cells0[x.tgt], x.tgt);
      EXPECT_EQ(compose_eq_1cells(a, id, x), x) << fc.name;
    }
  }
}

TEST(Equivariant, InversionEndpointBookkeeping) {
  // Over ΣC4 with inversion, θ: u → v exists exactly when v = u·θ⁻².
  const FinGroup c4 = cyclic_group(4);
  const Equivariantization e = enumerate_equivariant(fixtures::action_cases()[2].action);
  const int s = 1 - e.action->group.unit;
  for (const auto& x : e.cells1) {
    const int u = e.cells0[x.src].U[s], v = e.cells0[x.tgt].U[s];
    const int inv = c4.inverse(x.theta);
    EXPECT_EQ(v, c4.mul(u, c4.mul(inv, inv)));
  }
  EXPECT_EQ(e.cells1.size(), 16u);
}

TEST(Equivariant, ComposeMismatchThrows) {
  const Equivariantization e = enumerate_equivariant(fixtures::action_cases()[2].action);
  const GroupAction2& a = *e.action;
  for (const auto& x : e.cells1)
    for (const auto& y : e.cells1)
      if (y.tgt != x.src) {
        EXPECT_THROW(compose_eq_1cells(a, x, y), NotComposable);
        return;
      }
  FAIL() << "no mismatched pair";
}

TEST(Equivariant, ForgetfulFunctor) {
  for (const auto& fc : fixtures::action_cases()) {
    const Equivariantization e = enumerate_equivariant(fc.action);
    const PseudoFunctor phi = forgetful_Phi(e);
    const ValidationReport r = validate_pseudofunctor(phi);
    EXPECT_TRUE(r.pass()) << fc.name << ": " << r.summary();
    EXPECT_TRUE(phi.is_strict());
    const Fin2Cat& b = *fc.action->base;
    const Fin2Cat& c = *e.cat;
    for (int i = 0; i < c.num0(); ++i) EXPECT_EQ(phi.on0(i), e.cells0[i].A);
    for (int i = 0; i < c.num1(); ++i) EXPECT_EQ(phi.on1(i), e.cells1[i].theta);
    for (int i = 0; i < c.num2(); ++i) EXPECT_EQ(phi.on2(i), e.cells2[i].alpha);
    for (int i = 0; i < c.num0(); ++i) EXPECT_EQ(phi.on1(c.unit(i)), b.unit(phi.on0(i)));
    for (int i = 0; i < c.num1(); ++i)
      for (int j = 0; j < c.num1(); ++j)
        if (c.h1(i, j) != kNone) {
          EXPECT_EQ(phi.on1(c.h1(i, j)), b.h1(phi.on1(i), phi.on1(j)));
        }
    for (int i = 0; i < c.num2(); ++i)
      for (int j = 0; j < c.num2(); ++j) {
        if (c.v(i, j) != kNone) {
          EXPECT_EQ(phi.on2(c.v(i, j)), b.v(phi.on2(i), phi.on2(j)));
        }
        if (c.h2(i, j) != kNone) {
          EXPECT_EQ(phi.on2(c.h2(i, j)), b.h2(phi.on2(i), phi.on2(j)));
        }
      }
  }
}

TEST(Equivariant, SurjectiveOnObjectsForTrivialActions) {
  for (int idx : {1, 4, 5, 6}) {
    const auto fc = fixtures::action_cases()[idx];
    const Equivariantization e = enumerate_equivariant(fc.action);
    std::vector<bool> hit(fc.action->base->n0, false);
    for (const auto& c : e.cells0) hit[c.A] = true;
    for (bool h : hit) EXPECT_TRUE(h) << fc.name;
  }
}

TEST(Equivariant, ValidatorViolations) {
  const auto fc = fixtures::action_cases()[1];
  const GroupAction2& a = *fc.action;
  const Equivariantization e = enumerate_equivariant(fc.action);
  const int s = 1 - a.group.unit;
  EqZeroCell c = e.cells0[0];
  EXPECT_TRUE(validate_eq_0cell(a, c).pass());
  c.U[a.group.unit] = s;
  EXPECT_TRUE(validate_eq_0cell(a, c).has_tag("Unitality"));
  c = e.cells0[0];
  c.U.pop_back();
  EXPECT_TRUE(validate_eq_0cell(a, c).has_tag("Shape"));

  // In ΣC2 a 1-cell θ only carries θ_g when both endpoints agree on U_s.
  ASSERT_EQ(e.cells0.size(), 2u);
  Eq1Cell x = e.cells1[0];
  x.tgt = x.src == 0 ? 1 : 0;
  EXPECT_TRUE(validate_eq_1cell(a, e.cells0[x.src], e.cells0[x.tgt], x).has_tag("Typing"));
}

TEST(Equivariant, RefusesPseudofunctorActions) {
  EXPECT_THROW(enumerate_equivariant(fixtures::pseudo_functor_action()), NotTwoFunctorAction);
}

TEST(Equivariant, Caps) {
  EquivariantCaps caps;
  caps.max_group = 1;
  EXPECT_THROW(enumerate_equivariant(fixtures::action_cases()[1].action, caps), CapExceeded);
  caps = {};
  caps.search.budget = 2;
  EXPECT_THROW(enumerate_equivariant(fixtures::action_cases()[2].action, caps), SearchBudgetExceeded);
}
