#pragma once

#include <vector>

#include "catcore/equivariant.hpp"
#include "catcore/gaction.hpp"
#include "catcore/monoidal.hpp"
#include "catcore/pseudo.hpp"

namespace catcore {

// Object of Z_G(B)_g: a pseudonat Id_B ⇒ F_g.
struct GradedCenterObj {
  int grade = kNone;
  NatPtr X;
};

// Strict braided G-crossed category stored as tables. Objects and morphisms
// of all grades share one FinCat; act_obj[g][X] is g_*(X) and braid(X, Y) is
// c_{X,Y}: X⊗Y → g_*(Y)⊗X for X of grade g.
struct GCrossedCat {
  FinGroup group;
  MonoidalCat mon;
  std::vector<int> grade;
  std::vector<std::vector<int>> act_obj;
  std::vector<std::vector<int>> act_mor;
  Table braid;
  std::vector<GradedCenterObj> objects;
  std::vector<Modification> morphisms;

  std::vector<int> objects_of_grade(int g) const;
};

// Z_G(B) for a strict action. Throws NotStrictAction.
GCrossedCat build_ZG(ActionPtr a, const SearchOptions& opt = {});

// Grading, the action (functoriality, strict monoidality, g_*h_* = (gh)_*,
// e_* = Id) and the braiding (typing, invertibility, naturality and the three
// braid axioms), exhaustively.
ValidationReport check_g_crossed_axioms(const GCrossedCat& c);

// Z(B) with c_{X,Y} = X_{Y_A}: X⊗Y → Y⊗X.
struct BraidedCenter {
  RelativeCenter center;
  Table braid;
};

BraidedCenter trivial_component_center(Fin2CatPtr b, const SearchOptions& opt = {});

// Cell-for-cell comparison of the grade-e block of Z_G(B) with Z(B).
ValidationReport compare_trivial_component(const GCrossedCat& zg, const BraidedCenter& z);

// ε_{g,h} = id_{U*_g F_g(U*_h)} ∘ Π⁻¹_{g,h} ∘ id_{U*_{gh}}, indexed [g*n+h].
// Throws NotStrictAction.
std::vector<int> epsilon_data(const GroupAction2& a, const EqZeroCell& c);
// ε∘Π = id, Π∘ε = id and the ε cocycle for all (g, h, f).
ValidationReport check_epsilon_identities(const GroupAction2& a, const EqZeroCell& c,
                                          const std::vector<int>& eps);

// G acting on a strict monoidal category by strict monoidal functors
// act_obj[g], act_mor[g], with nu[g*n+h][X]: g_*h_*(X) → (gh)_*(X).
struct MonCatGAction {
  FinGroup group;
  MonoidalCat base;
  std::vector<std::vector<int>> act_obj;
  std::vector<std::vector<int>> act_mor;
  std::vector<std::vector<int>> nu;

  int n() const { return group.order(); }
};

ValidationReport validate_mon_action(const MonCatGAction& c);

// Z(Φ) for Φ: B^G → B with L_g(X, σ) = (U*_g F_g(X) U_g, σ^g) and
// ν_{g,h} = ε_{g,h} ∘ id ∘ Π_{g,h}.
struct ZPhiAction {
  Equivariantization eq;
  RelativeCenter zphi;
  MonCatGAction action;
};

// Throws NotStrictAction plus the errors of enumerate_equivariant.
ZPhiAction action_on_ZPhi(ActionPtr a, const EquivariantCaps& caps = {});

// (X, s) with s[g]: g_*(X) → X.
struct EquivariantMonObj {
  int X = kNone;
  std::vector<int> s;
  bool operator==(const EquivariantMonObj&) const = default;
};

struct MonoidalEquivariantization {
  MonoidalCat mon;
  std::vector<EquivariantMonObj> objects;
  std::vector<int> mor_base;
};

MonoidalEquivariantization equivariantize_monoidal(const MonCatGAction& c,
                                                   const SearchOptions& opt = {});
// s_1 = id, s_{gh}∘ν_{g,h} = s_g∘g_*(s_h), and f∘s_g = t_g∘g_*(f) on morphisms.
ValidationReport check_equivariant_objects(const MonCatGAction& c,
                                           const MonoidalEquivariantization& e);

struct CenterTheoremResult {
  ValidationReport report;
  int bg_objects = 0;
  int bg_one_cells = 0;
  int zphi_objects = 0;
  int lhs_objects = 0;  // Z(B^G)
  int lhs_morphisms = 0;
  int rhs_objects = 0;  // Z(Φ)^G
  int rhs_morphisms = 0;
};

// Builds Ψ: Z(Φ)^G → Z(B^G) cell by cell and checks that it is well defined,
// functorial, bijective and strictly monoidal. Throws NotStrictAction.
CenterTheoremResult check_center_theorem(ActionPtr a, const EquivariantCaps& caps = {});

}  // namespace catcore
