#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "catcore/gaction.hpp"
#include "catcore/search.hpp"

namespace catcore {

// (A, U, Π): U[g]: A → F_g(A) strictly invertible, Pi[g*n+h]:
// χ⁰_{g,h}(A)∘F_g(U_h)∘U_g ⇒ U_{gh}.
struct EqZeroCell {
  int A = kNone;
  std::vector<int> U;
  std::vector<int> Pi;
  bool operator==(const EqZeroCell&) const = default;
};

// (θ, θ_g) between 0-cells src and tgt; theta_g[g]: F_g(θ)∘U_g ⇒ Ũ_g∘θ.
struct Eq1Cell {
  int src = kNone;
  int tgt = kNone;
  int theta = kNone;
  std::vector<int> theta_g;
  bool operator==(const Eq1Cell&) const = default;
};

// α: θ ⇒ σ between 1-cells src and tgt.
struct Eq2Cell {
  int src = kNone;
  int tgt = kNone;
  int alpha = kNone;
  bool operator==(const Eq2Cell&) const = default;
};

struct EquivariantCaps {
  int max_group = 6;
  int max_hom1 = 8;
  SearchOptions search;
};

ValidationReport validate_eq_0cell(const GroupAction2& a, const EqZeroCell& c);
ValidationReport validate_eq_1cell(const GroupAction2& a, const EqZeroCell& src,
                                   const EqZeroCell& tgt, const Eq1Cell& x);
ValidationReport validate_eq_2cell(const GroupAction2& a, const EqZeroCell& src,
                                   const EqZeroCell& tgt, const Eq1Cell& x, const Eq1Cell& y,
                                   int alpha);

// (θ∘σ)_g = (θ_g∘id_σ)(id_{F_g(θ)}∘σ_g). Throws NotComposable.
Eq1Cell compose_eq_1cells(const GroupAction2& a, const Eq1Cell& theta, const Eq1Cell& sigma);
// (I_A, id_{U_g}).
Eq1Cell identity_eq_1cell(const GroupAction2& a, const EqZeroCell& c, int index);

struct Equivariantization {
  ActionPtr action;
  std::vector<EqZeroCell> cells0;
  std::vector<Eq1Cell> cells1;
  std::vector<Eq2Cell> cells2;
  Fin2CatPtr cat;

  int find0(const EqZeroCell& c) const;
  int find1(int src, int tgt, int theta, const std::vector<int>& theta_g) const;
  int find2(int src, int tgt, int alpha) const;
  void build_index();

 private:
  std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> index0_;
  std::map<std::tuple<int, int, int, std::vector<int>>, int> index1_;
  std::map<std::tuple<int, int, int>, int> index2_;
};

// B^G from the unpacked description. Throws NotTwoFunctorAction, NotUnital,
// CapExceeded or SearchBudgetExceeded.
Equivariantization enumerate_equivariant(ActionPtr a, const EquivariantCaps& caps = {});

// Φ: B^G → B, (A, U, Π) ↦ A, (θ, θ_g) ↦ θ, α ↦ α.
PseudoFunctor forgetful_Phi(const Equivariantization& e);

}  // namespace catcore
