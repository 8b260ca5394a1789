#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "catcore/gaction.hpp"
#include "catcore/search.hpp"

namespace catcore {

// 0-cell (A, θ, α) of B[G]. theta[g*n+h]: F_g(A_h) → A_{gh};
// alpha[(g*n+h)*n+f]: θ_{gh,f}∘χ⁰_{g,h}(A_f) ⇒ θ_{g,hf}∘F_g(θ_{h,f}).
struct BGZeroCell {
  std::vector<int> A;
  std::vector<int> theta;
  std::vector<int> alpha;
  bool operator==(const BGZeroCell&) const = default;
};

// 1-cell (X, l) between 0-cells src and tgt. X[g]: A_g → B_g;
// l[g*n+h]: ρ_{g,h}∘F_g(X_h) ⇒ X_{gh}∘θ_{g,h}.
struct BG1Cell {
  int src = kNone;
  int tgt = kNone;
  std::vector<int> X;
  std::vector<int> l;
};

// 2-cell m: (X, l) ⇒ (Y, s) between 1-cells src and tgt; m[g]: X_g ⇒ Y_g.
struct BG2Cell {
  int src = kNone;
  int tgt = kNone;
  std::vector<int> m;
};

struct StrictifyCaps {
  int max_group = 4;
  int max_hom1 = 8;
  SearchOptions search;
};

struct Strictification {
  ActionPtr action;
  std::vector<BGZeroCell> cells0;
  std::vector<BG1Cell> cells1;
  std::vector<BG2Cell> cells2;
  Fin2CatPtr cat;

  int find0(const BGZeroCell& c) const;
  int find1(int src, int tgt, const std::vector<int>& X, const std::vector<int>& l) const;
  int find2(int src, int tgt, const std::vector<int>& m) const;
  void build_index();

 private:
  std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>, int> index0_;
  std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, int> index1_;
  std::map<std::tuple<int, int, std::vector<int>>, int> index2_;
};

ValidationReport validate_bg_0cell(const GroupAction2& a, const BGZeroCell& c);
ValidationReport validate_bg_1cell(const GroupAction2& a, const BGZeroCell& src,
                                   const BGZeroCell& tgt, const BG1Cell& x);
ValidationReport validate_bg_2cell(const GroupAction2& a, const BGZeroCell& src,
                                   const BGZeroCell& tgt, const BG1Cell& x, const BG1Cell& y,
                                   const BG2Cell& m);

// All cells of B[G] assembled into a Fin2Cat. Throws NotTwoFunctorAction,
// NotUnital, CapExceeded or SearchBudgetExceeded.
Strictification enumerate_BG(ActionPtr a, const StrictifyCaps& caps = {});

// L_g(A)_x = A_{xg} and likewise on 1- and 2-cells.
GroupAction2 strict_action_on_BG(const Strictification& s);

// H(A) = ({F_g A}, χ⁰(A), ω(A)) and H(X) = ({F_g X}, χ(X)).
BGZeroCell H_object(const GroupAction2& a, int obj);
BG1Cell H_one_cell(const GroupAction2& a, int x);

// H: B → B[G] with its G-structure towards the action L.
GPseudoFunctor embedding_H(const Strictification& s, ActionPtr l_action);

ValidationReport check_H_biequivalence(const Strictification& s);

}  // namespace catcore
