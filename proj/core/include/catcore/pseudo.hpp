#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "catcore/fin2cat.hpp"
#include "catcore/monoidal.hpp"
#include "catcore/report.hpp"
#include "catcore/search.hpp"
#include "catcore/table.hpp"

namespace catcore {

using Fin2CatPtr = std::shared_ptr<const Fin2Cat>;

// Pseudofunctor B → C between finite strict 2-categories. comp(x, y) is the
// compositor F(x)∘F(y) ⇒ F(x∘y), defined on composable pairs; unitc[A] is the
// unit constraint I_{F(A)} ⇒ F(I_A).
struct PseudoFunctor {
  std::string name;
  Fin2CatPtr src;
  Fin2CatPtr tgt;
  std::vector<int> obj;
  std::vector<int> map1;
  std::vector<int> map2;
  Table comp;
  std::vector<int> unitc;

  int on0(int a) const { return a >= 0 && a < static_cast<int>(obj.size()) ? obj[a] : kNone; }
  int on1(int x) const { return x >= 0 && x < static_cast<int>(map1.size()) ? map1[x] : kNone; }
  int on2(int a) const { return a >= 0 && a < static_cast<int>(map2.size()) ? map2[a] : kNone; }
  int c(int x, int y) const { return comp.get(x, y); }
  int phi(int a) const { return a >= 0 && a < static_cast<int>(unitc.size()) ? unitc[a] : kNone; }

  // F(I_A) = I_{F(A)} with identity unit constraints.
  bool is_unital() const;
  // Unital with identity compositors.
  bool is_strict() const;
  bool same_tables(const PseudoFunctor& o) const;
};
using FunctorPtr = std::shared_ptr<const PseudoFunctor>;

// Pseudonatural transformation F ⇒ G. c0[A]: F(A) → G(A); c2[X] for
// X: A → B is χ_X : c0[B]∘F(X) ⇒ G(X)∘c0[A].
struct PseudoNat {
  FunctorPtr from;
  FunctorPtr to;
  std::vector<int> c0;
  std::vector<int> c2;

  bool same_components(const PseudoNat& o) const { return c0 == o.c0 && c2 == o.c2; }
};
using NatPtr = std::shared_ptr<const PseudoNat>;

// Modification χ ⇛ θ with components comp[A]: χ.c0[A] ⇒ θ.c0[A].
struct Modification {
  NatPtr from;
  NatPtr to;
  std::vector<int> comp;
};

// 2-functor with identity compositors and unit constraints.
PseudoFunctor make_2functor(Fin2CatPtr src, Fin2CatPtr tgt, std::vector<int> obj,
                            std::vector<int> map1, std::vector<int> map2, std::string name = {});
PseudoFunctor identity_pseudofunctor(Fin2CatPtr b);

bool same_functor(const PseudoFunctor& a, const PseudoFunctor& b);

ValidationReport validate_pseudofunctor(const PseudoFunctor& f);
ValidationReport validate_pseudonat(const PseudoNat& n);
ValidationReport validate_modification(const Modification& m);

// G∘F. Throws SourceTargetMismatch when F's target is not G's source.
PseudoFunctor compose_pseudofunctors(const PseudoFunctor& g, const PseudoFunctor& f);

PseudoNat identity_pseudonat(FunctorPtr f);
Modification identity_modification(NatPtr n);
// Vertical composite τσ of σ: F ⇒ G and τ: G ⇒ H.
PseudoNat compose_pseudonats(const PseudoNat& tau, const PseudoNat& sigma);
// Pointwise composite b·a of modifications a: χ ⇛ θ, b: θ ⇛ ψ.
Modification compose_modifications(const Modification& b, const Modification& a);

// β⊗α : G∘F ⇒ G'∘F' for α: F ⇒ F' and β: G ⇒ G'.
PseudoNat tensor_pseudonat(const PseudoNat& beta, const PseudoNat& alpha);
// ω⊗ω' : β⊗α ⇛ β'⊗α' for ω: β ⇛ β' and ω': α ⇛ α'.
Modification tensor_modifications(const Modification& w, const Modification& w2);
// Filler (id_{F'}⊗β)(α⊗id_H) ⇛ (α⊗id_{H'})(id_F⊗β); needs F unital.
Modification comparison_constraint(const PseudoNat& alpha, const PseudoNat& beta);
// (α⊗β)⊗γ ⇛ α⊗(β⊗γ).
Modification associativity_constraint(const PseudoNat& alpha, const PseudoNat& beta,
                                      const PseudoNat& gamma);
// (id_α⊗a_{β,γ,δ})·a_{α,β⊗γ,δ}·(a_{α,β,γ}⊗id_δ) = a_{α,β,γ⊗δ}·a_{α⊗β,γ,δ}.
ValidationReport check_pentagon(const PseudoNat& alpha, const PseudoNat& beta,
                                const PseudoNat& gamma, const PseudoNat& delta);

// All pseudonats F ⇒ G, in search order.
std::vector<PseudoNat> enumerate_pseudonats(FunctorPtr f, FunctorPtr g,
                                            const SearchOptions& opt = {});
// All modifications between two fixed pseudonats.
std::vector<Modification> enumerate_modifications(NatPtr from, NatPtr to,
                                                  const SearchOptions& opt = {});

// The category Pseu-Nat(F, G) together with the cells behind its ids.
struct NatCategory {
  FinCat cat;
  std::vector<NatPtr> objects;
  std::vector<Modification> morphisms;
  std::vector<int> mor_src;
  std::vector<int> mor_tgt;

  int find_object(const PseudoNat& n) const;
  int find_morphism(int from, int to, const std::vector<int>& comp) const;
  void build_index();

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> obj_index_;
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> mor_index_;
};

NatCategory pseudonat_category(FunctorPtr f, FunctorPtr g, const SearchOptions& opt = {});

// Z(H) = Pseu-Nat(H, H) with tensor V⊗W = VW and unit the identity.
struct RelativeCenter {
  NatCategory nats;
  MonoidalCat mon;
};

// Throws NotUnital unless H is unital.
RelativeCenter relative_center(FunctorPtr h, const SearchOptions& opt = {});

}  // namespace catcore
