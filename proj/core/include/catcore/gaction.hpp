#pragma once

#include <memory>
#include <string>
#include <vector>

#include "catcore/group.hpp"
#include "catcore/pseudo.hpp"

namespace catcore {

// Unital action of a finite group on a finite 2-category. chi[g*n+h] is the
// pseudonat F_g∘F_h ⇒ F_{gh}; omega[(g*n+h)*n+f][A] is the component at A of
// ω_{g,h,f}: χ_{gh,f}(χ_{g,h}⊗1) ⇛ χ_{g,hf}(1⊗χ_{h,f}).
struct GroupAction2 {
  std::string name;
  FinGroup group;
  Fin2CatPtr base;
  std::vector<FunctorPtr> F;
  std::vector<NatPtr> chi;
  std::vector<std::vector<int>> omega;

  int n() const { return group.order(); }
  const PseudoFunctor& Fg(int g) const { return *F[g]; }
  const PseudoNat& chi_at(int g, int h) const { return *chi[g * n() + h]; }
  // (χ⁰_{g,h})_A : F_gF_h(A) → F_{gh}(A)
  int chi0(int g, int h, int a) const { return chi_at(g, h).c0[a]; }
  // (χ_{g,h})_X
  int chi2(int g, int h, int x) const { return chi_at(g, h).c2[x]; }
  int om(int g, int h, int f, int a) const { return omega[(g * n() + h) * n() + f][a]; }

  // Every F_g is a 2-functor.
  bool by_2functors() const;
  // F_g∘F_h = F_{gh} on tables, every F_g a 2-functor, χ and ω identities.
  bool is_strict() const;
};
using ActionPtr = std::shared_ptr<const GroupAction2>;

// F(x1)∘…∘F(xn) ⇒ F(x1∘…∘xn), built from the compositor.
int fold_compositor(const PseudoFunctor& f, const std::vector<int>& xs);
// F applied to a 2-cell a: x1∘…∘xm ⇒ y1∘…∘yk, read as a 2-cell between the
// composites of the images.
int apply_split(const PseudoFunctor& f, int a, const std::vector<int>& from,
                const std::vector<int>& to);

// Assembles an action from explicit data; χ defaults to identities and ω to
// identities when the corresponding vectors are empty.
GroupAction2 make_action(FinGroup g, Fin2CatPtr b, std::vector<FunctorPtr> f,
                         std::vector<NatPtr> chi = {}, std::vector<std::vector<int>> omega = {},
                         std::string name = {});
GroupAction2 trivial_action(const FinGroup& g, Fin2CatPtr b);
// Strict action from a homomorphism into strict 2-automorphisms of B. Throws
// NotHomomorphism naming (g, h) when phi_g∘phi_h differs from phi_{gh}.
GroupAction2 action_from_automorphisms(const FinGroup& g, Fin2CatPtr b,
                                       const std::vector<PseudoFunctor>& phi);
// ΣK with G acting through group automorphisms psi[g] of K.
GroupAction2 delooping_action(const FinGroup& g, Fin2CatPtr sigma_k,
                              const std::vector<std::vector<int>>& psi, std::string name = {});
// C2 acting on the delooping of an abelian group by x ↦ x⁻¹.
GroupAction2 inversion_action(Fin2CatPtr sigma_k, const FinGroup& k);
// C2 acting trivially on the 2-group with 2-cells Z/2 except for ω_{s,s,s},
// which is the non-identity 2-cell of I.
GroupAction2 anomaly_action(Fin2CatPtr b2c2);

// The modification ω_{g,h,f} with its source and target pseudonats.
Modification omega_modification(const GroupAction2& a, int g, int h, int f);

ValidationReport validate_action(const GroupAction2& a);

// The pentagon shared by mn2 and the 0-cells of B[G]: objs[k], theta[g*n+h]:
// F_g(objs[h]) → objs[gh], alpha[(g*n+h)*n+f] from theta(gh,f)∘χ⁰_{g,h} to
// theta(g,hf)∘F_g(theta(h,f)).
bool action_family_pentagon(const GroupAction2& act, const std::vector<int>& objs,
                            const std::vector<int>& theta, const std::vector<int>& alpha, int g,
                            int h, int f, int k);

// (H, γ, Π) with γ[g]: H∘F_g ⇒ F̃_g∘H and Pi[f*n+g][A] the component of
// Π_{f,g}: χ̃⁰_{f,g}(HA)∘F̃_f(γ⁰_g A)∘γ⁰_f(F_g A) ⇒ γ⁰_{fg}(A)∘H(χ⁰_{f,g} A).
struct GPseudoFunctor {
  ActionPtr src;
  ActionPtr tgt;
  FunctorPtr H;
  std::vector<NatPtr> gamma;
  std::vector<std::vector<int>> Pi;
};
using GFunctorPtr = std::shared_ptr<const GPseudoFunctor>;

// (θ, θ_g) with theta_g[g][A]: F̃_g(θ⁰_A)∘γ⁰_g(A) ⇒ γ'⁰_g(A)∘θ⁰_{F_g A}.
struct GPseudoNat {
  GFunctorPtr from;
  GFunctorPtr to;
  NatPtr theta;
  std::vector<std::vector<int>> theta_g;
};
using GNatPtr = std::shared_ptr<const GPseudoNat>;

struct GModification {
  GNatPtr from;
  GNatPtr to;
  std::vector<int> comp;
};

GPseudoFunctor identity_g_pseudofunctor(ActionPtr a);
GPseudoNat identity_g_pseudonat(GFunctorPtr h);

ValidationReport validate_g_pseudofunctor(const GPseudoFunctor& h);
ValidationReport validate_g_pseudonat(const GPseudoNat& t);
ValidationReport validate_g_modification(const GModification& m);

// σ∘θ for θ: H¹ ⇒ H² and σ: H² ⇒ H³. Throws ShapeMismatch.
GPseudoNat compose_g_pseudonats(const GPseudoNat& sigma, const GPseudoNat& theta);

}  // namespace catcore
