#include "catcore/gaction.hpp"

#include <fmt/format.h>

#include "catcore/errors.hpp"

namespace catcore {

namespace {

std::shared_ptr<const PseudoNat> nat_ptr(PseudoNat n) {
  return std::make_shared<const PseudoNat>(std::move(n));
}

std::shared_ptr<const PseudoFunctor> fun_ptr(PseudoFunctor f) {
  return std::make_shared<const PseudoFunctor>(std::move(f));
}

bool is_identity_nat(const PseudoNat& n) {
  const PseudoFunctor& F = *n.from;
  const Fin2Cat& b = *F.src;
  const Fin2Cat& c = *F.tgt;
  for (int a = 0; a < b.n0; ++a)
    if (n.c0[a] != c.unit(F.on0(a))) return false;
  for (int x = 0; x < b.num1(); ++x)
    if (n.c2[x] != c.id(F.on1(x))) return false;
  return true;
}

// The whiskered pseudonat with the identity on the given side.
PseudoNat left_whisker(FunctorPtr f, const PseudoNat& n) {
  return tensor_pseudonat(identity_pseudonat(std::move(f)), n);
}
PseudoNat right_whisker(const PseudoNat& n, FunctorPtr f) {
  return tensor_pseudonat(n, identity_pseudonat(std::move(f)));
}

}  // namespace

bool GroupAction2::by_2functors() const {
  for (const auto& f : F)
    if (!f->is_strict()) return false;
  return true;
}

bool GroupAction2::is_strict() const {
  if (!by_2functors()) return false;
  const int k = n();
  for (int g = 0; g < k; ++g)
    for (int h = 0; h < k; ++h) {
      const PseudoFunctor gh = compose_pseudofunctors(*F[g], *F[h]);
      if (!gh.same_tables(*F[group.mul(g, h)])) return false;
      if (!is_identity_nat(chi_at(g, h))) return false;
    }
  const Fin2Cat& b = *base;
  for (int t = 0; t < k * k * k; ++t) {
    const int g = t / (k * k), h = (t / k) % k, f = t % k;
    for (int a = 0; a < b.n0; ++a)
      if (om(g, h, f, a) != b.id(b.unit(Fg(group.mul(g, h, f)).on0(a)))) return false;
  }
  return true;
}

int fold_compositor(const PseudoFunctor& f, const std::vector<int>& xs) {
  const Fin2Cat& c = *f.tgt;
  const Fin2Cat& b = *f.src;
  if (xs.empty()) return kNone;
  int acc = c.id(f.on1(xs.back()));
  int tail = xs.back();
  for (int i = static_cast<int>(xs.size()) - 2; i >= 0; --i) {
    acc = c.v(f.c(xs[i], tail), c.h2(c.id(f.on1(xs[i])), acc));
    tail = b.h1(xs[i], tail);
  }
  return acc;
}

int apply_split(const PseudoFunctor& f, int a, const std::vector<int>& from,
                const std::vector<int>& to) {
  const Fin2Cat& c = *f.tgt;
  return c.v({c.inv2(fold_compositor(f, to)), f.on2(a), fold_compositor(f, from)});
}

GroupAction2 make_action(FinGroup g, Fin2CatPtr b, std::vector<FunctorPtr> f,
                         std::vector<NatPtr> chi, std::vector<std::vector<int>> omega,
                         std::string name) {
  GroupAction2 a;
  a.name = std::move(name);
  a.group = std::move(g);
  a.base = std::move(b);
  a.F = std::move(f);
  const int k = a.group.order();
  if (static_cast<int>(a.F.size()) != k) throw ShapeMismatch("one functor per group element");
  if (chi.empty()) {
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) {
        auto from = fun_ptr(compose_pseudofunctors(*a.F[x], *a.F[y]));
        PseudoNat n = identity_pseudonat(a.F[a.group.mul(x, y)]);
        n.from = from;
        chi.push_back(nat_ptr(std::move(n)));
      }
  }
  if (static_cast<int>(chi.size()) != k * k) throw ShapeMismatch("chi needs |G|² entries");
  a.chi = std::move(chi);
  if (omega.empty()) {
    const Fin2Cat& c = *a.base;
    for (int t = 0; t < k * k * k; ++t) {
      const int x = t / (k * k), y = (t / k) % k, z = t % k;
      std::vector<int> comp;
      for (int o = 0; o < c.n0; ++o)
        comp.push_back(c.id(c.h1(a.chi0(a.group.mul(x, y), z, o), a.chi0(x, y, a.Fg(z).on0(o)))));
      omega.push_back(std::move(comp));
    }
  }
  if (static_cast<int>(omega.size()) != k * k * k) throw ShapeMismatch("omega needs |G|³ entries");
  a.omega = std::move(omega);
  return a;
}

GroupAction2 trivial_action(const FinGroup& g, Fin2CatPtr b) {
  auto id = fun_ptr(identity_pseudofunctor(b));
  std::vector<FunctorPtr> f(g.order(), id);
  return make_action(g, std::move(b), std::move(f), {}, {}, "trivial");
}

GroupAction2 action_from_automorphisms(const FinGroup& g, Fin2CatPtr b,
                                       const std::vector<PseudoFunctor>& phi) {
  const int k = g.order();
  if (static_cast<int>(phi.size()) != k) throw ShapeMismatch("one 2-functor per group element");
  for (int x = 0; x < k; ++x) {
    if (!phi[x].is_strict()) throw NotHomomorphism("component is not a 2-functor", {x});
    if (!validate_pseudofunctor(phi[x]).pass())
      throw NotHomomorphism("component is not a valid 2-functor", {x});
  }
  if (!phi[g.unit].same_tables(identity_pseudofunctor(b)))
    throw NotHomomorphism("the unit does not act as the identity", {g.unit});
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (!compose_pseudofunctors(phi[x], phi[y]).same_tables(phi[g.mul(x, y)]))
        throw NotHomomorphism(fmt::format("phi_{}∘phi_{} != phi_{}", g.elements[x],
                                          g.elements[y], g.elements[g.mul(x, y)]),
                              {x, y});
  std::vector<FunctorPtr> f;
  for (const auto& p : phi) f.push_back(fun_ptr(p));
  return make_action(g, std::move(b), std::move(f));
}

GroupAction2 delooping_action(const FinGroup& g, Fin2CatPtr sigma_k,
                              const std::vector<std::vector<int>>& psi, std::string name) {
  std::vector<PseudoFunctor> phi;
  for (int x = 0; x < g.order(); ++x) {
    const auto& p = psi[x];
    std::vector<int> m2;
    for (int y : p) m2.push_back(sigma_k->id(y));
    phi.push_back(make_2functor(sigma_k, sigma_k, {0}, p, m2, "phi_" + g.elements[x]));
  }
  GroupAction2 a = action_from_automorphisms(g, std::move(sigma_k), phi);
  a.name = std::move(name);
  return a;
}

GroupAction2 inversion_action(Fin2CatPtr sigma_k, const FinGroup& k) {
  const FinGroup c2 = cyclic_group(2);
  std::vector<int> idk(k.order()), inv(k.order());
  for (int x = 0; x < k.order(); ++x) {
    idk[x] = x;
    inv[x] = k.inverse(x);
  }
  return delooping_action(c2, std::move(sigma_k), {idk, inv}, "inversion");
}

GroupAction2 anomaly_action(Fin2CatPtr b2c2) {
  const FinGroup c2 = cyclic_group(2);
  auto id = fun_ptr(identity_pseudofunctor(b2c2));
  std::vector<std::vector<int>> omega(8, std::vector<int>{b2c2->id(0)});
  const std::vector<int>& loops = b2c2->hom2(0, 0);
  for (int p : loops)
    if (p != b2c2->id(0)) omega[7] = {p};
  GroupAction2 a = make_action(c2, std::move(b2c2), {id, id}, {}, std::move(omega), "anomaly");
  return a;
}

Modification omega_modification(const GroupAction2& a, int g, int h, int f) {
  const int gh = a.group.mul(g, h), hf = a.group.mul(h, f);
  Modification m;
  m.from = nat_ptr(compose_pseudonats(a.chi_at(gh, f), right_whisker(a.chi_at(g, h), a.F[f])));
  m.to = nat_ptr(compose_pseudonats(a.chi_at(g, hf), left_whisker(a.F[g], a.chi_at(h, f))));
  m.comp = a.omega[(g * a.n() + h) * a.n() + f];
  return m;
}

namespace {

// Coherence of a family obj(k), theta(g,h): F_g(obj h) → obj(gh) and
// alpha(g,h,f): theta(gh,f)∘χ⁰_{g,h} ⇒ theta(g,hf)∘F_g(theta(h,f)) at one
// quadruple (g,h,f,k).
template <class Obj, class Theta, class Alpha>
bool family_pentagon(const GroupAction2& act, Obj obj, Theta theta, Alpha alpha, int g, int h,
                     int f, int k) {
  const Fin2Cat& b = *act.base;
  const FinGroup& G = act.group;
  const PseudoFunctor& Fg = act.Fg(g);
  const int hf = G.mul(h, f), fk = G.mul(f, k), gh = G.mul(g, h);
  const int hfk = G.mul(hf, k), ghf = G.mul(gh, f);
  const int ak = obj(k);
  const int l1 = b.h2(b.id(theta(ghf, k)), act.om(g, h, f, ak));
  const int l2 = b.h2(alpha(g, hf, k), b.id(Fg.on1(act.chi0(h, f, ak))));
  const int fa = apply_split(Fg, alpha(h, f, k), {theta(hf, k), act.chi0(h, f, ak)},
                             {theta(h, fk), act.Fg(h).on1(theta(f, k))});
  const int l3 = b.h2(b.id(theta(g, hfk)), fa);
  const int lhs = b.v({l3, l2, l1});
  const int r1 = b.h2(alpha(gh, f, k), b.id(act.chi0(g, h, act.Fg(f).on0(ak))));
  const int r2 = b.h2(b.id(theta(gh, fk)), b.inv2(act.chi2(g, h, theta(f, k))));
  const int r3 = b.h2(alpha(g, h, fk), b.id(Fg.on1(act.Fg(h).on1(theta(f, k)))));
  const int rhs = b.v({r3, r2, r1});
  return lhs != kNone && lhs == rhs;
}

}  // namespace

bool action_family_pentagon(const GroupAction2& act, const std::vector<int>& objs,
                            const std::vector<int>& theta, const std::vector<int>& alpha, int g,
                            int h, int f, int k) {
  const int n = act.n();
  return family_pentagon(
      act, [&](int x) { return objs[x]; }, [&](int x, int y) { return theta[x * n + y]; },
      [&](int x, int y, int z) { return alpha[(x * n + y) * n + z]; }, g, h, f, k);
}

ValidationReport validate_action(const GroupAction2& a) {
  ValidationReport r;
  const int k = a.n();
  if (!a.base || static_cast<int>(a.F.size()) != k || static_cast<int>(a.chi.size()) != k * k ||
      static_cast<int>(a.omega.size()) != k * k * k) {
    r.add("Shape", {}, "action tables do not match the group");
    return r;
  }
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int e = G.unit;
  for (const auto& om : a.omega)
    if (static_cast<int>(om.size()) != b.n0) {
      r.add("Shape", {}, "omega components do not match the 0-cells");
      return r;
    }

  for (int g = 0; g < k; ++g) {
    r.merge(validate_pseudofunctor(a.Fg(g)), fmt::format("F[{}].", G.elements[g]));
    r.count_check();
    if (!a.Fg(g).is_unital()) r.add("Unitality", {g}, "F_g is not unital");
  }
  r.count_check();
  if (!a.Fg(e).same_tables(identity_pseudofunctor(a.base)))
    r.add("Unitality", {e}, "F_1 is not the identity");
  if (!r.pass()) return r;

  for (int g = 0; g < k; ++g)
    for (int h = 0; h < k; ++h) {
      const PseudoNat& c = a.chi_at(g, h);
      const std::string scope = fmt::format("Chi[{},{}].", G.elements[g], G.elements[h]);
      r.count_check();
      if (!c.from || !c.to ||
          !same_functor(*c.from, compose_pseudofunctors(a.Fg(g), a.Fg(h))) ||
          !same_functor(*c.to, a.Fg(G.mul(g, h)))) {
        r.add(scope + "Shape", {g, h}, "chi has the wrong source or target");
        continue;
      }
      const ValidationReport cr = validate_pseudonat(c);
      r.merge(cr, scope);
      if (!cr.pass()) continue;
      for (int o = 0; o < b.n0; ++o) {
        r.count_check();
        if (find_inverse_1cell(b, c.c0[o]) == kNone)
          r.add("Invertibility", {g, h, o}, "chi component is not invertible");
      }
      if ((g == e || h == e)) {
        r.count_check();
        if (!is_identity_nat(c)) r.add("Unitality", {g, h}, "chi with a unit index is not the identity");
      }
    }
  if (!r.pass()) return r;

  for (int g = 0; g < k; ++g)
    for (int h = 0; h < k; ++h)
      for (int f = 0; f < k; ++f) {
        const Modification m = omega_modification(a, g, h, f);
        const ValidationReport mr = validate_modification(m);
        r.merge(mr, fmt::format("Omega[{},{},{}].", G.elements[g], G.elements[h], G.elements[f]));
        for (int o = 0; o < b.n0; ++o) {
          r.count_check();
          const int w = m.comp[o];
          if (mr.pass() && !b.invertible2(w))
            r.add("Invertibility", {g, h, f, o}, "omega component is not invertible");
          if ((g == e || h == e || f == e) && w != b.id(m.from->c0[o]))
            r.add("UnitalityMN1", {g, h, f, o}, "omega with a unit index is not the identity");
        }
      }

  for (int o = 0; o < b.n0; ++o) {
    auto obj = [&](int x) { return a.Fg(x).on0(o); };
    auto theta = [&](int x, int y) { return a.chi0(x, y, o); };
    auto alpha = [&](int x, int y, int z) { return a.om(x, y, z, o); };
    for (int g = 0; g < k; ++g)
      for (int h = 0; h < k; ++h)
        for (int f = 0; f < k; ++f)
          for (int q = 0; q < k; ++q) {
            r.count_check();
            if (!family_pentagon(a, obj, theta, alpha, g, h, f, q))
              r.add("PentagonMN2", {g, h, f, q, o}, "omega pentagon fails");
          }
  }
  return r;
}

GPseudoFunctor identity_g_pseudofunctor(ActionPtr a) {
  GPseudoFunctor h;
  h.src = a;
  h.tgt = a;
  h.H = fun_ptr(identity_pseudofunctor(a->base));
  const Fin2Cat& b = *a->base;
  for (int g = 0; g < a->n(); ++g) {
    PseudoNat n = identity_pseudonat(a->F[g]);
    n.from = fun_ptr(compose_pseudofunctors(*h.H, a->Fg(g)));
    n.to = fun_ptr(compose_pseudofunctors(a->Fg(g), *h.H));
    h.gamma.push_back(nat_ptr(std::move(n)));
  }
  for (int f = 0; f < a->n(); ++f)
    for (int g = 0; g < a->n(); ++g) {
      std::vector<int> comp;
      for (int o = 0; o < b.n0; ++o) comp.push_back(b.id(a->chi0(f, g, o)));
      h.Pi.push_back(std::move(comp));
    }
  return h;
}

GPseudoNat identity_g_pseudonat(GFunctorPtr h) {
  GPseudoNat t;
  t.theta = nat_ptr(identity_pseudonat(h->H));
  const Fin2Cat& c = *h->tgt->base;
  const Fin2Cat& b = *h->src->base;
  for (int g = 0; g < h->src->n(); ++g) {
    std::vector<int> comp;
    for (int o = 0; o < b.n0; ++o) comp.push_back(c.id(h->gamma[g]->c0[o]));
    t.theta_g.push_back(std::move(comp));
  }
  t.from = h;
  t.to = std::move(h);
  return t;
}

namespace {

// Π_{f,g} as a modification between its source and target pseudonats.
Modification pi_modification(const GPseudoFunctor& h, int f, int g) {
  const GroupAction2& s = *h.src;
  const GroupAction2& t = *h.tgt;
  const int fg = s.group.mul(f, g);
  const PseudoNat step1 = right_whisker(*h.gamma[f], s.F[g]);
  const PseudoNat step2 = left_whisker(t.F[f], *h.gamma[g]);
  const PseudoNat step3 = right_whisker(t.chi_at(f, g), h.H);
  Modification m;
  m.from = nat_ptr(compose_pseudonats(step3, compose_pseudonats(step2, step1)));
  m.to = nat_ptr(compose_pseudonats(*h.gamma[fg], left_whisker(h.H, s.chi_at(f, g))));
  m.comp = h.Pi[f * s.n() + g];
  return m;
}

// θ_g as a modification (1⊗θ)γ_g ⇛ γ'_g(θ⊗1).
Modification theta_g_modification(const GPseudoNat& t, int g) {
  const GroupAction2& s = *t.from->src;
  const GroupAction2& d = *t.from->tgt;
  Modification m;
  m.from = nat_ptr(compose_pseudonats(left_whisker(d.F[g], *t.theta), *t.from->gamma[g]));
  m.to = nat_ptr(compose_pseudonats(*t.to->gamma[g], right_whisker(*t.theta, s.F[g])));
  m.comp = t.theta_g[g];
  return m;
}

bool same_action_tables(const GroupAction2& a, const GroupAction2& b) {
  if (&a == &b) return true;
  if (!(a.group == b.group) || !a.base->same_tables(*b.base)) return false;
  for (int g = 0; g < a.n(); ++g)
    if (!a.Fg(g).same_tables(b.Fg(g))) return false;
  return true;
}

}  // namespace

ValidationReport validate_g_pseudofunctor(const GPseudoFunctor& h) {
  ValidationReport r;
  if (!h.src || !h.tgt || !h.H || !(h.src->group == h.tgt->group) ||
      static_cast<int>(h.gamma.size()) != h.src->n() ||
      static_cast<int>(h.Pi.size()) != h.src->n() * h.src->n()) {
    r.add("Shape", {}, "G-pseudofunctor tables do not match the group");
    return r;
  }
  const GroupAction2& s = *h.src;
  const GroupAction2& t = *h.tgt;
  const PseudoFunctor& H = *h.H;
  const Fin2Cat& b = *s.base;
  const Fin2Cat& c = *t.base;
  const FinGroup& G = s.group;
  const int k = s.n(), e = G.unit;
  r.merge(validate_pseudofunctor(H), "H.");
  r.count_check();
  if (!H.is_unital()) r.add("Unitality", {}, "H is not unital");
  if (!r.pass()) return r;

  for (int g = 0; g < k; ++g) {
    const PseudoNat& gm = *h.gamma[g];
    const std::string scope = fmt::format("Gamma[{}].", G.elements[g]);
    r.count_check();
    if (!gm.from || !gm.to || !same_functor(*gm.from, compose_pseudofunctors(H, s.Fg(g))) ||
        !same_functor(*gm.to, compose_pseudofunctors(t.Fg(g), H))) {
      r.add(scope + "Shape", {g}, "gamma has the wrong source or target");
      continue;
    }
    const ValidationReport gr = validate_pseudonat(gm);
    r.merge(gr, scope);
    if (!gr.pass()) continue;
    for (int o = 0; o < b.n0; ++o) {
      r.count_check();
      if (find_inverse_1cell(c, gm.c0[o]) == kNone)
        r.add("Invertibility", {g, o}, "gamma component is not invertible");
    }
  }
  r.count_check();
  if (!r.pass()) return r;
  if (!is_identity_nat(*h.gamma[e])) r.add("Unitality", {e}, "gamma_1 is not the identity");

  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g) {
      const Modification m = pi_modification(h, f, g);
      const ValidationReport mr = validate_modification(m);
      r.merge(mr, fmt::format("Pi[{},{}].", G.elements[f], G.elements[g]));
      for (int o = 0; o < b.n0; ++o) {
        r.count_check();
        if (mr.pass() && !c.invertible2(m.comp[o]))
          r.add("Invertibility", {f, g, o}, "Pi component is not invertible");
        if ((f == e || g == e) && m.comp[o] != c.id(m.from->c0[o]))
          r.add("Unitality", {f, g, o}, "Pi with a unit index is not the identity");
      }
    }
  if (!r.pass()) return r;

  auto pi = [&](int f, int g, int o) { return h.Pi[f * k + g][o]; };
  auto g0 = [&](int g, int o) { return h.gamma[g]->c0[o]; };
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g)
      for (int q = 0; q < k; ++q)
        for (int o = 0; o < b.n0; ++o) {
          r.count_check();
          const int fg = G.mul(f, g), gq = G.mul(g, q), fgq = G.mul(fg, q);
          const PseudoFunctor& Ff = t.Fg(f);
          const int HA = H.on0(o);
          const int FqA = s.Fg(q).on0(o);
          const int FgFqA = s.Fg(g).on0(FqA);
          const int chi_gq = s.chi0(g, q, o);
          // Π_{f,gq}·(γ_f)⁻¹_{χ⁰_{g,q}}·F̃_f(Π_{g,q})·ω̃_{f,g,q}
          const int l1 = c.h2(t.om(f, g, q, HA),
                              c.id(c.h1({Ff.on1(t.Fg(g).on1(g0(q, o))),
                                         Ff.on1(g0(g, FqA)), g0(f, FgFqA)})));
          const int fpi = apply_split(Ff, pi(g, q, o),
                                      {t.chi0(g, q, HA), t.Fg(g).on1(g0(q, o)), g0(g, FqA)},
                                      {g0(gq, o), H.on1(chi_gq)});
          const int l2 = c.h2({c.id(t.chi0(f, gq, HA)), fpi, c.id(g0(f, FgFqA))});
          const int l3 = c.h2(c.id(c.h1(t.chi0(f, gq, HA), Ff.on1(g0(gq, o)))),
                              c.inv2(h.gamma[f]->c2[chi_gq]));
          const int l4 = c.h2(pi(f, gq, o), c.id(H.on1(s.Fg(f).on1(chi_gq))));
          const int lhs = c.v({l4, l3, l2, l1});
          // (1∘H(ω))·(Π_{fg,q}∘1)·(1∘Π_{f,g}(F_q A))·(1∘χ̃_{f,g}∘1)
          const int r1 = c.h2({c.id(t.chi0(fg, q, HA)), t.chi2(f, g, g0(q, o)),
                               c.id(c.h1(Ff.on1(g0(g, FqA)), g0(f, FgFqA)))});
          const int r2 = c.h2(c.id(c.h1(t.chi0(fg, q, HA), t.Fg(fg).on1(g0(q, o)))),
                              pi(f, g, FqA));
          const int r3 = c.h2(pi(fg, q, o), c.id(H.on1(s.chi0(f, g, FqA))));
          const int hom = apply_split(H, s.om(f, g, q, o), {s.chi0(fg, q, o), s.chi0(f, g, FqA)},
                                      {s.chi0(f, gq, o), s.Fg(f).on1(chi_gq)});
          const int r4 = c.h2(c.id(g0(fgq, o)), hom);
          const int rhs = c.v({r4, r3, r2, r1});
          if (lhs == kNone || lhs != rhs) r.add("PiCoherence", {f, g, q, o}, "Pi coherence fails");
        }
  return r;
}

ValidationReport validate_g_pseudonat(const GPseudoNat& t) {
  ValidationReport r;
  if (!t.from || !t.to || !t.theta || static_cast<int>(t.theta_g.size()) != t.from->src->n()) {
    r.add("Shape", {}, "G-pseudonat tables do not match the group");
    return r;
  }
  const GPseudoFunctor& H1 = *t.from;
  const GPseudoFunctor& H2 = *t.to;
  if (!same_action_tables(*H1.src, *H2.src) || !same_action_tables(*H1.tgt, *H2.tgt) ||
      !same_functor(*t.theta->from, *H1.H) || !same_functor(*t.theta->to, *H2.H)) {
    r.add("Shape", {}, "theta does not connect the two G-pseudofunctors");
    return r;
  }
  const GroupAction2& s = *H1.src;
  const GroupAction2& d = *H1.tgt;
  const Fin2Cat& b = *s.base;
  const Fin2Cat& c = *d.base;
  const FinGroup& G = s.group;
  const int k = s.n(), e = G.unit;
  r.merge(validate_pseudonat(*t.theta), "Theta.");
  if (!r.pass()) return r;
  for (int g = 0; g < k; ++g) {
    const Modification m = theta_g_modification(t, g);
    const ValidationReport mr = validate_modification(m);
    r.merge(mr, fmt::format("ThetaG[{}].", G.elements[g]));
    for (int o = 0; o < b.n0; ++o) {
      r.count_check();
      if (mr.pass() && !c.invertible2(m.comp[o]))
        r.add("Invertibility", {g, o}, "theta_g component is not invertible");
      if (g == e && m.comp[o] != c.id(m.from->c0[o]))
        r.add("Unitality", {g, o}, "theta_1 is not the identity");
    }
  }
  if (!r.pass()) return r;

  const PseudoFunctor& Hf = *H1.H;
  const PseudoFunctor& Ht = *H2.H;
  auto th0 = [&](int o) { return t.theta->c0[o]; };
  for (int g = 0; g < k; ++g)
    for (int f = 0; f < k; ++f)
      for (int o = 0; o < b.n0; ++o) {
        r.count_check();
        const int gf = G.mul(g, f);
        const PseudoFunctor& Fg = d.Fg(g);
        const int FfA = s.Fg(f).on0(o);
        const int x = s.chi0(g, f, o);
        const int l1 = c.h2({c.id(d.chi0(g, f, Ht.on0(o))),
                             apply_split(Fg, t.theta_g[f][o],
                                         {d.Fg(f).on1(th0(o)), H1.gamma[f]->c0[o]},
                                         {H2.gamma[f]->c0[o], th0(FfA)}),
                             c.id(H1.gamma[g]->c0[FfA])});
        const int l2 = c.h2(c.id(c.h1(d.chi0(g, f, Ht.on0(o)), Fg.on1(H2.gamma[f]->c0[o]))),
                            t.theta_g[g][FfA]);
        const int l3 = c.h2(H2.Pi[g * k + f][o], c.id(th0(s.Fg(g).on0(FfA))));
        const int lhs = c.v({l3, l2, l1});
        const int r1 = c.h2(d.chi2(g, f, th0(o)),
                            c.id(c.h1(Fg.on1(H1.gamma[f]->c0[o]), H1.gamma[g]->c0[FfA])));
        const int r2 = c.h2(c.id(d.Fg(gf).on1(th0(o))), H1.Pi[g * k + f][o]);
        const int r3 = c.h2(t.theta_g[gf][o], c.id(Hf.on1(x)));
        const int r4 = c.h2(c.id(H2.gamma[gf]->c0[o]), t.theta->c2[x]);
        const int rhs = c.v({r4, r3, r2, r1});
        if (lhs == kNone || lhs != rhs)
          r.add("ThetaCoherence", {g, f, o}, "theta_g coherence fails");
      }
  return r;
}

ValidationReport validate_g_modification(const GModification& m) {
  ValidationReport r;
  if (!m.from || !m.to) {
    r.add("Shape", {}, "missing G-pseudonats");
    return r;
  }
  const GPseudoNat& th = *m.from;
  const GPseudoNat& sg = *m.to;
  Modification plain{th.theta, sg.theta, m.comp};
  r.merge(validate_modification(plain));
  if (!r.pass()) return r;
  const GroupAction2& s = *th.from->src;
  const GroupAction2& d = *th.from->tgt;
  const Fin2Cat& c = *d.base;
  for (int g = 0; g < s.n(); ++g)
    for (int o = 0; o < s.base->n0; ++o) {
      r.count_check();
      const int FgA = s.Fg(g).on0(o);
      const int lhs = c.v(c.h2(c.id(th.to->gamma[g]->c0[o]), m.comp[FgA]), th.theta_g[g][o]);
      const int rhs = c.v(sg.theta_g[g][o],
                          c.h2(d.Fg(g).on2(m.comp[o]), c.id(th.from->gamma[g]->c0[o])));
      if (lhs == kNone || lhs != rhs)
        r.add("GModification", {g, o}, "alpha is not compatible with theta_g");
    }
  return r;
}

GPseudoNat compose_g_pseudonats(const GPseudoNat& sigma, const GPseudoNat& theta) {
  if (!same_functor(*theta.to->H, *sigma.from->H) ||
      static_cast<int>(theta.theta_g.size()) != static_cast<int>(sigma.theta_g.size()))
    throw ShapeMismatch("G-pseudonats are not composable");
  const GroupAction2& s = *theta.from->src;
  const GroupAction2& d = *theta.from->tgt;
  const Fin2Cat& c = *d.base;
  GPseudoNat r;
  r.from = theta.from;
  r.to = sigma.to;
  r.theta = nat_ptr(compose_pseudonats(*sigma.theta, *theta.theta));
  for (int g = 0; g < s.n(); ++g) {
    std::vector<int> comp;
    const PseudoFunctor& Fg = d.Fg(g);
    for (int o = 0; o < s.base->n0; ++o) {
      const int FgA = s.Fg(g).on0(o);
      const int sA = sigma.theta->c0[o], tA = theta.theta->c0[o];
      const int split = c.h2(c.inv2(Fg.c(sA, tA)), c.id(theta.from->gamma[g]->c0[o]));
      const int step1 = c.h2(c.id(Fg.on1(sA)), theta.theta_g[g][o]);
      const int step2 = c.h2(sigma.theta_g[g][o], c.id(theta.theta->c0[FgA]));
      comp.push_back(c.v({step2, step1, split}));
    }
    r.theta_g.push_back(std::move(comp));
  }
  return r;
}

}  // namespace catcore
