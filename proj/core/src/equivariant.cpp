#include "catcore/equivariant.hpp"

#include <fmt/format.h>

#include "catcore/errors.hpp"

namespace catcore {

namespace {

bool in(int v, int n) { return v >= 0 && v < n; }

void require_2functor_action(const GroupAction2& a) {
  if (!a.by_2functors())
    throw NotTwoFunctorAction("B^G needs an action by 2-functors; strictify the F_g first");
  for (const auto& f : a.F)
    if (!f->is_unital()) throw NotUnital("B^G needs a unital action");
}

// χ⁰_{g,h}(A)∘F_g(U_h)∘U_g
int pi_source(const GroupAction2& a, int A, const std::vector<int>& U, int g, int h) {
  return a.base->h1({a.chi0(g, h, A), a.Fg(g).on1(U[h]), U[g]});
}

bool pi_axiom(const GroupAction2& a, const EqZeroCell& c, int f, int g, int h) {
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n();
  const int A = c.A;
  const int fg = G.mul(f, g), gh = G.mul(g, h);
  const PseudoFunctor& Ff = a.Fg(f);
  const auto P = [&](int x, int y) { return c.Pi[x * n + y]; };
  const int l1 = b.h2(a.om(f, g, h, A),
                      b.id(b.h1({Ff.on1(a.Fg(g).on1(c.U[h])), Ff.on1(c.U[g]), c.U[f]})));
  const int l2 = b.h2({b.id(a.chi0(f, gh, A)), Ff.on2(P(g, h)), b.id(c.U[f])});
  const int lhs = b.v({P(f, gh), l2, l1});
  const int r1 = b.h2({b.id(a.chi0(fg, h, A)), a.chi2(f, g, c.U[h]),
                       b.id(b.h1(Ff.on1(c.U[g]), c.U[f]))});
  const int r2 = b.h2(b.id(b.h1(a.chi0(fg, h, A), a.Fg(fg).on1(c.U[h]))), P(f, g));
  const int rhs = b.v({P(fg, h), r2, r1});
  return lhs != kNone && lhs == rhs;
}

// F_g(θ)∘U_g and Ũ_g∘θ.
std::pair<int, int> theta_g_boundary(const GroupAction2& a, const EqZeroCell& src,
                                     const EqZeroCell& tgt, int theta, int g) {
  const Fin2Cat& b = *a.base;
  return {b.h1(a.Fg(g).on1(theta), src.U[g]), b.h1(tgt.U[g], theta)};
}

bool one_cell_axiom(const GroupAction2& a, const EqZeroCell& src, const EqZeroCell& tgt,
                    int theta, const std::vector<int>& tg, int g, int f) {
  const Fin2Cat& b = *a.base;
  const int n = a.n();
  const int gf = a.group.mul(g, f);
  const PseudoFunctor& Fg = a.Fg(g);
  const int chiT = a.chi0(g, f, tgt.A);
  const int l1 = b.h2({b.id(chiT), Fg.on2(tg[f]), b.id(src.U[g])});
  const int l2 = b.h2(b.id(b.h1(chiT, Fg.on1(tgt.U[f]))), tg[g]);
  const int l3 = b.h2(tgt.Pi[g * n + f], b.id(theta));
  const int lhs = b.v({l3, l2, l1});
  const int r1 = b.h2(a.chi2(g, f, theta), b.id(b.h1(Fg.on1(src.U[f]), src.U[g])));
  const int r2 = b.h2(b.id(a.Fg(gf).on1(theta)), src.Pi[g * n + f]);
  const int rhs = b.v({tg[gf], r2, r1});
  return lhs != kNone && lhs == rhs;
}

bool two_cell_axiom(const GroupAction2& a, const EqZeroCell& src, const EqZeroCell& tgt,
                    const Eq1Cell& x, const Eq1Cell& y, int alpha, int g) {
  const Fin2Cat& b = *a.base;
  const int lhs = b.v(b.h2(b.id(tgt.U[g]), alpha), x.theta_g[g]);
  const int rhs = b.v(y.theta_g[g], b.h2(a.Fg(g).on2(alpha), b.id(src.U[g])));
  return lhs != kNone && lhs == rhs;
}

std::vector<int> invertible_2cells(const Fin2Cat& b, int s, int t) {
  std::vector<int> out;
  if (s == kNone || t == kNone) return out;
  for (int x : b.hom2(s, t))
    if (b.invertible2(x)) out.push_back(x);
  return out;
}

}  // namespace

ValidationReport validate_eq_0cell(const GroupAction2& a, const EqZeroCell& c) {
  ValidationReport r;
  const Fin2Cat& b = *a.base;
  const int n = a.n(), e = a.group.unit;
  if (static_cast<int>(c.U.size()) != n || static_cast<int>(c.Pi.size()) != n * n) {
    r.add("Shape", {}, "family sizes do not match the group");
    return r;
  }
  if (!in(c.A, b.n0)) {
    r.add("DanglingId", {c.A}, "A is not a 0-cell");
    return r;
  }
  for (int g = 0; g < n; ++g) {
    r.count_check();
    const int u = c.U[g];
    if (!in(u, b.num1()) || b.src1[u] != c.A || b.tgt1[u] != a.Fg(g).on0(c.A)) {
      r.add("Typing", {g}, "U_g has wrong endpoints");
    } else if (find_inverse_1cell(b, u) == kNone) {
      r.add("Invertibility", {g}, "U_g is not strictly invertible");
    }
  }
  if (!r.pass()) return r;
  r.count_check();
  if (c.U[e] != b.unit(c.A)) r.add("Unitality", {e}, "U_1 != I_A");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      r.count_check();
      const int p = c.Pi[g * n + h];
      const int s = pi_source(a, c.A, c.U, g, h);
      const int t = c.U[a.group.mul(g, h)];
      if (!in(p, b.num2()) || b.src2[p] != s || b.tgt2[p] != t) {
        r.add("Typing", {g, h}, "Pi has wrong boundary");
      } else if (!b.invertible2(p)) {
        r.add("Invertibility", {g, h}, "Pi is not invertible");
      } else if ((g == e || h == e) && p != b.id(t)) {
        r.add("Unitality", {g, h}, "Pi with a unit index is not the identity");
      }
    }
  if (!r.pass()) return r;
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        r.count_check();
        if (!pi_axiom(a, c, f, g, h)) r.add("PiAxiom", {f, g, h}, "Pi coherence fails");
      }
  return r;
}

ValidationReport validate_eq_1cell(const GroupAction2& a, const EqZeroCell& src,
                                   const EqZeroCell& tgt, const Eq1Cell& x) {
  ValidationReport r;
  const Fin2Cat& b = *a.base;
  const int n = a.n(), e = a.group.unit;
  if (static_cast<int>(x.theta_g.size()) != n) {
    r.add("Shape", {}, "family size does not match the group");
    return r;
  }
  r.count_check();
  if (!in(x.theta, b.num1()) || b.src1[x.theta] != src.A || b.tgt1[x.theta] != tgt.A) {
    r.add("Typing", {}, "theta has wrong endpoints");
    return r;
  }
  for (int g = 0; g < n; ++g) {
    r.count_check();
    const int w = x.theta_g[g];
    auto [s, t] = theta_g_boundary(a, src, tgt, x.theta, g);
    if (!in(w, b.num2()) || b.src2[w] != s || b.tgt2[w] != t) {
      r.add("Typing", {g}, "theta_g has wrong boundary");
    } else if (!b.invertible2(w)) {
      r.add("Invertibility", {g}, "theta_g is not invertible");
    } else if (g == e && w != b.id(x.theta)) {
      r.add("Unitality", {g}, "theta_1 is not the identity");
    }
  }
  if (!r.pass()) return r;
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      r.count_check();
      if (!one_cell_axiom(a, src, tgt, x.theta, x.theta_g, g, f))
        r.add("OneCellAxiom", {g, f}, "equivariant 1-cell coherence fails");
    }
  return r;
}

ValidationReport validate_eq_2cell(const GroupAction2& a, const EqZeroCell& src,
                                   const EqZeroCell& tgt, const Eq1Cell& x, const Eq1Cell& y,
                                   int alpha) {
  ValidationReport r;
  const Fin2Cat& b = *a.base;
  r.count_check();
  if (!in(alpha, b.num2()) || b.src2[alpha] != x.theta || b.tgt2[alpha] != y.theta) {
    r.add("Typing", {alpha}, "alpha has wrong boundary");
    return r;
  }
  for (int g = 0; g < a.n(); ++g) {
    r.count_check();
    if (!two_cell_axiom(a, src, tgt, x, y, alpha, g))
      r.add("TwoCellAxiom", {g}, "equivariant 2-cell coherence fails");
  }
  return r;
}

Eq1Cell compose_eq_1cells(const GroupAction2& a, const Eq1Cell& theta, const Eq1Cell& sigma) {
  const Fin2Cat& b = *a.base;
  if (sigma.tgt != theta.src) throw NotComposable("equivariant 1-cells are not composable", {theta.src, sigma.tgt});
  Eq1Cell out;
  out.src = sigma.src;
  out.tgt = theta.tgt;
  out.theta = b.h1(theta.theta, sigma.theta);
  if (out.theta == kNone) throw NotComposable("underlying 1-cells are not composable", {theta.theta, sigma.theta});
  for (int g = 0; g < a.n(); ++g)
    out.theta_g.push_back(b.v(b.h2(theta.theta_g[g], b.id(sigma.theta)),
                              b.h2(b.id(a.Fg(g).on1(theta.theta)), sigma.theta_g[g])));
  return out;
}

Eq1Cell identity_eq_1cell(const GroupAction2& a, const EqZeroCell& c, int index) {
  const Fin2Cat& b = *a.base;
  Eq1Cell out;
  out.src = index;
  out.tgt = index;
  out.theta = b.unit(c.A);
  for (int g = 0; g < a.n(); ++g) out.theta_g.push_back(b.id(c.U[g]));
  return out;
}

int Equivariantization::find0(const EqZeroCell& c) const {
  auto it = index0_.find({c.A, c.U, c.Pi});
  return it == index0_.end() ? kNone : it->second;
}

int Equivariantization::find1(int src, int tgt, int theta, const std::vector<int>& theta_g) const {
  auto it = index1_.find({src, tgt, theta, theta_g});
  return it == index1_.end() ? kNone : it->second;
}

int Equivariantization::find2(int src, int tgt, int alpha) const {
  auto it = index2_.find({src, tgt, alpha});
  return it == index2_.end() ? kNone : it->second;
}

void Equivariantization::build_index() {
  index0_.clear();
  index1_.clear();
  index2_.clear();
  for (size_t i = 0; i < cells0.size(); ++i)
    index0_[{cells0[i].A, cells0[i].U, cells0[i].Pi}] = static_cast<int>(i);
  for (size_t i = 0; i < cells1.size(); ++i)
    index1_[{cells1[i].src, cells1[i].tgt, cells1[i].theta, cells1[i].theta_g}] = static_cast<int>(i);
  for (size_t i = 0; i < cells2.size(); ++i)
    index2_[{cells2[i].src, cells2[i].tgt, cells2[i].alpha}] = static_cast<int>(i);
}

namespace {

std::vector<EqZeroCell> search_zero_cells(const GroupAction2& a, const SearchOptions& opt) {
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n(), e = G.unit;
  // Variables: A, then each U_g followed by the Π whose U's are known.
  std::vector<int> var_U(n, kNone), var_Pi(n * n, kNone);
  struct Slot {
    int kind, index;
  };
  std::vector<Slot> slots = {{0, 0}};
  for (int g = 0; g < n; ++g) {
    var_U[g] = static_cast<int>(slots.size());
    slots.push_back({1, g});
    for (int q = 0; q < n * n; ++q) {
      if (var_Pi[q] != kNone) continue;
      const int x = q / n, y = q % n;
      if (var_U[x] != kNone && var_U[y] != kNone && var_U[G.mul(x, y)] != kNone) {
        var_Pi[q] = static_cast<int>(slots.size());
        slots.push_back({2, q});
      }
    }
  }
  auto unpack = [&, n](const Csp::Assignment& asg) {
    EqZeroCell c;
    c.A = asg[0];
    c.U.assign(n, kNone);
    c.Pi.assign(n * n, kNone);
    const int k = static_cast<int>(asg.size());
    for (int g = 0; g < n; ++g)
      if (var_U[g] < k) c.U[g] = asg[var_U[g]];
    for (int q = 0; q < n * n; ++q)
      if (var_Pi[q] < k) c.Pi[q] = asg[var_Pi[q]];
    return c;
  };
  Csp csp;
  for (const Slot& s : slots) {
    if (s.kind == 0) {
      std::vector<int> all(b.n0);
      for (int i = 0; i < b.n0; ++i) all[i] = i;
      csp.add_var(all);
    } else if (s.kind == 1) {
      const int g = s.index;
      csp.add_var([&a, &b, g, e](const Csp::Assignment& asg) {
        const int A = asg[0];
        if (g == e) return std::vector<int>{b.unit(A)};
        std::vector<int> out;
        for (int u : b.hom1(A, a.Fg(g).on0(A)))
          if (find_inverse_1cell(b, u) != kNone) out.push_back(u);
        return out;
      });
    } else {
      const int g = s.index / n, h = s.index % n;
      csp.add_var([&, g, h](const Csp::Assignment& asg) {
        const EqZeroCell c = unpack(asg);
        const int src = pi_source(a, c.A, c.U, g, h);
        const int tgt = c.U[G.mul(g, h)];
        if (g == e || h == e) {
          if (src == kNone || src != tgt) return std::vector<int>{};
          return std::vector<int>{b.id(src)};
        }
        return invertible_2cells(b, src, tgt);
      });
    }
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        const int fg = G.mul(f, g), gh = G.mul(g, h);
        csp.add_constraint({var_Pi[f * n + gh], var_Pi[g * n + h], var_Pi[fg * n + h], var_Pi[f * n + g]},
                           [&, f, g, h](const Csp::Assignment& asg) {
                             return pi_axiom(a, unpack(asg), f, g, h);
                           });
      }
  std::vector<EqZeroCell> out;
  for (const auto& asg : csp.solve(opt)) out.push_back(unpack(asg));
  return out;
}

std::vector<Eq1Cell> search_one_cells(const GroupAction2& a, const EqZeroCell& src,
                                      const EqZeroCell& tgt, int si, int ti,
                                      const SearchOptions& opt) {
  const Fin2Cat& b = *a.base;
  const int n = a.n(), e = a.group.unit;
  Csp csp;
  csp.add_var(b.hom1(src.A, tgt.A));
  for (int g = 0; g < n; ++g)
    csp.add_var([&, g](const Csp::Assignment& asg) {
      const int theta = asg[0];
      if (g == e) return std::vector<int>{b.id(theta)};
      auto [s, t] = theta_g_boundary(a, src, tgt, theta, g);
      return invertible_2cells(b, s, t);
    });
  auto unpack = [n](const Csp::Assignment& asg) {
    std::vector<int> tg(n, kNone);
    for (int g = 0; g < n && g + 1 < static_cast<int>(asg.size()); ++g) tg[g] = asg[g + 1];
    return tg;
  };
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      csp.add_constraint({g + 1, f + 1, a.group.mul(g, f) + 1}, [&, g, f](const Csp::Assignment& asg) {
        return one_cell_axiom(a, src, tgt, asg[0], unpack(asg), g, f);
      });
  std::vector<Eq1Cell> out;
  for (const auto& asg : csp.solve(opt)) out.push_back({si, ti, asg[0], unpack(asg)});
  return out;
}

}  // namespace

Equivariantization enumerate_equivariant(ActionPtr act, const EquivariantCaps& caps) {
  const GroupAction2& a = *act;
  require_2functor_action(a);
  const Fin2Cat& b = *a.base;
  const int n = a.n();
  if (n > caps.max_group)
    throw CapExceeded(fmt::format("|G| = {} exceeds the cap {}", n, caps.max_group));
  for (int p = 0; p < b.n0; ++p)
    for (int q = 0; q < b.n0; ++q)
      if (static_cast<int>(b.hom1(p, q).size()) > caps.max_hom1)
        throw CapExceeded(fmt::format("hom({}, {}) has more than {} 1-cells", p, q, caps.max_hom1));

  Equivariantization s;
  s.action = act;
  s.cells0 = search_zero_cells(a, caps.search);
  const int n0 = static_cast<int>(s.cells0.size());
  for (int p = 0; p < n0; ++p)
    for (int q = 0; q < n0; ++q)
      for (auto& c : search_one_cells(a, s.cells0[p], s.cells0[q], p, q, caps.search))
        s.cells1.push_back(std::move(c));
  const int n1 = static_cast<int>(s.cells1.size());
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      const Eq1Cell& x = s.cells1[i];
      const Eq1Cell& y = s.cells1[j];
      if (x.src != y.src || x.tgt != y.tgt) continue;
      for (int alpha : b.hom2(x.theta, y.theta)) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
          ok = two_cell_axiom(a, s.cells0[x.src], s.cells0[x.tgt], x, y, alpha, g);
        if (ok) s.cells2.push_back({i, j, alpha});
      }
    }
  const int n2 = static_cast<int>(s.cells2.size());
  s.build_index();

  Fin2Cat c;
  c.name = fmt::format("{}^{}", b.name, a.group.name);
  c.n0 = n0;
  for (int i = 0; i < n0; ++i) c.names0.push_back(fmt::format("e{}", i));
  for (int i = 0; i < n1; ++i) {
    c.names1.push_back(fmt::format("t{}", i));
    c.src1.push_back(s.cells1[i].src);
    c.tgt1.push_back(s.cells1[i].tgt);
  }
  for (int i = 0; i < n2; ++i) {
    c.names2.push_back(fmt::format("a{}", i));
    c.src2.push_back(s.cells2[i].src);
    c.tgt2.push_back(s.cells2[i].tgt);
  }
  for (int p = 0; p < n0; ++p) {
    const Eq1Cell u = identity_eq_1cell(a, s.cells0[p], p);
    c.unit1.push_back(s.find1(p, p, u.theta, u.theta_g));
  }
  for (int i = 0; i < n1; ++i) c.id2.push_back(s.find2(i, i, b.id(s.cells1[i].theta)));
  c.hcomp1 = Table(n1, n1);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      if (s.cells1[j].tgt != s.cells1[i].src) continue;
      const Eq1Cell z = compose_eq_1cells(a, s.cells1[i], s.cells1[j]);
      c.hcomp1.at(i, j) = s.find1(z.src, z.tgt, z.theta, z.theta_g);
    }
  c.vcomp = Table(n2, n2);
  c.hcomp2 = Table(n2, n2);
  for (int p = 0; p < n2; ++p)
    for (int q = 0; q < n2; ++q) {
      const Eq2Cell& u = s.cells2[p];
      const Eq2Cell& w = s.cells2[q];
      if (w.tgt == u.src) c.vcomp.at(p, q) = s.find2(w.src, u.tgt, b.v(u.alpha, w.alpha));
      if (s.cells1[w.src].tgt == s.cells1[u.src].src)
        c.hcomp2.at(p, q) = s.find2(c.hcomp1(u.src, w.src), c.hcomp1(u.tgt, w.tgt),
                                    b.h2(u.alpha, w.alpha));
    }
  c.finalize();
  s.cat = std::make_shared<const Fin2Cat>(std::move(c));
  return s;
}

PseudoFunctor forgetful_Phi(const Equivariantization& e) {
  std::vector<int> obj, m1, m2;
  for (const auto& c : e.cells0) obj.push_back(c.A);
  for (const auto& c : e.cells1) m1.push_back(c.theta);
  for (const auto& c : e.cells2) m2.push_back(c.alpha);
  return make_2functor(e.cat, e.action->base, obj, m1, m2, "Phi");
}

}  // namespace catcore
