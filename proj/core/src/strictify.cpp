#include "catcore/strictify.hpp"

#include <fmt/format.h>

#include "catcore/errors.hpp"

namespace catcore {

namespace {

bool in(int v, int n) { return v >= 0 && v < n; }

void require_2functor_action(const GroupAction2& a) {
  if (!a.by_2functors())
    throw NotTwoFunctorAction("B[G] needs an action by 2-functors; strictify the F_g first");
  for (const auto& f : a.F)
    if (!f->is_unital()) throw NotUnital("B[G] needs a unital action");
}

// θ_{gh,f}∘χ⁰_{g,h}(A_f) and θ_{g,hf}∘F_g(θ_{h,f}).
std::pair<int, int> alpha_boundary(const GroupAction2& a, const std::vector<int>& A,
                                   const std::vector<int>& theta, int g, int h, int f) {
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n();
  const int s = b.h1(theta[G.mul(g, h) * n + f], a.chi0(g, h, A[f]));
  const int t = b.h1(theta[g * n + G.mul(h, f)], a.Fg(g).on1(theta[h * n + f]));
  return {s, t};
}

// ρ_{g,h}∘F_g(X_h) and X_{gh}∘θ_{g,h}.
std::pair<int, int> l_boundary(const GroupAction2& a, const BGZeroCell& src,
                               const BGZeroCell& tgt, const std::vector<int>& X, int g, int h) {
  const Fin2Cat& b = *a.base;
  const int n = a.n();
  const int s = b.h1(tgt.theta[g * n + h], a.Fg(g).on1(X[h]));
  const int t = b.h1(X[a.group.mul(g, h)], src.theta[g * n + h]);
  return {s, t};
}

bool one_cell_axiom(const GroupAction2& a, const BGZeroCell& src, const BGZeroCell& tgt,
                    const std::vector<int>& X, const std::vector<int>& l, int f, int g, int h) {
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n();
  const PseudoFunctor& Ff = a.Fg(f);
  const int gh = G.mul(g, h), fg = G.mul(f, g), fgh = G.mul(fg, h);
  const int l1 = b.h2(tgt.alpha[(f * n + g) * n + h], b.id(Ff.on1(a.Fg(g).on1(X[h]))));
  const int l2 = b.h2(b.id(tgt.theta[f * n + gh]), Ff.on2(l[g * n + h]));
  const int l3 = b.h2(l[f * n + gh], b.id(Ff.on1(src.theta[g * n + h])));
  const int lhs = b.v({l3, l2, l1});
  const int r1 = b.h2(b.id(tgt.theta[fg * n + h]), a.chi2(f, g, X[h]));
  const int r2 = b.h2(l[fg * n + h], b.id(a.chi0(f, g, src.A[h])));
  const int r3 = b.h2(b.id(X[fgh]), src.alpha[(f * n + g) * n + h]);
  const int rhs = b.v({r3, r2, r1});
  return lhs != kNone && lhs == rhs;
}

bool two_cell_axiom(const GroupAction2& a, const BGZeroCell& src, const BGZeroCell& tgt,
                    const BG1Cell& x, const BG1Cell& y, const std::vector<int>& m, int g, int h) {
  const Fin2Cat& b = *a.base;
  const int n = a.n();
  const int gh = a.group.mul(g, h);
  const int lhs = b.v(b.h2(m[gh], b.id(src.theta[g * n + h])), x.l[g * n + h]);
  const int rhs = b.v(y.l[g * n + h], b.h2(b.id(tgt.theta[g * n + h]), a.Fg(g).on2(m[h])));
  return lhs != kNone && lhs == rhs;
}

std::vector<int> invertible_1cells(const Fin2Cat& b, int from, int to) {
  std::vector<int> out;
  if (!in(from, b.n0) || !in(to, b.n0)) return out;
  for (int x : b.hom1(from, to))
    if (find_inverse_1cell(b, x) != kNone) out.push_back(x);
  return out;
}

std::vector<int> invertible_2cells(const Fin2Cat& b, int s, int t) {
  std::vector<int> out;
  if (s == kNone || t == kNone) return out;
  for (int x : b.hom2(s, t))
    if (b.invertible2(x)) out.push_back(x);
  return out;
}

}  // namespace

int Strictification::find0(const BGZeroCell& c) const {
  auto it = index0_.find({c.A, c.theta, c.alpha});
  return it == index0_.end() ? kNone : it->second;
}

int Strictification::find1(int src, int tgt, const std::vector<int>& X,
                           const std::vector<int>& l) const {
  auto it = index1_.find({src, tgt, X, l});
  return it == index1_.end() ? kNone : it->second;
}

int Strictification::find2(int src, int tgt, const std::vector<int>& m) const {
  auto it = index2_.find({src, tgt, m});
  return it == index2_.end() ? kNone : it->second;
}

void Strictification::build_index() {
  index0_.clear();
  index1_.clear();
  index2_.clear();
  for (size_t i = 0; i < cells0.size(); ++i)
    index0_[{cells0[i].A, cells0[i].theta, cells0[i].alpha}] = static_cast<int>(i);
  for (size_t i = 0; i < cells1.size(); ++i)
    index1_[{cells1[i].src, cells1[i].tgt, cells1[i].X, cells1[i].l}] = static_cast<int>(i);
  for (size_t i = 0; i < cells2.size(); ++i)
    index2_[{cells2[i].src, cells2[i].tgt, cells2[i].m}] = static_cast<int>(i);
}

ValidationReport validate_bg_0cell(const GroupAction2& a, const BGZeroCell& c) {
  ValidationReport r;
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n(), e = G.unit;
  if (static_cast<int>(c.A.size()) != n || static_cast<int>(c.theta.size()) != n * n ||
      static_cast<int>(c.alpha.size()) != n * n * n) {
    r.add("Shape", {}, "family sizes do not match the group");
    return r;
  }
  for (int g = 0; g < n; ++g)
    if (!in(c.A[g], b.n0)) r.add("DanglingId", {g}, "A_g is not a 0-cell");
  if (!r.pass()) return r;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      r.count_check();
      const int t = c.theta[g * n + h];
      if (!in(t, b.num1()) || b.src1[t] != a.Fg(g).on0(c.A[h]) ||
          b.tgt1[t] != c.A[G.mul(g, h)]) {
        r.add("Typing", {g, h}, "theta has wrong endpoints");
      } else if (find_inverse_1cell(b, t) == kNone) {
        r.add("Invertibility", {g, h}, "theta is not invertible");
      }
    }
  if (!r.pass()) return r;
  for (int g = 0; g < n; ++g) {
    r.count_check();
    if (c.theta[e * n + g] != b.unit(c.A[g])) r.add("Unitality", {e, g}, "theta_{1,g} != I");
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int f = 0; f < n; ++f) {
        r.count_check();
        const int w = c.alpha[(g * n + h) * n + f];
        auto [s, t] = alpha_boundary(a, c.A, c.theta, g, h, f);
        if (!in(w, b.num2()) || b.src2[w] != s || b.tgt2[w] != t) {
          r.add("Typing", {g, h, f}, "alpha has wrong boundary");
        } else if (!b.invertible2(w)) {
          r.add("Invertibility", {g, h, f}, "alpha is not invertible");
        } else if ((g == e || h == e) && w != b.id(s)) {
          r.add("Unitality", {g, h, f}, "alpha with a unit index is not the identity");
        }
      }
  if (!r.pass()) return r;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int f = 0; f < n; ++f)
        for (int k = 0; k < n; ++k) {
          r.count_check();
          if (!action_family_pentagon(a, c.A, c.theta, c.alpha, g, h, f, k))
            r.add("ObjAxiom", {g, h, f, k}, "0-cell coherence fails");
        }
  return r;
}

ValidationReport validate_bg_1cell(const GroupAction2& a, const BGZeroCell& src,
                                   const BGZeroCell& tgt, const BG1Cell& x) {
  ValidationReport r;
  const Fin2Cat& b = *a.base;
  const int n = a.n(), e = a.group.unit;
  if (static_cast<int>(x.X.size()) != n || static_cast<int>(x.l.size()) != n * n) {
    r.add("Shape", {}, "family sizes do not match the group");
    return r;
  }
  for (int g = 0; g < n; ++g) {
    r.count_check();
    const int X = x.X[g];
    if (!in(X, b.num1()) || b.src1[X] != src.A[g] || b.tgt1[X] != tgt.A[g])
      r.add("Typing", {g}, "X_g has wrong endpoints");
  }
  if (!r.pass()) return r;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      r.count_check();
      const int w = x.l[g * n + h];
      auto [s, t] = l_boundary(a, src, tgt, x.X, g, h);
      if (!in(w, b.num2()) || b.src2[w] != s || b.tgt2[w] != t) {
        r.add("Typing", {g, h}, "l has wrong boundary");
      } else if (!b.invertible2(w)) {
        r.add("Invertibility", {g, h}, "l is not invertible");
      } else if (g == e && w != b.id(x.X[h])) {
        r.add("Unitality", {g, h}, "l_{1,g} is not the identity");
      }
    }
  if (!r.pass()) return r;
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        r.count_check();
        if (!one_cell_axiom(a, src, tgt, x.X, x.l, f, g, h))
          r.add("OneCellAxiom", {f, g, h}, "1-cell coherence fails");
      }
  return r;
}

ValidationReport validate_bg_2cell(const GroupAction2& a, const BGZeroCell& src,
                                   const BGZeroCell& tgt, const BG1Cell& x, const BG1Cell& y,
                                   const BG2Cell& m) {
  ValidationReport r;
  const Fin2Cat& b = *a.base;
  const int n = a.n();
  if (static_cast<int>(m.m.size()) != n) {
    r.add("Shape", {}, "family size does not match the group");
    return r;
  }
  for (int g = 0; g < n; ++g) {
    r.count_check();
    const int w = m.m[g];
    if (!in(w, b.num2()) || b.src2[w] != x.X[g] || b.tgt2[w] != y.X[g])
      r.add("Typing", {g}, "m_g has wrong boundary");
  }
  if (!r.pass()) return r;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      r.count_check();
      if (!two_cell_axiom(a, src, tgt, x, y, m.m, g, h))
        r.add("TwoCellAxiom", {g, h}, "2-cell coherence fails");
    }
  return r;
}

namespace {

std::vector<BGZeroCell> search_zero_cells(const GroupAction2& a, const SearchOptions& opt) {
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n(), e = G.unit;
  // Variables: A_g, then each θ_{g,h} followed by the α whose θ's are known.
  std::vector<int> var_A(n), var_theta(n * n, kNone), var_alpha(n * n * n, kNone);
  struct Slot {
    int kind, index;
  };
  std::vector<Slot> slots;
  for (int g = 0; g < n; ++g) {
    var_A[g] = static_cast<int>(slots.size());
    slots.push_back({0, g});
  }
  auto alpha_ready = [&](int g, int h, int f) {
    return var_theta[G.mul(g, h) * n + f] != kNone && var_theta[g * n + G.mul(h, f)] != kNone &&
           var_theta[h * n + f] != kNone;
  };
  for (int t = 0; t < n * n; ++t) {
    var_theta[t] = static_cast<int>(slots.size());
    slots.push_back({1, t});
    for (int q = 0; q < n * n * n; ++q) {
      if (var_alpha[q] != kNone) continue;
      if (alpha_ready(q / (n * n), (q / n) % n, q % n)) {
        var_alpha[q] = static_cast<int>(slots.size());
        slots.push_back({2, q});
      }
    }
  }

  auto unpack = [&, n](const Csp::Assignment& asg) {
    BGZeroCell c;
    c.A.resize(n);
    c.theta.assign(n * n, kNone);
    c.alpha.assign(n * n * n, kNone);
    for (int g = 0; g < n; ++g) c.A[g] = asg[var_A[g]];
    for (int t = 0; t < n * n; ++t) c.theta[t] = asg[var_theta[t]];
    for (int q = 0; q < n * n * n; ++q) c.alpha[q] = asg[var_alpha[q]];
    return c;
  };

  Csp csp;
  std::vector<int> all0(b.n0);
  for (int i = 0; i < b.n0; ++i) all0[i] = i;
  for (const Slot& s : slots) {
    if (s.kind == 0) {
      csp.add_var(all0);
    } else if (s.kind == 1) {
      const int g = s.index / n, h = s.index % n;
      const int va = var_A[h], vb = var_A[G.mul(g, h)];
      csp.add_var([&a, &b, g, h, e, va, vb](const Csp::Assignment& asg) {
        if (g == e) {
          if (asg[va] != asg[vb]) return std::vector<int>{};
          return std::vector<int>{b.unit(asg[va])};
        }
        return invertible_1cells(b, a.Fg(g).on0(asg[va]), asg[vb]);
      });
    } else {
      const int g = s.index / (n * n), h = (s.index / n) % n, f = s.index % n;
      csp.add_var([&, g, h, f](const Csp::Assignment& asg) {
        std::vector<int> A(n), theta(n * n, kNone);
        for (int x = 0; x < n; ++x) A[x] = asg[var_A[x]];
        for (int t = 0; t < n * n; ++t)
          if (var_theta[t] < static_cast<int>(asg.size())) theta[t] = asg[var_theta[t]];
        auto [src, tgt] = alpha_boundary(a, A, theta, g, h, f);
        if (g == e || h == e) {
          if (src == kNone || src != tgt) return std::vector<int>{};
          return std::vector<int>{b.id(src)};
        }
        return invertible_2cells(b, src, tgt);
      });
    }
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int f = 0; f < n; ++f)
        for (int k = 0; k < n; ++k) {
          const int hf = G.mul(h, f), fk = G.mul(f, k), gh = G.mul(g, h);
          std::vector<int> vars = {var_alpha[(g * n + hf) * n + k], var_alpha[(h * n + f) * n + k],
                                   var_alpha[(gh * n + f) * n + k], var_alpha[(g * n + h) * n + fk]};
          csp.add_constraint(vars, [&, g, h, f, k](const Csp::Assignment& asg) {
            std::vector<int> full(csp.num_vars(), kNone);
            std::copy(asg.begin(), asg.end(), full.begin());
            const BGZeroCell c = unpack(full);
            return action_family_pentagon(a, c.A, c.theta, c.alpha, g, h, f, k);
          });
        }
  std::vector<BGZeroCell> out;
  for (const auto& asg : csp.solve(opt)) out.push_back(unpack(asg));
  return out;
}

std::vector<BG1Cell> search_one_cells(const GroupAction2& a, const BGZeroCell& src,
                                      const BGZeroCell& tgt, int si, int ti,
                                      const SearchOptions& opt) {
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n(), e = G.unit;
  std::vector<int> var_X(n, kNone), var_l(n * n, kNone);
  struct Slot {
    int kind, index;
  };
  std::vector<Slot> slots;
  for (int g = 0; g < n; ++g) {
    var_X[g] = static_cast<int>(slots.size());
    slots.push_back({0, g});
    for (int q = 0; q < n * n; ++q) {
      if (var_l[q] != kNone) continue;
      const int x = q / n, y = q % n;
      if (var_X[y] != kNone && var_X[G.mul(x, y)] != kNone) {
        var_l[q] = static_cast<int>(slots.size());
        slots.push_back({1, q});
      }
    }
  }
  auto unpack = [&, n](const Csp::Assignment& asg, std::vector<int>& X, std::vector<int>& l) {
    X.assign(n, kNone);
    l.assign(n * n, kNone);
    for (int g = 0; g < n; ++g)
      if (var_X[g] < static_cast<int>(asg.size())) X[g] = asg[var_X[g]];
    for (int q = 0; q < n * n; ++q)
      if (var_l[q] < static_cast<int>(asg.size())) l[q] = asg[var_l[q]];
  };
  Csp csp;
  for (const Slot& s : slots) {
    if (s.kind == 0) {
      csp.add_var(b.hom1(src.A[s.index], tgt.A[s.index]));
    } else {
      const int g = s.index / n, h = s.index % n;
      csp.add_var([&, g, h](const Csp::Assignment& asg) {
        std::vector<int> X, l;
        unpack(asg, X, l);
        auto [s1, t1] = l_boundary(a, src, tgt, X, g, h);
        if (g == e) {
          if (s1 == kNone || s1 != t1) return std::vector<int>{};
          return std::vector<int>{b.id(s1)};
        }
        return invertible_2cells(b, s1, t1);
      });
    }
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        const int gh = G.mul(g, h), fg = G.mul(f, g);
        std::vector<int> vars = {var_l[g * n + h], var_l[f * n + gh], var_l[fg * n + h]};
        csp.add_constraint(vars, [&, f, g, h](const Csp::Assignment& asg) {
          std::vector<int> X, l;
          unpack(asg, X, l);
          return one_cell_axiom(a, src, tgt, X, l, f, g, h);
        });
      }
  std::vector<BG1Cell> out;
  for (const auto& asg : csp.solve(opt)) {
    BG1Cell c;
    c.src = si;
    c.tgt = ti;
    unpack(asg, c.X, c.l);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<BG2Cell> search_two_cells(const GroupAction2& a, const BGZeroCell& src,
                                      const BGZeroCell& tgt, const BG1Cell& x, const BG1Cell& y,
                                      int xi, int yi, const SearchOptions& opt) {
  const Fin2Cat& b = *a.base;
  const int n = a.n();
  Csp csp;
  for (int g = 0; g < n; ++g) csp.add_var(b.hom2(x.X[g], y.X[g]));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int gh = a.group.mul(g, h);
      csp.add_constraint({h, gh}, [&, g, h](const Csp::Assignment& asg) {
        std::vector<int> m(n, kNone);
        std::copy(asg.begin(), asg.end(), m.begin());
        return two_cell_axiom(a, src, tgt, x, y, m, g, h);
      });
    }
  std::vector<BG2Cell> out;
  for (const auto& asg : csp.solve(opt)) out.push_back({xi, yi, asg});
  return out;
}

}  // namespace

Strictification enumerate_BG(ActionPtr act, const StrictifyCaps& caps) {
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

  Strictification s;
  s.action = act;
  s.cells0 = search_zero_cells(a, caps.search);
  const int n0 = static_cast<int>(s.cells0.size());
  // Per hom: 1-cells, with the ids of their 2-cells.
  for (int p = 0; p < n0; ++p)
    for (int q = 0; q < n0; ++q)
      for (auto& c : search_one_cells(a, s.cells0[p], s.cells0[q], p, q, caps.search))
        s.cells1.push_back(std::move(c));
  const int n1 = static_cast<int>(s.cells1.size());
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      const BG1Cell& x = s.cells1[i];
      const BG1Cell& y = s.cells1[j];
      if (x.src != y.src || x.tgt != y.tgt) continue;
      for (auto& m : search_two_cells(a, s.cells0[x.src], s.cells0[x.tgt], x, y, i, j, caps.search))
        s.cells2.push_back(std::move(m));
    }
  const int n2 = static_cast<int>(s.cells2.size());
  s.build_index();

  Fin2Cat c;
  c.name = fmt::format("{}[{}]", b.name, a.group.name);
  c.n0 = n0;
  for (int i = 0; i < n0; ++i) c.names0.push_back(fmt::format("o{}", i));
  for (int i = 0; i < n1; ++i) {
    c.names1.push_back(fmt::format("x{}", i));
    c.src1.push_back(s.cells1[i].src);
    c.tgt1.push_back(s.cells1[i].tgt);
  }
  for (int i = 0; i < n2; ++i) {
    c.names2.push_back(fmt::format("m{}", i));
    c.src2.push_back(s.cells2[i].src);
    c.tgt2.push_back(s.cells2[i].tgt);
  }
  for (int p = 0; p < n0; ++p) {
    const BGZeroCell& z = s.cells0[p];
    std::vector<int> X(n), l(n * n);
    for (int g = 0; g < n; ++g) X[g] = b.unit(z.A[g]);
    for (int t = 0; t < n * n; ++t) l[t] = b.id(z.theta[t]);
    c.unit1.push_back(s.find1(p, p, X, l));
  }
  for (int i = 0; i < n1; ++i) {
    std::vector<int> m(n);
    for (int g = 0; g < n; ++g) m[g] = b.id(s.cells1[i].X[g]);
    c.id2.push_back(s.find2(i, i, m));
  }
  c.hcomp1 = Table(n1, n1);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      const BG1Cell& x = s.cells1[i];
      const BG1Cell& y = s.cells1[j];
      if (y.tgt != x.src) continue;
      std::vector<int> Z(n), t(n * n);
      for (int g = 0; g < n; ++g) Z[g] = b.h1(x.X[g], y.X[g]);
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
          const int gh = a.group.mul(g, h);
          t[g * n + h] = b.v(b.h2(b.id(x.X[gh]), y.l[g * n + h]),
                             b.h2(x.l[g * n + h], b.id(a.Fg(g).on1(y.X[h]))));
        }
      c.hcomp1.at(i, j) = s.find1(y.src, x.tgt, Z, t);
    }
  c.vcomp = Table(n2, n2);
  c.hcomp2 = Table(n2, n2);
  for (int p = 0; p < n2; ++p)
    for (int q = 0; q < n2; ++q) {
      const BG2Cell& u = s.cells2[p];
      const BG2Cell& w = s.cells2[q];
      std::vector<int> m(n);
      if (w.tgt == u.src) {
        for (int g = 0; g < n; ++g) m[g] = b.v(u.m[g], w.m[g]);
        c.vcomp.at(p, q) = s.find2(w.src, u.tgt, m);
      }
      if (s.cells1[w.src].tgt == s.cells1[u.src].src) {
        for (int g = 0; g < n; ++g) m[g] = b.h2(u.m[g], w.m[g]);
        c.hcomp2.at(p, q) = s.find2(c.hcomp1(u.src, w.src), c.hcomp1(u.tgt, w.tgt), m);
      }
    }
  c.finalize();
  s.cat = std::make_shared<const Fin2Cat>(std::move(c));
  return s;
}

GroupAction2 strict_action_on_BG(const Strictification& s) {
  const GroupAction2& a = *s.action;
  const FinGroup& G = a.group;
  const int n = a.n();
  const Fin2Cat& c = *s.cat;
  std::vector<PseudoFunctor> L;
  for (int g = 0; g < n; ++g) {
    std::vector<int> o, m1, m2;
    for (const BGZeroCell& z : s.cells0) {
      BGZeroCell w;
      for (int x = 0; x < n; ++x) w.A.push_back(z.A[G.mul(x, g)]);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) w.theta.push_back(z.theta[x * n + G.mul(y, g)]);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int f = 0; f < n; ++f) w.alpha.push_back(z.alpha[(x * n + y) * n + G.mul(f, g)]);
      o.push_back(s.find0(w));
    }
    for (const BG1Cell& x1 : s.cells1) {
      std::vector<int> X, l;
      for (int x = 0; x < n; ++x) X.push_back(x1.X[G.mul(x, g)]);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) l.push_back(x1.l[x * n + G.mul(y, g)]);
      m1.push_back(s.find1(o[x1.src], o[x1.tgt], X, l));
    }
    for (const BG2Cell& x2 : s.cells2) {
      std::vector<int> m;
      for (int x = 0; x < n; ++x) m.push_back(x2.m[G.mul(x, g)]);
      m2.push_back(s.find2(m1[x2.src], m1[x2.tgt], m));
    }
    PseudoFunctor f;
    f.name = "L_" + G.elements[g];
    f.src = s.cat;
    f.tgt = s.cat;
    f.obj = o;
    f.map1 = m1;
    f.map2 = m2;
    bool defined = true;
    for (int v : o) defined = defined && v != kNone;
    for (int v : m1) defined = defined && v != kNone;
    for (int v : m2) defined = defined && v != kNone;
    if (!defined) throw InvalidTable("L_g does not preserve the cells of B[G]");
    L.push_back(make_2functor(s.cat, s.cat, o, m1, m2, f.name));
  }
  (void)c;
  GroupAction2 out = action_from_automorphisms(G, s.cat, L);
  out.name = "L";
  return out;
}

BGZeroCell H_object(const GroupAction2& a, int obj) {
  const int n = a.n();
  BGZeroCell z;
  for (int g = 0; g < n; ++g) z.A.push_back(a.Fg(g).on0(obj));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) z.theta.push_back(a.chi0(g, h, obj));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int f = 0; f < n; ++f) z.alpha.push_back(a.om(g, h, f, obj));
  return z;
}

BG1Cell H_one_cell(const GroupAction2& a, int x) {
  const int n = a.n();
  const Fin2Cat& b = *a.base;
  BG1Cell c;
  for (int g = 0; g < n; ++g) c.X.push_back(a.Fg(g).on1(x));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) c.l.push_back(a.chi2(g, h, x));
  (void)b;
  return c;
}

namespace {

struct HTables {
  std::vector<int> obj, map1, map2;
};

HTables h_tables(const Strictification& s) {
  const GroupAction2& a = *s.action;
  const Fin2Cat& b = *a.base;
  const int n = a.n();
  HTables t;
  for (int o = 0; o < b.n0; ++o) t.obj.push_back(s.find0(H_object(a, o)));
  for (int x = 0; x < b.num1(); ++x) {
    const BG1Cell c = H_one_cell(a, x);
    t.map1.push_back(s.find1(t.obj[b.src1[x]], t.obj[b.tgt1[x]], c.X, c.l));
  }
  for (int w = 0; w < b.num2(); ++w) {
    std::vector<int> m;
    for (int g = 0; g < n; ++g) m.push_back(a.Fg(g).on2(w));
    const int s1 = t.map1[b.src2[w]], t1 = t.map1[b.tgt2[w]];
    t.map2.push_back(s1 == kNone || t1 == kNone ? kNone : s.find2(s1, t1, m));
  }
  return t;
}

bool all_defined(const std::vector<int>& v) {
  for (int x : v)
    if (x == kNone) return false;
  return true;
}

}  // namespace

GPseudoFunctor embedding_H(const Strictification& s, ActionPtr l_action) {
  const GroupAction2& a = *s.action;
  const Fin2Cat& b = *a.base;
  const Fin2Cat& c = *s.cat;
  const FinGroup& G = a.group;
  const int n = a.n();
  HTables t = h_tables(s);
  if (!all_defined(t.obj) || !all_defined(t.map1) || !all_defined(t.map2))
    throw InvalidTable("H does not land in the enumerated B[G]");
  GPseudoFunctor h;
  h.src = s.action;
  h.tgt = l_action;
  h.H = std::make_shared<const PseudoFunctor>(make_2functor(a.base, s.cat, t.obj, t.map1, t.map2, "H"));
  const GroupAction2& L = *l_action;
  for (int g = 0; g < n; ++g) {
    PseudoNat gm;
    gm.from = std::make_shared<const PseudoFunctor>(compose_pseudofunctors(*h.H, a.Fg(g)));
    gm.to = std::make_shared<const PseudoFunctor>(compose_pseudofunctors(L.Fg(g), *h.H));
    for (int o = 0; o < b.n0; ++o) {
      std::vector<int> X, l;
      for (int x = 0; x < n; ++x) X.push_back(a.chi0(x, g, o));
      for (int f = 0; f < n; ++f)
        for (int y = 0; y < n; ++y) l.push_back(b.inv2(a.om(f, y, g, o)));
      gm.c0.push_back(s.find1(gm.from->on0(o), gm.to->on0(o), X, l));
    }
    for (int x = 0; x < b.num1(); ++x) {
      const int A = b.src1[x], B = b.tgt1[x];
      const int src = c.h1(gm.c0[B], gm.from->on1(x));
      const int tgt = c.h1(gm.to->on1(x), gm.c0[A]);
      std::vector<int> m;
      for (int y = 0; y < n; ++y) m.push_back(a.chi2(y, g, x));
      gm.c2.push_back(src == kNone || tgt == kNone ? kNone : s.find2(src, tgt, m));
    }
    h.gamma.push_back(std::make_shared<const PseudoNat>(std::move(gm)));
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      std::vector<int> comp;
      const int fg = G.mul(f, g);
      for (int o = 0; o < b.n0; ++o) {
        const int HA = h.H->on0(o);
        const int src = c.h1({L.chi0(f, g, HA), L.Fg(f).on1(h.gamma[g]->c0[o]),
                              h.gamma[f]->c0[a.Fg(g).on0(o)]});
        const int tgt = c.h1(h.gamma[fg]->c0[o], h.H->on1(a.chi0(f, g, o)));
        std::vector<int> m;
        for (int x = 0; x < n; ++x) m.push_back(a.om(x, f, g, o));
        comp.push_back(src == kNone || tgt == kNone ? kNone : s.find2(src, tgt, m));
      }
      h.Pi.push_back(std::move(comp));
    }
  return h;
}

ValidationReport check_H_biequivalence(const Strictification& s) {
  ValidationReport r;
  const GroupAction2& a = *s.action;
  const Fin2Cat& b = *a.base;
  const Fin2Cat& c = *s.cat;
  const int n = a.n(), e = a.group.unit;
  const HTables t = h_tables(s);
  for (int o = 0; o < b.n0; ++o) {
    r.count_check();
    if (t.obj[o] == kNone) r.add("HDefined", {o}, "H(A) is not a 0-cell of B[G]");
  }
  for (int x = 0; x < b.num1(); ++x) {
    r.count_check();
    if (t.map1[x] == kNone) r.add("HDefined", {x}, "H(X) is not a 1-cell of B[G]");
  }
  for (int w = 0; w < b.num2(); ++w) {
    r.count_check();
    if (t.map2[w] == kNone) r.add("HDefined", {w}, "H(m) is not a 2-cell of B[G]");
  }
  if (!r.pass()) return r;

  // Every 0-cell is equivalent to H(A_1) through θ_{g,1} and α_{g,h,1}⁻¹.
  for (int p = 0; p < static_cast<int>(s.cells0.size()); ++p) {
    r.count_check();
    const BGZeroCell& z = s.cells0[p];
    std::vector<int> X, l;
    for (int g = 0; g < n; ++g) X.push_back(z.theta[g * n + e]);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) l.push_back(b.inv2(z.alpha[(g * n + h) * n + e]));
    const int w = s.find1(t.obj[z.A[e]], p, X, l);
    if (w == kNone) {
      r.add("BiEssentiallySurjective", {p}, "the comparison 1-cell is not in B[G]");
    } else if (find_inverse_1cell(c, w) == kNone) {
      r.add("BiEssentiallySurjective", {p, w}, "the comparison 1-cell is not invertible");
    }
  }
  // Every (X, l): H(A) → H(B) is isomorphic to H(X_1) through l_{g,1}.
  for (int A = 0; A < b.n0; ++A)
    for (int B = 0; B < b.n0; ++B)
      for (int i : c.hom1(t.obj[A], t.obj[B])) {
        r.count_check();
        const BG1Cell& x = s.cells1[i];
        std::vector<int> m;
        for (int g = 0; g < n; ++g) m.push_back(x.l[g * n + e]);
        const int w = s.find2(t.map1[x.X[e]], i, m);
        if (w == kNone) {
          r.add("LocallyEssentiallySurjective", {i}, "l_{g,1} is not a 2-cell of B[G]");
        } else if (!c.invertible2(w)) {
          r.add("LocallyEssentiallySurjective", {i, w}, "l_{g,1} is not invertible");
        }
      }
  // Every 2-cell w: H(X) ⇒ H(Y) is H(w_1), and H is injective on 2-cells.
  for (int x = 0; x < b.num1(); ++x)
    for (int y = 0; y < b.num1(); ++y) {
      if (b.src1[x] != b.src1[y] || b.tgt1[x] != b.tgt1[y]) continue;
      for (int w : c.hom2(t.map1[x], t.map1[y])) {
        r.count_check();
        const BG2Cell& m = s.cells2[w];
        bool ok = true;
        for (int g = 0; g < n; ++g) ok = ok && m.m[g] == a.Fg(g).on2(m.m[e]);
        if (!ok) r.add("LocallyFull", {w}, "w_g != F_g(w_1)");
      }
      for (int u : b.hom2(x, y))
        for (int v : b.hom2(x, y)) {
          r.count_check();
          if (u != v && t.map2[u] == t.map2[v])
            r.add("LocallyFaithful", {u, v}, "H identifies distinct 2-cells");
        }
    }
  return r;
}

}  // namespace catcore
