#include "catcore/centers.hpp"

#include <map>
#include <memory>
#include <set>

#include "catcore/errors.hpp"

namespace catcore {

namespace {

void require_strict(const GroupAction2& a, const char* what) {
  if (!a.is_strict())
    throw NotStrictAction(std::string(what) + " needs a strict action; strictify through B[G] first");
}

int fincat_inverse(const FinCat& c, int f) {
  if (f < 0 || f >= c.num_morphisms()) return kNone;
  const int A = c.src[f], B = c.tgt[f];
  for (int g : c.hom(B, A))
    if (c.compose(g, f) == c.identity[A] && c.compose(f, g) == c.identity[B]) return g;
  return kNone;
}

int comp(const FinCat& c, int g, int f) { return c.compose.get(g, f); }

}  // namespace

std::vector<int> GCrossedCat::objects_of_grade(int g) const {
  std::vector<int> out;
  for (size_t i = 0; i < grade.size(); ++i)
    if (grade[i] == g) out.push_back(static_cast<int>(i));
  return out;
}

GCrossedCat build_ZG(ActionPtr act, const SearchOptions& opt) {
  const GroupAction2& a = *act;
  require_strict(a, "Z_G(B)");
  const FinGroup& G = a.group;
  const Fin2Cat& b = *a.base;
  const int n = a.n();
  auto idB = std::make_shared<const PseudoFunctor>(identity_pseudofunctor(a.base));
  std::vector<NatCategory> grades;
  std::vector<int> obj_off(n + 1, 0), mor_off(n + 1, 0);
  for (int g = 0; g < n; ++g) {
    grades.push_back(pseudonat_category(idB, a.F[g], opt));
    obj_off[g + 1] = obj_off[g] + grades[g].cat.num_objects;
    mor_off[g + 1] = mor_off[g] + grades[g].cat.num_morphisms();
  }
  const int N = obj_off[n], K = mor_off[n];

  GCrossedCat z;
  z.group = G;
  FinCat& cat = z.mon.cat;
  cat.num_objects = N;
  cat.compose = Table(K, K);
  std::vector<int> mor_grade;
  for (int g = 0; g < n; ++g) {
    const NatCategory& nc = grades[g];
    for (int i = 0; i < nc.cat.num_objects; ++i) {
      z.grade.push_back(g);
      z.objects.push_back({g, nc.objects[i]});
      cat.identity.push_back(mor_off[g] + nc.cat.identity[i]);
    }
    for (int p = 0; p < nc.cat.num_morphisms(); ++p) {
      cat.src.push_back(obj_off[g] + nc.mor_src[p]);
      cat.tgt.push_back(obj_off[g] + nc.mor_tgt[p]);
      z.morphisms.push_back(nc.morphisms[p]);
      mor_grade.push_back(g);
    }
    for (int q = 0; q < nc.cat.num_morphisms(); ++q)
      for (int p = 0; p < nc.cat.num_morphisms(); ++p) {
        const int r = nc.cat.compose(q, p);
        if (r != kNone) cat.compose.at(mor_off[g] + q, mor_off[g] + p) = mor_off[g] + r;
      }
  }
  auto local_obj = [&](int x) { return x - obj_off[z.grade[x]]; };
  auto find_obj = [&](int g, const PseudoNat& t) {
    const int i = grades[g].find_object(t);
    return i == kNone ? kNone : obj_off[g] + i;
  };
  auto find_mor = [&](int g, int s, int t, const std::vector<int>& c) {
    if (s == kNone || t == kNone) return kNone;
    const int i = grades[g].find_morphism(s - obj_off[g], t - obj_off[g], c);
    return i == kNone ? kNone : mor_off[g] + i;
  };

  z.mon.tensor_obj = Table(N, N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const PseudoNat t = tensor_pseudonat(*z.objects[x].X, *z.objects[y].X);
      z.mon.tensor_obj.at(x, y) = find_obj(G.mul(z.grade[x], z.grade[y]), t);
    }
  z.mon.tensor_mor = Table(K, K);
  for (int p = 0; p < K; ++p)
    for (int q = 0; q < K; ++q) {
      const Modification t = tensor_modifications(z.morphisms[p], z.morphisms[q]);
      const int gh = G.mul(mor_grade[p], mor_grade[q]);
      z.mon.tensor_mor.at(p, q) = find_mor(gh, z.mon.tensor_obj(cat.src[p], cat.src[q]),
                                           z.mon.tensor_obj(cat.tgt[p], cat.tgt[q]), t.comp);
    }
  z.mon.unit = find_obj(G.unit, identity_pseudonat(idB));

  z.act_obj.assign(n, std::vector<int>(N, kNone));
  z.act_mor.assign(n, std::vector<int>(K, kNone));
  for (int g = 0; g < n; ++g) {
    const PseudoFunctor& Fg = a.Fg(g);
    const PseudoFunctor& Fi = a.Fg(G.inverse(g));
    for (int x = 0; x < N; ++x) {
      const PseudoNat& X = *z.objects[x].X;
      PseudoNat y;
      for (int A = 0; A < b.n0; ++A) y.c0.push_back(Fg.on1(X.c0[Fi.on0(A)]));
      for (int w = 0; w < b.num1(); ++w) y.c2.push_back(Fg.on2(X.c2[Fi.on1(w)]));
      const int h = z.grade[x];
      z.act_obj[g][x] = find_obj(G.mul(G.mul(g, h), G.inverse(g)), y);
    }
    for (int p = 0; p < K; ++p) {
      std::vector<int> c;
      for (int A = 0; A < b.n0; ++A) c.push_back(Fg.on2(z.morphisms[p].comp[Fi.on0(A)]));
      const int h = mor_grade[p];
      z.act_mor[g][p] = find_mor(G.mul(G.mul(g, h), G.inverse(g)), z.act_obj[g][cat.src[p]],
                                 z.act_obj[g][cat.tgt[p]], c);
    }
  }

  z.braid = Table(N, N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const PseudoNat& X = *z.objects[x].X;
      const PseudoNat& Y = *z.objects[y].X;
      const int g = z.grade[x];
      std::vector<int> c;
      for (int A = 0; A < b.n0; ++A) c.push_back(X.c2[Y.c0[A]]);
      const int gy = z.act_obj[g][y];
      const int tgt = gy == kNone ? kNone : z.mon.tensor_obj(gy, x);
      z.braid.at(x, y) = find_mor(G.mul(g, z.grade[y]), z.mon.tensor_obj(x, y), tgt, c);
    }
  (void)local_obj;
  return z;
}

ValidationReport check_g_crossed_axioms(const GCrossedCat& z) {
  ValidationReport r;
  const FinGroup& G = z.group;
  const FinCat& c = z.mon.cat;
  const int n = G.order(), e = G.unit;
  const int N = c.num_objects, K = c.num_morphisms();
  const Table& to = z.mon.tensor_obj;
  const Table& tm = z.mon.tensor_mor;

  if (static_cast<int>(z.grade.size()) != N || static_cast<int>(z.act_obj.size()) != n ||
      static_cast<int>(z.act_mor.size()) != n || z.braid.rows() != N || z.braid.cols() != N ||
      to.rows() != N || tm.rows() != K) {
    r.add("Shape", {}, "tables do not match the category");
    return r;
  }
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      r.count_check();
      if (to(x, y) == kNone) r.add("Undefined", {x, y}, "tensor of objects undefined");
      if (z.braid(x, y) == kNone) r.add("Undefined", {x, y}, "braiding undefined");
    }
  for (int g = 0; g < n; ++g) {
    for (int x = 0; x < N; ++x)
      if (z.act_obj[g][x] == kNone) r.add("Undefined", {g, x}, "g_*(X) undefined");
    for (int p = 0; p < K; ++p)
      if (z.act_mor[g][p] == kNone) r.add("Undefined", {g, p}, "g_*(f) undefined");
  }
  for (int p = 0; p < K; ++p)
    for (int q = 0; q < K; ++q)
      if (tm(p, q) == kNone) r.add("Undefined", {p, q}, "tensor of morphisms undefined");
  if (!r.pass()) return r;

  r.merge(validate_monoidal(z.mon), "Monoidal.");

  // Grading.
  r.count_check();
  if (z.grade[z.mon.unit] != e) r.add("Grading", {z.mon.unit}, "unit is not in grade e");
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      r.count_check();
      if (z.grade[to(x, y)] != G.mul(z.grade[x], z.grade[y]))
        r.add("Grading", {x, y}, "grade(X⊗Y) != grade(X)grade(Y)");
    }
  for (int p = 0; p < K; ++p) {
    r.count_check();
    if (z.grade[c.src[p]] != z.grade[c.tgt[p]]) r.add("Grading", {p}, "morphism crosses grades");
  }

  // The action.
  for (int g = 0; g < n; ++g) {
    const auto& ao = z.act_obj[g];
    const auto& am = z.act_mor[g];
    for (int x = 0; x < N; ++x) {
      r.count_check();
      const int h = z.grade[x];
      if (z.grade[ao[x]] != G.mul(G.mul(g, h), G.inverse(g)))
        r.add("ActionGrading", {g, x}, "g_* does not conjugate the grade");
      if (am[c.identity[x]] != c.identity[ao[x]])
        r.add("ActionFunctor", {g, x}, "g_* does not preserve identities");
      if (g == e && ao[x] != x) r.add("ActionUnit", {x}, "e_* is not the identity");
      for (int h2 = 0; h2 < n; ++h2)
        if (z.act_obj[g][z.act_obj[h2][x]] != z.act_obj[G.mul(g, h2)][x])
          r.add("ActionComposition", {g, h2, x}, "g_*h_* != (gh)_* on objects");
    }
    for (int p = 0; p < K; ++p) {
      r.count_check();
      if (c.src[am[p]] != ao[c.src[p]] || c.tgt[am[p]] != ao[c.tgt[p]])
        r.add("ActionFunctor", {g, p}, "g_* mistypes a morphism");
      if (g == e && am[p] != p) r.add("ActionUnit", {p}, "e_* is not the identity");
      for (int h2 = 0; h2 < n; ++h2)
        if (z.act_mor[g][z.act_mor[h2][p]] != z.act_mor[G.mul(g, h2)][p])
          r.add("ActionComposition", {g, h2, p}, "g_*h_* != (gh)_* on morphisms");
      for (int q = 0; q < K; ++q) {
        const int pq = comp(c, q, p);
        if (pq != kNone && am[pq] != comp(c, am[q], am[p]))
          r.add("ActionFunctor", {g, q, p}, "g_* does not preserve composition");
        if (am[tm(p, q)] != tm(am[p], am[q]))
          r.add("ActionMonoidal", {g, p, q}, "g_*(f⊗k) != g_*f⊗g_*k");
      }
    }
    r.count_check();
    if (ao[z.mon.unit] != z.mon.unit) r.add("ActionMonoidal", {g}, "g_*(1) != 1");
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y)
        if (ao[to(x, y)] != to(ao[x], ao[y]))
          r.add("ActionMonoidal", {g, x, y}, "g_*(X⊗Y) != g_*X⊗g_*Y");
  }
  if (!r.pass()) return r;

  // The braiding.
  auto cb = [&](int x, int y) { return z.braid(x, y); };
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      r.count_check();
      const int g = z.grade[x];
      const int w = cb(x, y);
      if (c.src[w] != to(x, y) || c.tgt[w] != to(z.act_obj[g][y], x)) {
        r.add("BraidTyping", {x, y}, "c_{X,Y} is not X⊗Y → g_*(Y)⊗X");
      } else if (fincat_inverse(c, w) == kNone) {
        r.add("BraidInvertible", {x, y}, "c_{X,Y} is not invertible");
      }
    }
  if (!r.pass()) return r;
  for (int f = 0; f < K; ++f)
    for (int k = 0; k < K; ++k) {
      r.count_check();
      const int X = c.src[f], X2 = c.tgt[f], Y = c.src[k], Y2 = c.tgt[k];
      const int g = z.grade[X];
      const int lhs = comp(c, cb(X2, Y2), tm(f, k));
      const int rhs = comp(c, tm(z.act_mor[g][k], f), cb(X, Y));
      if (lhs == kNone || lhs != rhs) r.add("BraidNaturality", {f, k}, "c is not natural");
    }
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y) {
        r.count_check();
        if (z.act_mor[g][cb(x, y)] != cb(z.act_obj[g][x], z.act_obj[g][y]))
          r.add("BraidAxiom1", {g, x, y}, "g_*(c_{X,Z}) != c_{g_*X,g_*Z}");
      }
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      for (int w = 0; w < N; ++w) {
        r.count_check();
        const int g = z.grade[x], h = z.grade[y];
        const int gy = z.act_obj[g][y];
        const int rhs2 = comp(c, tm(c.identity[gy], cb(x, w)), tm(cb(x, y), c.identity[w]));
        if (cb(x, to(y, w)) != rhs2)
          r.add("BraidAxiom2", {x, y, w}, "c_{X,Y⊗Z} != (id⊗c_{X,Z})(c_{X,Y}⊗id)");
        const int hw = z.act_obj[h][w];
        const int rhs3 = comp(c, tm(cb(x, hw), c.identity[y]), tm(c.identity[x], cb(y, w)));
        if (cb(to(x, y), w) != rhs3)
          r.add("BraidAxiom3", {x, y, w}, "c_{X⊗Y,Z} != (c_{X,h_*Z}⊗id)(id⊗c_{Y,Z})");
      }
  return r;
}

BraidedCenter trivial_component_center(Fin2CatPtr bp, const SearchOptions& opt) {
  const Fin2Cat& b = *bp;
  auto idB = std::make_shared<const PseudoFunctor>(identity_pseudofunctor(bp));
  BraidedCenter z;
  z.center = relative_center(idB, opt);
  const NatCategory& nc = z.center.nats;
  const int N = nc.cat.num_objects;
  z.braid = Table(N, N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      std::vector<int> c;
      for (int A = 0; A < b.n0; ++A) c.push_back(nc.objects[x]->c2[nc.objects[y]->c0[A]]);
      const int s = z.center.mon.tensor_obj(x, y), t = z.center.mon.tensor_obj(y, x);
      z.braid.at(x, y) = s == kNone || t == kNone ? kNone : nc.find_morphism(s, t, c);
    }
  return z;
}

ValidationReport compare_trivial_component(const GCrossedCat& zg, const BraidedCenter& z) {
  ValidationReport r;
  const int e = zg.group.unit;
  const NatCategory& nc = z.center.nats;
  const std::vector<int> objs = zg.objects_of_grade(e);
  const FinCat& c = zg.mon.cat;
  std::vector<int> mors;
  for (int p = 0; p < c.num_morphisms(); ++p)
    if (zg.grade[c.src[p]] == e) mors.push_back(p);
  r.count_check();
  if (objs.size() != nc.objects.size() || mors.size() != nc.morphisms.size()) {
    r.add("CountMismatch", {static_cast<int>(objs.size()), static_cast<int>(nc.objects.size())},
          "grade e and Z(B) differ in size");
    return r;
  }
  std::map<int, int> oi, mi;
  for (size_t i = 0; i < objs.size(); ++i) oi[objs[i]] = static_cast<int>(i);
  for (size_t i = 0; i < mors.size(); ++i) mi[mors[i]] = static_cast<int>(i);
  auto local_o = [&](int x) { auto it = oi.find(x); return it == oi.end() ? kNone : it->second; };
  auto local_m = [&](int p) { auto it = mi.find(p); return it == mi.end() ? kNone : it->second; };
  for (size_t i = 0; i < objs.size(); ++i) {
    r.count_check();
    if (!zg.objects[objs[i]].X->same_components(*nc.objects[i]))
      r.add("ObjectMismatch", {static_cast<int>(i)}, "object components differ");
  }
  for (size_t i = 0; i < mors.size(); ++i) {
    r.count_check();
    const int p = mors[i];
    if (zg.morphisms[p].comp != nc.morphisms[i].comp || local_o(c.src[p]) != nc.mor_src[i] ||
        local_o(c.tgt[p]) != nc.mor_tgt[i])
      r.add("MorphismMismatch", {static_cast<int>(i)}, "morphism differs");
  }
  r.count_check();
  if (local_o(zg.mon.unit) != z.center.mon.unit) r.add("UnitMismatch", {}, "units differ");
  for (size_t i = 0; i < objs.size(); ++i)
    for (size_t j = 0; j < objs.size(); ++j) {
      r.count_check();
      const int I = static_cast<int>(i), J = static_cast<int>(j);
      if (local_o(zg.mon.tensor_obj(objs[i], objs[j])) != z.center.mon.tensor_obj(I, J))
        r.add("TensorMismatch", {I, J}, "tensor of objects differs");
      if (local_m(zg.braid(objs[i], objs[j])) != z.braid(I, J))
        r.add("BraidMismatch", {I, J}, "braiding differs");
    }
  for (size_t i = 0; i < mors.size(); ++i)
    for (size_t j = 0; j < mors.size(); ++j) {
      r.count_check();
      const int I = static_cast<int>(i), J = static_cast<int>(j);
      if (local_m(zg.mon.tensor_mor(mors[i], mors[j])) != z.center.mon.tensor_mor(I, J))
        r.add("TensorMismatch", {I, J}, "tensor of morphisms differs");
      if (local_m(c.compose(mors[i], mors[j])) != nc.cat.compose(I, J))
        r.add("CompositionMismatch", {I, J}, "composition differs");
    }
  return r;
}

namespace {

std::vector<int> strict_inverses(const Fin2Cat& b, const EqZeroCell& c) {
  std::vector<int> out;
  for (int u : c.U) out.push_back(find_inverse_1cell(b, u));
  return out;
}

}  // namespace

std::vector<int> epsilon_data(const GroupAction2& a, const EqZeroCell& c) {
  require_strict(a, "epsilon data");
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n();
  const std::vector<int> us = strict_inverses(b, c);
  std::vector<int> eps(n * n, kNone);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      eps[g * n + h] = b.h2({b.id(b.h1(us[g], a.Fg(g).on1(us[h]))), b.inv2(c.Pi[g * n + h]),
                             b.id(us[G.mul(g, h)])});
  return eps;
}

ValidationReport check_epsilon_identities(const GroupAction2& a, const EqZeroCell& c,
                                          const std::vector<int>& eps) {
  ValidationReport r;
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n();
  const std::vector<int> us = strict_inverses(b, c);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      r.count_check();
      const int e = eps[g * n + h], p = c.Pi[g * n + h];
      const int gh = G.mul(g, h);
      if (e == kNone || b.h2(e, p) != b.id(b.unit(c.A)))
        r.add("EpsilonPi", {g, h}, "ε∘Π != id_{I_A}");
      if (e == kNone || b.h2(p, e) != b.id(b.unit(a.Fg(gh).on0(c.A))))
        r.add("EpsilonPi", {g, h}, "Π∘ε != id_{I_{F_{gh}A}}");
    }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int f = 0; f < n; ++f) {
        r.count_check();
        const int gh = G.mul(g, h), hf = G.mul(h, f);
        const int lhs = b.v(eps[gh * n + f], b.h2(eps[g * n + h], b.id(a.Fg(gh).on1(us[f]))));
        const int rhs = b.v(eps[g * n + hf], b.h2(b.id(us[g]), a.Fg(g).on2(eps[h * n + f])));
        if (lhs == kNone || lhs != rhs) r.add("EpsilonPi2", {g, h, f}, "ε cocycle fails");
      }
  return r;
}

ValidationReport validate_mon_action(const MonCatGAction& m) {
  ValidationReport r;
  const FinGroup& G = m.group;
  const FinCat& c = m.base.cat;
  const int n = m.n(), e = G.unit;
  const int N = c.num_objects, K = c.num_morphisms();
  const Table& to = m.base.tensor_obj;
  const Table& tm = m.base.tensor_mor;
  if (static_cast<int>(m.act_obj.size()) != n || static_cast<int>(m.act_mor.size()) != n ||
      static_cast<int>(m.nu.size()) != n * n) {
    r.add("Shape", {}, "tables do not match the group");
    return r;
  }
  for (int g = 0; g < n; ++g) {
    for (int x = 0; x < N; ++x)
      if (m.act_obj[g][x] == kNone) r.add("Undefined", {g, x}, "L_g(X) undefined");
    for (int p = 0; p < K; ++p)
      if (m.act_mor[g][p] == kNone) r.add("Undefined", {g, p}, "L_g(f) undefined");
  }
  for (int q = 0; q < n * n; ++q)
    for (int x = 0; x < N; ++x)
      if (m.nu[q][x] == kNone) r.add("Undefined", {q / n, q % n, x}, "ν undefined");
  if (!r.pass()) return r;

  for (int g = 0; g < n; ++g) {
    const auto& ao = m.act_obj[g];
    const auto& am = m.act_mor[g];
    for (int x = 0; x < N; ++x) {
      r.count_check();
      if (am[c.identity[x]] != c.identity[ao[x]])
        r.add("ActionFunctor", {g, x}, "L_g does not preserve identities");
      if (g == e && ao[x] != x) r.add("Unitality", {x}, "L_1 is not the identity");
    }
    for (int p = 0; p < K; ++p) {
      r.count_check();
      if (c.src[am[p]] != ao[c.src[p]] || c.tgt[am[p]] != ao[c.tgt[p]])
        r.add("ActionFunctor", {g, p}, "L_g mistypes a morphism");
      if (g == e && am[p] != p) r.add("Unitality", {p}, "L_1 is not the identity");
      for (int q = 0; q < K; ++q) {
        const int qp = comp(c, q, p);
        if (qp != kNone && am[qp] != comp(c, am[q], am[p]))
          r.add("ActionFunctor", {g, q, p}, "L_g does not preserve composition");
        if (am[tm(p, q)] != tm(am[p], am[q]))
          r.add("ActionMonoidal", {g, p, q}, "L_g(f⊗k) != L_g f⊗L_g k");
      }
    }
    r.count_check();
    if (ao[m.base.unit] != m.base.unit) r.add("ActionMonoidal", {g}, "L_g(1) != 1");
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y)
        if (ao[to(x, y)] != to(ao[x], ao[y]))
          r.add("ActionMonoidal", {g, x, y}, "L_g(X⊗Y) != L_gX⊗L_gY");
  }
  if (!r.pass()) return r;

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const auto& nu = m.nu[g * n + h];
      const int gh = G.mul(g, h);
      for (int x = 0; x < N; ++x) {
        r.count_check();
        const int w = nu[x];
        if (c.src[w] != m.act_obj[g][m.act_obj[h][x]] || c.tgt[w] != m.act_obj[gh][x]) {
          r.add("NuTyping", {g, h, x}, "ν_{g,h} is not L_gL_h X → L_{gh} X");
          continue;
        }
        if (fincat_inverse(c, w) == kNone) r.add("NuInvertible", {g, h, x}, "ν is not invertible");
        if ((g == e || h == e) && w != c.identity[c.src[w]])
          r.add("Unitality", {g, h, x}, "ν with a unit index is not the identity");
      }
    }
  if (!r.pass()) return r;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const auto& nu = m.nu[g * n + h];
      const int gh = G.mul(g, h);
      for (int p = 0; p < K; ++p) {
        r.count_check();
        const int lhs = comp(c, nu[c.tgt[p]], m.act_mor[g][m.act_mor[h][p]]);
        const int rhs = comp(c, m.act_mor[gh][p], nu[c.src[p]]);
        if (lhs != rhs) r.add("NuNaturality", {g, h, p}, "ν is not natural");
      }
      for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
          r.count_check();
          if (nu[to(x, y)] != tm(nu[x], nu[y]))
            r.add("NuMonoidal", {g, h, x, y}, "ν_{X⊗Y} != ν_X⊗ν_Y");
        }
    }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int f = 0; f < n; ++f)
        for (int x = 0; x < N; ++x) {
          r.count_check();
          const int gh = G.mul(g, h), hf = G.mul(h, f);
          const int lhs = comp(c, m.nu[gh * n + f][x], m.nu[g * n + h][m.act_obj[f][x]]);
          const int rhs = comp(c, m.nu[g * n + hf][x], m.act_mor[g][m.nu[h * n + f][x]]);
          if (lhs == kNone || lhs != rhs)
            r.add("AssocMonL", {g, h, f, x}, "ν_{gh,f}ν_{g,h} != ν_{g,hf}L_g(ν_{h,f})");
        }
  return r;
}

ZPhiAction action_on_ZPhi(ActionPtr act, const EquivariantCaps& caps) {
  const GroupAction2& a = *act;
  require_strict(a, "the action on Z(Phi)");
  const Fin2Cat& b = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n();
  ZPhiAction out;
  out.eq = enumerate_equivariant(act, caps);
  const Equivariantization& eq = out.eq;
  auto phi = std::make_shared<const PseudoFunctor>(forgetful_Phi(eq));
  out.zphi = relative_center(phi, caps.search);
  const NatCategory& nc = out.zphi.nats;
  const int n0 = static_cast<int>(eq.cells0.size());
  const int N = nc.cat.num_objects, K = nc.cat.num_morphisms();

  std::vector<std::vector<int>> us, eps;
  for (const auto& c : eq.cells0) {
    us.push_back(strict_inverses(b, c));
    eps.push_back(epsilon_data(a, c));
  }

  MonCatGAction& m = out.action;
  m.group = G;
  m.base = out.zphi.mon;
  m.act_obj.assign(n, std::vector<int>(N, kNone));
  m.act_mor.assign(n, std::vector<int>(K, kNone));
  m.nu.assign(n * n, std::vector<int>(N, kNone));
  for (int g = 0; g < n; ++g) {
    const PseudoFunctor& Fg = a.Fg(g);
    for (int x = 0; x < N; ++x) {
      const PseudoNat& X = *nc.objects[x];
      PseudoNat y;
      y.from = phi;
      y.to = phi;
      for (int p = 0; p < n0; ++p)
        y.c0.push_back(b.h1({us[p][g], Fg.on1(X.c0[p]), eq.cells0[p].U[g]}));
      for (size_t t = 0; t < eq.cells1.size(); ++t) {
        const Eq1Cell& th = eq.cells1[t];
        const int p = th.src, q = th.tgt;
        const int tg = th.theta_g[g];
        const int s1 = b.h2(b.id(b.h1(us[q][g], Fg.on1(X.c0[q]))), b.inv2(tg));
        const int s2 = b.h2({b.id(us[q][g]), Fg.on2(X.c2[t]), b.id(eq.cells0[p].U[g])});
        const int s3 = b.h2({b.id(us[q][g]), tg,
                             b.id(b.h1({us[p][g], Fg.on1(X.c0[p]), eq.cells0[p].U[g]}))});
        y.c2.push_back(b.v({s3, s2, s1}));
      }
      m.act_obj[g][x] = nc.find_object(y);
    }
    for (int f = 0; f < K; ++f) {
      std::vector<int> c;
      for (int p = 0; p < n0; ++p)
        c.push_back(b.h2({b.id(us[p][g]), Fg.on2(nc.morphisms[f].comp[p]),
                          b.id(eq.cells0[p].U[g])}));
      const int s = m.act_obj[g][nc.mor_src[f]], t = m.act_obj[g][nc.mor_tgt[f]];
      m.act_mor[g][f] = s == kNone || t == kNone ? kNone : nc.find_morphism(s, t, c);
    }
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int gh = G.mul(g, h);
      for (int x = 0; x < N; ++x) {
        const PseudoNat& X = *nc.objects[x];
        std::vector<int> c;
        for (int p = 0; p < n0; ++p)
          c.push_back(b.h2({eps[p][g * n + h], b.id(a.Fg(gh).on1(X.c0[p])),
                            eq.cells0[p].Pi[g * n + h]}));
        const int lh = m.act_obj[h][x];
        const int s = lh == kNone ? kNone : m.act_obj[g][lh];
        const int t = m.act_obj[gh][x];
        m.nu[g * n + h][x] = s == kNone || t == kNone ? kNone : nc.find_morphism(s, t, c);
      }
    }
  return out;
}

MonoidalEquivariantization equivariantize_monoidal(const MonCatGAction& m,
                                                   const SearchOptions& opt) {
  const FinGroup& G = m.group;
  const FinCat& c = m.base.cat;
  const int n = m.n(), e = G.unit;
  const int N = c.num_objects;
  MonoidalEquivariantization out;
  for (int x = 0; x < N; ++x) {
    Csp csp;
    for (int g = 0; g < n; ++g) {
      if (g == e) {
        csp.add_var(std::vector<int>{c.identity[x]});
        continue;
      }
      std::vector<int> dom;
      for (int f : c.hom(m.act_obj[g][x], x))
        if (fincat_inverse(c, f) != kNone) dom.push_back(f);
      csp.add_var(dom);
    }
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        const int gh = G.mul(g, h);
        csp.add_constraint({g, h, gh}, [&, g, h, gh, x](const Csp::Assignment& s) {
          return comp(c, s[gh], m.nu[g * n + h][x]) == comp(c, s[g], m.act_mor[g][s[h]]);
        });
      }
    for (const auto& s : csp.solve(opt)) out.objects.push_back({x, s});
  }
  std::map<EquivariantMonObj, int, bool (*)(const EquivariantMonObj&, const EquivariantMonObj&)>
      index([](const EquivariantMonObj& l, const EquivariantMonObj& r) {
        return std::tie(l.X, l.s) < std::tie(r.X, r.s);
      });
  for (size_t i = 0; i < out.objects.size(); ++i) index[out.objects[i]] = static_cast<int>(i);
  const int M = static_cast<int>(out.objects.size());

  FinCat& cat = out.mon.cat;
  cat.num_objects = M;
  std::map<std::tuple<int, int, int>, int> mor_index;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      const auto& X = out.objects[i];
      const auto& Y = out.objects[j];
      for (int f : c.hom(X.X, Y.X)) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
          ok = comp(c, f, X.s[g]) == comp(c, Y.s[g], m.act_mor[g][f]);
        if (!ok) continue;
        mor_index[{i, j, f}] = cat.num_morphisms();
        cat.src.push_back(i);
        cat.tgt.push_back(j);
        out.mor_base.push_back(f);
      }
    }
  const int K = cat.num_morphisms();
  auto find_mor = [&](int i, int j, int f) {
    auto it = mor_index.find({i, j, f});
    return it == mor_index.end() ? kNone : it->second;
  };
  cat.compose = Table(K, K);
  for (int q = 0; q < K; ++q)
    for (int p = 0; p < K; ++p)
      if (cat.tgt[p] == cat.src[q])
        cat.compose.at(q, p) = find_mor(cat.src[p], cat.tgt[q], comp(c, out.mor_base[q], out.mor_base[p]));
  for (int i = 0; i < M; ++i) cat.identity.push_back(find_mor(i, i, c.identity[out.objects[i].X]));

  out.mon.tensor_obj = Table(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      const auto& X = out.objects[i];
      const auto& Y = out.objects[j];
      EquivariantMonObj t;
      t.X = m.base.tensor_obj(X.X, Y.X);
      for (int g = 0; g < n; ++g) t.s.push_back(m.base.tensor_mor(X.s[g], Y.s[g]));
      auto it = index.find(t);
      out.mon.tensor_obj.at(i, j) = it == index.end() ? kNone : it->second;
    }
  out.mon.tensor_mor = Table(K, K);
  for (int p = 0; p < K; ++p)
    for (int q = 0; q < K; ++q) {
      const int s = out.mon.tensor_obj(cat.src[p], cat.src[q]);
      const int t = out.mon.tensor_obj(cat.tgt[p], cat.tgt[q]);
      out.mon.tensor_mor.at(p, q) =
          s == kNone || t == kNone ? kNone
                                   : find_mor(s, t, m.base.tensor_mor(out.mor_base[p], out.mor_base[q]));
    }
  EquivariantMonObj u;
  u.X = m.base.unit;
  for (int g = 0; g < n; ++g) u.s.push_back(u.X == kNone ? kNone : c.identity[u.X]);
  auto it = index.find(u);
  out.mon.unit = it == index.end() ? kNone : it->second;
  return out;
}

ValidationReport check_equivariant_objects(const MonCatGAction& m,
                                           const MonoidalEquivariantization& eqm) {
  ValidationReport r;
  const FinGroup& G = m.group;
  const FinCat& c = m.base.cat;
  const int n = m.n(), e = G.unit;
  for (size_t i = 0; i < eqm.objects.size(); ++i) {
    const auto& o = eqm.objects[i];
    const int I = static_cast<int>(i);
    r.count_check();
    if (static_cast<int>(o.s.size()) != n) {
      r.add("Shape", {I}, "s has the wrong length");
      continue;
    }
    if (o.s[e] != c.identity[o.X]) r.add("Unitality", {I}, "s_1 != id");
    for (int g = 0; g < n; ++g) {
      const int s = o.s[g];
      if (s < 0 || s >= c.num_morphisms() || c.src[s] != m.act_obj[g][o.X] || c.tgt[s] != o.X)
        r.add("EquivariantObject", {I, g}, "s_g is not g_*(X) → X");
      else if (fincat_inverse(c, s) == kNone)
        r.add("EquivariantObject", {I, g}, "s_g is not invertible");
    }
    if (!r.pass()) continue;
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        r.count_check();
        const int gh = G.mul(g, h);
        if (comp(c, o.s[gh], m.nu[g * n + h][o.X]) != comp(c, o.s[g], m.act_mor[g][o.s[h]]))
          r.add("EquivariantObject", {I, g, h}, "s_{gh}ν_{g,h} != s_g g_*(s_h)");
      }
  }
  for (int p = 0; p < eqm.mon.cat.num_morphisms(); ++p) {
    const auto& X = eqm.objects[eqm.mon.cat.src[p]];
    const auto& Y = eqm.objects[eqm.mon.cat.tgt[p]];
    const int f = eqm.mor_base[p];
    for (int g = 0; g < n; ++g) {
      r.count_check();
      if (comp(c, f, X.s[g]) != comp(c, Y.s[g], m.act_mor[g][f]))
        r.add("EquivariantMorphism", {p, g}, "f∘s_g != t_g∘g_*(f)");
    }
  }
  return r;
}

CenterTheoremResult check_center_theorem(ActionPtr act, const EquivariantCaps& caps) {
  const GroupAction2& a = *act;
  require_strict(a, "the center theorem check");
  const Fin2Cat& b = *a.base;
  const int n = a.n();
  CenterTheoremResult res;
  ValidationReport& r = res.report;

  const ZPhiAction za = action_on_ZPhi(act, caps);
  const Equivariantization& eq = za.eq;
  r.merge(validate_mon_action(za.action), "Action.");
  const MonoidalEquivariantization rhs = equivariantize_monoidal(za.action, caps.search);
  r.merge(check_equivariant_objects(za.action, rhs), "Equivariantization.");
  auto idBG = std::make_shared<const PseudoFunctor>(identity_pseudofunctor(eq.cat));
  const RelativeCenter lhs = relative_center(idBG, caps.search);

  const NatCategory& zn = za.zphi.nats;
  const Fin2Cat& bg = *eq.cat;
  const int n0 = static_cast<int>(eq.cells0.size());
  const int M = rhs.mon.cat.num_objects, K = rhs.mon.cat.num_morphisms();
  res.bg_objects = n0;
  res.bg_one_cells = static_cast<int>(eq.cells1.size());
  res.zphi_objects = zn.cat.num_objects;
  res.rhs_objects = M;
  res.rhs_morphisms = K;
  res.lhs_objects = lhs.nats.cat.num_objects;
  res.lhs_morphisms = lhs.nats.cat.num_morphisms();

  // Ψ on objects: V_A = (X_A, id_{U_g}∘(s_g)_A) and σ̃ = σ.
  std::vector<std::vector<int>> V(M);
  std::vector<int> psi_obj(M, kNone);
  for (int k = 0; k < M; ++k) {
    const EquivariantMonObj& o = rhs.objects[k];
    const PseudoNat& X = *zn.objects[o.X];
    PseudoNat nat;
    nat.from = idBG;
    nat.to = idBG;
    bool ok = true;
    for (int p = 0; p < n0; ++p) {
      Eq1Cell v;
      v.src = p;
      v.tgt = p;
      v.theta = X.c0[p];
      for (int g = 0; g < n; ++g)
        v.theta_g.push_back(b.h2(b.id(eq.cells0[p].U[g]), zn.morphisms[o.s[g]].comp[p]));
      const ValidationReport vr = validate_eq_1cell(a, eq.cells0[p], eq.cells0[p], v);
      r.count_check();
      if (!vr.pass()) {
        r.add("PsiWellDefined", {k, p}, "V_A is not an equivariant 1-cell");
        ok = false;
      }
      const int idx = eq.find1(p, p, v.theta, v.theta_g);
      V[k].push_back(idx);
      nat.c0.push_back(idx);
    }
    if (!ok) continue;
    for (size_t t = 0; t < eq.cells1.size(); ++t) {
      r.count_check();
      const int p = eq.cells1[t].src, q = eq.cells1[t].tgt;
      const int s1 = bg.h1(V[k][q], static_cast<int>(t)), t1 = bg.h1(static_cast<int>(t), V[k][p]);
      const int idx = s1 == kNone || t1 == kNone ? kNone : eq.find2(s1, t1, X.c2[t]);
      if (idx == kNone) {
        r.add("PsiWellDefined", {k, static_cast<int>(t)}, "σ is not an equivariant 2-cell");
        ok = false;
      }
      nat.c2.push_back(idx);
    }
    if (!ok) continue;
    psi_obj[k] = lhs.nats.find_object(nat);
    r.count_check();
    if (psi_obj[k] == kNone) r.add("PsiWellDefined", {k}, "Ψ(X) is not in Z(B^G)");
  }
  // Ψ on morphisms: the same components read as equivariant 2-cells.
  std::vector<int> psi_mor(K, kNone);
  for (int p = 0; p < K; ++p) {
    const int k1 = rhs.mon.cat.src[p], k2 = rhs.mon.cat.tgt[p];
    r.count_check();
    if (psi_obj[k1] == kNone || psi_obj[k2] == kNone) continue;
    const Modification& f = zn.morphisms[rhs.mor_base[p]];
    std::vector<int> comps;
    for (int A = 0; A < n0; ++A) comps.push_back(eq.find2(V[k1][A], V[k2][A], f.comp[A]));
    psi_mor[p] = lhs.nats.find_morphism(psi_obj[k1], psi_obj[k2], comps);
    if (psi_mor[p] == kNone) r.add("PsiWellDefined", {p}, "Ψ(f) is not in Z(B^G)");
  }
  if (!r.pass()) return res;

  // Bijective.
  r.count_check();
  if (M != res.lhs_objects) r.add("PsiBijective", {M, res.lhs_objects}, "object counts differ");
  if (K != res.lhs_morphisms) r.add("PsiBijective", {K, res.lhs_morphisms}, "morphism counts differ");
  if (std::set<int>(psi_obj.begin(), psi_obj.end()).size() != psi_obj.size())
    r.add("PsiBijective", {}, "Ψ is not injective on objects");
  if (std::set<int>(psi_mor.begin(), psi_mor.end()).size() != psi_mor.size())
    r.add("PsiBijective", {}, "Ψ is not injective on morphisms");
  // Functorial.
  const FinCat& rc = rhs.mon.cat;
  const FinCat& lc = lhs.mon.cat;
  for (int k = 0; k < M; ++k) {
    r.count_check();
    if (psi_mor[rc.identity[k]] != lc.identity[psi_obj[k]])
      r.add("PsiFunctor", {k}, "Ψ does not preserve identities");
  }
  for (int q = 0; q < K; ++q)
    for (int p = 0; p < K; ++p) {
      const int qp = rc.compose(q, p);
      if (qp == kNone) continue;
      r.count_check();
      if (psi_mor[qp] != lc.compose(psi_mor[q], psi_mor[p]))
        r.add("PsiFunctor", {q, p}, "Ψ does not preserve composition");
    }
  // Strictly monoidal.
  r.count_check();
  if (psi_obj[rhs.mon.unit] != lhs.mon.unit) r.add("PsiMonoidal", {}, "Ψ(1) != 1");
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      r.count_check();
      if (psi_obj[rhs.mon.tensor_obj(i, j)] != lhs.mon.tensor_obj(psi_obj[i], psi_obj[j]))
        r.add("PsiMonoidal", {i, j}, "Ψ(X⊗Y) != Ψ(X)⊗Ψ(Y)");
    }
  for (int p = 0; p < K; ++p)
    for (int q = 0; q < K; ++q) {
      r.count_check();
      if (psi_mor[rhs.mon.tensor_mor(p, q)] != lhs.mon.tensor_mor(psi_mor[p], psi_mor[q]))
        r.add("PsiMonoidal", {p, q}, "Ψ(f⊗g) != Ψ(f)⊗Ψ(g)");
    }
  return res;
}

}  // namespace catcore
