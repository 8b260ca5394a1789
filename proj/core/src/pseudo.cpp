#include "catcore/pseudo.hpp"

#include <algorithm>
#include <span>

#include <fmt/format.h>

#include "catcore/errors.hpp"

namespace catcore {

namespace {

bool in(int v, int n) { return v >= 0 && v < n; }

bool same_cat(const Fin2CatPtr& a, const Fin2CatPtr& b) {
  return a == b || (a && b && a->same_tables(*b));
}

}  // namespace

bool PseudoFunctor::is_unital() const {
  for (int a = 0; a < src->n0; ++a) {
    const int i = tgt->unit(on0(a));
    if (on1(src->unit(a)) != i || phi(a) != tgt->id(i)) return false;
  }
  return true;
}

bool PseudoFunctor::is_strict() const {
  if (!is_unital()) return false;
  for (int x = 0; x < src->num1(); ++x)
    for (int y = 0; y < src->num1(); ++y) {
      const int xy = src->h1(x, y);
      if (xy != kNone && c(x, y) != tgt->id(on1(xy))) return false;
    }
  return true;
}

bool PseudoFunctor::same_tables(const PseudoFunctor& o) const {
  return obj == o.obj && map1 == o.map1 && map2 == o.map2 && comp == o.comp &&
         unitc == o.unitc && same_cat(src, o.src) && same_cat(tgt, o.tgt);
}

bool same_functor(const PseudoFunctor& a, const PseudoFunctor& b) {
  return &a == &b || a.same_tables(b);
}

PseudoFunctor make_2functor(Fin2CatPtr src, Fin2CatPtr tgt, std::vector<int> obj,
                            std::vector<int> map1, std::vector<int> map2, std::string name) {
  PseudoFunctor f;
  f.name = std::move(name);
  f.src = std::move(src);
  f.tgt = std::move(tgt);
  f.obj = std::move(obj);
  f.map1 = std::move(map1);
  f.map2 = std::move(map2);
  const Fin2Cat& b = *f.src;
  const Fin2Cat& c = *f.tgt;
  f.comp = Table(b.num1(), b.num1());
  for (int x = 0; x < b.num1(); ++x)
    for (int y = 0; y < b.num1(); ++y) {
      const int xy = b.h1(x, y);
      if (xy != kNone) f.comp.at(x, y) = c.id(f.on1(xy));
    }
  for (int a = 0; a < b.n0; ++a) f.unitc.push_back(c.id(f.on1(b.unit(a))));
  return f;
}

PseudoFunctor identity_pseudofunctor(Fin2CatPtr b) {
  std::vector<int> o(b->n0), m1(b->num1()), m2(b->num2());
  for (int i = 0; i < b->n0; ++i) o[i] = i;
  for (int i = 0; i < b->num1(); ++i) m1[i] = i;
  for (int i = 0; i < b->num2(); ++i) m2[i] = i;
  return make_2functor(b, b, std::move(o), std::move(m1), std::move(m2), "Id");
}

ValidationReport validate_pseudofunctor(const PseudoFunctor& f) {
  ValidationReport r;
  if (!f.src || !f.tgt) {
    r.add("Shape", {}, "missing source or target");
    return r;
  }
  const Fin2Cat& b = *f.src;
  const Fin2Cat& c = *f.tgt;
  const int n0 = b.n0, n1 = b.num1(), n2 = b.num2();
  if (static_cast<int>(f.obj.size()) != n0 || static_cast<int>(f.map1.size()) != n1 ||
      static_cast<int>(f.map2.size()) != n2 || f.comp.rows() != n1 || f.comp.cols() != n1 ||
      static_cast<int>(f.unitc.size()) != n0) {
    r.add("Shape", {}, "tables do not match the source 2-category");
    return r;
  }
  for (int a = 0; a < n0; ++a)
    if (!in(f.obj[a], c.n0)) r.add("DanglingId", {a}, "object image");
  for (int x = 0; x < n1; ++x)
    if (!in(f.map1[x], c.num1())) r.add("DanglingId", {x}, "1-cell image");
  for (int a = 0; a < n2; ++a)
    if (!in(f.map2[a], c.num2())) r.add("DanglingId", {a}, "2-cell image");
  if (!r.pass()) return r;

  for (int x = 0; x < n1; ++x) {
    r.count_check();
    const int fx = f.map1[x];
    if (c.src1[fx] != f.obj[b.src1[x]] || c.tgt1[fx] != f.obj[b.tgt1[x]])
      r.add("Typing", {x}, "1-cell image has wrong endpoints");
  }
  for (int a = 0; a < n2; ++a) {
    r.count_check();
    const int fa = f.map2[a];
    if (c.src2[fa] != f.map1[b.src2[a]] || c.tgt2[fa] != f.map1[b.tgt2[a]])
      r.add("Typing", {a}, "2-cell image has wrong boundary");
  }
  if (!r.pass()) return r;

  for (int x = 0; x < n1; ++x) {
    r.count_check();
    if (f.map2[b.id(x)] != c.id(f.map1[x])) r.add("Functoriality", {x}, "F(id_x) != id_F(x)");
  }
  for (int g = 0; g < n2; ++g)
    for (int a = 0; a < n2; ++a) {
      const int ga = b.v(g, a);
      if (ga == kNone) continue;
      r.count_check();
      if (f.map2[ga] != c.v(f.map2[g], f.map2[a]))
        r.add("Functoriality", {g, a}, "F(b·a) != F(b)·F(a)");
    }

  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n1; ++y) {
      const int xy = b.h1(x, y);
      if (xy == kNone) continue;
      r.count_check();
      const int a = f.c(x, y);
      if (!in(a, c.num2()) || c.src2[a] != c.h1(f.map1[x], f.map1[y]) ||
          c.tgt2[a] != f.map1[xy]) {
        r.add("Typing", {x, y}, "compositor has wrong boundary");
      } else if (!c.invertible2(a)) {
        r.add("Invertibility", {x, y}, "compositor is not invertible");
      }
    }
  for (int a = 0; a < n0; ++a) {
    r.count_check();
    const int p = f.phi(a);
    if (!in(p, c.num2()) || c.src2[p] != c.unit(f.obj[a]) || c.tgt2[p] != f.map1[b.unit(a)]) {
      r.add("Typing", {a}, "unit constraint has wrong boundary");
    } else if (!c.invertible2(p)) {
      r.add("Invertibility", {a}, "unit constraint is not invertible");
    }
  }
  if (!r.pass()) return r;

  // Naturality of the compositor.
  for (int s = 0; s < n2; ++s)
    for (int t = 0; t < n2; ++t) {
      const int st = b.h2(s, t);
      if (st == kNone) continue;
      r.count_check();
      const int lhs = c.v(f.map2[st], f.c(b.src2[s], b.src2[t]));
      const int rhs = c.v(f.c(b.tgt2[s], b.tgt2[t]), c.h2(f.map2[s], f.map2[t]));
      if (lhs != rhs || lhs == kNone) r.add("Naturality", {s, t}, "compositor is not natural");
    }
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n1; ++y) {
      const int xy = b.h1(x, y);
      if (xy == kNone) continue;
      for (int z = 0; z < n1; ++z) {
        const int yz = b.h1(y, z);
        if (yz == kNone) continue;
        r.count_check();
        const int lhs = c.v(f.c(xy, z), c.h2(f.c(x, y), c.id(f.map1[z])));
        const int rhs = c.v(f.c(x, yz), c.h2(c.id(f.map1[x]), f.c(y, z)));
        if (lhs != rhs || lhs == kNone)
          r.add("Associativity", {x, y, z}, "compositor associativity");
      }
    }
  for (int x = 0; x < n1; ++x) {
    r.count_check(2);
    const int fx = f.map1[x];
    const int il = b.unit(b.tgt1[x]), ir = b.unit(b.src1[x]);
    const int left = c.v(f.c(il, x), c.h2(f.phi(b.tgt1[x]), c.id(fx)));
    const int right = c.v(f.c(x, ir), c.h2(c.id(fx), f.phi(b.src1[x])));
    if (left != c.id(fx)) r.add("Unitality", {x}, "left unit coherence");
    if (right != c.id(fx)) r.add("Unitality", {x}, "right unit coherence");
  }
  return r;
}

PseudoFunctor compose_pseudofunctors(const PseudoFunctor& g, const PseudoFunctor& f) {
  if (!same_cat(f.tgt, g.src))
    throw SourceTargetMismatch("target of the first functor is not the source of the second");
  const Fin2Cat& b = *f.src;
  const Fin2Cat& d = *g.tgt;
  PseudoFunctor h;
  h.name = fmt::format("{}∘{}", g.name, f.name);
  h.src = f.src;
  h.tgt = g.tgt;
  for (int a : f.obj) h.obj.push_back(g.on0(a));
  for (int x : f.map1) h.map1.push_back(g.on1(x));
  for (int a : f.map2) h.map2.push_back(g.on2(a));
  h.comp = Table(b.num1(), b.num1());
  for (int x = 0; x < b.num1(); ++x)
    for (int y = 0; y < b.num1(); ++y)
      if (b.h1(x, y) != kNone)
        h.comp.at(x, y) = d.v(g.on2(f.c(x, y)), g.c(f.on1(x), f.on1(y)));
  for (int a = 0; a < b.n0; ++a) h.unitc.push_back(d.v(g.on2(f.phi(a)), g.phi(f.on0(a))));
  return h;
}

// Shared coherence checks for a candidate pseudonat given as component arrays.
namespace {

struct NatView {
  const PseudoFunctor& F;
  const PseudoFunctor& G;
  std::span<const int> c0;
  std::span<const int> c2;
  const Fin2Cat& b() const { return *F.src; }
  const Fin2Cat& c() const { return *F.tgt; }
};

// c2[X] has the right boundary and is invertible.
bool nat_cell_ok(const NatView& n, int x) {
  const Fin2Cat& b = n.b();
  const Fin2Cat& c = n.c();
  const int a = n.c2[x];
  if (!in(a, c.num2())) return false;
  const int s = c.h1(n.c0[b.tgt1[x]], n.F.on1(x));
  const int t = c.h1(n.G.on1(x), n.c0[b.src1[x]]);
  return s != kNone && t != kNone && c.src2[a] == s && c.tgt2[a] == t && c.invertible2(a);
}

// (G(s)∘id)χ_X = χ_{X'}(id∘F(s)) for s: X ⇒ X'.
bool nat_naturality_ok(const NatView& n, int s) {
  const Fin2Cat& b = n.b();
  const Fin2Cat& c = n.c();
  const int x = b.src2[s], x2 = b.tgt2[s];
  const int lhs = c.v(c.h2(n.G.on2(s), c.id(n.c0[b.src1[x]])), n.c2[x]);
  const int rhs = c.v(n.c2[x2], c.h2(c.id(n.c0[b.tgt1[x]]), n.F.on2(s)));
  return lhs != kNone && lhs == rhs;
}

// χ_{XY}(id∘α^F) = (α^G∘id)(id∘χ_Y)(χ_X∘id) for composable X, Y.
bool nat_composition_ok(const NatView& n, int x, int y) {
  const Fin2Cat& b = n.b();
  const Fin2Cat& c = n.c();
  const int xy = b.h1(x, y);
  const int lhs = c.v(n.c2[xy], c.h2(c.id(n.c0[b.tgt1[x]]), n.F.c(x, y)));
  const int rhs = c.v({c.h2(n.G.c(x, y), c.id(n.c0[b.src1[y]])),
                       c.h2(c.id(n.G.on1(x)), n.c2[y]), c.h2(n.c2[x], c.id(n.F.on1(y)))});
  return lhs != kNone && lhs == rhs;
}

// χ_{I_A}(id∘φ^F_A) = φ^G_A∘id.
bool nat_unit_ok(const NatView& n, int a) {
  const Fin2Cat& b = n.b();
  const Fin2Cat& c = n.c();
  const int lhs = c.v(n.c2[b.unit(a)], c.h2(c.id(n.c0[a]), n.F.phi(a)));
  const int rhs = c.h2(n.G.phi(a), c.id(n.c0[a]));
  return lhs != kNone && lhs == rhs;
}

}  // namespace

ValidationReport validate_pseudonat(const PseudoNat& n) {
  ValidationReport r;
  if (!n.from || !n.to || !same_cat(n.from->src, n.to->src) ||
      !same_cat(n.from->tgt, n.to->tgt)) {
    r.add("Shape", {}, "source and target functors are not parallel");
    return r;
  }
  const PseudoFunctor& F = *n.from;
  const PseudoFunctor& G = *n.to;
  const Fin2Cat& b = *F.src;
  const Fin2Cat& c = *F.tgt;
  if (static_cast<int>(n.c0.size()) != b.n0 || static_cast<int>(n.c2.size()) != b.num1()) {
    r.add("Shape", {}, "component tables do not match the source 2-category");
    return r;
  }
  for (int a = 0; a < b.n0; ++a) {
    r.count_check();
    const int x = n.c0[a];
    if (!in(x, c.num1()) || c.src1[x] != F.on0(a) || c.tgt1[x] != G.on0(a))
      r.add("Typing", {a}, "1-cell component has wrong endpoints");
  }
  if (!r.pass()) return r;
  NatView v{F, G, n.c0, n.c2};
  for (int x = 0; x < b.num1(); ++x) {
    r.count_check();
    if (!nat_cell_ok(v, x)) r.add("Typing", {x}, "2-cell component has wrong boundary or is not invertible");
  }
  if (!r.pass()) return r;
  for (int s = 0; s < b.num2(); ++s) {
    r.count_check();
    if (!nat_naturality_ok(v, s)) r.add("Naturality", {s}, "component is not natural");
  }
  for (int x = 0; x < b.num1(); ++x)
    for (int y = 0; y < b.num1(); ++y) {
      if (b.h1(x, y) == kNone) continue;
      r.count_check();
      if (!nat_composition_ok(v, x, y)) r.add("Composition", {x, y}, "composition coherence");
    }
  for (int a = 0; a < b.n0; ++a) {
    r.count_check();
    if (!nat_unit_ok(v, a)) r.add("Unitality", {a}, "unit coherence");
  }
  return r;
}

ValidationReport validate_modification(const Modification& m) {
  ValidationReport r;
  if (!m.from || !m.to || !same_functor(*m.from->from, *m.to->from) ||
      !same_functor(*m.from->to, *m.to->to)) {
    r.add("Shape", {}, "pseudonats are not parallel");
    return r;
  }
  const PseudoNat& chi = *m.from;
  const PseudoNat& th = *m.to;
  const PseudoFunctor& F = *chi.from;
  const PseudoFunctor& G = *chi.to;
  const Fin2Cat& b = *F.src;
  const Fin2Cat& c = *F.tgt;
  if (static_cast<int>(m.comp.size()) != b.n0 || static_cast<int>(chi.c0.size()) != b.n0 ||
      static_cast<int>(th.c0.size()) != b.n0) {
    r.add("Shape", {}, "component table does not match the source 2-category");
    return r;
  }
  for (int a = 0; a < b.n0; ++a) {
    r.count_check();
    const int w = m.comp[a];
    if (!in(w, c.num2()) || c.src2[w] != chi.c0[a] || c.tgt2[w] != th.c0[a])
      r.add("Typing", {a}, "component has wrong boundary");
  }
  if (!r.pass()) return r;
  for (int x = 0; x < b.num1(); ++x) {
    r.count_check();
    const int A = b.src1[x], B = b.tgt1[x];
    const int lhs = c.v(c.h2(c.id(G.on1(x)), m.comp[A]), chi.c2[x]);
    const int rhs = c.v(th.c2[x], c.h2(m.comp[B], c.id(F.on1(x))));
    if (lhs == kNone || lhs != rhs) r.add("Modification", {x}, "modification square fails");
  }
  return r;
}

PseudoNat identity_pseudonat(FunctorPtr f) {
  PseudoNat n;
  const Fin2Cat& b = *f->src;
  const Fin2Cat& c = *f->tgt;
  for (int a = 0; a < b.n0; ++a) n.c0.push_back(c.unit(f->on0(a)));
  for (int x = 0; x < b.num1(); ++x) n.c2.push_back(c.id(f->on1(x)));
  n.from = f;
  n.to = std::move(f);
  return n;
}

Modification identity_modification(NatPtr n) {
  Modification m;
  const Fin2Cat& c = *n->from->tgt;
  for (int x : n->c0) m.comp.push_back(c.id(x));
  m.from = n;
  m.to = std::move(n);
  return m;
}

PseudoNat compose_pseudonats(const PseudoNat& tau, const PseudoNat& sigma) {
  if (!same_functor(*sigma.to, *tau.from))
    throw ShapeMismatch("pseudonats are not vertically composable");
  const Fin2Cat& b = *sigma.from->src;
  const Fin2Cat& c = *sigma.from->tgt;
  PseudoNat n;
  n.from = sigma.from;
  n.to = tau.to;
  for (int a = 0; a < b.n0; ++a) n.c0.push_back(c.h1(tau.c0[a], sigma.c0[a]));
  for (int x = 0; x < b.num1(); ++x) {
    const int A = b.src1[x], B = b.tgt1[x];
    n.c2.push_back(c.v(c.h2(tau.c2[x], c.id(sigma.c0[A])), c.h2(c.id(tau.c0[B]), sigma.c2[x])));
  }
  return n;
}

Modification compose_modifications(const Modification& b, const Modification& a) {
  if (a.to->c0 != b.from->c0) throw ShapeMismatch("modifications are not composable");
  const Fin2Cat& c = *a.from->from->tgt;
  Modification m;
  m.from = a.from;
  m.to = b.to;
  for (size_t i = 0; i < a.comp.size(); ++i) m.comp.push_back(c.v(b.comp[i], a.comp[i]));
  return m;
}

PseudoNat tensor_pseudonat(const PseudoNat& beta, const PseudoNat& alpha) {
  const PseudoFunctor& F = *alpha.from;
  const PseudoFunctor& F2 = *alpha.to;
  const PseudoFunctor& G = *beta.from;
  if (!same_cat(F.tgt, G.src)) throw ShapeMismatch("pseudonats are not horizontally composable");
  const Fin2Cat& b = *F.src;
  const Fin2Cat& d = *G.tgt;
  PseudoNat n;
  n.from = std::make_shared<const PseudoFunctor>(compose_pseudofunctors(G, F));
  n.to = std::make_shared<const PseudoFunctor>(compose_pseudofunctors(*beta.to, F2));
  for (int a = 0; a < b.n0; ++a) n.c0.push_back(d.h1(beta.c0[F2.on0(a)], G.on1(alpha.c0[a])));
  for (int x = 0; x < b.num1(); ++x) {
    const int A = b.src1[x], B = b.tgt1[x];
    const int bB = d.id(beta.c0[F2.on0(B)]);
    const int s1 = d.h2(bB, G.c(alpha.c0[B], F.on1(x)));
    const int s2 = d.h2(bB, G.on2(alpha.c2[x]));
    const int s3 = d.h2(bB, d.inv2(G.c(F2.on1(x), alpha.c0[A])));
    const int s4 = d.h2(beta.c2[F2.on1(x)], d.id(G.on1(alpha.c0[A])));
    n.c2.push_back(d.v({s4, s3, s2, s1}));
  }
  return n;
}

Modification tensor_modifications(const Modification& w, const Modification& w2) {
  const PseudoNat& beta = *w.from;
  const PseudoNat& alpha = *w2.from;
  if (!same_cat(alpha.from->tgt, beta.from->src))
    throw ShapeMismatch("modifications are not horizontally composable");
  const PseudoFunctor& F2 = *alpha.to;
  const PseudoFunctor& G = *beta.from;
  const Fin2Cat& b = *alpha.from->src;
  const Fin2Cat& d = *G.tgt;
  Modification m;
  m.from = std::make_shared<const PseudoNat>(tensor_pseudonat(beta, alpha));
  m.to = std::make_shared<const PseudoNat>(tensor_pseudonat(*w.to, *w2.to));
  for (int a = 0; a < b.n0; ++a) m.comp.push_back(d.h2(w.comp[F2.on0(a)], G.on2(w2.comp[a])));
  return m;
}

Modification comparison_constraint(const PseudoNat& alpha, const PseudoNat& beta) {
  const PseudoFunctor& F = *alpha.from;
  if (!same_cat(beta.from->tgt, F.src)) throw ShapeMismatch("pseudonats are not composable");
  if (!F.is_unital()) throw NotUnital("comparison constraint needs a unital source functor");
  const auto idF = identity_pseudonat(alpha.from);
  const auto idF2 = identity_pseudonat(alpha.to);
  const auto idH = identity_pseudonat(beta.from);
  const auto idH2 = identity_pseudonat(beta.to);
  const Fin2Cat& b = *beta.from->src;
  const Fin2Cat& d = *F.tgt;
  Modification m;
  m.from = std::make_shared<const PseudoNat>(
      compose_pseudonats(tensor_pseudonat(idF2, beta), tensor_pseudonat(alpha, idH)));
  m.to = std::make_shared<const PseudoNat>(
      compose_pseudonats(tensor_pseudonat(alpha, idH2), tensor_pseudonat(idF, beta)));
  for (int a = 0; a < b.n0; ++a) m.comp.push_back(d.inv2(alpha.c2[beta.c0[a]]));
  return m;
}

Modification associativity_constraint(const PseudoNat& alpha, const PseudoNat& beta,
                                      const PseudoNat& gamma) {
  const PseudoFunctor& K = *alpha.from;
  const PseudoFunctor& H = *beta.from;
  const PseudoFunctor& H2 = *beta.to;
  const PseudoFunctor& G2 = *gamma.to;
  const Fin2Cat& b = *gamma.from->src;
  const Fin2Cat& d = *K.tgt;
  Modification m;
  m.from = std::make_shared<const PseudoNat>(
      tensor_pseudonat(tensor_pseudonat(alpha, beta), gamma));
  m.to = std::make_shared<const PseudoNat>(
      tensor_pseudonat(alpha, tensor_pseudonat(beta, gamma)));
  for (int a = 0; a < b.n0; ++a) {
    const int g2a = G2.on0(a);
    m.comp.push_back(d.h2(d.id(alpha.c0[H2.on0(g2a)]),
                          K.c(beta.c0[g2a], H.on1(gamma.c0[a]))));
  }
  return m;
}

ValidationReport check_pentagon(const PseudoNat& alpha, const PseudoNat& beta,
                                const PseudoNat& gamma, const PseudoNat& delta) {
  ValidationReport r;
  const auto ida = identity_modification(std::make_shared<const PseudoNat>(alpha));
  const auto idd = identity_modification(std::make_shared<const PseudoNat>(delta));
  const auto bg = tensor_pseudonat(beta, gamma);
  const auto gd = tensor_pseudonat(gamma, delta);
  const auto ab = tensor_pseudonat(alpha, beta);
  try {
    const auto l1 = tensor_modifications(associativity_constraint(alpha, beta, gamma), idd);
    const auto l2 = associativity_constraint(alpha, bg, delta);
    const auto l3 = tensor_modifications(ida, associativity_constraint(beta, gamma, delta));
    const auto r1 = associativity_constraint(ab, gamma, delta);
    const auto r2 = associativity_constraint(alpha, beta, gd);
    const auto lhs = compose_modifications(l3, compose_modifications(l2, l1));
    const auto rhs = compose_modifications(r2, r1);
    for (size_t a = 0; a < lhs.comp.size(); ++a) {
      r.count_check();
      if (lhs.comp[a] == kNone || lhs.comp[a] != rhs.comp[a])
        r.add("Pentagon", {static_cast<int>(a)}, "pentagon identity fails");
    }
  } catch (const ShapeMismatch& e) {
    r.add("Shape", {}, e.what());
  }
  return r;
}

namespace {

// Variable order interleaving 1-cell components with 2-cell components so that
// every coherence check fires as early as possible.
struct NatLayout {
  std::vector<int> var_of_c0;
  std::vector<int> var_of_c2;
  std::vector<int> c0_of_var;  // kNone when the variable is a 2-cell
  std::vector<int> c2_of_var;
};

NatLayout nat_layout(const Fin2Cat& b) {
  NatLayout l;
  l.var_of_c0.assign(b.n0, kNone);
  l.var_of_c2.assign(b.num1(), kNone);
  for (int a = 0; a < b.n0; ++a) {
    l.var_of_c0[a] = static_cast<int>(l.c0_of_var.size());
    l.c0_of_var.push_back(a);
    l.c2_of_var.push_back(kNone);
    for (int x = 0; x < b.num1(); ++x) {
      if (std::max(b.src1[x], b.tgt1[x]) != a) continue;
      l.var_of_c2[x] = static_cast<int>(l.c0_of_var.size());
      l.c0_of_var.push_back(kNone);
      l.c2_of_var.push_back(x);
    }
  }
  return l;
}

}  // namespace

std::vector<PseudoNat> enumerate_pseudonats(FunctorPtr f, FunctorPtr g, const SearchOptions& opt) {
  if (!same_cat(f->src, g->src) || !same_cat(f->tgt, g->tgt))
    throw ShapeMismatch("functors are not parallel");
  const Fin2Cat& b = *f->src;
  const Fin2Cat& c = *f->tgt;
  const NatLayout lay = nat_layout(b);
  const int nv = static_cast<int>(lay.c0_of_var.size());

  // Unpacks an assignment into c0 / c2 arrays; unassigned entries stay kNone.
  auto unpack = [&lay, &b](const Csp::Assignment& asg, std::vector<int>& c0, std::vector<int>& c2) {
    c0.assign(b.n0, kNone);
    c2.assign(b.num1(), kNone);
    for (int a = 0; a < b.n0; ++a) c0[a] = asg[lay.var_of_c0[a]];
    for (int x = 0; x < b.num1(); ++x) c2[x] = asg[lay.var_of_c2[x]];
  };

  Csp csp;
  for (int v = 0; v < nv; ++v) {
    if (lay.c0_of_var[v] != kNone) {
      const int a = lay.c0_of_var[v];
      csp.add_var(c.hom1(f->on0(a), g->on0(a)));
    } else {
      const int x = lay.c2_of_var[v];
      const int A = b.src1[x], B = b.tgt1[x];
      const int vA = lay.var_of_c0[A], vB = lay.var_of_c0[B];
      csp.add_var([&c, f, g, x, vA, vB](const Csp::Assignment& asg) {
        std::vector<int> out;
        const int s = c.h1(asg[vB], f->on1(x));
        const int t = c.h1(g->on1(x), asg[vA]);
        if (s == kNone || t == kNone) return out;
        for (int a : c.hom2(s, t))
          if (c.invertible2(a)) out.push_back(a);
        return out;
      });
    }
  }
  auto view_check = [f, g, unpack](auto&& pred) {
    return [f, g, unpack, pred](const Csp::Assignment& asg) {
      std::vector<int> c0, c2;
      unpack(asg, c0, c2);
      return pred(NatView{*f, *g, c0, c2});
    };
  };
  for (int s = 0; s < b.num2(); ++s) {
    const int x = b.src2[s], x2 = b.tgt2[s];
    csp.add_constraint({lay.var_of_c2[x], lay.var_of_c2[x2]},
                       view_check([s](const NatView& v) { return nat_naturality_ok(v, s); }));
  }
  for (int x = 0; x < b.num1(); ++x)
    for (int y = 0; y < b.num1(); ++y) {
      const int xy = b.h1(x, y);
      if (xy == kNone) continue;
      csp.add_constraint(
          {lay.var_of_c2[x], lay.var_of_c2[y], lay.var_of_c2[xy]},
          view_check([x, y](const NatView& v) { return nat_composition_ok(v, x, y); }));
    }
  for (int a = 0; a < b.n0; ++a)
    csp.add_constraint({lay.var_of_c2[b.unit(a)]},
                       view_check([a](const NatView& v) { return nat_unit_ok(v, a); }));

  std::vector<PseudoNat> out;
  for (const auto& asg : csp.solve(opt)) {
    PseudoNat n;
    n.from = f;
    n.to = g;
    unpack(asg, n.c0, n.c2);
    out.push_back(std::move(n));
  }
  return out;
}

std::vector<Modification> enumerate_modifications(NatPtr from, NatPtr to, const SearchOptions& opt) {
  const PseudoFunctor& F = *from->from;
  const PseudoFunctor& G = *from->to;
  const Fin2Cat& b = *F.src;
  const Fin2Cat& c = *F.tgt;
  std::vector<Modification> out;
  for (int a = 0; a < b.n0; ++a)
    if (c.hom2(from->c0[a], to->c0[a]).empty()) return out;
  Csp csp;
  for (int a = 0; a < b.n0; ++a) csp.add_var(c.hom2(from->c0[a], to->c0[a]));
  for (int x = 0; x < b.num1(); ++x) {
    const int A = b.src1[x], B = b.tgt1[x];
    csp.add_constraint({A, B}, [&, x, A, B](const Csp::Assignment& w) {
      const int lhs = c.v(c.h2(c.id(G.on1(x)), w[A]), from->c2[x]);
      const int rhs = c.v(to->c2[x], c.h2(w[B], c.id(F.on1(x))));
      return lhs != kNone && lhs == rhs;
    });
  }
  for (auto& asg : csp.solve(opt)) out.push_back(Modification{from, to, std::move(asg)});
  return out;
}

int NatCategory::find_object(const PseudoNat& n) const {
  auto it = obj_index_.find({n.c0, n.c2});
  return it == obj_index_.end() ? kNone : it->second;
}

int NatCategory::find_morphism(int from, int to, const std::vector<int>& comp) const {
  auto it = mor_index_.find({{from, to}, comp});
  return it == mor_index_.end() ? kNone : it->second;
}

void NatCategory::build_index() {
  obj_index_.clear();
  mor_index_.clear();
  for (size_t i = 0; i < objects.size(); ++i)
    obj_index_.emplace(std::make_pair(objects[i]->c0, objects[i]->c2), static_cast<int>(i));
  for (size_t i = 0; i < morphisms.size(); ++i)
    mor_index_.emplace(std::make_pair(std::make_pair(mor_src[i], mor_tgt[i]), morphisms[i].comp),
                       static_cast<int>(i));
}

NatCategory pseudonat_category(FunctorPtr f, FunctorPtr g, const SearchOptions& opt) {
  NatCategory nc;
  for (auto& n : enumerate_pseudonats(f, g, opt))
    nc.objects.push_back(std::make_shared<const PseudoNat>(std::move(n)));
  const int n = static_cast<int>(nc.objects.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& m : enumerate_modifications(nc.objects[i], nc.objects[j], opt)) {
        nc.morphisms.push_back(std::move(m));
        nc.mor_src.push_back(i);
        nc.mor_tgt.push_back(j);
      }
  nc.build_index();
  const Fin2Cat& c = *f->tgt;
  const int k = static_cast<int>(nc.morphisms.size());
  nc.cat.num_objects = n;
  nc.cat.src = nc.mor_src;
  nc.cat.tgt = nc.mor_tgt;
  nc.cat.compose = Table(k, k);
  for (int q = 0; q < k; ++q)
    for (int p = 0; p < k; ++p) {
      if (nc.mor_tgt[p] != nc.mor_src[q]) continue;
      std::vector<int> comp;
      for (size_t a = 0; a < nc.morphisms[p].comp.size(); ++a)
        comp.push_back(c.v(nc.morphisms[q].comp[a], nc.morphisms[p].comp[a]));
      nc.cat.compose.at(q, p) = nc.find_morphism(nc.mor_src[p], nc.mor_tgt[q], comp);
    }
  for (int i = 0; i < n; ++i)
    nc.cat.identity.push_back(
        nc.find_morphism(i, i, identity_modification(nc.objects[i]).comp));
  return nc;
}

RelativeCenter relative_center(FunctorPtr h, const SearchOptions& opt) {
  if (!h->is_unital()) throw NotUnital("the relative center needs a unital pseudofunctor");
  RelativeCenter z;
  z.nats = pseudonat_category(h, h, opt);
  const NatCategory& nc = z.nats;
  const Fin2Cat& c = *h->tgt;
  const int n = nc.cat.num_objects, k = nc.cat.num_morphisms();
  z.mon.cat = nc.cat;
  z.mon.tensor_obj = Table(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      z.mon.tensor_obj.at(i, j) =
          nc.find_object(compose_pseudonats(*nc.objects[i], *nc.objects[j]));
  z.mon.tensor_mor = Table(k, k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      const int s = z.mon.tensor_obj(nc.mor_src[p], nc.mor_src[q]);
      const int t = z.mon.tensor_obj(nc.mor_tgt[p], nc.mor_tgt[q]);
      std::vector<int> comp;
      for (size_t a = 0; a < nc.morphisms[p].comp.size(); ++a)
        comp.push_back(c.h2(nc.morphisms[p].comp[a], nc.morphisms[q].comp[a]));
      z.mon.tensor_mor.at(p, q) = nc.find_morphism(s, t, comp);
    }
  z.mon.unit = nc.find_object(identity_pseudonat(h));
  return z;
}

}  // namespace catcore
