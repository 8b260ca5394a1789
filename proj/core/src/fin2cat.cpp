#include "catcore/fin2cat.hpp"

#include <fmt/format.h>

#include "catcore/errors.hpp"

namespace catcore {

namespace {
const std::vector<int> kEmptyIds;

long long key2(int x, int y) { return static_cast<long long>(x) * (1LL << 31) + y; }
}  // namespace

int Fin2Cat::h1(int x, int y) const {
  if (x < 0 || y < 0 || x >= num1() || y >= num1()) return kNone;
  if (tgt1[y] != src1[x]) return kNone;
  return hcomp1.get(x, y);
}

int Fin2Cat::h2(int b, int a) const {
  if (a < 0 || b < 0 || a >= num2() || b >= num2()) return kNone;
  if (h1(src2[b], src2[a]) == kNone) return kNone;
  return hcomp2.get(b, a);
}

int Fin2Cat::v(int b, int a) const {
  if (a < 0 || b < 0 || a >= num2() || b >= num2()) return kNone;
  if (tgt2[a] != src2[b]) return kNone;
  return vcomp.get(b, a);
}

int Fin2Cat::h1(std::initializer_list<int> xs) const {
  int acc = kNone;
  bool first = true;
  for (auto it = std::rbegin(xs); it != std::rend(xs); ++it) {
    acc = first ? *it : h1(*it, acc);
    first = false;
  }
  return acc;
}

int Fin2Cat::h2(std::initializer_list<int> xs) const {
  int acc = kNone;
  bool first = true;
  for (auto it = std::rbegin(xs); it != std::rend(xs); ++it) {
    acc = first ? *it : h2(*it, acc);
    first = false;
  }
  return acc;
}

int Fin2Cat::v(std::initializer_list<int> xs) const {
  int acc = kNone;
  bool first = true;
  for (auto it = std::rbegin(xs); it != std::rend(xs); ++it) {
    acc = first ? *it : v(*it, acc);
    first = false;
  }
  return acc;
}

const std::vector<int>& Fin2Cat::hom1(int a, int b) const {
  if (a < 0 || b < 0 || a >= n0 || b >= n0 || hom1_.empty()) return kEmptyIds;
  return hom1_[static_cast<size_t>(a) * n0 + b];
}

const std::vector<int>& Fin2Cat::hom2(int x, int y) const {
  auto it = hom2_.find(key2(x, y));
  return it == hom2_.end() ? kEmptyIds : it->second;
}

void Fin2Cat::finalize() {
  hom1_.assign(static_cast<size_t>(n0) * n0, {});
  for (int x = 0; x < num1(); ++x)
    if (src1[x] >= 0 && src1[x] < n0 && tgt1[x] >= 0 && tgt1[x] < n0)
      hom1_[static_cast<size_t>(src1[x]) * n0 + tgt1[x]].push_back(x);
  hom2_.clear();
  for (int a = 0; a < num2(); ++a) hom2_[key2(src2[a], tgt2[a])].push_back(a);
  inv2_.assign(num2(), kNone);
  for (int a = 0; a < num2(); ++a) {
    const int s = src2[a], t = tgt2[a];
    for (int b : hom2(t, s)) {
      if (v(b, a) == id(s) && v(a, b) == id(t) && id(s) != kNone) {
        inv2_[a] = b;
        break;
      }
    }
  }
}

bool Fin2Cat::same_tables(const Fin2Cat& o) const {
  return n0 == o.n0 && src1 == o.src1 && tgt1 == o.tgt1 && src2 == o.src2 && tgt2 == o.tgt2 &&
         unit1 == o.unit1 && id2 == o.id2 && vcomp == o.vcomp && hcomp1 == o.hcomp1 &&
         hcomp2 == o.hcomp2;
}

std::string Fin2Cat::name1(int x) const {
  if (x >= 0 && x < static_cast<int>(names1.size()) && !names1[x].empty()) return names1[x];
  return fmt::format("x{}", x);
}

std::string Fin2Cat::name2(int a) const {
  if (a >= 0 && a < static_cast<int>(names2.size()) && !names2[a].empty()) return names2[a];
  return fmt::format("a{}", a);
}

Cell1Ref cell1(const Fin2Cat& b, int x) {
  if (x < 0 || x >= b.num1()) throw NotComposable("no such 1-cell", {x});
  return {b.src1[x], b.tgt1[x], x};
}

Cell2Ref cell2(const Fin2Cat& b, int a) {
  if (a < 0 || a >= b.num2()) throw NotComposable("no such 2-cell", {a});
  const int f = b.src2[a];
  return {b.src1[f], b.tgt1[f], f, b.tgt2[a], a};
}

Cell1Ref hcompose(const Fin2Cat& b, const Cell1Ref& x, const Cell1Ref& y) {
  const int z = b.h1(x.id, y.id);
  if (z == kNone)
    throw NotComposable(fmt::format("cannot compose {} after {}", b.name1(x.id), b.name1(y.id)),
                        {x.id, y.id});
  return cell1(b, z);
}

Cell2Ref vcompose(const Fin2Cat& b, const Cell2Ref& beta, const Cell2Ref& alpha) {
  const int c = b.v(beta.id, alpha.id);
  if (c == kNone)
    throw NotComposable(
        fmt::format("cannot stack {} on {}", b.name2(beta.id), b.name2(alpha.id)),
        {beta.id, alpha.id});
  return cell2(b, c);
}

Cell2Ref hcompose2(const Fin2Cat& b, const Cell2Ref& beta, const Cell2Ref& alpha) {
  const int c = b.h2(beta.id, alpha.id);
  if (c == kNone)
    throw NotComposable(
        fmt::format("cannot compose {} after {}", b.name2(beta.id), b.name2(alpha.id)),
        {beta.id, alpha.id});
  return cell2(b, c);
}

int find_inverse_1cell(const Fin2Cat& b, int x) {
  if (x < 0 || x >= b.num1()) return kNone;
  const int s = b.src1[x], t = b.tgt1[x];
  for (int y : b.hom1(t, s))
    if (b.h1(x, y) == b.unit(t) && b.h1(y, x) == b.unit(s)) return y;
  return kNone;
}

std::optional<Cell1Ref> find_inverse_1cell(const Fin2Cat& b, const Cell1Ref& x) {
  const int y = find_inverse_1cell(b, x.id);
  if (y == kNone) return std::nullopt;
  return cell1(b, y);
}

FinCat hom_category(const Fin2Cat& b, int src, int tgt) {
  FinCat c;
  const auto& objs = b.hom1(src, tgt);
  c.num_objects = static_cast<int>(objs.size());
  std::unordered_map<int, int> obj_index;
  for (int i = 0; i < c.num_objects; ++i) obj_index[objs[i]] = i;
  std::vector<int> mors;
  std::unordered_map<int, int> mor_index;
  for (int a = 0; a < b.num2(); ++a) {
    if (obj_index.count(b.src2[a]) && obj_index.count(b.tgt2[a])) {
      mor_index[a] = static_cast<int>(mors.size());
      mors.push_back(a);
      c.src.push_back(obj_index[b.src2[a]]);
      c.tgt.push_back(obj_index[b.tgt2[a]]);
    }
  }
  const int m = static_cast<int>(mors.size());
  c.compose = Table(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int r = b.vcomp.get(mors[i], mors[j]);
      if (c.tgt[j] == c.src[i]) c.compose.at(i, j) = mor_index.count(r) ? mor_index[r] : kNone;
    }
  for (int x : objs) {
    const int i = b.id(x);
    c.identity.push_back(mor_index.count(i) ? mor_index[i] : kNone);
  }
  return c;
}

ValidationReport validate_2category(const Fin2Cat& b) {
  ValidationReport r;
  const int n0 = b.n0, n1 = b.num1(), n2 = b.num2();
  if (n0 < 1) {
    r.add("Empty", {}, "a 2-category needs at least one 0-cell");
    return r;
  }
  if (static_cast<int>(b.tgt1.size()) != n1 || static_cast<int>(b.tgt2.size()) != n2 ||
      static_cast<int>(b.unit1.size()) != n0 || static_cast<int>(b.id2.size()) != n1 ||
      b.hcomp1.rows() != n1 || b.hcomp1.cols() != n1 || b.hcomp2.rows() != n2 ||
      b.hcomp2.cols() != n2 || b.vcomp.rows() != n2 || b.vcomp.cols() != n2) {
    r.add("Shape", {}, "table sizes disagree with the number of cells");
    return r;
  }
  auto ok0 = [&](int a) { return a >= 0 && a < n0; };
  auto ok1 = [&](int x) { return x >= 0 && x < n1; };
  auto ok2 = [&](int a) { return a >= 0 && a < n2; };

  for (int x = 0; x < n1; ++x)
    if (!ok0(b.src1[x]) || !ok0(b.tgt1[x])) r.add("DanglingId", {x}, "1-cell endpoint");
  for (int a = 0; a < n2; ++a)
    if (!ok1(b.src2[a]) || !ok1(b.tgt2[a])) r.add("DanglingId", {a}, "2-cell boundary");
  for (int a = 0; a < n0; ++a)
    if (!ok1(b.unit1[a])) r.add("DanglingId", {a}, "unit 1-cell");
  for (int x = 0; x < n1; ++x)
    if (!ok2(b.id2[x])) r.add("DanglingId", {x}, "identity 2-cell");
  if (!r.pass()) return r;
  for (int a = 0; a < n2; ++a) {
    const int s = b.src2[a], t = b.tgt2[a];
    if (b.src1[s] != b.src1[t] || b.tgt1[s] != b.tgt1[t])
      r.add("Typing", {a}, "2-cell between non-parallel 1-cells");
  }
  for (int a = 0; a < n0; ++a) {
    const int u = b.unit1[a];
    if (b.src1[u] != a || b.tgt1[u] != a) r.add("Typing", {a}, "unit 1-cell is not an endo-cell");
  }
  for (int x = 0; x < n1; ++x) {
    const int i = b.id2[x];
    if (b.src2[i] != x || b.tgt2[i] != x) r.add("Typing", {x}, "identity 2-cell has wrong boundary");
  }
  if (!r.pass()) return r;

  bool undefined = false;
  // Hom-categories: vertical composition.
  for (int g = 0; g < n2; ++g)
    for (int f = 0; f < n2; ++f) {
      r.count_check();
      const int h = b.vcomp(g, f);
      if (b.tgt2[f] != b.src2[g]) {
        if (h != kNone) {
          undefined = undefined || !ok2(h);
          r.add("HomCategory", {g, f}, "vertical composite on a non-composable pair");
        }
        continue;
      }
      if (!ok2(h)) {
        undefined = true;
        r.add("HomCategory", {g, f}, "vertical composite undefined");
      } else if (b.src2[h] != b.src2[f] || b.tgt2[h] != b.tgt2[g]) {
        r.add("HomCategory", {g, f, h}, "vertical composite has wrong boundary");
      }
    }
  // Horizontal composition of 1-cells.
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n1; ++y) {
      r.count_check();
      const int z = b.hcomp1(x, y);
      if (b.tgt1[y] != b.src1[x]) {
        if (z != kNone) r.add("Typing", {x, y}, "1-cell composite on a non-composable pair");
        continue;
      }
      if (!ok1(z)) {
        undefined = true;
        r.add("UnitOrAssoc", {x, y}, "1-cell composite undefined");
      } else if (b.src1[z] != b.src1[y] || b.tgt1[z] != b.tgt1[x]) {
        r.add("UnitOrAssoc", {x, y, z}, "1-cell composite has wrong endpoints");
      }
    }
  // Horizontal composition of 2-cells: definedness and boundary.
  for (int c = 0; c < n2; ++c)
    for (int a = 0; a < n2; ++a) {
      r.count_check();
      const int h = b.hcomp2(c, a);
      if (b.tgt1[b.src2[a]] != b.src1[b.src2[c]]) {
        if (h != kNone) r.add("Typing", {c, a}, "2-cell composite on a non-composable pair");
        continue;
      }
      if (!ok2(h)) {
        undefined = true;
        r.add("Functoriality", {c, a}, "2-cell composite undefined");
        continue;
      }
      const int s = b.hcomp1(b.src2[c], b.src2[a]), t = b.hcomp1(b.tgt2[c], b.tgt2[a]);
      if (b.src2[h] != s || b.tgt2[h] != t)
        r.add("Functoriality", {c, a, h}, "2-cell composite lies over the wrong 1-cells");
    }
  if (undefined) return r;

  for (int a = 0; a < n2; ++a) {
    r.count_check();
    const int s = b.src2[a], t = b.tgt2[a];
    if (b.vcomp(b.id2[t], a) != a || b.vcomp(a, b.id2[s]) != a)
      r.add("HomCategory", {a}, "identity law for vertical composition");
  }
  for (int h = 0; h < n2; ++h)
    for (int g = 0; g < n2; ++g) {
      if (b.tgt2[g] != b.src2[h]) continue;
      const int hg = b.vcomp(h, g);
      for (int f = 0; f < n2; ++f) {
        if (b.tgt2[f] != b.src2[g]) continue;
        r.count_check();
        if (b.vcomp(hg, f) != b.vcomp(h, b.vcomp(g, f)))
          r.add("HomCategory", {h, g, f}, "vertical associativity");
      }
    }

  for (int x = 0; x < n1; ++x) {
    r.count_check();
    if (b.hcomp1(b.unit1[b.tgt1[x]], x) != x || b.hcomp1(x, b.unit1[b.src1[x]]) != x)
      r.add("UnitOrAssoc", {x}, "unit 1-cell is not a strict unit");
  }
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n1; ++y) {
      if (b.tgt1[y] != b.src1[x]) continue;
      const int xy = b.hcomp1(x, y);
      for (int z = 0; z < n1; ++z) {
        if (b.tgt1[z] != b.src1[y]) continue;
        r.count_check();
        if (b.hcomp1(xy, z) != b.hcomp1(x, b.hcomp1(y, z)))
          r.add("UnitOrAssoc", {x, y, z}, "(x∘y)∘z != x∘(y∘z)");
      }
    }

  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n1; ++y) {
      if (b.tgt1[y] != b.src1[x]) continue;
      r.count_check();
      if (b.hcomp2(b.id2[x], b.id2[y]) != b.id2[b.hcomp1(x, y)])
        r.add("Functoriality", {x, y}, "id_x∘id_y != id_(x∘y)");
    }
  for (int a = 0; a < n2; ++a) {
    r.count_check();
    const int s = b.src2[a];
    const int left = b.id2[b.unit1[b.tgt1[s]]], right = b.id2[b.unit1[b.src1[s]]];
    if (b.hcomp2(left, a) != a || b.hcomp2(a, right) != a)
      r.add("Hcomp2UnitOrAssoc", {a}, "identity of the unit 1-cell is not a unit for ∘");
  }
  for (int c = 0; c < n2; ++c)
    for (int bb = 0; bb < n2; ++bb) {
      if (b.tgt1[b.src2[bb]] != b.src1[b.src2[c]]) continue;
      const int cb = b.hcomp2(c, bb);
      for (int a = 0; a < n2; ++a) {
        if (b.tgt1[b.src2[a]] != b.src1[b.src2[bb]]) continue;
        r.count_check();
        if (b.hcomp2(cb, a) != b.hcomp2(c, b.hcomp2(bb, a)))
          r.add("Hcomp2UnitOrAssoc", {c, bb, a}, "horizontal associativity of 2-cells");
      }
    }

  // Interchange: (b2·b1)∘(a2·a1) = (b2∘a2)·(b1∘a1).
  std::vector<std::pair<int, int>> vpairs;
  for (int g = 0; g < n2; ++g)
    for (int f = 0; f < n2; ++f)
      if (b.tgt2[f] == b.src2[g]) vpairs.emplace_back(g, f);
  for (auto [b2, b1] : vpairs)
    for (auto [a2, a1] : vpairs) {
      if (b.tgt1[b.src2[a1]] != b.src1[b.src2[b1]]) continue;
      r.count_check();
      const int lhs = b.hcomp2(b.vcomp(b2, b1), b.vcomp(a2, a1));
      const int rhs = b.vcomp(b.hcomp2(b2, a2), b.hcomp2(b1, a1));
      if (lhs != rhs) r.add("Interchange", {b2, b1, a2, a1}, "interchange law fails");
    }
  return r;
}

}  // namespace catcore
