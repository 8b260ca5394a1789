#include "catcore/monoidal.hpp"

namespace catcore {

namespace {

int mcomp(const FinCat& c, int g, int f) {
  if (f < 0 || g < 0 || f >= c.num_morphisms() || g >= c.num_morphisms()) return kNone;
  if (c.tgt[f] != c.src[g]) return kNone;
  return c.compose.get(g, f);
}

bool invertible(const FinCat& c, int f) {
  if (f < 0 || f >= c.num_morphisms()) return false;
  for (int g : c.hom(c.tgt[f], c.src[f]))
    if (mcomp(c, g, f) == c.identity[c.src[f]] && mcomp(c, f, g) == c.identity[c.tgt[f]])
      return true;
  return false;
}

}  // namespace

ValidationReport validate_monoidal(const MonoidalCat& m) {
  ValidationReport r;
  r.merge(validate_fincat(m.cat), "Category");
  if (!r.pass()) return r;
  const FinCat& c = m.cat;
  const int n = c.num_objects, k = c.num_morphisms();
  if (m.tensor_obj.rows() != n || m.tensor_obj.cols() != n || m.tensor_mor.rows() != k ||
      m.tensor_mor.cols() != k || m.unit < 0 || m.unit >= n) {
    r.add("Shape", {}, "tensor tables do not match the category");
    return r;
  }
  auto to = [&](int x, int y) { return m.tensor_obj(x, y); };
  auto tm = [&](int f, int g) { return m.tensor_mor(f, g); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      r.count_check();
      const int z = to(x, y);
      if (z < 0 || z >= n) {
        r.add("Undefined", {x, y}, "object tensor undefined");
      } else if (tm(c.identity[x], c.identity[y]) != c.identity[z]) {
        r.add("Functoriality", {x, y}, "id_x⊗id_y != id_(x⊗y)");
      }
    }
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g) {
      r.count_check();
      const int h = tm(f, g);
      if (h < 0 || h >= k) {
        r.add("Undefined", {f, g}, "morphism tensor undefined");
      } else if (c.src[h] != to(c.src[f], c.src[g]) || c.tgt[h] != to(c.tgt[f], c.tgt[g])) {
        r.add("Typing", {f, g, h}, "morphism tensor has wrong endpoints");
      }
    }
  if (!r.pass()) return r;

  for (int x = 0; x < n; ++x) {
    r.count_check();
    if (to(m.unit, x) != x || to(x, m.unit) != x) r.add("Unit", {x}, "unit object is not strict");
  }
  const int uid = c.identity[m.unit];
  for (int f = 0; f < k; ++f) {
    r.count_check();
    if (tm(uid, f) != f || tm(f, uid) != f) r.add("Unit", {f}, "id of unit is not strict");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = to(x, y);
      for (int z = 0; z < n; ++z) {
        r.count_check();
        if (to(xy, z) != to(x, to(y, z))) r.add("Associativity", {x, y, z}, "object tensor");
      }
    }
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g) {
      const int fg = tm(f, g);
      for (int h = 0; h < k; ++h) {
        r.count_check();
        if (tm(fg, h) != tm(f, tm(g, h))) r.add("Associativity", {f, g, h}, "morphism tensor");
      }
    }
  std::vector<std::pair<int, int>> pairs;
  for (int g = 0; g < k; ++g)
    for (int f = 0; f < k; ++f)
      if (c.tgt[f] == c.src[g]) pairs.emplace_back(g, f);
  for (auto [f2, f1] : pairs)
    for (auto [g2, g1] : pairs) {
      r.count_check();
      if (tm(mcomp(c, f2, f1), mcomp(c, g2, g1)) != mcomp(c, tm(f2, g2), tm(f1, g1)))
        r.add("Interchange", {f2, f1, g2, g1}, "tensor is not a functor");
    }
  return r;
}

ValidationReport validate_braiding(const MonoidalCat& m, const Table& braid) {
  ValidationReport r;
  const FinCat& c = m.cat;
  const int n = c.num_objects, k = c.num_morphisms();
  if (braid.rows() != n || braid.cols() != n) {
    r.add("Shape", {}, "braiding table does not match the category");
    return r;
  }
  auto to = [&](int x, int y) { return m.tensor_obj(x, y); };
  auto tm = [&](int f, int g) { return m.tensor_mor.get(f, g); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      r.count_check();
      const int b = braid(x, y);
      if (b < 0 || b >= k || c.src[b] != to(x, y) || c.tgt[b] != to(y, x)) {
        r.add("Typing", {x, y}, "braiding has wrong endpoints");
      } else if (!invertible(c, b)) {
        r.add("Invertibility", {x, y}, "braiding is not invertible");
      }
    }
  if (!r.pass()) return r;
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g) {
      r.count_check();
      const int lhs = mcomp(c, braid(c.tgt[f], c.tgt[g]), tm(f, g));
      const int rhs = mcomp(c, tm(g, f), braid(c.src[f], c.src[g]));
      if (lhs != rhs) r.add("Naturality", {f, g}, "braiding is not natural");
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        r.count_check(2);
        const int idx = c.identity[x], idy = c.identity[y], idz = c.identity[z];
        if (braid(x, to(y, z)) != mcomp(c, tm(idy, braid(x, z)), tm(braid(x, y), idz)))
          r.add("Hexagon", {x, y, z}, "c_{X,Y⊗Z}");
        if (braid(to(x, y), z) != mcomp(c, tm(braid(x, z), idy), tm(idx, braid(y, z))))
          r.add("Hexagon", {x, y, z}, "c_{X⊗Y,Z}");
      }
  return r;
}

}  // namespace catcore
