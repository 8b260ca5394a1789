#include "catcore/fincat.hpp"

#include <fmt/format.h>

namespace catcore {

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < num_morphisms(); ++f)
    if (src[f] == a && tgt[f] == b) out.push_back(f);
  return out;
}

ValidationReport validate_fincat(const FinCat& c) {
  ValidationReport r;
  const int m = c.num_morphisms();
  const int n = c.num_objects;
  if (static_cast<int>(c.tgt.size()) != m || static_cast<int>(c.identity.size()) != n ||
      c.compose.rows() != m || c.compose.cols() != m) {
    r.add("Shape", {}, "table sizes disagree with the number of cells");
    return r;
  }
  for (int f = 0; f < m; ++f)
    if (c.src[f] < 0 || c.src[f] >= n || c.tgt[f] < 0 || c.tgt[f] >= n)
      r.add("DanglingId", {f}, "morphism endpoint is not an object");
  for (int a = 0; a < n; ++a) {
    const int i = c.identity[a];
    if (i < 0 || i >= m || c.src[i] != a || c.tgt[i] != a)
      r.add("Identity", {a}, "identity is not an endomorphism of its object");
  }
  if (!r.pass()) return r;

  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      r.count_check();
      const int h = c.compose(g, f);
      const bool composable = c.tgt[f] == c.src[g];
      if (!composable) {
        if (h != kNone) r.add("Typing", {g, f}, "composite defined on a non-composable pair");
        continue;
      }
      if (h < 0 || h >= m) {
        r.add("Undefined", {g, f}, "composite missing or out of range");
      } else if (c.src[h] != c.src[f] || c.tgt[h] != c.tgt[g]) {
        r.add("Typing", {g, f, h}, "composite has wrong endpoints");
      }
    }
  if (!r.pass()) return r;

  for (int f = 0; f < m; ++f) {
    r.count_check();
    if (c.compose(c.identity[c.tgt[f]], f) != f || c.compose(f, c.identity[c.src[f]]) != f)
      r.add("Identity", {f}, "identity law fails");
  }
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (c.tgt[g] != c.src[h]) continue;
      const int hg = c.compose(h, g);
      for (int f = 0; f < m; ++f) {
        if (c.tgt[f] != c.src[g]) continue;
        r.count_check();
        if (c.compose(hg, f) != c.compose(h, c.compose(g, f)))
          r.add("Associativity", {h, g, f}, "(h·g)·f != h·(g·f)");
      }
    }
  return r;
}

}  // namespace catcore
