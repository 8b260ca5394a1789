#pragma once

// Brute-force reference computations over raw group tables. They do not call
// into the library's search or validators.

#include <functional>
#include <vector>

#include "catcore/group.hpp"

namespace oracle {

using catcore::FinGroup;

inline int center_size(const FinGroup& g) {
  int n = 0;
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order(); ++x) central = central && g.mul(z, x) == g.mul(x, z);
    n += central;
  }
  return n;
}

// Calls visit(f) for every map f: {0..n-1} → {0..m-1}.
inline void for_each_map(int n, int m, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> f(n, 0);
  while (true) {
    visit(f);
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return;
  }
}

// Equivariant 0-cells of ΣK under a strict action of G by automorphisms
// psi[g] of K: maps U: G → K with U(1) = 1 and U(gh) = psi_g(U(h))·U(g).
inline int equivariant_zero_cells(const FinGroup& g, const FinGroup& k,
                                  const std::vector<std::vector<int>>& psi) {
  int count = 0;
  for_each_map(g.order(), k.order(), [&](const std::vector<int>& u) {
    if (u[g.unit] != k.unit) return;
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (u[g.mul(a, b)] != k.mul(psi[a][u[b]], u[a])) return;
    ++count;
  });
  return count;
}

// Group homomorphisms G → K.
inline int homomorphisms(const FinGroup& g, const FinGroup& k) {
  int count = 0;
  for_each_map(g.order(), k.order(), [&](const std::vector<int>& f) {
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (f[g.mul(a, b)] != k.mul(f[a], f[b])) return;
    ++count;
  });
  return count;
}

// 0-cells of the strictification of ΣK under a strict action psi: maps
// theta: G×G → K with theta(1,g) = 1 and theta(gh,f) = theta(g,hf)·psi_g(theta(h,f)).
inline int strictified_zero_cells(const FinGroup& g, const FinGroup& k,
                                  const std::vector<std::vector<int>>& psi) {
  const int n = g.order();
  int count = 0;
  for_each_map(n * n, k.order(), [&](const std::vector<int>& t) {
    auto th = [&](int a, int b) { return t[a * n + b]; };
    for (int a = 0; a < n; ++a)
      if (th(g.unit, a) != k.unit) return;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (th(g.mul(a, b), c) != k.mul(th(a, g.mul(b, c)), psi[a][th(b, c)]))
            return;
    ++count;
  });
  return count;
}

// 1-cells between two such 0-cells: X: G → K with
// rho(g,h)·psi_g(X(h)) = X(gh)·theta(g,h).
inline int strictified_one_cells(const FinGroup& g, const FinGroup& k,
                                 const std::vector<std::vector<int>>& psi,
                                 const std::vector<int>& theta, const std::vector<int>& rho) {
  const int n = g.order();
  int count = 0;
  for_each_map(n, k.order(), [&](const std::vector<int>& x) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (k.mul(rho[a * n + b], psi[a][x[b]]) != k.mul(x[g.mul(a, b)], theta[a * n + b]))
          return;
    ++count;
  });
  return count;
}

// Equivariant 1-cells between equivariant 0-cells U, V of ΣK: t ∈ K with
// psi_g(t)·U(g) = V(g)·t for all g.
inline int equivariant_one_cells(const FinGroup& g, const FinGroup& k,
                                 const std::vector<std::vector<int>>& psi,
                                 const std::vector<int>& u, const std::vector<int>& v) {
  int count = 0;
  for (int t = 0; t < k.order(); ++t) {
    bool ok = true;
    for (int a = 0; a < g.order(); ++a) ok = ok && k.mul(psi[a][t], u[a]) == k.mul(v[a], t);
    count += ok;
  }
  return count;
}

// Pseudonats Id ⇒ phi on ΣK with phi an automorphism: z with z·x = phi(x)·z.
inline int twisted_central(const FinGroup& k, const std::vector<int>& phi) {
  int count = 0;
  for (int z = 0; z < k.order(); ++z) {
    bool ok = true;
    for (int x = 0; x < k.order(); ++x) ok = ok && k.mul(z, x) == k.mul(phi[x], z);
    count += ok;
  }
  return count;
}

inline std::vector<int> inversion_map(const FinGroup& k) {
  std::vector<int> out(k.order());
  for (int x = 0; x < k.order(); ++x)
    for (int y = 0; y < k.order(); ++y)
      if (k.mul(x, y) == k.unit) out[x] = y;
  return out;
}

inline std::vector<int> identity_map(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace oracle
