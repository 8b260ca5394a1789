#include <fmt/format.h>

#include "catcore/fin2cat.hpp"

namespace catcore {

Fin2Cat delooping(const FinGroup& g) {
  const int n = g.order();
  Fin2Cat b;
  b.name = fmt::format("Sigma{}", g.name.empty() ? "G" : g.name);
  b.n0 = 1;
  b.names0 = {"*"};
  b.names1 = g.elements;
  b.names2.reserve(n);
  for (int x = 0; x < n; ++x) b.names2.push_back("id_" + g.elements[x]);
  b.src1.assign(n, 0);
  b.tgt1.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    b.src2.push_back(x);
    b.tgt2.push_back(x);
    b.id2.push_back(x);
  }
  b.unit1 = {g.unit};
  b.vcomp = Table(n, n);
  for (int x = 0; x < n; ++x) b.vcomp.at(x, x) = x;
  b.hcomp1 = g.mult;
  b.hcomp2 = g.mult;
  b.finalize();
  return b;
}

Fin2Cat unit_2cat() {
  Fin2Cat b = delooping(trivial_group());
  b.name = "I";
  b.names1 = {"I"};
  b.names2 = {"id_I"};
  return b;
}

Fin2Cat op_2category(const Fin2Cat& b) {
  Fin2Cat o = b;
  o.name = b.name + "^op";
  o.src1 = b.tgt1;
  o.tgt1 = b.src1;
  const int n1 = b.num1(), n2 = b.num2();
  o.hcomp1 = Table(n1, n1);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n1; ++y) o.hcomp1.at(x, y) = b.hcomp1(y, x);
  o.hcomp2 = Table(n2, n2);
  for (int c = 0; c < n2; ++c)
    for (int a = 0; a < n2; ++a) o.hcomp2.at(c, a) = b.hcomp2(a, c);
  o.finalize();
  return o;
}

Fin2Cat arrow_2cat() {
  Fin2Cat b;
  b.name = "Arrow";
  b.n0 = 2;
  b.names0 = {"0", "1"};
  b.names1 = {"I0", "I1", "f"};
  b.names2 = {"id_I0", "id_I1", "id_f"};
  b.src1 = {0, 1, 0};
  b.tgt1 = {0, 1, 1};
  b.src2 = {0, 1, 2};
  b.tgt2 = {0, 1, 2};
  b.unit1 = {0, 1};
  b.id2 = {0, 1, 2};
  b.vcomp = Table(3, 3);
  b.hcomp1 = Table(3, 3);
  b.hcomp2 = Table(3, 3);
  for (int x = 0; x < 3; ++x) b.vcomp.at(x, x) = x;
  const int comp[][3] = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}};
  for (const auto& c : comp) {
    b.hcomp1.at(c[0], c[1]) = c[2];
    b.hcomp2.at(c[0], c[1]) = c[2];
  }
  b.finalize();
  return b;
}

Fin2Cat two_group_2cat(const FinGroup& g, int n) {
  const int m = g.order();
  Fin2Cat b;
  b.name = fmt::format("B2_{}_Z{}", g.name.empty() ? "G" : g.name, n);
  b.n0 = 1;
  b.names0 = {"*"};
  b.names1 = g.elements;
  b.src1.assign(m, 0);
  b.tgt1.assign(m, 0);
  b.unit1 = {g.unit};
  for (int x = 0; x < m; ++x) {
    b.id2.push_back(x * n);
    for (int a = 0; a < n; ++a) {
      b.src2.push_back(x);
      b.tgt2.push_back(x);
      b.names2.push_back(fmt::format("{}:{}", g.elements[x], a));
    }
  }
  const int k = m * n;
  b.vcomp = Table(k, k);
  b.hcomp2 = Table(k, k);
  for (int x = 0; x < m; ++x)
    for (int a = 0; a < n; ++a)
      for (int y = 0; y < m; ++y)
        for (int c = 0; c < n; ++c) {
          const int p = x * n + a, q = y * n + c;
          if (x == y) b.vcomp.at(p, q) = x * n + (a + c) % n;
          b.hcomp2.at(p, q) = g.mul(x, y) * n + (a + c) % n;
        }
  b.hcomp1 = g.mult;
  b.finalize();
  return b;
}

Fin2Cat idempotent_2cat() {
  Fin2Cat b;
  b.name = "Idem";
  b.n0 = 1;
  b.names0 = {"*"};
  b.names1 = {"I"};
  b.names2 = {"id", "p"};
  b.src1 = {0};
  b.tgt1 = {0};
  b.src2 = {0, 0};
  b.tgt2 = {0, 0};
  b.unit1 = {0};
  b.id2 = {0};
  b.vcomp = Table(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) b.vcomp.at(a, c) = a | c;
  b.hcomp1 = Table(1, 1, 0);
  b.hcomp2 = b.vcomp;
  b.finalize();
  return b;
}

}  // namespace catcore
