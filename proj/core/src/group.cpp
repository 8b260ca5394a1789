#include "catcore/group.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

#include "catcore/errors.hpp"

namespace catcore {

int FinGroup::index_of(const std::string& element) const {
  auto it = std::find(elements.begin(), elements.end(), element);
  return it == elements.end() ? kNone : static_cast<int>(it - elements.begin());
}

FinGroup make_fin_group(std::vector<std::string> elements, const Table& mult, int unit,
                        std::string name) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw InvalidTable("group has no elements");
  if (mult.rows() != n || mult.cols() != n) throw InvalidTable("multiplication table has wrong shape");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mult(a, b) < 0 || mult(a, b) >= n)
        throw InvalidTable(fmt::format("product {}*{} is not an element", elements[a], elements[b]));
  if (unit < 0 || unit >= n) throw NoUnit("unit is not an element", {unit});

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mult(mult(a, b), c) != mult(a, mult(b, c)))
          throw NotAssociative(fmt::format("({}*{})*{} != {}*({}*{})", elements[a], elements[b],
                                           elements[c], elements[a], elements[b], elements[c]),
                               {a, b, c});

  for (int a = 0; a < n; ++a)
    if (mult(unit, a) != a || mult(a, unit) != a)
      throw NoUnit(fmt::format("{} is not a two-sided unit for {}", elements[unit], elements[a]),
                   {unit, a});

  std::vector<int> inv(n, kNone);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mult(a, b) == unit && mult(b, a) == unit) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] == kNone) throw NoInverse(fmt::format("{} has no inverse", elements[a]), {a});
  }
  return FinGroup{std::move(name), std::move(elements), mult, unit, std::move(inv)};
}

FinGroup trivial_group() { return cyclic_group(1); }

FinGroup cyclic_group(int n) {
  std::vector<std::string> els;
  for (int i = 0; i < n; ++i) els.push_back(i == 0 ? "e" : (n == 2 ? "s" : fmt::format("g{}", i)));
  Table m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.at(a, b) = (a + b) % n;
  return make_fin_group(std::move(els), m, 0, fmt::format("C{}", n));
}

FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::string> els;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) els.push_back(fmt::format("({},{})", a.elements[i], b.elements[j]));
  Table m(na * nb, na * nb);
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y)
      m.at(x, y) = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return make_fin_group(std::move(els), m, a.unit * nb + b.unit, a.name + "x" + b.name);
}

FinGroup klein_four() {
  auto g = direct_product(cyclic_group(2), cyclic_group(2));
  g.name = "C2xC2";
  return g;
}

FinGroup symmetric_group3() {
  // Elements are permutations of {0,1,2}; product is composition (p*q)(i) = p(q(i)).
  const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                                    {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  const std::vector<std::string> names = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
  Table m(6, 6);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      std::array<int, 3> r{};
      for (int i = 0; i < 3; ++i) r[i] = perms[p][perms[q][i]];
      m.at(p, q) = static_cast<int>(std::find(perms.begin(), perms.end(), r) - perms.begin());
    }
  return make_fin_group(names, m, 0, "S3");
}

bool is_automorphism(const FinGroup& g, const std::vector<int>& phi) {
  const int n = g.order();
  if (static_cast<int>(phi.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int x : phi) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) return false;
  return true;
}

}  // namespace catcore
