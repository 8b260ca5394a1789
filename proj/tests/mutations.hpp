#pragma once

// Corruptions of a valid one-object 2-category, each paired with the
// violation that must witness it.

#include <functional>
#include <string>
#include <vector>

#include "catcore/fin2cat.hpp"

namespace mutation {

using catcore::Fin2Cat;
using catcore::ValidationReport;

struct Mutation {
  std::string name;
  Fin2Cat cat;
  std::string tag;
  std::vector<int> cells;
};

// True when some violation carries `tag` and starts with `cells`.
inline bool witnessed(const ValidationReport& r, const Mutation& m) {
  for (const auto& v : r.violations()) {
    if (v.tag != m.tag || v.cells.size() < m.cells.size()) continue;
    if (std::equal(m.cells.begin(), m.cells.end(), v.cells.begin())) return true;
  }
  return false;
}

inline std::vector<Mutation> standard_mutations(const Fin2Cat& b) {
  const int x = b.num1() - 1;
  const int a = b.id(x);
  const int n0 = b.num0(), n1 = b.num1(), n2 = b.num2();
  std::vector<Mutation> out;
  auto add = [&](std::string name, std::string tag, std::vector<int> cells,
                 const std::function<void(Fin2Cat&)>& edit) {
    Fin2Cat c = b;
    edit(c);
    out.push_back({std::move(name), std::move(c), std::move(tag), std::move(cells)});
  };
  add("hcomp1 undefined", "UnitOrAssoc", {x, x}, [&](Fin2Cat& c) { c.hcomp1.at(x, x) = -1; });
  add("hcomp1 dangling", "UnitOrAssoc", {x, x}, [&](Fin2Cat& c) { c.hcomp1.at(x, x) = n1; });
  add("vcomp undefined", "HomCategory", {a, a}, [&](Fin2Cat& c) { c.vcomp.at(a, a) = -1; });
  add("vcomp dangling", "HomCategory", {a, a}, [&](Fin2Cat& c) { c.vcomp.at(a, a) = n2; });
  add("hcomp2 undefined", "Functoriality", {a, a}, [&](Fin2Cat& c) { c.hcomp2.at(a, a) = -1; });
  add("hcomp2 dangling", "Functoriality", {a, a}, [&](Fin2Cat& c) { c.hcomp2.at(a, a) = n2; });
  add("unit 1-cell dangling", "DanglingId", {0}, [&](Fin2Cat& c) { c.unit1[0] = n1; });
  add("identity 2-cell dangling", "DanglingId", {x}, [&](Fin2Cat& c) { c.id2[x] = n2; });
  add("2-cell source dangling", "DanglingId", {a}, [&](Fin2Cat& c) { c.src2[a] = n1; });
  add("1-cell target dangling", "DanglingId", {x}, [&](Fin2Cat& c) { c.tgt1[x] = n0; });
  return out;
}

}  // namespace mutation
