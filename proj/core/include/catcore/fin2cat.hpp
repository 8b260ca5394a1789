#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catcore/fincat.hpp"
#include "catcore/group.hpp"
#include "catcore/report.hpp"
#include "catcore/table.hpp"

namespace catcore {

// Finite strict 2-category. 0-cells are 0..n0-1; 1-cells and 2-cells carry
// global ids. hcomp1(x, y) is x∘y for y: A→B, x: B→C; vcomp(b, a) is the
// vertical composite b·a with a applied first; hcomp2(b, a) lies over
// hcomp1(src(b), src(a)).
class Fin2Cat {
 public:
  std::string name;
  int n0 = 0;
  std::vector<std::string> names0, names1, names2;
  std::vector<int> src1, tgt1;
  std::vector<int> src2, tgt2;
  std::vector<int> unit1;
  std::vector<int> id2;
  Table vcomp;
  Table hcomp1;
  Table hcomp2;

  int num0() const { return n0; }
  int num1() const { return static_cast<int>(src1.size()); }
  int num2() const { return static_cast<int>(src2.size()); }

  // Partial operations: kNone when an argument is kNone, out of range, or the
  // pair is not composable.
  int h1(int x, int y) const;
  int h2(int b, int a) const;
  int v(int b, int a) const;
  // Right-nested horizontal composite x1∘x2∘...∘xn.
  int h1(std::initializer_list<int> xs) const;
  int h2(std::initializer_list<int> xs) const;
  // v({c, b, a}) = c·b·a.
  int v(std::initializer_list<int> xs) const;
  int id(int x) const { return x >= 0 && x < num1() ? id2[x] : kNone; }
  int unit(int a) const { return a >= 0 && a < n0 ? unit1[a] : kNone; }
  // Vertical inverse of a 2-cell, or kNone. Requires finalize().
  int inv2(int a) const { return a >= 0 && a < num2() ? inv2_[a] : kNone; }
  bool invertible2(int a) const { return inv2(a) != kNone; }

  // 1-cells A→B and 2-cells x⇒y, ascending. Require finalize().
  const std::vector<int>& hom1(int a, int b) const;
  const std::vector<int>& hom2(int x, int y) const;

  // Builds the hom and inverse indices from the tables.
  void finalize();
  // Table equality; names are ignored.
  bool same_tables(const Fin2Cat& o) const;

  std::string name1(int x) const;
  std::string name2(int a) const;

 private:
  std::vector<std::vector<int>> hom1_;
  std::unordered_map<long long, std::vector<int>> hom2_;
  std::vector<int> inv2_;
};

struct Cell1Ref {
  int src = kNone;
  int tgt = kNone;
  int id = kNone;
  bool operator==(const Cell1Ref&) const = default;
};

struct Cell2Ref {
  int src = kNone;
  int tgt = kNone;
  int from = kNone;
  int to = kNone;
  int id = kNone;
  bool operator==(const Cell2Ref&) const = default;
};

Cell1Ref cell1(const Fin2Cat& b, int x);
Cell2Ref cell2(const Fin2Cat& b, int a);

// Table lookups; throw NotComposable on mismatched endpoints.
Cell1Ref hcompose(const Fin2Cat& b, const Cell1Ref& x, const Cell1Ref& y);
Cell2Ref vcompose(const Fin2Cat& b, const Cell2Ref& beta, const Cell2Ref& alpha);
Cell2Ref hcompose2(const Fin2Cat& b, const Cell2Ref& beta, const Cell2Ref& alpha);

// Strict inverse: Y with X∘Y = I and Y∘X = I, searched over the whole hom.
std::optional<Cell1Ref> find_inverse_1cell(const Fin2Cat& b, const Cell1Ref& x);
int find_inverse_1cell(const Fin2Cat& b, int x);

FinCat hom_category(const Fin2Cat& b, int src, int tgt);

ValidationReport validate_2category(const Fin2Cat& b);

Fin2Cat delooping(const FinGroup& g);
Fin2Cat unit_2cat();
Fin2Cat op_2category(const Fin2Cat& b);
// Two 0-cells with a single non-identity 1-cell 0 → 1.
Fin2Cat arrow_2cat();
// One 0-cell, 1-cells from G, 2-cells (g, a): g ⇒ g with a in Z/n; both
// compositions add the Z/n labels.
Fin2Cat two_group_2cat(const FinGroup& g, int n);
// One 0-cell, one 1-cell, 2-cells {id, p} with p·p = p∘p = p.
Fin2Cat idempotent_2cat();

}  // namespace catcore
