#pragma once

#include <string>
#include <vector>

#include "catcore/table.hpp"

namespace catcore {

// Finite group on element ids 0..n-1 with a total multiplication table.
struct FinGroup {
  std::string name;
  std::vector<std::string> elements;
  Table mult;
  int unit = 0;
  std::vector<int> inv;

  int order() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return mult(a, b); }
  int mul(int a, int b, int c) const { return mult(mult(a, b), c); }
  int inverse(int a) const { return inv[a]; }
  int index_of(const std::string& element) const;

  bool operator==(const FinGroup& o) const {
    return elements == o.elements && mult == o.mult && unit == o.unit;
  }
};

// Checks associativity, the unit and inverses; throws NotAssociative, NoUnit or
// NoInverse naming a witness. `mult(a,b)` is the product a·b.
FinGroup make_fin_group(std::vector<std::string> elements, const Table& mult, int unit,
                        std::string name = {});

FinGroup trivial_group();
FinGroup cyclic_group(int n);
FinGroup direct_product(const FinGroup& a, const FinGroup& b);
FinGroup klein_four();
FinGroup symmetric_group3();

// Bijections phi of the element set with phi(ab) = phi(a)phi(b).
bool is_automorphism(const FinGroup& g, const std::vector<int>& phi);

}  // namespace catcore
