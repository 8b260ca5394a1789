#pragma once

#include <vector>

#include "catcore/report.hpp"
#include "catcore/table.hpp"

namespace catcore {

// Finite category with morphism ids 0..m-1. compose(g, f) is g·f (f first),
// defined exactly when tgt(f) == src(g).
struct FinCat {
  int num_objects = 0;
  std::vector<int> src;
  std::vector<int> tgt;
  Table compose;
  std::vector<int> identity;

  int num_morphisms() const { return static_cast<int>(src.size()); }
  std::vector<int> hom(int a, int b) const;
  bool operator==(const FinCat&) const = default;
};

// Definedness, typing, identity laws and associativity, exhaustively.
ValidationReport validate_fincat(const FinCat& c);

}  // namespace catcore
