#pragma once

#include <vector>

#include "catcore/fincat.hpp"
#include "catcore/report.hpp"
#include "catcore/table.hpp"

namespace catcore {

// Strict monoidal structure stored as tables over a finite category.
struct MonoidalCat {
  FinCat cat;
  Table tensor_obj;
  Table tensor_mor;
  int unit = kNone;

  int num_objects() const { return cat.num_objects; }
  int num_morphisms() const { return cat.num_morphisms(); }
};

// Strict associativity and unit on objects and morphisms, functoriality of
// the tensor (identities and interchange), and typing of the tables.
ValidationReport validate_monoidal(const MonoidalCat& m);

// Braiding table c(X, Y): X⊗Y → Y⊗X; checks naturality, invertibility and
// both hexagons in their strict form.
ValidationReport validate_braiding(const MonoidalCat& m, const Table& braid);

}  // namespace catcore
