#pragma once

#include <memory>
#include <string>
#include <vector>

#include "catcore/fin2cat.hpp"
#include "catcore/gaction.hpp"
#include "catcore/group.hpp"

namespace fixtures {

using namespace catcore;

inline std::vector<FinGroup> groups() {
  return {trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four(),
          symmetric_group3()};
}

inline Fin2CatPtr sigma(const FinGroup& g) { return std::make_shared<const Fin2Cat>(delooping(g)); }

inline Fin2CatPtr shared(Fin2Cat b) { return std::make_shared<const Fin2Cat>(std::move(b)); }

struct ActionCase {
  std::string name;
  ActionPtr action;
};

inline ActionPtr ptr(GroupAction2 a) { return std::make_shared<const GroupAction2>(std::move(a)); }

// (B, action) pairs used across the test suites.
inline std::vector<ActionCase> action_cases() {
  const FinGroup c2 = cyclic_group(2);
  std::vector<ActionCase> out;
  out.push_back({"unit/trivial C2", ptr(trivial_action(c2, shared(unit_2cat())))});
  out.push_back({"SigmaC2/trivial C2", ptr(trivial_action(c2, sigma(c2)))});
  out.push_back({"SigmaC4/inversion", ptr(inversion_action(sigma(cyclic_group(4)), cyclic_group(4)))});
  out.push_back({"SigmaC3/inversion", ptr(inversion_action(sigma(cyclic_group(3)), cyclic_group(3)))});
  out.push_back({"SigmaC2/trivial C2xC2", ptr(trivial_action(klein_four(), sigma(c2)))});
  out.push_back({"idempotent/trivial C2", ptr(trivial_action(c2, shared(idempotent_2cat())))});
  out.push_back({"arrow/trivial C2", ptr(trivial_action(c2, shared(arrow_2cat())))});
  out.push_back({"B2C2/anomaly", ptr(anomaly_action(shared(two_group_2cat(trivial_group(), 2))))});
  return out;
}

// C2 acting on the 2-group of C2 with coefficients Z/2, F_s the identity
// with the cocycle compositor c(s, s) = (e, 1). F_s is not a 2-functor.
inline ActionPtr pseudo_functor_action() {
  const FinGroup c2 = cyclic_group(2);
  auto b = shared(two_group_2cat(c2, 2));
  auto id = std::make_shared<const PseudoFunctor>(identity_pseudofunctor(b));
  PseudoFunctor f = identity_pseudofunctor(b);
  f.comp.at(1, 1) = 1;
  return ptr(make_action(c2, b, {id, std::make_shared<const PseudoFunctor>(std::move(f))}));
}

}  // namespace fixtures
