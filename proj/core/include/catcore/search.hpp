#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace catcore {

struct SearchOptions {
  // Maximum number of partial assignments explored before giving up.
  size_t budget = 1'000'000;
  // Worker threads; the first variable's domain is split between them.
  int jobs = 1;
};

// Backtracking solver over integer variables assigned in index order. A
// variable's domain may depend on the values of earlier variables; a
// constraint is evaluated as soon as its highest variable is assigned.
class Csp {
 public:
  using Assignment = std::vector<int>;
  using DomainFn = std::function<std::vector<int>(const Assignment&)>;
  using CheckFn = std::function<bool(const Assignment&)>;

  int add_var(DomainFn domain);
  int add_var(std::vector<int> fixed_domain);
  // `vars` lists every variable the check reads.
  void add_constraint(const std::vector<int>& vars, CheckFn check);

  int num_vars() const { return static_cast<int>(domains_.size()); }

  // All solutions in lexicographic order of domain positions. Throws
  // SearchBudgetExceeded when the budget runs out.
  std::vector<Assignment> solve(const SearchOptions& opt = {}) const;

 private:
  std::vector<DomainFn> domains_;
  std::vector<std::vector<CheckFn>> checks_at_;
};

}  // namespace catcore
