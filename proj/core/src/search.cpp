#include "catcore/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "catcore/errors.hpp"

namespace catcore {

int Csp::add_var(DomainFn domain) {
  domains_.push_back(std::move(domain));
  checks_at_.emplace_back();
  return num_vars() - 1;
}

int Csp::add_var(std::vector<int> fixed_domain) {
  return add_var([d = std::move(fixed_domain)](const Assignment&) { return d; });
}

void Csp::add_constraint(const std::vector<int>& vars, CheckFn check) {
  int last = -1;
  for (int v : vars) last = std::max(last, v);
  if (last < 0) last = 0;
  if (last >= num_vars()) throw Error("constraint refers to an undeclared variable");
  checks_at_[last].push_back(std::move(check));
}

namespace {

struct Runner {
  const std::vector<Csp::DomainFn>& domains;
  const std::vector<std::vector<Csp::CheckFn>>& checks;
  std::atomic<size_t>& nodes;
  size_t budget;
  std::vector<Csp::Assignment> out;
  Csp::Assignment cur;

  bool ok_at(int i) const {
    for (const auto& c : checks[i])
      if (!c(cur)) return false;
    return true;
  }

  void tick() {
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
      throw SearchBudgetExceeded("search budget exhausted");
  }

  void rec(int i) {
    const int n = static_cast<int>(domains.size());
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v : domains[i](cur)) {
      tick();
      cur[i] = v;
      if (ok_at(i)) rec(i + 1);
    }
    cur[i] = -1;
  }
};

}  // namespace

std::vector<Csp::Assignment> Csp::solve(const SearchOptions& opt) const {
  const int n = num_vars();
  std::atomic<size_t> nodes{0};
  if (n == 0) {
    bool ok = true;
    for (const auto& c : checks_at_.empty() ? std::vector<CheckFn>{} : checks_at_[0])
      ok = ok && c({});
    return ok ? std::vector<Assignment>{Assignment{}} : std::vector<Assignment>{};
  }
  const std::vector<int> first = domains_[0](Assignment(n, -1));
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(first.size())));

  std::vector<std::vector<Assignment>> per_branch(first.size());
  auto run_branch = [&](size_t k) {
    Runner r{domains_, checks_at_, nodes, opt.budget, {}, Assignment(n, -1)};
    r.tick();
    r.cur[0] = first[k];
    if (r.ok_at(0)) r.rec(1);
    per_branch[k] = std::move(r.out);
  };

  if (jobs == 1) {
    for (size_t k = 0; k < first.size(); ++k) run_branch(k);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (size_t k; (k = next.fetch_add(1)) < first.size();) run_branch(k);
        } catch (...) {
          errors[t] = std::current_exception();
          next.store(first.size());
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<Assignment> all;
  for (auto& b : per_branch)
    for (auto& a : b) all.push_back(std::move(a));
  return all;
}

}  // namespace catcore
