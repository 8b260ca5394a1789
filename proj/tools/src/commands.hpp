#pragma once

#include <map>
#include <string>
#include <vector>

#include "catcore/format.hpp"
#include "catcore/report.hpp"
#include "catcore/search.hpp"

namespace cli {

struct Caps {
  int max_group = 0;  // 0 keeps the library default per command
  int max_hom1 = 0;
  size_t budget = catcore::SearchOptions{}.budget;
  int jobs = 1;
};

struct InputRef {
  std::string name;
  std::string kind;
  std::string origin;
};

// Outcome of one command, before rendering.
struct Outcome {
  std::string command;
  std::vector<InputRef> inputs;
  std::map<std::string, long long> counts;
  catcore::ValidationReport report;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Outcome run_validate(const catcore::Workspace& ws, const std::string& name, const Caps& caps);
Outcome run_strictify(const catcore::Workspace& ws, const std::string& b, const std::string& act,
                      const Caps& caps);
Outcome run_equivariantize(const catcore::Workspace& ws, const std::string& b,
                           const std::string& act, const Caps& caps);
Outcome run_zg(const catcore::Workspace& ws, const std::string& b, const std::string& act,
               const Caps& caps);
Outcome run_center(const catcore::Workspace& ws, const std::string& b, const Caps& caps);
Outcome run_center_theorem(const catcore::Workspace& ws, const std::string& b,
                           const std::string& act, const Caps& caps);

}  // namespace cli
