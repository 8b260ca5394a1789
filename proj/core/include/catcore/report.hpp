#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace catcore {

struct Violation {
  std::string tag;
  std::vector<int> cells;
  std::string detail;

  bool operator==(const Violation&) const = default;
  bool operator<(const Violation& o) const;
};

// Outcome of an exhaustive axiom scan. Keeps at most `cap` violations but
// counts all of them.
class ValidationReport {
 public:
  static constexpr size_t kDefaultCap = 100;

  explicit ValidationReport(size_t cap = kDefaultCap) : cap_(cap) {}

  bool pass() const { return total_ == 0; }
  size_t total() const { return total_; }
  size_t checked() const { return checked_; }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string tag, std::vector<int> cells, std::string detail = {});
  void count_check(size_t n = 1) { checked_ += n; }
  // Appends violations from another report, prefixing tags when `scope` is set.
  void merge(const ValidationReport& other, const std::string& scope = {});
  bool has_tag(const std::string& tag) const;
  void sort();
  std::string summary() const;

 private:
  size_t cap_;
  size_t total_ = 0;
  size_t checked_ = 0;
  std::vector<Violation> violations_;
};

}  // namespace catcore
