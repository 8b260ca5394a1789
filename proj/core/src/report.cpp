#include "catcore/report.hpp"

#include <algorithm>
#include <tuple>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace catcore {

bool Violation::operator<(const Violation& o) const {
  return std::tie(tag, cells, detail) < std::tie(o.tag, o.cells, o.detail);
}

void ValidationReport::add(std::string tag, std::vector<int> cells, std::string detail) {
  ++total_;
  if (violations_.size() < cap_) {
    violations_.push_back({std::move(tag), std::move(cells), std::move(detail)});
  }
}

void ValidationReport::merge(const ValidationReport& other, const std::string& scope) {
  checked_ += other.checked_;
  for (const auto& v : other.violations_) {
    if (violations_.size() < cap_) {
      violations_.push_back(
          {v.tag, v.cells, scope.empty() ? v.detail : fmt::format("{}: {}", scope, v.detail)});
    }
  }
  total_ += other.total_;
}

bool ValidationReport::has_tag(const std::string& tag) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.tag == tag; });
}

void ValidationReport::sort() { std::sort(violations_.begin(), violations_.end()); }

std::string ValidationReport::summary() const {
  if (pass()) return fmt::format("pass ({} instances checked)", checked_);
  std::string s = fmt::format("fail: {} violation(s)", total_);
  for (const auto& v : violations_) {
    s += fmt::format("\n  [{}] cells={} {}", v.tag, v.cells, v.detail);
  }
  return s;
}

}  // namespace catcore
