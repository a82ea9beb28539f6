#include "rookbraid/report.hpp"

#include <algorithm>
#include <sstream>

namespace rookbraid {

void Report::add(std::string name, bool passed, std::string detail) {
  outcomes_.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other) {
  outcomes_.insert(outcomes_.end(), other.outcomes_.begin(),
                   other.outcomes_.end());
}

bool Report::ok() const {
  return std::all_of(outcomes_.begin(), outcomes_.end(),
                     [](const CheckOutcome& o) { return o.passed; });
}

void Report::require(ErrorCode code) const {
  for (const auto& o : outcomes_) {
    if (!o.passed) {
      throw Error(code, o.name + (o.detail.empty() ? "" : ": " + o.detail));
    }
  }
}

std::string Report::render() const {
  std::ostringstream out;
  for (const auto& o : outcomes_) {
    out << (o.passed ? "PASS " : "FAIL ") << o.name;
    if (!o.passed && !o.detail.empty()) out << ": " << o.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace rookbraid
