#pragma once

#include <string>
#include <vector>

#include "rookbraid/error.hpp"

namespace rookbraid {

/// One named pass/fail line of a verification run.
struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered collection of check outcomes. Verification operations return a
/// Report rather than throwing so that every line can be printed.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  void add(std::string name, bool passed, std::string detail = {});
  void merge(const Report& other);

  bool ok() const;
  const std::string& title() const { return title_; }
  const std::vector<CheckOutcome>& outcomes() const { return outcomes_; }

  /// Throws Error(code) naming the first failing check, if any.
  void require(ErrorCode code = ErrorCode::CheckFailed) const;

  /// "PASS name" / "FAIL name: detail", one per line.
  std::string render() const;

 private:
  std::string title_;
  std::vector<CheckOutcome> outcomes_;
};

}  // namespace rookbraid
