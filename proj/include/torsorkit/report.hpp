#pragma once

#include <string>
#include <vector>

#include "torsorkit/linear_map.hpp"

namespace torsorkit {

/// Per-leg basis labels used to localise witnesses.
using LegLabels = std::vector<std::vector<std::string>>;

struct Check {
  std::string name;
  bool pass = true;
  /// Empty on success; on failure the basis tuple and both evaluated sides.
  std::string witness;
};

/// Ordered list of named checks with a summary verdict.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  void add(Check check) { checks_.push_back(std::move(check)); }
  void add(std::string name, bool pass, std::string witness = {}) {
    checks_.push_back({std::move(name), pass, std::move(witness)});
  }
  /// Appends all checks of another report, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});
  void note(std::string line) { notes_.push_back(std::move(line)); }

  const std::string& subject() const noexcept { return subject_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  bool ok() const;
  std::size_t passed() const;
  const Check* find(const std::string& name) const;
  const Check* first_failure() const;

  /// Plain text, one check per line, then notes, then the verdict.
  std::string to_text() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
};

/// Compares two maps of equal shape; on failure the witness names the source
/// basis tuple, the first differing target coordinate and both values.
Check identity_check(std::string name, const LinearMap& lhs, const LinearMap& rhs,
                     const LegLabels& source_labels, const LegLabels& target_labels);

}  // namespace torsorkit
