#include "torsorkit/report.hpp"

#include <algorithm>
#include <sstream>

namespace torsorkit {

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.pass, c.witness});
  for (const auto& n : other.notes_) notes_.push_back(prefix + n);
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; }));
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.pass) return &c;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!subject_.empty()) os << "subject: " << subject_ << '\n';
  for (const auto& c : checks_) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.pass && !c.witness.empty()) os << " -- " << c.witness;
    os << '\n';
  }
  for (const auto& n : notes_) os << "note: " << n << '\n';
  os << "verdict: " << (ok() ? "PASS" : "FAIL") << " (" << passed() << '/' << checks_.size()
     << " checks)\n";
  return os.str();
}

Check identity_check(std::string name, const LinearMap& lhs, const LinearMap& rhs,
                     const LegLabels& source_labels, const LegLabels& target_labels) {
  const auto m = first_mismatch(lhs, rhs);
  if (!m) return {std::move(name), true, {}};
  std::ostringstream os;
  os << "at " << describe_index(m->source_index, source_labels) << ", coordinate "
     << describe_index(m->target_index, target_labels) << ": lhs=" << m->lhs.to_string()
     << " rhs=" << m->rhs.to_string();
  return {std::move(name), false, os.str()};
}

}  // namespace torsorkit
