#include "boardwalk/harness/report.hpp"

#include <iomanip>
#include <sstream>

namespace boardwalk::harness {

std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::crash: return "crash";
    case ErrorCategory::api: return "api";
    case ErrorCategory::move: return "move";
    case ErrorCategory::ending: return "ending";
    case ErrorCategory::effect: return "effect";
    case ErrorCategory::board: return "board";
    case ErrorCategory::turn_order: return "turn_order";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::perfect: return "perfect";
    case Verdict::erroneous: return "erroneous";
    case Verdict::unplayable: return "unplayable";
  }
  return "?";
}

void ComplianceReport::record(ErrorCategory category, Evidence evidence) {
  evidence_[static_cast<std::size_t>(category)].push_back(std::move(evidence));
}

void ComplianceReport::add_playthrough(bool completed) {
  ++playthroughs_;
  if (completed) ++completed_;
}

void ComplianceReport::merge(const ComplianceReport& other) {
  for (std::size_t i = 0; i < evidence_.size(); ++i) {
    evidence_[i].insert(evidence_[i].end(), other.evidence_[i].begin(), other.evidence_[i].end());
  }
  playthroughs_ += other.playthroughs_;
  completed_ += other.completed_;
}

int ComplianceReport::flag_count() const {
  int n = 0;
  for (ErrorCategory c : kAllCategories) n += flag(c) ? 1 : 0;
  return n;
}

int ComplianceReport::discrepancies() const {
  int n = 0;
  for (const auto& list : evidence_) n += static_cast<int>(list.size());
  return n;
}

Verdict ComplianceReport::verdict() const {
  if (flag_count() == 0) return Verdict::perfect;
  const bool fatal = flag(ErrorCategory::crash) || flag(ErrorCategory::api);
  if (fatal && completed_ == 0) return Verdict::unplayable;
  return Verdict::erroneous;
}

nlohmann::json ComplianceReport::to_json() const {
  nlohmann::json categories = nlohmann::json::array();
  for (ErrorCategory c : kAllCategories) {
    nlohmann::json items = nlohmann::json::array();
    for (const Evidence& e : evidence(c)) {
      items.push_back({{"source", e.source},
                       {"step", e.step},
                       {"expected", e.expected},
                       {"observed", e.observed}});
    }
    categories.push_back({{"category", to_string(c)}, {"flag", flag(c)}, {"evidence", items}});
  }
  return {{"verdict", to_string(verdict())},
          {"discrepancies", discrepancies()},
          {"playthroughs", playthroughs_},
          {"completed_playthroughs", completed_},
          {"categories", categories}};
}

std::string ComplianceReport::summary_table() const {
  std::ostringstream out;
  out << std::left << std::setw(12) << "category" << std::setw(6) << "flag" << "count\n";
  for (ErrorCategory c : kAllCategories) {
    out << std::setw(12) << to_string(c) << std::setw(6) << (flag(c) ? "X" : "-")
        << evidence(c).size() << '\n';
  }
  out << "verdict: " << to_string(verdict()) << '\n';
  return out.str();
}

}  // namespace boardwalk::harness
