#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace boardwalk::harness {

/// Discrepancy classes. Each observed discrepancy belongs to exactly one.
enum class ErrorCategory { crash, api, move, ending, effect, board, turn_order };

inline constexpr std::array<ErrorCategory, 7> kAllCategories{
    ErrorCategory::crash,  ErrorCategory::api,   ErrorCategory::move,      ErrorCategory::ending,
    ErrorCategory::effect, ErrorCategory::board, ErrorCategory::turn_order};

std::string_view to_string(ErrorCategory category);

struct Evidence {
  std::string source;  // trace name or "seed N"
  int step = 0;
  std::string expected;
  std::string observed;
};

enum class Verdict { perfect, erroneous, unplayable };
std::string_view to_string(Verdict verdict);

/// Per-category binary flags with the evidence behind them. A playthrough
/// is one trace replay or one differential seed; it counts as complete
/// unless a crash or protocol error cut it short.
class ComplianceReport {
 public:
  void record(ErrorCategory category, Evidence evidence);
  void add_playthrough(bool completed);
  void merge(const ComplianceReport& other);

  bool flag(ErrorCategory category) const { return !evidence(category).empty(); }
  const std::vector<Evidence>& evidence(ErrorCategory category) const {
    return evidence_[static_cast<std::size_t>(category)];
  }
  int flag_count() const;
  int discrepancies() const;
  int playthroughs() const { return playthroughs_; }
  int completed_playthroughs() const { return completed_; }
  Verdict verdict() const;

  /// {"verdict", "discrepancies", "playthroughs", "completed_playthroughs",
  ///  "categories": [{"category", "flag", "evidence": [...]}, ...]}
  nlohmann::json to_json() const;
  std::string summary_table() const;

 private:
  std::array<std::vector<Evidence>, kAllCategories.size()> evidence_;
  int playthroughs_ = 0;
  int completed_ = 0;
};

}  // namespace boardwalk::harness
