#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fence {

enum class Severity { TheoremViolation, ConjectureCounterexample, PaperTypoConfirmed };

std::string_view to_string(Severity s);

/// One examined case. A record with pass == false is a finding of the given
/// severity.
struct CheckRecord {
  std::string composition;
  int size = 0;
  std::string kind;  // fence | circular
  std::string check;
  std::string expected;
  std::string measured;
  bool pass = true;
  Severity severity = Severity::TheoremViolation;
};

using Finding = CheckRecord;

struct Report {
  std::string check;
  std::vector<CheckRecord> records;
  std::map<std::string, long> tallies;
  std::vector<std::string> notes;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void count(const std::string& key, long by = 1) { tallies[key] += by; }
  std::vector<Finding> findings() const;
  std::size_t failures(Severity s) const;
  std::size_t failures() const;
  /// No failing theorem-violation record.
  bool theorem_ok() const { return failures(Severity::TheoremViolation) == 0; }
  void merge(Report other);
};

void to_json(nlohmann::json& j, const CheckRecord& r);
void to_json(nlohmann::json& j, const Report& r);

}  // namespace fence
