#include "fence/report.hpp"

#include <algorithm>

namespace fence {

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::TheoremViolation: return "theorem-violation";
    case Severity::ConjectureCounterexample: return "conjecture-counterexample";
    case Severity::PaperTypoConfirmed: return "paper-typo-confirmed";
  }
  return "?";
}

std::vector<Finding> Report::findings() const {
  std::vector<Finding> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [](const CheckRecord& r) { return !r.pass; });
  return out;
}

std::size_t Report::failures(Severity s) const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) {
    return !r.pass && r.severity == s;
  }));
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

void Report::merge(Report other) {
  if (check.empty()) check = other.check;
  records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                 std::make_move_iterator(other.records.end()));
  for (const auto& [k, v] : other.tallies) tallies[k] += v;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

void to_json(nlohmann::json& j, const CheckRecord& r) {
  j = nlohmann::json{{"composition", r.composition}, {"size", r.size},       {"kind", r.kind},
                     {"check", r.check},             {"expected", r.expected}, {"measured", r.measured},
                     {"pass", r.pass}};
  if (!r.pass) j["severity"] = std::string(to_string(r.severity));
}

void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"check", r.check},
                     {"examined", r.records.size()},
                     {"tallies", r.tallies},
                     {"notes", r.notes},
                     {"findings", r.findings()}};
}

}  // namespace fence
