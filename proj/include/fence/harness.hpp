#pragma once

#include <string>
#include <vector>

#include "fence/report.hpp"

namespace fence {

enum class KindSelect { Fence, Circular, Both };

enum class OutputFormat { Text, Json, Csv };

struct CampaignConfig {
  int max_size = 10;
  int max_param = 6;  // parameter bound for closed forms and the crown family
  KindSelect kinds = KindSelect::Both;
  std::vector<std::string> checks;
  int jobs = 1;
  std::string output;  // empty: stdout
  OutputFormat format = OutputFormat::Text;

  /// Throws std::invalid_argument on an empty check list, an unknown check or max_size < 1.
  void validate() const;
};

struct CheckInfo {
  std::string name;
  std::string description;
};

const std::vector<CheckInfo>& available_checks();
bool is_check(const std::string& name);

Report run_check(const std::string& name, const CampaignConfig& config);
std::vector<Report> run_campaign(const CampaignConfig& config);
bool campaign_ok(const std::vector<Report>& reports);

/// rank_poly against the brute-force oracle.
Report verify_oracle(int max_size, KindSelect kinds, int jobs = 1);
Report verify_method_identities_upto(int max_size, int jobs = 1);
Report verify_closed_forms(int max_param);
Report verify_crown(int max_a, int max_s);

/// Per-composition rowmotion checks over even-part compositions.
Report verify_tilings_upto(int max_size, int jobs = 1);
Report verify_homomesy_upto(int max_size, int jobs = 1);
Report verify_kappa_upto(int max_size, int jobs = 1);
Report verify_all_orbit_theorems();

/// Replacing a part t >= 3 by (t-2,1,1) never lowers a circular rank coefficient.
Report extremal_check(int max_size, int jobs = 1);
/// Pointwise comparison against 1^n, and against (n/k)^k within k parts.
Report dominance_scan(int max_size, int jobs = 1);

std::string format_text(const std::vector<Report>& reports);
std::string format_json(const std::vector<Report>& reports);
std::string format_csv(const std::vector<Report>& reports);
std::string format_reports(const std::vector<Report>& reports, OutputFormat format);

/// Closed forms against the DP, one line per member.
std::string table1_summary(int max_param);
/// Orbit census for each rowmotion family, one line per member.
std::string table2_summary();

}  // namespace fence
