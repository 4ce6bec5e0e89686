#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fence/closed_forms.hpp"
#include "fence/harness.hpp"
#include "fence/rank.hpp"
#include "fence/rowmotion.hpp"
#include "fence/shape.hpp"
#include "fence/tiling.hpp"

using namespace fence;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string join(const std::vector<mpz_class>& seq) {
  std::string out;
  for (const auto& c : seq) out += (out.empty() ? "" : " ") + c.get_str();
  return out;
}

const std::map<std::string, OutputFormat> kFormats = {
    {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank polynomials, shapes and rowmotion on fence posets"};
  app.require_subcommand(0, 1);
  bool list_checks = false;
  app.add_flag("--list-checks", list_checks, "List verification checks");

  std::string comp_text;
  bool circular = false, half_open = false;
  std::string format_name = "text", out_path;
  int jobs = 1, max_size = 10, max_param = 6;
  std::string checks_text;
  std::size_t orbit_index = 0;
  int table_number = 1;

  auto* rank = app.add_subcommand("rank", "Print the rank sequence and its shape");
  rank->add_option("composition", comp_text, "Parts, e.g. 2,1,1,3")->required();
  rank->add_flag("--circular", circular, "Use the circular fence");
  rank->add_flag("--half-open", half_open, "Allow a 0 first or last part");
  rank->add_option("--format", format_name)->check(CLI::IsMember({"text", "json"}));

  auto* classify = app.add_subcommand("classify", "Predicted and measured shape");
  classify->add_option("composition", comp_text)->required();
  classify->add_flag("--half-open", half_open);

  auto* orbs = app.add_subcommand("orbits", "Rowmotion orbits of the circular fence");
  orbs->add_option("composition", comp_text)->required();
  orbs->add_option("--format", format_name)->check(CLI::IsMember({"text", "json"}));

  auto* tiling = app.add_subcommand("tiling", "ASCII tiling of one orbit");
  tiling->add_option("composition", comp_text)->required();
  tiling->add_option("index", orbit_index, "Orbit index in (period, representative) order")->required();

  auto* verify = app.add_subcommand("verify", "Run verification checks; nonzero exit on a theorem violation");
  auto* scan = app.add_subcommand("scan", "Run the conjecture scans");
  for (auto* sub : {verify, scan}) {
    sub->add_option("--max-size", max_size)->check(CLI::PositiveNumber);
    sub->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", out_path);
    sub->add_option("--jobs", jobs, "Worker threads; 0 means all cores");
    sub->add_option("--max-param", max_param)->check(CLI::PositiveNumber);
  }
  verify->add_option("--checks", checks_text, "Comma-separated check names")->required();
  std::string kinds_text = "both";
  verify->add_option("--kinds", kinds_text)->check(CLI::IsMember({"fence", "circular", "both"}));

  auto* table = app.add_subcommand("table", "Closed-form table (1) or orbit census (2)");
  table->add_option("number", table_number)->check(CLI::IsMember({1, 2}));
  table->add_option("--max-param", max_param)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_checks) {
      for (const auto& c : available_checks()) std::cout << c.name << "  " << c.description << '\n';
      return 0;
    }
    if (*rank) {
      const Composition a = Composition::parse(comp_text, half_open);
      if (circular && !a.circular_ok()) throw std::invalid_argument("circular fences need an even number of parts");
      const RankPoly p = rank_poly(a, circular ? Kind::Circular : Kind::Fence);
      const auto seq = p.sequence();
      const ShapeClass shape = measured_shape(seq);
      if (format_name == "json") {
        nlohmann::json j{{"composition", a.to_string()},
                         {"kind", circular ? "circular" : "fence"},
                         {"rank", p},
                         {"shape", std::string(to_string(shape))}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << join(seq) << " | " << to_string(shape) << '\n';
      }
      return 0;
    }
    if (*classify) {
      const Composition a = Composition::parse(comp_text, half_open);
      const auto seq = rank_poly(a).sequence();
      const ShapeClass predicted = predict_shape(a);
      std::cout << "fence " << a << ": " << join(seq) << '\n'
                << "  predicted " << to_string(predicted) << ", measured " << to_string(measured_shape(seq))
                << (satisfies(seq, predicted) ? "" : "  VIOLATION") << '\n';
      if (a.circular_ok()) {
        const auto cseq = rank_poly(a, Kind::Circular).sequence();
        std::cout << "circular " << a << ": " << join(cseq) << '\n'
                  << "  measured " << to_string(measured_shape(cseq))
                  << (corollary_applies(a) ? ", unimodality criterion applies" : "") << '\n';
      }
      return 0;
    }
    if (*orbs) {
      const Composition a = Composition::parse(comp_text);
      const ZigzagPoset p = circular_fence(a);
      const auto os = orbits(p);
      nlohmann::json arr = nlohmann::json::array();
      std::ostringstream text;
      text << "index period M chi  per-row (b,w,r)\n";
      for (std::size_t i = 0; i < os.size(); ++i) {
        const OrbitStats st = orbit_stats(os[i], p);
        nlohmann::json rows = nlohmann::json::array();
        text << i << ' ' << st.period << ' ' << st.M << ' ' << st.chi << ' ';
        for (const auto& r : st.rows) {
          rows.push_back({{"b", r.b}, {"w", r.w}, {"r", r.r}});
          text << " (" << r.b << ',' << r.w << ',' << r.r << ')';
        }
        text << '\n';
        arr.push_back({{"composition", a.to_string()}, {"period", st.period}, {"M", st.M}, {"chi", st.chi},
                       {"per_row", rows}});
      }
      std::cout << (format_name == "json" ? arr.dump(2) + "\n" : text.str());
      return 0;
    }
    if (*tiling) {
      const Composition a = Composition::parse(comp_text);
      const auto os = orbits(circular_fence(a));
      if (orbit_index >= os.size())
        throw std::out_of_range("orbit index " + std::to_string(orbit_index) + " out of range (" +
                                std::to_string(os.size()) + " orbits)");
      std::cout << encode_tiling(os[orbit_index], a).render();
      return 0;
    }
    if (*verify || *scan) {
      CampaignConfig cfg;
      cfg.max_size = max_size;
      cfg.max_param = max_param;
      cfg.jobs = jobs;
      cfg.output = out_path;
      cfg.format = kFormats.at(format_name);
      cfg.kinds = kinds_text == "fence" ? KindSelect::Fence
                  : kinds_text == "circular" ? KindSelect::Circular
                                             : KindSelect::Both;
      cfg.checks = *verify ? split_list(checks_text) : std::vector<std::string>{"circular-unimodality", "dominance"};
      const auto reports = run_campaign(cfg);
      emit(format_reports(reports, cfg.format), cfg.output);
      return campaign_ok(reports) ? 0 : 1;
    }
    if (*table) {
      std::cout << (table_number == 1 ? table1_summary(max_param) : table2_summary());
      return 0;
    }
    std::cout << app.help();
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
