#include <sstream>

#include "calc/report.hpp"

namespace calc {

double StatsReport::closed_ratio() const {
  if (stats.cells_created == 0) return 0;
  return static_cast<double>(stats.cells_closed) / static_cast<double>(stats.cells_created);
}

double StatsReport::relative_max_closed_depth() const {
  if (stats.max_depth == 0) return 0;
  return static_cast<double>(stats.max_closed_depth) / static_cast<double>(stats.max_depth);
}

nlohmann::json StatsReport::to_json() const {
  return nlohmann::json{{"instance", instance},
                        {"variant", variant},
                        {"verdict", verdict},
                        {"time_ms", time_ms},
                        {"samples_per_level", stats.samples_per_level},
                        {"cells_created", stats.cells_created},
                        {"cells_closed", stats.cells_closed},
                        {"closed_ratio", closed_ratio()},
                        {"max_depth", stats.max_depth},
                        {"max_closed_depth", stats.max_closed_depth},
                        {"relative_max_closed_depth", relative_max_closed_depth()},
                        {"characterization_calls", stats.characterization_calls}};
}

StatsReport StatsReport::from_json(const nlohmann::json& j) {
  StatsReport r;
  j.at("instance").get_to(r.instance);
  j.at("variant").get_to(r.variant);
  j.at("verdict").get_to(r.verdict);
  j.at("time_ms").get_to(r.time_ms);
  j.at("samples_per_level").get_to(r.stats.samples_per_level);
  j.at("cells_created").get_to(r.stats.cells_created);
  j.at("cells_closed").get_to(r.stats.cells_closed);
  j.at("max_depth").get_to(r.stats.max_depth);
  j.at("max_closed_depth").get_to(r.stats.max_closed_depth);
  j.at("characterization_calls").get_to(r.stats.characterization_calls);
  return r;
}

std::string StatsReport::csv_header() {
  return "instance,variant,verdict,time_ms,samples_per_level,cells_created,cells_closed,closed_ratio,"
         "max_depth,max_closed_depth,relative_max_closed_depth,characterization_calls";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string StatsReport::csv_row() const {
  std::ostringstream os;
  os << csv_field(instance) << ',' << variant << ',' << verdict << ',' << time_ms << ',';
  for (std::size_t i = 0; i < stats.samples_per_level.size(); ++i)
    os << (i ? ";" : "") << stats.samples_per_level[i];
  os << ',' << stats.cells_created << ',' << stats.cells_closed << ',' << closed_ratio() << ','
     << stats.max_depth << ',' << stats.max_closed_depth << ',' << relative_max_closed_depth() << ','
     << stats.characterization_calls;
  return os.str();
}

}  // namespace calc
