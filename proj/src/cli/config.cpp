#include "dcq/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace dcq::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError("'" + key + "' expects an integer, got '" + v + "'");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("'" + key + "' expects true or false, got '" + v + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
  if (out.empty()) throw ConfigError("'" + key + "' expects a comma-separated list");
  return out;
}

std::string one_of(const std::string& key, const std::string& v, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (v == a) return v;
  std::string msg = "'" + key + "' must be one of:";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw ConfigError(msg + " (got '" + v + "')");
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "k",         "a2",     "x",         "y",          "e",     "A",         "alpha", "convention", "unit",
      "spec",      "kind",   "calibrate", "grid-min",   "grid-max", "grid-points", "resolution", "fourier-n",
      "nodes",     "chi",    "chi1",      "chi2",       "V",     "particle",  "only",  "format",     "out"};
  return keys;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "k") c.k = to_int(key, v);
  else if (key == "a2") c.a2 = to_double(key, v);
  else if (key == "x") c.x = to_list(key, v);
  else if (key == "y") c.y = to_list(key, v);
  else if (key == "e") c.e = to_double(key, v);
  else if (key == "A") c.A = to_double(key, v);
  else if (key == "alpha") {
    c.alpha = to_double(key, v);
    c.alpha_set = true;
  } else if (key == "convention") c.convention = one_of(key, v, {"reduced", "full"});
  else if (key == "unit") {
    c.unit = one_of(key, v, {"radians", "degrees"});
    c.unit_set = true;
  }
  else if (key == "spec") c.spec = v;
  else if (key == "kind") c.kind = one_of(key, v, {"upper", "cutoff"});
  else if (key == "calibrate") c.calibrate = to_bool(key, v);
  else if (key == "grid-min") c.grid_min = to_double(key, v);
  else if (key == "grid-max") c.grid_max = to_double(key, v);
  else if (key == "grid-points") c.grid_points = to_int(key, v);
  else if (key == "resolution") c.resolution = to_double(key, v);
  else if (key == "fourier-n") c.fourier_n = to_int(key, v);
  else if (key == "nodes") c.nodes = to_int(key, v);
  else if (key == "chi") c.chi = to_double(key, v);
  else if (key == "chi1") c.chi1 = to_double(key, v);
  else if (key == "chi2") c.chi2 = to_double(key, v);
  else if (key == "V") c.V = to_double(key, v);
  else if (key == "particle") c.particle = to_int(key, v);
  else if (key == "only") c.only = v;
  else if (key == "format") c.format = one_of(key, v, {"json", "csv", "text"});
  else if (key == "out") c.out = v;
  else throw ConfigError("unknown setting '" + key + "'");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    try {
      apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

bounds::ParamPoint resolve_point(const RunConfig& cfg, const bounds::ParamPoint& fallback) {
  bounds::ParamPoint p = fallback;
  p.k = cfg.k;
  if (cfg.x) p.x = *cfg.x;
  if (cfg.y) p.y = *cfg.y;
  p.a2 = cfg.a2;
  p.e = cfg.e;
  p.A = cfg.A;
  p.alpha = cfg.alpha;
  p.convention = bounds::parse_convention(cfg.convention);
  p.unit = bounds::parse_angle_unit(cfg.unit);
  return p;
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j = {{"command", c.command},
                      {"k", c.k},
                      {"a2", c.a2},
                      {"e", c.e},
                      {"A", c.A},
                      {"alpha", c.alpha},
                      {"convention", c.convention},
                      {"unit", c.unit},
                      {"spec", c.spec},
                      {"kind", c.kind},
                      {"calibrate", c.calibrate},
                      {"grid", {{"min", c.grid_min}, {"max", c.grid_max}, {"points", c.grid_points}, {"resolution", c.resolution}}},
                      {"fourier", {{"N", c.fourier_n}, {"nodes", c.nodes}}},
                      {"energy", {{"chi", c.chi}, {"chi1", c.chi1}, {"chi2", c.chi2}, {"V", c.V}, {"particle", c.particle}}},
                      {"only", c.only},
                      {"format", c.format}};
  j["x"] = c.x ? nlohmann::json(*c.x) : nlohmann::json(nullptr);
  j["y"] = c.y ? nlohmann::json(*c.y) : nlohmann::json(nullptr);
  return j;
}

}  // namespace dcq::cli
