#include "korovkin/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace korovkin {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

double to_double(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw config_error("config: key '" + key + "': bad number '" + s + "'");
  }
}

long to_long(const std::string& s, const std::string& key) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw config_error("config: key '" + key + "': bad integer '" + s + "'");
  return v;
}

} // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  bool saw_family = false, saw_schedule = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw config_error("config line " + std::to_string(lineno) +
                         ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty())
      throw config_error("config line " + std::to_string(lineno) +
                         ": empty key or value");
    cfg.raw.emplace_back(key, value);

    if (key == "domain") {
      std::istringstream ds(value);
      std::string kind;
      ds >> kind;
      cfg.domain_kind = kind;
      if (kind == "interval") {
        if (!(ds >> cfg.interval_bounds[0] >> cfg.interval_bounds[1] >>
              cfg.grid_size))
          throw config_error("config: domain interval needs <lo> <hi> <count>");
      } else if (kind == "circle") {
        if (!(ds >> cfg.grid_size))
          throw config_error("config: domain circle needs <count>");
      } else if (kind == "box") {
        if (!(ds >> cfg.box_bounds[0][0] >> cfg.box_bounds[0][1] >>
              cfg.box_bounds[1][0] >> cfg.box_bounds[1][1] >>
              cfg.box_sizes[0] >> cfg.box_sizes[1]))
          throw config_error(
              "config: domain box needs <xlo> <xhi> <ylo> <yhi> <nx> <ny>");
      } else {
        throw config_error("config: unknown domain kind '" + kind + "'");
      }
      std::string extra;
      if (ds >> extra)
        throw config_error("config: trailing tokens in domain spec");
    } else if (key == "family") {
      cfg.family = value;
      saw_family = true;
    } else if (key == "phi") {
      cfg.phi = value;
    } else if (key == "distortion") {
      cfg.distortion = value;
    } else if (key == "limit") {
      cfg.limit = value;
    } else if (key == "schedule") {
      cfg.schedule.clear();
      for (const std::string& tok : split(value, ','))
        if (!tok.empty())
          cfg.schedule.push_back(static_cast<int>(to_long(tok, key)));
      if (cfg.schedule.empty())
        throw config_error("config: empty schedule");
      for (std::size_t i = 0; i + 1 < cfg.schedule.size(); ++i)
        if (cfg.schedule[i] >= cfg.schedule[i + 1])
          throw config_error("config: schedule must be strictly increasing");
      if (cfg.schedule.front() < 1)
        throw config_error("config: schedule entries must be >= 1");
      saw_schedule = true;
    } else if (key == "probes") {
      cfg.probes.clear();
      for (const std::string& tok : split(value, ','))
        if (!tok.empty()) cfg.probes.push_back(tok);
    } else if (key == "norm") {
      if (value != "sup" && value != "l1")
        throw config_error("config: norm must be sup or l1");
      cfg.norm = value;
    } else if (key == "tol") {
      cfg.tol = to_double(value, key);
    } else if (key == "hyp_tol") {
      cfg.hyp_tol = to_double(value, key);
    } else if (key == "axiom_tol") {
      cfg.axiom_tol = to_double(value, key);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(to_long(value, key));
    } else if (key == "alpha") {
      cfg.alpha = value;
    } else if (key == "gate") {
      if (value != "auto" && value != "trig")
        throw config_error("config: gate must be auto or trig");
      cfg.gate = value;
    } else if (key == "refinement") {
      cfg.refinement = static_cast<int>(to_long(value, key));
      if (cfg.refinement < 1)
        throw config_error("config: refinement must be >= 1");
    } else if (key == "resolution") {
      cfg.resolution = static_cast<int>(to_long(value, key));
      if (cfg.resolution < 2)
        throw config_error("config: resolution must be >= 2");
    } else {
      throw config_error("config: unknown key '" + key + "'");
    }
  }

  if (!saw_family) throw config_error("config: missing 'family'");
  if (!saw_schedule) throw config_error("config: missing 'schedule'");
  if (cfg.grid_size < 2) throw config_error("config: grid too small");
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

} // namespace korovkin
