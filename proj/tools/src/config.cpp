#include "config.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace oz::cli {

namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(std::size_t line, const std::string &what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw ConfigParseError(msg.str());
}

double to_double(const std::string &key, const std::string &text) {
  double v = 0.0;
  const char *first = text.data();
  const char *last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ConfigParseError(key + ": '" + text + "' is not a number");
  return v;
}

long long to_integer(const std::string &key, const std::string &text) {
  long long v = 0;
  const char *first = text.data();
  const char *last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ConfigParseError(key + ": '" + text + "' is not an integer");
  return v;
}

std::size_t to_count(const std::string &key, const std::string &text) {
  const long long v = to_integer(key, text);
  if (v < 0) throw ConfigParseError(key + " must be non-negative");
  return static_cast<std::size_t>(v);
}

void apply_top(RunConfig &cfg, const std::string &key, const std::string &value) {
  if (key == "label")
    cfg.label = value;
  else if (key == "alpha_sq")
    cfg.alpha_sq = to_double(key, value);
  else if (key == "eta")
    cfg.eta = to_double(key, value);
  else if (key == "diameter")
    cfg.diameter = to_double(key, value);
  else if (key == "table")
    cfg.table_path = value;
  else
    throw ConfigParseError("unknown key '" + key + "'");
}

void apply_species(Species &s, const std::string &key, const std::string &value) {
  if (key == "sigma")
    s.diameter = to_double(key, value);
  else if (key == "rho")
    s.density = to_double(key, value);
  else if (key == "z")
    s.valence = static_cast<int>(to_integer(key, value));
  else
    throw ConfigParseError("unknown species key '" + key + "'");
}

void apply_sweep(SweepSpec &s, const std::string &key, const std::string &value) {
  if (key == "command")
    s.command = parse_command(value);
  else if (key == "variable")
    s.variable = value;
  else if (key == "start")
    s.start = to_double(key, value);
  else if (key == "stop")
    s.stop = to_double(key, value);
  else if (key == "steps")
    s.steps = to_count(key, value);
  else
    throw ConfigParseError("unknown sweep key '" + key + "'");
}

void apply_grid(GridSpec &g, const std::string &key, const std::string &value) {
  if (key == "n")
    g.n = to_count(key, value);
  else if (key == "dr")
    g.dr = to_double(key, value);
  else if (key == "tol")
    g.tol = to_double(key, value);
  else
    throw ConfigParseError("unknown grid key '" + key + "'");
}

std::string json_scalar(const nlohmann::json &v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  throw ConfigParseError("expected a string or number, got " + v.dump());
}

void require_object(const nlohmann::json &v, const std::string &what) {
  if (!v.is_object()) throw ConfigParseError(what + " must be an object");
}

} // namespace

Command parse_command(const std::string &name) {
  if (name == "eos") return Command::Eos;
  if (name == "mix") return Command::Mix;
  if (name == "msa") return Command::Msa;
  if (name == "oz-solve") return Command::OzSolve;
  if (name == "sweep") return Command::Sweep;
  throw ConfigParseError("unknown command '" + name + "'");
}

std::string command_name(Command c) {
  switch (c) {
  case Command::Eos: return "eos";
  case Command::Mix: return "mix";
  case Command::Msa: return "msa";
  case Command::OzSolve: return "oz-solve";
  case Command::Sweep: return "sweep";
  }
  return "?";
}

void parse_ini(std::istream &in, RunConfig &cfg) {
  enum class Section { Top, Species, Sweep, Grid } section = Section::Top;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find_first_of("#;");
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') fail_at(line, "unterminated section header");
      const std::string name = trim(text.substr(1, text.size() - 2));
      if (name == "species") {
        section = Section::Species;
        cfg.species.emplace_back();
      } else if (name == "sweep") {
        section = Section::Sweep;
        if (!cfg.sweep) cfg.sweep.emplace();
      } else if (name == "grid") {
        section = Section::Grid;
      } else {
        fail_at(line, "unknown section [" + name + "]");
      }
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string::npos) fail_at(line, "expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) fail_at(line, "empty key");
    if (value.empty()) fail_at(line, "empty value for '" + key + "'");
    try {
      switch (section) {
      case Section::Top: apply_top(cfg, key, value); break;
      case Section::Species: apply_species(cfg.species.back(), key, value); break;
      case Section::Sweep: apply_sweep(*cfg.sweep, key, value); break;
      case Section::Grid: apply_grid(cfg.grid, key, value); break;
      }
    } catch (const ConfigParseError &e) {
      fail_at(line, e.what());
    }
  }
}

void parse_json(std::istream &in, RunConfig &cfg) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ConfigParseError(std::string("invalid JSON: ") + e.what());
  }
  require_object(doc, "configuration");
  for (const auto &[key, value] : doc.items()) {
    if (key == "species") {
      if (!value.is_array()) throw ConfigParseError("species must be an array");
      for (const auto &entry : value) {
        require_object(entry, "species entry");
        Species s;
        for (const auto &[k, v] : entry.items()) apply_species(s, k, json_scalar(v));
        cfg.species.push_back(s);
      }
    } else if (key == "sweep") {
      require_object(value, "sweep");
      if (!cfg.sweep) cfg.sweep.emplace();
      for (const auto &[k, v] : value.items()) apply_sweep(*cfg.sweep, k, json_scalar(v));
    } else if (key == "grid") {
      require_object(value, "grid");
      for (const auto &[k, v] : value.items()) apply_grid(cfg.grid, k, json_scalar(v));
    } else {
      apply_top(cfg, key, json_scalar(value));
    }
  }
}

unsigned threads_from_environment() {
  const char *env = std::getenv("OZ_THERMO_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  const long long v = to_integer("OZ_THERMO_THREADS", trim(env));
  if (v < 1) throw ConfigParseError("OZ_THERMO_THREADS must be a positive integer");
  return static_cast<unsigned>(std::min<long long>(v, 1024));
}

} // namespace oz::cli
