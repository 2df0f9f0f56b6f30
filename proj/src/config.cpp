#include "blendsem/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "blendsem/errors.hpp"

namespace blendsem {

namespace {

const char* const kKnownKeys[] = {
    "run.experiment",        "run.seed",
    "mesh.elements_x",       "mesh.elements_y",
    "mesh.x0",               "mesh.x1",
    "mesh.y0",               "mesh.y1",
    "solver.degree",         "solver.surface_flux",
    "solver.volume_form",    "gas.gamma",
    "indicator.enabled",     "indicator.alpha_min",
    "indicator.alpha_max",   "indicator.variable",
    "indicator.per_stage",   "limiter.enabled",
    "limiter.beta",          "limiter.newton_max_iter",
    "limiter.newton_tol",    "time.cfl",
    "time.t_end",            "time.max_steps",
    "time.dt_halving_max",   "output.sample_interval",
    "output.snapshot_interval", "output.dir",
    "custom.rho",            "custom.v1",
    "custom.v2",             "custom.p",
};

bool known_key(const std::string& key) {
  for (const char* k : kKnownKeys) {
    if (key == k) return true;
  }
  return false;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& key, const std::string& value) {
  std::string v = value;
  std::transform(v.begin(), v.end(), v.begin(), ::tolower);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": expected a boolean, got '" + value + "'");
}

Scalar parse_scalar(const std::string& key, const std::string& value) {
  size_t pos = 0;
  Scalar x = 0.0;
  try {
    x = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
  if (pos != value.size()) {
    throw ConfigError(key + ": trailing characters in number '" + value + "'");
  }
  return x;
}

long parse_integer(const std::string& key, const std::string& value) {
  size_t pos = 0;
  long x = 0;
  try {
    x = std::stol(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
  if (pos != value.size()) {
    throw ConfigError(key + ": trailing characters in integer '" + value + "'");
  }
  return x;
}

std::string env_name(const std::string& key) {
  std::string name = "BLENDSEM_" + key;
  for (char& c : name) {
    if (c == '.') c = '_';
    c = static_cast<char>(::toupper(static_cast<unsigned char>(c)));
  }
  return name;
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'section.key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!known_key(key)) {
      throw ConfigError("unknown config key '" + key + "' (line " +
                        std::to_string(lineno) + ")");
    }
    kv[key] = value;
  }
  return kv;
}

void apply_env_overrides(std::map<std::string, std::string>& kv) {
  for (const char* key : kKnownKeys) {
    if (const char* v = std::getenv(env_name(key).c_str())) {
      kv[key] = v;
    }
  }
}

void apply_set_overrides(std::map<std::string, std::string>& kv,
                         const std::vector<std::string>& sets) {
  for (const std::string& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--set expects section.key=value, got '" + s + "'");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (!known_key(key)) {
      throw ConfigError("unknown config key '" + key + "' in --set");
    }
    kv[key] = value;
  }
}

RunConfig make_run_config(const std::map<std::string, std::string>& kv) {
  RunConfig cfg;

  auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return (it == kv.end()) ? nullptr : &it->second;
  };

  if (const auto* v = get("run.experiment")) {
    if (*v == "khi") {
      cfg.experiment = Experiment::khi;
    } else if (*v == "sedov") {
      cfg.experiment = Experiment::sedov;
    } else if (*v == "custom") {
      cfg.experiment = Experiment::custom;
    } else {
      throw ConfigError("run.experiment: expected khi, sedov, or custom, got '" + *v + "'");
    }
  }

  // Experiment-specific default domains; explicit bounds below must agree.
  if (cfg.experiment == Experiment::khi) {
    cfg.x0 = cfg.y0 = -1.0;
    cfg.x1 = cfg.y1 = 1.0;
  } else if (cfg.experiment == Experiment::sedov) {
    cfg.x0 = cfg.y0 = -1.5;
    cfg.x1 = cfg.y1 = 1.5;
  }

  if (const auto* v = get("run.seed")) cfg.seed = static_cast<unsigned long>(parse_integer("run.seed", *v));
  if (const auto* v = get("mesh.elements_x")) cfg.elements_x = static_cast<int>(parse_integer("mesh.elements_x", *v));
  if (const auto* v = get("mesh.elements_y")) cfg.elements_y = static_cast<int>(parse_integer("mesh.elements_y", *v));
  if (const auto* v = get("mesh.x0")) cfg.x0 = parse_scalar("mesh.x0", *v);
  if (const auto* v = get("mesh.x1")) cfg.x1 = parse_scalar("mesh.x1", *v);
  if (const auto* v = get("mesh.y0")) cfg.y0 = parse_scalar("mesh.y0", *v);
  if (const auto* v = get("mesh.y1")) cfg.y1 = parse_scalar("mesh.y1", *v);
  if (const auto* v = get("solver.degree")) cfg.degree = static_cast<int>(parse_integer("solver.degree", *v));
  if (const auto* v = get("gas.gamma")) cfg.gas.gamma = parse_scalar("gas.gamma", *v);

  if (const auto* v = get("solver.surface_flux")) {
    if (*v == "rusanov") {
      cfg.surface_flux = FluxKind::Rusanov;
    } else if (*v == "hlle") {
      cfg.surface_flux = FluxKind::HLLE;
    } else {
      throw ConfigError("solver.surface_flux: expected rusanov or hlle, got '" + *v + "'");
    }
  }
  if (const auto* v = get("solver.volume_form")) {
    if (*v == "standard") {
      cfg.volume_form = VolumeForm::standard;
    } else if (*v == "split") {
      cfg.volume_form = VolumeForm::split;
    } else {
      throw ConfigError("solver.volume_form: expected standard or split, got '" + *v + "'");
    }
  }

  if (const auto* v = get("indicator.enabled")) cfg.indicator.enabled = parse_bool("indicator.enabled", *v);
  if (const auto* v = get("indicator.alpha_min")) cfg.indicator.alpha_min = parse_scalar("indicator.alpha_min", *v);
  if (const auto* v = get("indicator.alpha_max")) cfg.indicator.alpha_max = parse_scalar("indicator.alpha_max", *v);
  if (const auto* v = get("indicator.per_stage")) cfg.indicator.per_stage = parse_bool("indicator.per_stage", *v);
  if (const auto* v = get("indicator.variable")) {
    if (*v != "pressure") {
      throw ConfigError("indicator.variable: only 'pressure' is supported, got '" + *v + "'");
    }
  }

  if (const auto* v = get("limiter.enabled")) cfg.limiter.enabled = parse_bool("limiter.enabled", *v);
  if (const auto* v = get("limiter.beta")) cfg.limiter.beta = parse_scalar("limiter.beta", *v);
  if (const auto* v = get("limiter.newton_max_iter")) cfg.limiter.newton_max_iter = static_cast<int>(parse_integer("limiter.newton_max_iter", *v));
  if (const auto* v = get("limiter.newton_tol")) cfg.limiter.newton_tol = parse_scalar("limiter.newton_tol", *v);

  if (const auto* v = get("time.cfl")) cfg.time.cfl = parse_scalar("time.cfl", *v);
  if (const auto* v = get("time.t_end")) cfg.time.t_end = parse_scalar("time.t_end", *v);
  if (const auto* v = get("time.max_steps")) cfg.time.max_steps = parse_integer("time.max_steps", *v);
  if (const auto* v = get("time.dt_halving_max")) cfg.time.dt_halving_max = static_cast<int>(parse_integer("time.dt_halving_max", *v));

  if (const auto* v = get("output.sample_interval")) cfg.output.sample_interval = parse_scalar("output.sample_interval", *v);
  if (const auto* v = get("output.snapshot_interval")) cfg.output.snapshot_interval = parse_scalar("output.snapshot_interval", *v);
  if (const auto* v = get("output.dir")) cfg.output.dir = *v;

  if (const auto* v = get("custom.rho")) cfg.custom_rho = parse_scalar("custom.rho", *v);
  if (const auto* v = get("custom.v1")) cfg.custom_v1 = parse_scalar("custom.v1", *v);
  if (const auto* v = get("custom.v2")) cfg.custom_v2 = parse_scalar("custom.v2", *v);
  if (const auto* v = get("custom.p")) cfg.custom_p = parse_scalar("custom.p", *v);

  // --- validation -----------------------------------------------------------
  if (cfg.elements_x < 2) throw ConfigError("mesh.elements_x: must be >= 2");
  if (cfg.elements_y < 2) throw ConfigError("mesh.elements_y: must be >= 2");
  if (!(cfg.x1 > cfg.x0)) throw ConfigError("mesh.x1: must exceed mesh.x0");
  if (!(cfg.y1 > cfg.y0)) throw ConfigError("mesh.y1: must exceed mesh.y0");
  if (cfg.degree < 1) throw ConfigError("solver.degree: must be >= 1");
  if (!(cfg.gas.gamma > 1.0)) throw ConfigError("gas.gamma: must exceed 1");
  if (cfg.indicator.alpha_min < 0.0) throw ConfigError("indicator.alpha_min: must be >= 0");
  if (!(cfg.indicator.alpha_max > 0.0 && cfg.indicator.alpha_max <= 1.0)) {
    throw ConfigError("indicator.alpha_max: must lie in (0, 1]");
  }
  if (!(cfg.limiter.beta > 0.0 && cfg.limiter.beta <= 1.0)) {
    throw ConfigError("limiter.beta: must lie in (0, 1]");
  }
  if (cfg.limiter.newton_max_iter < 1) throw ConfigError("limiter.newton_max_iter: must be >= 1");
  if (!(cfg.limiter.newton_tol > 0.0)) throw ConfigError("limiter.newton_tol: must be > 0");
  if (!(cfg.time.cfl > 0.0)) throw ConfigError("time.cfl: must be > 0");
  if (cfg.time.t_end < 0.0) throw ConfigError("time.t_end: must be >= 0");
  if (cfg.time.max_steps < 0) throw ConfigError("time.max_steps: must be >= 0");
  if (cfg.time.dt_halving_max < 0) throw ConfigError("time.dt_halving_max: must be >= 0");
  if (!(cfg.output.sample_interval > 0.0)) throw ConfigError("output.sample_interval: must be > 0");
  if (cfg.output.snapshot_interval < 0.0) throw ConfigError("output.snapshot_interval: must be >= 0");

  if (cfg.experiment == Experiment::khi &&
      (cfg.x0 != -1.0 || cfg.x1 != 1.0 || cfg.y0 != -1.0 || cfg.y1 != 1.0)) {
    throw ConfigError("mesh bounds: the khi experiment requires the domain [-1,1]x[-1,1]");
  }
  if (cfg.experiment == Experiment::sedov &&
      (cfg.x0 != -1.5 || cfg.x1 != 1.5 || cfg.y0 != -1.5 || cfg.y1 != 1.5)) {
    throw ConfigError("mesh bounds: the sedov experiment requires the domain [-1.5,1.5]x[-1.5,1.5]");
  }
  if (!(cfg.custom_rho > 0.0)) throw ConfigError("custom.rho: must be > 0");
  if (!(cfg.custom_p > 0.0)) throw ConfigError("custom.p: must be > 0");

  return cfg;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& sets) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  auto kv = parse_config_text(buf.str());
  apply_env_overrides(kv);
  apply_set_overrides(kv, sets);
  return make_run_config(kv);
}

}  // namespace blendsem
