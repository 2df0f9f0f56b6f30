#ifndef BLENDSEM_CONFIG_HPP
#define BLENDSEM_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "blendsem/indicator.hpp"
#include "blendsem/limiter.hpp"
#include "blendsem/rhs.hpp"
#include "blendsem/types.hpp"

namespace blendsem {

enum class Experiment { khi, sedov, custom };

struct TimeConfig {
  Scalar cfl = 0.5;
  Scalar t_end = 1.0;
  long max_steps = 1000000000;
  int dt_halving_max = 5;
};

struct OutputConfig {
  Scalar sample_interval = 0.01;
  Scalar snapshot_interval = 0.0;  // 0 disables periodic snapshots
  std::string dir = "out";
};

struct RunConfig {
  Experiment experiment = Experiment::custom;
  int elements_x = 16;
  int elements_y = 16;
  Scalar x0 = -1.0, x1 = 1.0;
  Scalar y0 = -1.0, y1 = 1.0;
  int degree = 3;
  GasModel gas;
  FluxKind surface_flux = FluxKind::Rusanov;
  VolumeForm volume_form = VolumeForm::standard;
  IndicatorConfig indicator;
  LimiterConfig limiter;
  TimeConfig time;
  OutputConfig output;
  // uniform initial state for experiment = custom
  Scalar custom_rho = 1.0, custom_v1 = 0.0, custom_v2 = 0.0, custom_p = 1.0;
  unsigned long seed = 0;  // reserved, not consumed by the physics
};

// Flat `section.key = value` lines, '#' comments. Rejects unknown keys and
// malformed lines; all errors are ConfigError naming the offending key.
std::map<std::string, std::string> parse_config_text(const std::string& text);

// Overlays BLENDSEM_<SECTION>_<KEY> environment variables onto the map.
void apply_env_overrides(std::map<std::string, std::string>& kv);

// Overlays "section.key=value" strings (CLI --set) onto the map.
void apply_set_overrides(std::map<std::string, std::string>& kv,
                         const std::vector<std::string>& sets);

// Typed conversion + validation of the merged key-value map.
RunConfig make_run_config(const std::map<std::string, std::string>& kv);

// File, then environment, then --set, in increasing precedence.
RunConfig load_config(const std::string& path, const std::vector<std::string>& sets);

}  // namespace blendsem

#endif
