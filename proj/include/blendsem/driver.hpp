#ifndef BLENDSEM_DRIVER_HPP
#define BLENDSEM_DRIVER_HPP

#include <string>

#include "blendsem/config.hpp"

namespace blendsem {

struct RunResult {
  bool success = false;
  int exit_code = 2;  // 0 success, 2 solver abort
  long steps = 0;
  Scalar t = 0.0;
  Scalar final_entropy = 0.0;
  std::string abort_reason;

  // Populated on abort when a specific node triggered it.
  int abort_stage = -1;
  int abort_element = -1;
  int abort_node_i = -1;
  int abort_node_j = -1;
  std::string abort_quantity;
};

// Builds mesh and operators, initializes the configured experiment, advances
// to t_end (or max_steps) writing series.csv and snapshots into output.dir.
RunResult run(const RunConfig& cfg);

}  // namespace blendsem

#endif
