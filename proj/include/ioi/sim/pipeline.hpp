#pragma once

#include <vector>

#include "ioi/config.hpp"
#include "ioi/io/event_log.hpp"
#include "ioi/sim/scenario.hpp"
#include "ioi/types.hpp"

namespace ioi::sim {

struct RunResult {
  std::vector<IoIEvent> events;
  std::vector<io::TraceEntry> trace;  // one entry per frame
};

/// Steps the full pipeline (track synthesis -> audio synthesis -> MUSIC ->
/// association -> attention timers -> state machine) at frame_period from 0
/// to the scenario duration. Deterministic given (scenario, config, seed);
/// a seed in the scenario [meta] section overrides config.seed.
RunResult run_scenario(const Scenario& scenario, const FusionConfig& config);

}  // namespace ioi::sim
