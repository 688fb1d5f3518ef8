#include "ioi/sim/pipeline.hpp"

#include <cmath>

#include "ioi/doa/music.hpp"
#include "ioi/fusion/association.hpp"
#include "ioi/fusion/attention.hpp"
#include "ioi/fusion/state_machine.hpp"
#include "ioi/sim/synth.hpp"

namespace ioi::sim {

RunResult run_scenario(const Scenario& scenario, const FusionConfig& config) {
  config.validate();
  const unsigned long long seed = scenario.seed.value_or(config.seed);
  const double fp = config.frame_period;
  const long n_frames = long(std::floor(scenario.duration / fp + 1e-9));

  doa::DoaEngine engine(config.array, config.doa);
  AttentionTracker tracker;
  IoIStateMachine machine;
  RunResult result;

  for (long i = 0; i < n_frames; ++i) {
    const Timestamp t = double(i) * fp;

    FramePercepts percepts;
    percepts.timestamp = t;
    percepts.tracks = synthesize_tracks(scenario, t, config.facing_threshold);

    const Eigen::MatrixXd audio = synthesize_audio(scenario, config, t, fp, seed, i);
    auto estimates = engine.process(audio, t);
    if (!estimates.empty()) {
      percepts.sound = estimates.front();  // strongest peak drives fusion
      percepts.association = match_speaker(percepts.tracks, *percepts.sound, config);
    }

    tracker.observe(percepts.tracks, t, config);

    for (const PersonTrack& track : percepts.tracks) {
      const AttentionTimer* timer = tracker.find(track.track_id);
      TrackGates gates;
      gates.track_id = track.track_id;
      if (timer != nullptr) {
        gates.z_v1 = z_v1(*timer, config);
        gates.visual_phase = timer->phase == AttentionPhase::VisualAttention;
        gates.z_v2 = gates.visual_phase && z_v2(*timer, config);
      }
      percepts.gates.push_back(gates);
    }

    percepts.s = percepts.sound.has_value();
    if (percepts.association && percepts.association->matched) {
      percepts.h = true;
      for (const PersonTrack& track : percepts.tracks) {
        if (track.track_id == *percepts.association->matched) {
          percepts.f = track.frontal_face;
        }
      }
    }

    const auto outcome = machine.step(percepts, config);
    if (outcome.entered_visual_dwell) {
      tracker.enter_visual_attention(*outcome.state.attending_track, t);
    }
    if (outcome.event) {
      result.events.push_back(*outcome.event);
      tracker.reset(outcome.event->track_id);  // full dwell required again
    }
    result.trace.push_back({t, outcome.state.kind, outcome.state.attending_track});
  }
  return result;
}

}  // namespace ioi::sim
