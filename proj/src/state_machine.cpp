#include "ioi/fusion/state_machine.hpp"

#include <algorithm>
#include <stdexcept>

namespace ioi {
namespace {

const PersonTrack* find_track(const FramePercepts& p, int track_id) {
  for (const PersonTrack& t : p.tracks) {
    if (t.track_id == track_id) return &t;
  }
  return nullptr;
}

const TrackGates* find_gates(const FramePercepts& p, int track_id) {
  for (const TrackGates& g : p.gates) {
    if (g.track_id == track_id) return &g;
  }
  return nullptr;
}

/// Lowest track_id whose z_v1 gate fired this frame.
const TrackGates* first_z_v1(const FramePercepts& p) {
  const TrackGates* best = nullptr;
  for (const TrackGates& g : p.gates) {
    if (g.z_v1 && (best == nullptr || g.track_id < best->track_id)) best = &g;
  }
  return best;
}

bool any_track_frontal(const FramePercepts& p) {
  return std::any_of(p.tracks.begin(), p.tracks.end(),
                     [](const PersonTrack& t) { return t.frontal_face; });
}

}  // namespace

const char* to_string(StateKind kind) {
  switch (kind) {
    case StateKind::Monitoring: return "Monitoring";
    case StateKind::VocalAttention: return "VocalAttention";
    case StateKind::VisualAttention: return "VisualAttention";
    case StateKind::IoI: return "IoI";
  }
  return "?";
}

bool z_v(bool z_v1, bool z_v2) { return z_v1 && z_v2; }

bool z_IoI(bool z_a, bool z_v) { return z_a || z_v; }

void IoIStateMachine::enter_monitoring() {
  state_ = IoIState{};
  visited_.clear();
}

void IoIStateMachine::enter_vocal(const FramePercepts& percepts) {
  state_.kind = StateKind::VocalAttention;
  state_.path = AttentionPath::Vocal;
  state_.attending_track.reset();
  if (percepts.association && percepts.association->matched) {
    state_.attending_track = percepts.association->matched;
  }
  visited_.push_back(StateKind::VocalAttention);
}

void IoIStateMachine::enter_visual(int track_id, AttentionPath path) {
  state_.kind = StateKind::VisualAttention;
  state_.path = path;
  state_.attending_track = track_id;
  visited_.push_back(StateKind::VisualAttention);
}

IoIEvent IoIStateMachine::enter_ioi(IoIEventKind kind, Timestamp now) {
  state_.kind = StateKind::IoI;
  visited_.push_back(StateKind::IoI);

  IoIEvent event;
  event.kind = kind;
  event.track_id = state_.attending_track.value();
  event.timestamp = now;
  for (std::size_t i = 0; i < visited_.size(); ++i) {
    if (i > 0) event.state_path += ';';
    event.state_path += to_string(visited_[i]);
  }
  return event;
}

IoIStateMachine::StepOutcome IoIStateMachine::step(const FramePercepts& percepts,
                                                   const FusionConfig& config) {
  if (last_timestamp_ && !(percepts.timestamp > *last_timestamp_)) {
    throw std::invalid_argument("step: timestamps must strictly increase");
  }
  last_timestamp_ = percepts.timestamp;
  if (percepts.association && !percepts.sound) {
    throw std::invalid_argument("step: association present without sound");
  }

  const bool sound_onset = percepts.sound.has_value() && !prev_sound_;
  prev_sound_ = percepts.sound.has_value();

  StepOutcome out;
  switch (state_.kind) {
    case StateKind::Monitoring: {
      if (sound_onset) {
        enter_vocal(percepts);
      } else if (config.enable_vision_path) {
        if (const TrackGates* g = first_z_v1(percepts)) {
          enter_visual(g->track_id, AttentionPath::Visual);
          out.entered_visual_dwell = true;
        }
      }
      break;
    }

    case StateKind::VocalAttention: {
      const bool assoc_ok =
          percepts.association && percepts.association->matched.has_value();
      if (!percepts.sound || !assoc_ok || !any_track_frontal(percepts)) {
        enter_monitoring();  // covers the TV/radio case
      } else {
        enter_visual(*percepts.association->matched, AttentionPath::Vocal);
      }
      break;
    }

    case StateKind::VisualAttention: {
      if (state_.path == AttentionPath::Vocal) {
        const PersonTrack* track = find_track(percepts, *state_.attending_track);
        if (track != nullptr && track->frontal_face) {
          out.event = enter_ioi(IoIEventKind::AudioVision, percepts.timestamp);
        } else {
          enter_monitoring();
        }
        break;
      }

      // Visual dwell. A newly detected sound associated to the attending
      // track goes through the audio-vision gate; one associated elsewhere
      // restarts vocal arbitration. Sustained or unmatched sound does not
      // interrupt the dwell.
      if (sound_onset && percepts.association && percepts.association->matched) {
        const int matched = *percepts.association->matched;
        if (matched != *state_.attending_track) {
          enter_vocal(percepts);
          break;
        }
        const PersonTrack* track = find_track(percepts, matched);
        if (z_a(true, track != nullptr && track->frontal_face, track != nullptr)) {
          out.event = enter_ioi(IoIEventKind::AudioVision, percepts.timestamp);
          break;
        }
      }
      const TrackGates* gates = find_gates(percepts, *state_.attending_track);
      if (gates == nullptr || !gates->visual_phase) {
        enter_monitoring();  // gaze broken or track lost
      } else if (gates->z_v2) {
        out.event = enter_ioi(IoIEventKind::VisionOnly, percepts.timestamp);
      }
      break;
    }

    case StateKind::IoI:
      enter_monitoring();  // single-frame occupancy, re-arm for the next event
      break;
  }

  out.state = state_;
  return out;
}

}  // namespace ioi
