#pragma once

#include <optional>
#include <vector>

#include "ioi/config.hpp"
#include "ioi/fusion/association.hpp"
#include "ioi/fusion/attention.hpp"
#include "ioi/types.hpp"

namespace ioi {

enum class StateKind { Monitoring, VocalAttention, VisualAttention, IoI };

const char* to_string(StateKind kind);

/// How the current attention episode was entered. The vocal path confirms
/// the speaker's frontal face one frame after association; the visual path
/// dwells on the t2 timer.
enum class AttentionPath { None, Vocal, Visual };

/// Machine state. attending_track is empty in Monitoring; in VocalAttention
/// it is set once association has succeeded, and it is always set in
/// VisualAttention and IoI.
struct IoIState {
  StateKind kind = StateKind::Monitoring;
  std::optional<int> attending_track;
  AttentionPath path = AttentionPath::None;
};

/// Gate values for one track this frame, derived from its attention timer.
struct TrackGates {
  int track_id = 0;
  bool z_v1 = false;
  bool z_v2 = false;
  bool visual_phase = false;  // timer is measuring t2
};

/// Everything the state machine consumes for one frame. association may be
/// present only when sound is; s/f/h are the audio-vision gate inputs for
/// the current association (f and h refer to the associated track).
struct FramePercepts {
  Timestamp timestamp = 0.0;
  std::vector<PersonTrack> tracks;
  std::optional<SoundSourceEstimate> sound;
  std::optional<AssociationResult> association;
  std::vector<TrackGates> gates;  // sorted by track_id
  bool s = false;
  bool f = false;
  bool h = false;
};

/// z_v: 1 iff both visual-attention stages have fired.
bool z_v(bool z_v1, bool z_v2);

/// z_IoI: 1 iff either detection path fired.
bool z_IoI(bool z_a, bool z_v);

/// The four-state transition model. One transition per frame, evaluated in
/// a fixed priority order; sound outranks the visual path when both could
/// fire. IoI is occupied for exactly one frame, then the machine re-arms.
/// A new attention episode starts on a sound ONSET (a source appearing after
/// a silent frame); one sustained utterance is one episode, not a retrigger
/// per frame.
class IoIStateMachine {
 public:
  struct StepOutcome {
    IoIState state;
    std::optional<IoIEvent> event;
    /// Set when the machine entered visual attention on the visual path this
    /// frame; the caller restarts that track's t2 timer.
    bool entered_visual_dwell = false;
  };

  const IoIState& state() const { return state_; }

  /// Advances one frame. Timestamps must strictly increase across calls;
  /// regression throws std::invalid_argument.
  StepOutcome step(const FramePercepts& percepts, const FusionConfig& config);

 private:
  void enter_monitoring();
  void enter_vocal(const FramePercepts& percepts);
  void enter_visual(int track_id, AttentionPath path);
  IoIEvent enter_ioi(IoIEventKind kind, Timestamp now);

  IoIState state_;
  std::vector<StateKind> visited_;  // since last Monitoring
  std::optional<Timestamp> last_timestamp_;
  bool prev_sound_ = false;
};

}  // namespace ioi
