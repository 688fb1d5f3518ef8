#pragma once

#include <map>
#include <vector>

#include "ioi/config.hpp"
#include "ioi/types.hpp"

namespace ioi {

enum class AttentionPhase { Accumulating, VisualAttention };

/// Per-track gaze timers. t1 accumulates frontal-face time toward the
/// visual-attention entry; t2 runs only after the state machine moves this
/// track into visual attention. Sub-threshold face dropouts (<= max_face_gap)
/// hold the timers instead of resetting them.
struct AttentionTimer {
  int track_id = 0;
  double t1_elapsed = 0.0;
  double t2_elapsed = 0.0;
  AttentionPhase phase = AttentionPhase::Accumulating;
  Timestamp last_frontal = -1.0;  // < 0 until the first frontal frame
  Timestamp last_update = 0.0;
};

// Threshold comparisons tolerate this much accumulated frame jitter so that
// "frontal for exactly delta_t1 seconds" fires on the expected frame.
constexpr double kTimerEpsilon = 1e-9;

/// Advances a timer by one observation of its track. The first frontal frame
/// of a streak anchors it at zero elapsed; later frontal frames accrue onto
/// the active timer (t1 while Accumulating, t2 in VisualAttention, t1 clamped
/// at delta_t1). Non-frontal frames within max_face_gap of the last frontal
/// sighting hold, longer gaps reset to zero/Accumulating.
/// Throws std::invalid_argument if now precedes the previous update.
AttentionTimer update_timers(const AttentionTimer& timer, const PersonTrack& track,
                             Timestamp now, const FusionConfig& config);

/// 1 iff t1 has reached delta_t1 (boundary inclusive).
bool z_v1(const AttentionTimer& timer, const FusionConfig& config);

/// 1 iff t2 has reached delta_t2. Only defined in the VisualAttention phase;
/// throws std::logic_error otherwise.
bool z_v2(const AttentionTimer& timer, const FusionConfig& config);

/// The audio-vision gate: 1 iff a sound source is detected (s), the
/// associated person faces the robot (f), and that person is tracked (h).
bool z_a(bool s, bool f, bool h);

/// Frame-synchronous registry of the per-track timers. Single writer; the
/// snapshot it hands out is an immutable copy.
class AttentionTracker {
 public:
  /// Updates timers for the tracks present this frame. Absent tracks hold
  /// through max_face_gap and are dropped after it.
  void observe(const std::vector<PersonTrack>& tracks, Timestamp now,
               const FusionConfig& config);

  /// Called when the state machine moves track_id into visual attention;
  /// t2 restarts from zero.
  void enter_visual_attention(int track_id, Timestamp now);

  /// Re-arms a track after an IoI event: full dwell required again.
  void reset(int track_id);

  const AttentionTimer* find(int track_id) const;
  std::vector<AttentionTimer> snapshot() const;  // sorted by track_id

 private:
  std::map<int, AttentionTimer> timers_;
};

}  // namespace ioi
