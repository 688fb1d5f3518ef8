#include "ioi/fusion/attention.hpp"

#include <algorithm>
#include <stdexcept>

namespace ioi {

AttentionTimer update_timers(const AttentionTimer& timer, const PersonTrack& track,
                             Timestamp now, const FusionConfig& config) {
  if (now < timer.last_update) {
    throw std::invalid_argument("update_timers: timestamp regression");
  }
  const double dt = now - timer.last_update;
  AttentionTimer out = timer;
  out.last_update = now;

  if (track.frontal_face) {
    if (out.last_frontal >= 0.0) {
      // In-streak frame (or a tolerated-gap resume): accrue the frame time.
      if (out.phase == AttentionPhase::Accumulating) {
        out.t1_elapsed = std::min(out.t1_elapsed + dt, config.delta_t1);
      } else {
        out.t2_elapsed += dt;
      }
    }
    // A first frontal observation only anchors the streak.
    out.last_frontal = now;
  } else if (out.last_frontal >= 0.0 &&
             now - out.last_frontal <= config.max_face_gap + kTimerEpsilon) {
    // detector flicker: hold
  } else {
    out.t1_elapsed = 0.0;
    out.t2_elapsed = 0.0;
    out.phase = AttentionPhase::Accumulating;
    out.last_frontal = -1.0;
  }
  return out;
}

bool z_v1(const AttentionTimer& timer, const FusionConfig& config) {
  return timer.t1_elapsed >= config.delta_t1 - kTimerEpsilon;
}

bool z_v2(const AttentionTimer& timer, const FusionConfig& config) {
  if (timer.phase != AttentionPhase::VisualAttention) {
    throw std::logic_error("z_v2: timer is not in the VisualAttention phase");
  }
  return timer.t2_elapsed >= config.delta_t2 - kTimerEpsilon;
}

bool z_a(bool s, bool f, bool h) { return s && f && h; }

void AttentionTracker::observe(const std::vector<PersonTrack>& tracks, Timestamp now,
                               const FusionConfig& config) {
  for (const PersonTrack& track : tracks) {
    auto it = timers_.find(track.track_id);
    if (it == timers_.end()) {
      AttentionTimer fresh;
      fresh.track_id = track.track_id;
      fresh.last_update = now;
      fresh.last_frontal = track.frontal_face ? now : -1.0;
      timers_.emplace(track.track_id, fresh);
    } else {
      it->second = update_timers(it->second, track, now, config);
    }
  }

  // Tracks absent this frame: hold within the gap, drop beyond it.
  for (auto it = timers_.begin(); it != timers_.end();) {
    const bool present = std::any_of(tracks.begin(), tracks.end(), [&](const PersonTrack& t) {
      return t.track_id == it->first;
    });
    if (present) {
      ++it;
      continue;
    }
    if (it->second.last_frontal < 0.0 ||
        now - it->second.last_frontal > config.max_face_gap + kTimerEpsilon) {
      it = timers_.erase(it);
    } else {
      it->second.last_update = now;
      ++it;
    }
  }
}

void AttentionTracker::enter_visual_attention(int track_id, Timestamp now) {
  auto it = timers_.find(track_id);
  if (it == timers_.end()) return;
  it->second.phase = AttentionPhase::VisualAttention;
  it->second.t2_elapsed = 0.0;
  it->second.last_update = now;
}

void AttentionTracker::reset(int track_id) {
  auto it = timers_.find(track_id);
  if (it == timers_.end()) return;
  it->second.t1_elapsed = 0.0;
  it->second.t2_elapsed = 0.0;
  it->second.phase = AttentionPhase::Accumulating;
}

const AttentionTimer* AttentionTracker::find(int track_id) const {
  auto it = timers_.find(track_id);
  return it == timers_.end() ? nullptr : &it->second;
}

std::vector<AttentionTimer> AttentionTracker::snapshot() const {
  std::vector<AttentionTimer> out;
  out.reserve(timers_.size());
  for (const auto& [id, timer] : timers_) out.push_back(timer);
  return out;
}

}  // namespace ioi
