#include "ioi/fusion/association.hpp"

#include <stdexcept>

namespace ioi {

AssociationResult match_speaker(const std::vector<PersonTrack>& tracks,
                                const SoundSourceEstimate& sound,
                                const FusionConfig& config) {
  AssociationResult result;

  const PersonTrack* best = nullptr;
  double best_dot = 0.0;
  for (const PersonTrack& track : tracks) {
    const double norm = track.position.norm();
    if (!(norm > 0.0)) {
      throw std::invalid_argument("match_speaker: track position has zero norm");
    }
    const double dot = (track.position / norm).dot(sound.direction.unit);
    if (best == nullptr || dot > best_dot ||
        (dot == best_dot && track.track_id < best->track_id)) {
      best = &track;
      best_dot = dot;
    }
  }
  if (best == nullptr) return result;  // no tracks, no match

  const double angle = angle_between(direction_from_vector(best->position),
                                     sound.direction);
  if (angle > config.delta_l) return result;  // rejected

  result.matched = best->track_id;
  result.angle_error_deg = angle;
  return result;
}

}  // namespace ioi
