#pragma once

#include <optional>
#include <vector>

#include "ioi/config.hpp"
#include "ioi/types.hpp"

namespace ioi {

/// Outcome of speaker association. angle_error is present iff matched, and
/// never exceeds delta_l.
struct AssociationResult {
  std::optional<int> matched;
  std::optional<double> angle_error_deg;
};

/// Picks the tracked person whose bearing best agrees with the sound
/// direction: argmax over tracks of <X_i/|X_i|, S>, rejected when the winner
/// is more than delta_l degrees off. Ties break to the lowest track_id. An
/// empty track list is no match, not an error; a zero-norm position is.
AssociationResult match_speaker(const std::vector<PersonTrack>& tracks,
                                const SoundSourceEstimate& sound,
                                const FusionConfig& config);

}  // namespace ioi
