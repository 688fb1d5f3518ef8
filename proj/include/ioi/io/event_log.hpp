#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ioi/fusion/state_machine.hpp"
#include "ioi/types.hpp"

namespace ioi::io {

/// One per-frame state sample.
struct TraceEntry {
  Timestamp timestamp = 0.0;
  StateKind state = StateKind::Monitoring;
  std::optional<int> attending_track;
};

/// `timestamp,kind,track_id,state_path`, timestamp fixed to millisecond
/// precision so identical runs serialize identically.
std::string format_event_line(const IoIEvent& event);
std::string format_event_log(const std::vector<IoIEvent>& events);

/// `timestamp,state,attending_track` with '-' for no attending track.
std::string format_trace_line(const TraceEntry& entry);
std::string format_trace(const std::vector<TraceEntry>& trace);

/// Parses an event log ('#' comments and blank lines ignored). Throws
/// std::runtime_error with the line number on malformed input.
std::vector<IoIEvent> parse_event_log(std::istream& in);
std::vector<IoIEvent> parse_event_log_file(const std::string& path);

}  // namespace ioi::io
