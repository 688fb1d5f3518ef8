#include "ioi/io/event_log.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ioi::io {
namespace {

std::string format_time(Timestamp t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", t);
  return buf;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("event log line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string format_event_line(const IoIEvent& event) {
  std::string out = format_time(event.timestamp);
  out += ',';
  out += to_string(event.kind);
  out += ',';
  out += std::to_string(event.track_id);
  out += ',';
  out += event.state_path;
  return out;
}

std::string format_event_log(const std::vector<IoIEvent>& events) {
  std::string out;
  for (const IoIEvent& e : events) {
    out += format_event_line(e);
    out += '\n';
  }
  return out;
}

std::string format_trace_line(const TraceEntry& entry) {
  std::string out = format_time(entry.timestamp);
  out += ',';
  out += to_string(entry.state);
  out += ',';
  out += entry.attending_track ? std::to_string(*entry.attending_track) : "-";
  return out;
}

std::string format_trace(const std::vector<TraceEntry>& trace) {
  std::string out;
  for (const TraceEntry& e : trace) {
    out += format_trace_line(e);
    out += '\n';
  }
  return out;
}

std::vector<IoIEvent> parse_event_log(std::istream& in) {
  std::vector<IoIEvent> events;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.empty() || raw[0] == '#') continue;

    std::stringstream fields(raw);
    std::string time_text, kind_text, id_text, path_text;
    if (!std::getline(fields, time_text, ',') || !std::getline(fields, kind_text, ',') ||
        !std::getline(fields, id_text, ',')) {
      fail(line, "expected 'timestamp,kind,track_id,state_path'");
    }
    std::getline(fields, path_text);  // state_path may be empty

    IoIEvent event;
    try {
      event.timestamp = std::stod(time_text);
      event.track_id = std::stoi(id_text);
    } catch (const std::exception&) {
      fail(line, "bad number in '" + raw + "'");
    }
    if (kind_text == "AudioVision") event.kind = IoIEventKind::AudioVision;
    else if (kind_text == "VisionOnly") event.kind = IoIEventKind::VisionOnly;
    else fail(line, "unknown event kind '" + kind_text + "'");
    event.state_path = path_text;
    events.push_back(event);
  }
  return events;
}

std::vector<IoIEvent> parse_event_log_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("event log: cannot open '" + path + "'");
  return parse_event_log(in);
}

}  // namespace ioi::io
