#include "ioi/sim/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ioi::sim {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double number(const std::string& text, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ScenarioParseError(line, "expected a number, got '" + text + "'");
  }
}

int integer(const std::string& text, int line) {
  const double v = number(text, line);
  if (v != std::floor(v)) throw ScenarioParseError(line, "expected an integer, got '" + text + "'");
  return int(v);
}

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

const ScenarioPerson* find_person(const Scenario& s, int id) {
  for (const auto& p : s.persons) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

void validate(Scenario& s, int last_line) {
  auto fail = [&](const std::string& what) { throw ScenarioParseError(last_line, what); };
  if (!(s.duration > 0.0)) fail("missing or non-positive duration");
  for (const auto& p : s.persons) {
    if (p.waypoints.empty()) fail("person " + std::to_string(p.id) + " has no waypoints");
  }
  for (const auto& sp : s.speech_intervals) {
    if (find_person(s, sp.person_id) == nullptr)
      fail("speech refers to unknown person " + std::to_string(sp.person_id));
    if (!(sp.t_start < sp.t_end)) fail("speech interval must have t_start < t_end");
    if (sp.t_start < 0.0 || sp.t_end > s.duration) fail("speech interval outside [0, duration]");
    if (!(sp.gain > 0.0)) fail("speech gain must be > 0");
  }
  for (const auto& nz : s.noise_sources) {
    if (!(nz.t_start < nz.t_end)) fail("noise interval must have t_start < t_end");
    if (nz.t_start < 0.0 || nz.t_end > s.duration) fail("noise interval outside [0, duration]");
    if (nz.position.norm() < 1e-9) fail("noise source cannot sit on the robot");
  }
  for (const auto& gt : s.ground_truth_ioi) {
    if (find_person(s, gt.person_id) == nullptr)
      fail("truth refers to unknown person " + std::to_string(gt.person_id));
    if (gt.t_onset < 0.0 || gt.t_onset > s.duration) fail("truth onset outside [0, duration]");
  }
}

}  // namespace

Scenario load_scenario(std::istream& in) {
  Scenario scenario;
  ScenarioPerson* current_person = nullptr;
  enum class Section { None, Meta, Person, Speech, Noise, Truth };
  Section section = Section::None;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') throw ScenarioParseError(line, "unterminated section header");
      const std::string name = trim(text.substr(1, text.size() - 2));
      if (name == "meta") section = Section::Meta;
      else if (name == "speech") section = Section::Speech;
      else if (name == "noise") section = Section::Noise;
      else if (name == "truth") section = Section::Truth;
      else if (name.rfind("person", 0) == 0) {
        const int id = integer(trim(name.substr(6)), line);
        if (find_person(scenario, id) != nullptr)
          throw ScenarioParseError(line, "duplicate person " + std::to_string(id));
        scenario.persons.push_back(ScenarioPerson{id, {}});
        current_person = &scenario.persons.back();
        section = Section::Person;
      } else {
        throw ScenarioParseError(line, "unknown section '" + name + "'");
      }
      continue;
    }

    switch (section) {
      case Section::None:
        throw ScenarioParseError(line, "content before any section header");

      case Section::Meta: {
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ScenarioParseError(line, "expected 'key = value'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key == "duration") scenario.duration = number(value, line);
        else if (key == "seed") scenario.seed = (unsigned long long)(number(value, line));
        else throw ScenarioParseError(line, "unknown meta key '" + key + "'");
        break;
      }

      case Section::Person: {
        const auto toks = tokens(text);
        if (toks.size() != 5 || toks[0] != "waypoint")
          throw ScenarioParseError(line, "expected 'waypoint t x y yaw'");
        Waypoint wp;
        wp.time = number(toks[1], line);
        wp.position = Eigen::Vector2d(number(toks[2], line), number(toks[3], line));
        wp.head_yaw_deg = number(toks[4], line);
        if (wp.position.norm() < 1e-9)
          throw ScenarioParseError(line, "waypoint coincides with the robot origin");
        if (!current_person->waypoints.empty() &&
            wp.time <= current_person->waypoints.back().time) {
          throw ScenarioParseError(line, "waypoint times must strictly increase");
        }
        current_person->waypoints.push_back(wp);
        break;
      }

      case Section::Speech: {
        const auto toks = tokens(text);
        if (toks.size() < 3 || toks.size() > 4)
          throw ScenarioParseError(line, "expected 'person t_start t_end [gain]'");
        SpeechInterval sp;
        sp.person_id = integer(toks[0], line);
        sp.t_start = number(toks[1], line);
        sp.t_end = number(toks[2], line);
        sp.gain = toks.size() == 4 ? number(toks[3], line) : 1.0;
        scenario.speech_intervals.push_back(sp);
        break;
      }

      case Section::Noise: {
        const auto toks = tokens(text);
        if (toks.size() != 5)
          throw ScenarioParseError(line, "expected 'kind x y t_start t_end'");
        NoiseSource nz;
        if (toks[0] == "radio") nz.kind = NoiseKind::Radio;
        else if (toks[0] == "tv") nz.kind = NoiseKind::Tv;
        else throw ScenarioParseError(line, "unknown noise kind '" + toks[0] + "'");
        nz.position = Eigen::Vector2d(number(toks[1], line), number(toks[2], line));
        nz.t_start = number(toks[3], line);
        nz.t_end = number(toks[4], line);
        scenario.noise_sources.push_back(nz);
        break;
      }

      case Section::Truth: {
        const auto toks = tokens(text);
        if (toks.size() != 3)
          throw ScenarioParseError(line, "expected 'person t_onset kind'");
        GroundTruthIoI gt;
        gt.person_id = integer(toks[0], line);
        gt.t_onset = number(toks[1], line);
        if (toks[2] == "AudioVision") gt.expected_kind = IoIEventKind::AudioVision;
        else if (toks[2] == "VisionOnly") gt.expected_kind = IoIEventKind::VisionOnly;
        else throw ScenarioParseError(line, "unknown truth kind '" + toks[2] + "'");
        scenario.ground_truth_ioi.push_back(gt);
        break;
      }
    }
  }

  validate(scenario, line);
  return scenario;
}

Scenario load_scenario_text(const std::string& text) {
  std::istringstream in(text);
  return load_scenario(in);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("scenario: cannot open '" + path + "'");
  return load_scenario(in);
}

}  // namespace ioi::sim
