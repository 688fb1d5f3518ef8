// Command-line front end: scenario runner, event-log scorer, DOA inspector,
// and the AV-IoI vs Full-IoI suite comparison.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ioi/config.hpp"
#include "ioi/doa/music.hpp"
#include "ioi/eval/metrics.hpp"
#include "ioi/io/event_log.hpp"
#include "ioi/io/wav.hpp"
#include "ioi/sim/pipeline.hpp"
#include "ioi/sim/scenario.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

ioi::FusionConfig load_config_or_default(const std::string& path) {
  if (path.empty()) {
    ioi::FusionConfig cfg;
    cfg.validate();
    return cfg;
  }
  return ioi::load_fusion_config_file(path);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

int cmd_run(const std::string& scenario_path, const std::string& config_path,
            std::optional<long long> seed, const std::string& events_path,
            const std::string& trace_path) {
  ioi::FusionConfig cfg = load_config_or_default(config_path);
  ioi::sim::Scenario scenario = ioi::sim::load_scenario_file(scenario_path);
  if (seed) {
    scenario.seed.reset();
    cfg.seed = (unsigned long long)(*seed);
  }

  const ioi::sim::RunResult result = ioi::sim::run_scenario(scenario, cfg);
  const std::string events_text = ioi::io::format_event_log(result.events);
  if (events_path.empty()) {
    std::fputs(events_text.c_str(), stdout);
  } else {
    write_text(events_path, events_text);
  }
  if (!trace_path.empty()) {
    write_text(trace_path, ioi::io::format_trace(result.trace));
  }
  return kExitOk;
}

int cmd_eval(const std::string& eventlog_path, const std::string& scenario_path,
             double window, bool csv) {
  const auto events = ioi::io::parse_event_log_file(eventlog_path);
  const auto scenario = ioi::sim::load_scenario_file(scenario_path);
  const auto counts = ioi::eval::match_events(events, scenario.ground_truth_ioi, window);
  const auto report = ioi::eval::make_report(counts);
  std::fputs(ioi::eval::format_report(report, csv).c_str(), stdout);
  if (csv) std::fputc('\n', stdout);
  return kExitOk;
}

int cmd_doa_dump(const std::string& wav_path, const std::string& config_path) {
  ioi::FusionConfig cfg = load_config_or_default(config_path);
  const ioi::io::WavData wav = ioi::io::read_wav(wav_path);
  if (std::size_t(wav.samples.rows()) != cfg.array.size()) {
    throw std::runtime_error("doa-dump: wav has " + std::to_string(wav.samples.rows()) +
                             " channels, array expects " + std::to_string(cfg.array.size()));
  }
  cfg.doa.sample_rate = wav.sample_rate;
  cfg.validate();

  const auto cov = ioi::doa::compute_covariance(wav.samples, cfg.array, cfg.doa);
  const auto spectrum = ioi::doa::music_pseudospectrum(cov, cfg.array, cfg.doa);
  for (std::size_t i = 0; i < spectrum.grid_deg.size(); ++i) {
    std::printf("%.3f,%.9g\n", spectrum.grid_deg[i], spectrum.values[i]);
  }
  return kExitOk;
}

struct SuiteRow {
  std::string name;
  ioi::eval::MatchCounts av;
  ioi::eval::MatchCounts full;
  std::size_t av_events = 0;
  std::size_t full_events = 0;
};

int cmd_suite(const std::string& dir, const std::string& config_path, double window) {
  ioi::FusionConfig full_cfg = load_config_or_default(config_path);
  full_cfg.enable_vision_path = true;
  ioi::FusionConfig av_cfg = full_cfg;
  av_cfg.enable_vision_path = false;

  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".scn") {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) throw std::runtime_error("suite: no .scn files in '" + dir + "'");

  // One pipeline instance per scenario; results merge in name order.
  std::vector<std::future<SuiteRow>> jobs;
  for (const std::string& path : paths) {
    jobs.push_back(std::async(std::launch::async, [path, av_cfg, full_cfg, window] {
      const auto scenario = ioi::sim::load_scenario_file(path);
      SuiteRow row;
      row.name = fs::path(path).filename().string();
      const auto av = ioi::sim::run_scenario(scenario, av_cfg);
      const auto full = ioi::sim::run_scenario(scenario, full_cfg);
      row.av = ioi::eval::match_events(av.events, scenario.ground_truth_ioi, window);
      row.full = ioi::eval::match_events(full.events, scenario.ground_truth_ioi, window);
      row.av_events = av.events.size();
      row.full_events = full.events.size();
      return row;
    }));
  }

  ioi::eval::MatchCounts av_total, full_total;
  std::printf("%-28s %16s %16s\n", "scenario", "AV TP/FP/FN", "Full TP/FP/FN");
  for (auto& job : jobs) {
    const SuiteRow row = job.get();
    av_total += row.av;
    full_total += row.full;
    char av_text[32], full_text[32];
    std::snprintf(av_text, sizeof(av_text), "%d/%d/%d", row.av.true_positives,
                  row.av.false_positives, row.av.false_negatives);
    std::snprintf(full_text, sizeof(full_text), "%d/%d/%d", row.full.true_positives,
                  row.full.false_positives, row.full.false_negatives);
    std::printf("%-28s %16s %16s\n", row.name.c_str(), av_text, full_text);
  }

  const auto av_report = ioi::eval::make_report(av_total);
  const auto full_report = ioi::eval::make_report(full_total);
  std::printf("\n%-10s %10s %10s %11s\n", "", "Precision", "Recall", "F-measure");
  std::printf("%-10s %8.2f %% %8.2f %% %9.2f %%\n", "AV-IoI", av_report.precision,
              av_report.recall, av_report.f_measure);
  std::printf("%-10s %8.2f %% %8.2f %% %9.2f %%\n", "Full-IoI", full_report.precision,
              full_report.recall, full_report.f_measure);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Initiation-of-interaction detection engine and simulator"};
  app.require_subcommand(1);

  std::string scenario_path, config_path, events_path, trace_path;
  std::optional<long long> seed;
  auto* run = app.add_subcommand("run", "Run a scenario, write event log and state trace");
  run->add_option("scenario", scenario_path, "scenario file")->required();
  run->add_option("--config", config_path, "config file (flat key = value)");
  run->add_option("--seed", seed, "override the noise seed");
  run->add_option("--events", events_path, "write events here instead of stdout");
  run->add_option("--trace", trace_path, "write the per-frame state trace here");

  std::string eventlog_path, eval_scenario_path;
  double window = 1.0;
  bool csv = false;
  auto* eval = app.add_subcommand("eval", "Score an event log against scenario ground truth");
  eval->add_option("eventlog", eventlog_path, "event log file")->required();
  eval->add_option("scenario", eval_scenario_path, "scenario file with [truth]")->required();
  eval->add_option("--window", window, "matching window, seconds (default 1.0)");
  eval->add_flag("--csv", csv, "emit comma-separated values");

  std::string wav_path, doa_config_path;
  auto* doa = app.add_subcommand("doa-dump", "Print the MUSIC pseudospectrum of a wav file");
  doa->add_option("wav", wav_path, "multichannel PCM16 wav")->required();
  doa->add_option("--config", doa_config_path, "config file");

  std::string suite_dir, suite_config_path;
  double suite_window = 1.0;
  auto* suite = app.add_subcommand("suite", "Run every scenario in a directory, compare AV-IoI vs Full-IoI");
  suite->add_option("dir", suite_dir, "directory of .scn files")->required();
  suite->add_option("--config", suite_config_path, "config file");
  suite->add_option("--window", suite_window, "matching window, seconds");

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(scenario_path, config_path, seed, events_path, trace_path);
    if (eval->parsed()) return cmd_eval(eventlog_path, eval_scenario_path, window, csv);
    if (doa->parsed()) return cmd_doa_dump(wav_path, doa_config_path);
    if (suite->parsed()) return cmd_suite(suite_dir, suite_config_path, suite_window);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
}
