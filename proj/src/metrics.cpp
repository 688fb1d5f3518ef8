#include "ioi/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ioi::eval {

MatchCounts match_events(const std::vector<IoIEvent>& events,
                         const std::vector<sim::GroundTruthIoI>& ground_truth,
                         double window_s) {
  std::vector<IoIEvent> sorted = events;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const IoIEvent& a, const IoIEvent& b) { return a.timestamp < b.timestamp; });

  std::vector<bool> claimed(ground_truth.size(), false);
  MatchCounts counts;
  for (const IoIEvent& event : sorted) {
    int best = -1;
    double best_distance = 0.0;
    for (std::size_t i = 0; i < ground_truth.size(); ++i) {
      if (claimed[i] || ground_truth[i].person_id != event.track_id) continue;
      const double distance = std::abs(ground_truth[i].t_onset - event.timestamp);
      if (distance <= window_s && (best < 0 || distance < best_distance)) {
        best = int(i);
        best_distance = distance;
      }
    }
    if (best >= 0) {
      claimed[size_t(best)] = true;
      ++counts.true_positives;
    } else {
      ++counts.false_positives;
    }
  }
  counts.false_negatives =
      int(ground_truth.size()) - counts.true_positives;
  return counts;
}

double f_measure(double precision_pct, double recall_pct) {
  if (precision_pct == 0.0 && recall_pct == 0.0) return 0.0;
  return 2.0 * precision_pct * recall_pct / (precision_pct + recall_pct);
}

EvalReport make_report(const MatchCounts& counts) {
  EvalReport report;
  report.true_positives = counts.true_positives;
  report.false_positives = counts.false_positives;
  report.false_negatives = counts.false_negatives;
  const int detected = counts.true_positives + counts.false_positives;
  const int relevant = counts.true_positives + counts.false_negatives;
  report.precision = detected > 0 ? 100.0 * counts.true_positives / detected : 0.0;
  report.recall = relevant > 0 ? 100.0 * counts.true_positives / relevant : 0.0;
  report.f_measure = f_measure(report.precision, report.recall);
  return report;
}

std::string format_report(const EvalReport& report, bool csv) {
  char buf[256];
  if (csv) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.2f,%.2f,%.2f", report.true_positives,
                  report.false_positives, report.false_negatives, report.precision,
                  report.recall, report.f_measure);
    return buf;
  }
  std::string out;
  std::snprintf(buf, sizeof(buf), "%4s %4s %4s %10s %10s %11s\n", "TP", "FP", "FN",
                "Precision", "Recall", "F-measure");
  out += buf;
  std::snprintf(buf, sizeof(buf), "%4d %4d %4d %8.2f %% %8.2f %% %9.2f %%\n",
                report.true_positives, report.false_positives, report.false_negatives,
                report.precision, report.recall, report.f_measure);
  out += buf;
  return out;
}

}  // namespace ioi::eval
