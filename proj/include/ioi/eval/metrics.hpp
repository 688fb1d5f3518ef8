#pragma once

#include <string>
#include <vector>

#include "ioi/sim/scenario.hpp"
#include "ioi/types.hpp"

namespace ioi::eval {

struct MatchCounts {
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;

  MatchCounts& operator+=(const MatchCounts& other) {
    true_positives += other.true_positives;
    false_positives += other.false_positives;
    false_negatives += other.false_negatives;
    return *this;
  }
};

/// Greedy one-to-one matching: each event, in time order, claims the nearest
/// unmatched truth entry with the same person_id within +-window seconds.
/// Unmatched events are false positives, unmatched truths false negatives.
MatchCounts match_events(const std::vector<IoIEvent>& events,
                         const std::vector<sim::GroundTruthIoI>& ground_truth,
                         double window_s = 1.0);

/// Harmonic mean of precision and recall, all in percent.
/// f_measure(0, 0) is defined as 0.
double f_measure(double precision_pct, double recall_pct);

struct EvalReport {
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;
  double precision = 0.0;  // percent
  double recall = 0.0;     // percent
  double f_measure = 0.0;  // percent
};

EvalReport make_report(const MatchCounts& counts);

/// Aligned plain-text table, or comma-separated values with csv = true.
std::string format_report(const EvalReport& report, bool csv = false);

}  // namespace ioi::eval
