#include <random>
#include <vector>

#include <doctest.h>

#include "ioi/eval/metrics.hpp"

using namespace ioi;
using namespace ioi::eval;

namespace {

IoIEvent event_at(double t, int id = 1, IoIEventKind kind = IoIEventKind::AudioVision) {
  return {kind, id, t, ""};
}

sim::GroundTruthIoI truth_at(double t, int id = 1) {
  return {id, t, IoIEventKind::AudioVision};
}

/// Brute-force oracle: the maximum number of one-to-one event/truth pairings
/// (same person, within the window), found by exhaustive recursion.
int optimal_matching(const std::vector<IoIEvent>& events,
                     const std::vector<sim::GroundTruthIoI>& truths, double window,
                     std::size_t next = 0, std::vector<bool>* used = nullptr) {
  std::vector<bool> local;
  if (used == nullptr) {
    local.assign(truths.size(), false);
    used = &local;
  }
  if (next == events.size()) return 0;
  int best = optimal_matching(events, truths, window, next + 1, used);  // skip event
  for (std::size_t i = 0; i < truths.size(); ++i) {
    if ((*used)[i] || truths[i].person_id != events[next].track_id) continue;
    if (std::abs(truths[i].t_onset - events[next].timestamp) > window) continue;
    (*used)[i] = true;
    best = std::max(best, 1 + optimal_matching(events, truths, window, next + 1, used));
    (*used)[i] = false;
  }
  return best;
}

}  // namespace

TEST_CASE("an event within the window of a truth entry is a true positive") {
  const auto counts = match_events({event_at(5.0)}, {truth_at(5.3)}, 1.0);
  CHECK(counts.true_positives == 1);
  CHECK(counts.false_positives == 0);
  CHECK(counts.false_negatives == 0);
}

TEST_CASE("an event with no truth is a false positive") {
  const auto counts = match_events({event_at(5.0)}, {}, 1.0);
  CHECK(counts.true_positives == 0);
  CHECK(counts.false_positives == 1);
  CHECK(counts.false_negatives == 0);
}

TEST_CASE("two events near one truth split into TP and FP") {
  const std::vector<IoIEvent> events = {event_at(4.8), event_at(5.4)};
  const std::vector<sim::GroundTruthIoI> truths = {truth_at(5.0)};
  const auto counts = match_events(events, truths, 1.0);
  CHECK(counts.true_positives == 1);
  CHECK(counts.false_positives == 1);
  CHECK(counts.false_negatives == 0);
  CHECK(counts.true_positives == optimal_matching(events, truths, 1.0));
}

TEST_CASE("person identity gates the match") {
  const auto counts = match_events({event_at(5.0, 2)}, {truth_at(5.0, 1)}, 1.0);
  CHECK(counts.true_positives == 0);
  CHECK(counts.false_positives == 1);
  CHECK(counts.false_negatives == 1);
}

TEST_CASE("events outside the window do not match") {
  const auto counts = match_events({event_at(7.0)}, {truth_at(5.0)}, 1.0);
  CHECK(counts.true_positives == 0);
  CHECK(counts.false_positives == 1);
  CHECK(counts.false_negatives == 1);
}

TEST_CASE("greedy matching conserves counts and never beats the optimum") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> time(0.0, 20.0);
  std::uniform_int_distribution<int> person(1, 2);
  std::uniform_int_distribution<int> count(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IoIEvent> events;
    std::vector<sim::GroundTruthIoI> truths;
    for (int i = 0; i < count(rng); ++i) events.push_back(event_at(time(rng), person(rng)));
    for (int i = 0; i < count(rng); ++i) truths.push_back(truth_at(time(rng), person(rng)));
    const auto counts = match_events(events, truths, 1.0);
    CHECK(counts.true_positives <= optimal_matching(events, truths, 1.0));
    CHECK(counts.true_positives + counts.false_positives == int(events.size()));
    CHECK(counts.true_positives + counts.false_negatives == int(truths.size()));
  }
}

TEST_CASE("matching is invariant under a uniform time shift") {
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> time(0.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<IoIEvent> events;
    std::vector<sim::GroundTruthIoI> truths;
    for (int i = 0; i < 4; ++i) events.push_back(event_at(time(rng)));
    for (int i = 0; i < 3; ++i) truths.push_back(truth_at(time(rng)));
    const auto base = match_events(events, truths, 1.0);

    const double shift = time(rng);
    for (auto& e : events) e.timestamp += shift;
    for (auto& t : truths) t.t_onset += shift;
    const auto shifted = match_events(events, truths, 1.0);
    CHECK(base.true_positives == shifted.true_positives);
    CHECK(base.false_positives == shifted.false_positives);
    CHECK(base.false_negatives == shifted.false_negatives);
  }
}

TEST_CASE("f_measure reproduces the published arithmetic") {
  CHECK(f_measure(86.36, 95.0) == doctest::Approx(90.48).epsilon(0.0002));
  CHECK(f_measure(82.35, 70.0) == doctest::Approx(75.68).epsilon(0.0002));
  CHECK(f_measure(100.0, 100.0) == 100.0);
  CHECK(f_measure(0.0, 0.0) == 0.0);
}

TEST_CASE("f_measure is symmetric, idempotent on equal inputs, and bounded") {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> pct(0.0, 100.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double p = pct(rng), r = pct(rng);
    const double f = f_measure(p, r);
    CHECK(f == f_measure(r, p));
    CHECK(f >= std::min(p, r) - 1e-9);
    CHECK(f <= std::max(p, r) + 1e-9);
    const double x = pct(rng);
    CHECK(f_measure(x, x) == doctest::Approx(x).epsilon(1e-12));
  }
}

TEST_CASE("reports derive the percentages from the counts") {
  MatchCounts counts;
  counts.true_positives = 19;
  counts.false_positives = 3;
  counts.false_negatives = 1;
  const EvalReport report = make_report(counts);
  CHECK(report.precision == doctest::Approx(100.0 * 19 / 22));
  CHECK(report.recall == doctest::Approx(95.0));
  CHECK(report.f_measure ==
        doctest::Approx(f_measure(report.precision, report.recall)));

  const EvalReport empty = make_report(MatchCounts{});
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f_measure == 0.0);
}

TEST_CASE("report formatting, table and csv") {
  MatchCounts counts;
  counts.true_positives = 1;
  const EvalReport report = make_report(counts);
  CHECK(format_report(report, true) == "1,0,0,100.00,100.00,100.00");
  const std::string table = format_report(report, false);
  CHECK(table.find("Precision") != std::string::npos);
  CHECK(table.find("100.00 %") != std::string::npos);
}
