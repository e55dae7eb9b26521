#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsearch/channels.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/measures.hpp"

namespace qsearch {

enum class SweepChannel { None, Amplitude, Phase };

/// One grid point of a parameter sweep.
struct SweepRecord {
  double alpha_sq = 0.0;
  double p = 0.0;
  SweepChannel channel = SweepChannel::None;
  double concurrence = 0.0;
  double discord_half = 0.0;
  double discord_quarter = 0.0;
  double prob_00 = 0.0;
  double prob_01 = 0.0;
  double prob_10 = 0.0;
  double prob_11 = 0.0;
};

/// One evaluation of a published closed-form expression against the value
/// computed directly from the simulation. Large deviations are data, not
/// failures: several of the audited forms carry transcription errors.
struct CrosscheckRow {
  std::string formula_id;
  double alpha_sq = 0.0;
  double p = 0.0;
  double computed = 0.0;
  double printed = 0.0;
  double abs_deviation = 0.0;
};

/// Noise-free sweep over concurrence c uniform on [0, 1] (plus-branch alpha).
std::vector<SweepRecord> sweep_noise_free(int c_steps, const MarkedElement& marked);

/// Bisection for the c where the solution probability overtakes the |00>
/// probability, on the plus branch. Throws NumericalError if the bracket
/// (0, 1) has no sign change.
double find_threshold(double tolerance);

/// Full (alpha^2, p) grid with the chosen damping channel applied after the
/// oracle. Rows ordered by alpha_sq, then p.
std::vector<SweepRecord> sweep_channel(ChannelKind kind, int alpha_steps,
                                       int p_steps, TargetQubit target,
                                       const MarkedElement& marked);

/// Evaluates every audited closed form at `samples` pseudo-random
/// (alpha^2, p) points drawn from a seeded 64-bit LCG. Never fails on
/// deviation; it reports.
std::vector<CrosscheckRow> crosscheck_printed_forms(int samples, std::uint64_t seed);

/// Max |computed - printed| per formula_id, in first-appearance order.
std::vector<std::pair<std::string, double>> crosscheck_summary(
    const std::vector<CrosscheckRow>& rows);

}  // namespace qsearch
