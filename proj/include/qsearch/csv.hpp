#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qsearch/experiments.hpp"

namespace qsearch {

/// Round-trip-exact decimal rendering of a double (17 significant digits).
std::string format_double(double value);

/// Schema: c,alpha_sq,prob_00..prob_11,raw_amp_00..raw_amp_11 where the raw
/// amplitudes are the probability-derived magnitudes rescaled by 8.
void write_noise_free_csv(const std::vector<SweepRecord>& records, std::ostream& out);

/// Schema: alpha_sq,p,channel,concurrence,discord_half,discord_quarter,
/// prob_00..prob_11.
void write_channel_csv(const std::vector<SweepRecord>& records, std::ostream& out);

/// Schema: formula_id,alpha_sq,p,computed,printed,abs_deviation.
void write_crosscheck_csv(const std::vector<CrosscheckRow>& rows, std::ostream& out);

}  // namespace qsearch
