#include "qsearch/csv.hpp"

#include <cmath>
#include <cstdio>

namespace qsearch {

namespace {

const char* channel_label(SweepChannel channel) {
  switch (channel) {
    case SweepChannel::None: return "none";
    case SweepChannel::Amplitude: return "amplitude";
    case SweepChannel::Phase: return "phase";
  }
  return "none";
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_noise_free_csv(const std::vector<SweepRecord>& records,
                          std::ostream& out) {
  out << "c,alpha_sq,prob_00,prob_01,prob_10,prob_11,"
         "raw_amp_00,raw_amp_01,raw_amp_10,raw_amp_11\n";
  for (const SweepRecord& rec : records) {
    out << format_double(rec.concurrence) << ',' << format_double(rec.alpha_sq);
    for (double prob : {rec.prob_00, rec.prob_01, rec.prob_10, rec.prob_11})
      out << ',' << format_double(prob);
    for (double prob : {rec.prob_00, rec.prob_01, rec.prob_10, rec.prob_11})
      out << ',' << format_double(8.0 * std::sqrt(prob));
    out << '\n';
  }
}

void write_channel_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  out << "alpha_sq,p,channel,concurrence,discord_half,discord_quarter,"
         "prob_00,prob_01,prob_10,prob_11\n";
  for (const SweepRecord& rec : records) {
    out << format_double(rec.alpha_sq) << ',' << format_double(rec.p) << ','
        << channel_label(rec.channel) << ',' << format_double(rec.concurrence)
        << ',' << format_double(rec.discord_half) << ','
        << format_double(rec.discord_quarter);
    for (double prob : {rec.prob_00, rec.prob_01, rec.prob_10, rec.prob_11})
      out << ',' << format_double(prob);
    out << '\n';
  }
}

void write_crosscheck_csv(const std::vector<CrosscheckRow>& rows, std::ostream& out) {
  out << "formula_id,alpha_sq,p,computed,printed,abs_deviation\n";
  for (const CrosscheckRow& row : rows) {
    out << row.formula_id << ',' << format_double(row.alpha_sq) << ','
        << format_double(row.p) << ',' << format_double(row.computed) << ','
        << format_double(row.printed) << ',' << format_double(row.abs_deviation)
        << '\n';
  }
}

}  // namespace qsearch
