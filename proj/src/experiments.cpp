#include "qsearch/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qsearch {

namespace {

// splitmix-free 64-bit LCG (Knuth MMIX multiplier). Documented in the README;
// the crosscheck sampling sequence is part of the stable CLI surface.
struct Lcg {
  std::uint64_t state;
  double next_unit() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }
};

DensityMatrix damped_oracle_state(const GateParameter& param, ChannelKind kind,
                                  double p, TargetQubit target,
                                  const MarkedElement& marked) {
  PureState psi2 = apply_oracle(prepare_superposition(param), marked);
  KrausChannel channel =
      kind == ChannelKind::Amplitude ? amplitude_damping(p) : phase_damping(p);
  return apply_channel(DensityMatrix::from_pure(psi2), channel, target);
}

// ---- published closed forms, transcribed as printed -----------------------

Eigen::Matrix4d printed_diffusion(double a, double b) {
  double a2 = a * a, b2 = b * b;
  Eigen::Matrix4d d;
  // Entry (0,2) is "2ab" as printed; symmetry of the generative construction
  // demands 2a^3b there, so this entry is a typo candidate.
  d << a2 * a2 - 2 * a2 * b2 - b2 * b2, 2 * a2 * a * b, 2 * a * b, 2 * a2 * b2,
      2 * a2 * a * b, -a2 * a2 - b2 * b2, 2 * a2 * b2, 2 * a * b2 * b,
      2 * a2 * a * b, 2 * a2 * b2, -a2 * a2 - b2 * b2, 2 * a * b2 * b,
      2 * a2 * b2, 2 * a * b2 * b, 2 * a * b2 * b, -a2 * a2 - 2 * a2 * b2 + b2 * b2;
  return d;
}

Eigen::Vector4d printed_final_amplitudes(double c, bool plus_branch) {
  double root = std::sqrt(1.0 - c);
  double sign = plus_branch ? 1.0 : -1.0;
  Eigen::Vector4d amps;
  amps << (4 - 4 * c) + sign * (4 - 4 * c) * root,
      12 * std::sqrt(c) - 4 * c * std::sqrt(c),
      4 * std::sqrt(c) - 4 * c * std::sqrt(c),
      (4 - 4 * c) - sign * (4 - 4 * c) * root;
  return amps / 8.0;
}

Eigen::Matrix4d printed_amplitude_damped_state(double a, double b, double p) {
  double q = std::sqrt(1.0 - p);
  double a2 = a * a, b2 = b * b;
  double a3b = a2 * a * b, ab3 = a * b2 * b, a2b2 = a2 * b2;
  Eigen::Matrix4d m;
  // Entry (2,1) is "-sqrt(1-p) a^3 b" as printed, violating Hermiticity
  // against the printed (1,2) entry; typo candidate.
  m << a2 * a2 + p * a2b2, -q * a3b, a3b - p * ab3, q * a2b2,
      -q * a3b, (1 - p) * a2b2, -q * a2b2, -(1 - p) * ab3,
      a3b - p * ab3, -q * a3b, a2b2 + p * b2 * b2, q * ab3,
      q * a2b2, -(1 - p) * ab3, q * ab3, (1 - p) * b2 * b2;
  return m;
}

struct PrintedBloch {
  Eigen::Vector3d r, s;
  Eigen::Matrix3d t;
};

PrintedBloch printed_sec3_bloch(double a, double b, double p) {
  double q = std::sqrt(1.0 - p);
  double a2 = a * a, b2 = b * b;
  PrintedBloch out;
  out.r << 2 * a2 * a * b - 2 * a * b2 * b, 0, a2 * a2 - b2 * b2;
  out.s << 2 * q * (a * b2 * b - a2 * a * b), 0, a2 * a2 + 2 * p * b2 - b2 * b2;
  out.t.setZero();
  out.t(0, 2) = 2 * a * b * (1 - 2 * p * b2);
  out.t(1, 1) = 4 * a2 * b2 * q;
  out.t(2, 0) = -4 * a2 * a * b * q;
  out.t(2, 2) = (a2 - b2) * (a2 + (2 * p - 1) * b2);
  return out;
}

PrintedBloch printed_sec4_bloch(double a, double b, double p) {
  double q = std::sqrt(1.0 - p);
  double a2 = a * a, b2 = b * b;
  PrintedBloch out;
  out.r << 2 * a2 * a * b - 2 * a * b2 * b, 0, 0;
  out.s.setZero();  // no local vector is printed for this channel
  out.t.setZero();
  out.t(0, 2) = 2 * a2 * a * b + 2 * a * b2 * b;
  out.t(1, 1) = -4 * a2 * b2 * q;
  out.t(2, 0) = -2 * q * (a2 * a * b + a * b2 * b);
  return out;
}

// Final-probability expansions in the correlation-matrix entries. No r or s
// terms appear in the printed forms.
std::array<double, 4> printed_a_expansions(const Eigen::Matrix3d& t, double a,
                                           double b) {
  double txx = t(0, 0), tyy = t(1, 1), tzz = t(2, 2), txz = t(0, 2), tzx = t(2, 0);
  double a2 = a * a, b2 = b * b;
  double c8 = std::pow(a, 8) + std::pow(b, 8);
  double c44 = std::pow(a, 4) * std::pow(b, 4);
  double c62 = std::pow(a, 6) * b2;
  double c26 = a2 * std::pow(b, 6);
  double a7b = std::pow(a, 7) * b, a5b3 = std::pow(a, 5) * b2 * b;
  double a3b5 = a2 * a * std::pow(b, 5), ab7 = a * std::pow(b, 7);
  double base = 6 * c44 + 4 * c62 + 4 * c26 + c8;

  double a1 = 0.25 * (tyy * (4 * c62 + 8 * c44 + 4 * c26) +
                      txx * (-8 * c44 + 12 * c62 - 4 * c26) +
                      tzz * (4 * c26 - 12 * c62 + 6 * c44 + c8) +
                      txz * (4 * a7b - 16 * a5b3 - 4 * a3b5) +
                      tzx * (4 * a7b - 16 * a5b3 - 4 * a3b5) + base);
  double a2_ = 0.25 * (tyy * (-4 * c62 - 8 * c44 - 4 * c26) +
                       txx * (-8 * c44 - 4 * c62 - 4 * c26) +
                       tzz * (4 * c26 + 4 * c62 - 6 * c44 - c8) +
                       txz * (4 * ab7 + 12 * a5b3) +
                       tzx * (-4 * a7b - 12 * a3b5) + base);
  double a3_ = 0.25 * (tyy * (-4 * c62 - 8 * c44 - 4 * c26) +
                       txx * (8 * c44 - 4 * c62 - 4 * c26) +
                       tzz * (4 * c26 + 4 * c62 - 6 * c44 - c8) +
                       txz * (-4 * a7b - 12 * a3b5) +
                       tzx * (4 * ab7 + 12 * a5b3) +
                       (4 * c62 + 4 * c26 + c8));
  double a4 = 0.25 * (tyy * (4 * c62 + 8 * c44 + 4 * c26) +
                      txx * (-8 * c44 - 4 * c62 + 12 * c26) +
                      tzz * (-12 * c26 + 4 * c62 + 6 * c44 + c8) +
                      txz * (-4 * a7b + 16 * a5b3 + 4 * a3b5) +
                      tzx * (-4 * a7b + 16 * a5b3 + 4 * a3b5) + base);
  return {a1, a2_, a3_, a4};
}

// The long amplitude-damping discord expression, transcribed literally.
double printed_sec3_discord(double a, double b, double p) {
  auto A = [&](int k) { return std::pow(a, k); };
  auto B = [&](int k) { return std::pow(b, k); };
  double p2 = p * p, p3 = p * p * p, p4 = p2 * p2;

  double head = 0.5 * A(8) + 0.5 * B(8) + 0.5 * A(4) + 0.5 * B(4) - 2 * p * B(8) +
                A(2) * B(2) + 15 * A(4) * B(4) + 8 * A(6) * B(2) + 2 * p2 * B(8) -
                8 * p * A(2) * B(4) + 6 * p * A(2) * B(6) - 22 * p * A(4) * B(4) -
                6 * p * A(6) * B(2) + 4 * p2 * A(2) * B(6) + 2 * p2 * A(4) * B(4);

  double tail =
      A(16) - 24 * p * A(14) * B(2) + 16 * A(14) * B(2) + 152 * p2 * A(12) * B(4) -
      216 * p * A(12) * B(4) + 92 * A(12) * B(4) + 2 * A(12) -
      96 * p3 * A(10) * B(6) + 368 * p2 * A(10) * B(6) - 504 * p * A(10) * B(6) +
      208 * A(10) * B(6) - 96 * p * A(10) * B(4) - 24 * p * A(10) * B(2) +
      68 * A(10) * B(2) + 16 * p4 * A(8) * B(8) + 736 * p3 * A(8) * B(8) -
      664 * p2 * A(8) * B(8) + 40 * p * A(8) * B(8) + 70 * A(8) * B(8) -
      768 * p2 * A(8) * B(6) + 768 * p * A(8) * B(6) + 8 * p2 * A(8) * B(4) +
      248 * p * A(8) * B(4) - 322 * A(8) * B(4) + A(8) + 64 * p4 * A(6) * B(10) -
      192 * p3 * A(6) * B(10) + 480 * p2 * A(6) * B(10) + 440 * p * A(6) * B(10) -
      208 * A(6) * B(10) - 128 * p3 * A(6) * B(8) + 768 * p2 * A(6) * B(8) -
      320 * p * A(6) * B(8) - 32 * p2 * A(6) * B(6) - 240 * p * A(6) * B(6) +
      32 * p * A(6) * B(4) - 12 * A(6) * B(2) + 96 * p4 * A(4) * B(12) +
      64 * p3 * A(4) * B(12) + 488 * p2 * A(4) * B(12) - 328 * p * A(4) * B(12) +
      92 * A(4) * B(12) - 256 * p3 * A(4) * B(10) - 768 * p2 * A(4) * B(10) +
      256 * p * A(4) * B(10) + 432 * p2 * A(4) * B(8) + 208 * p * A(4) * B(8) -
      130 * A(4) * B(8) - 192 * p * A(4) * B(6) + 38 * A(4) * B(4) +
      64 * p4 * A(2) * B(14) + 32 * p3 * A(2) * B(14) - 144 * p2 * A(2) * B(14) +
      88 * p * A(2) * B(14) - 16 * A(2) * B(14) - 128 * p3 * A(2) * B(12) +
      256 * p2 * A(2) * B(12) - 96 * p * A(2) * B(12) - 32 * p2 * A(2) * B(10) -
      56 * p * A(2) * B(10) + 36 * A(2) * B(10) + 32 * p * A(2) * B(8) -
      12 * A(2) * B(6) + 16 * p4 * B(16) - 32 * p3 * B(16) + 24 * p2 * B(16) -
      8 * p * B(16) + B(16) + 8 * p2 * B(12) - 8 * p * B(12) + 2 * B(12) + B(8);

  return 0.5 * (head - tail);
}

double printed_eq19_discord(double a, double b, double p) {
  double a2 = a * a, b2 = b * b;
  return 0.5 * 4 * a2 * b2 * (1 - p) *
         (a2 * a2 + 6 * a2 * a2 * b2 * b2 + b2 * b2);
}

double printed_sec4_concurrence(double a, double b, double p) {
  double q = std::sqrt(1.0 - p);
  return 2 * a * a * b * b *
         (std::sqrt(2 - p + 2 * q) - std::sqrt(2 - p - 2 * q));
}

std::array<double, 4> printed_sec4_amplitudes(double a, double b, double p) {
  double q = std::sqrt(1.0 - p);
  double a2 = a * a, b2 = b * b;
  double base = 0.25 * (std::pow(a, 8) + std::pow(b, 8) +
                        6 * std::pow(a, 4) * std::pow(b, 4) +
                        4 * a2 * std::pow(b, 6) + 4 * std::pow(a, 6) * b2);
  double shared = a2 * b2 * q *
                  (4 * std::pow(a, 6) * b2 + 8 * std::pow(a, 4) * std::pow(b, 4) +
                   4 * a2 * std::pow(b, 6));
  double a7b = std::pow(a, 7) * b, a5b3 = std::pow(a, 5) * b2 * b;
  double a3b5 = a2 * a * std::pow(b, 5), ab7 = a * std::pow(b, 7);

  double amp00 = base - 0.5 * (a * b * (-4 * a7b + 16 * a5b3 + 4 * a3b5)) +
                 0.5 * (a * b * q * (-4 * a7b + 16 * a5b3 + 4 * a3b5)) - shared;
  double amp01 = base + 0.5 * (a * b * (4 * ab7 + 12 * a5b3)) +
                 0.5 * (a * b * q * (4 * a7b + 12 * a3b5)) + shared;
  double amp10 = base - 0.5 * (a * b * (4 * a7b + 12 * a3b5)) -
                 0.5 * (a * b * q * (4 * ab7 + 12 * a5b3)) + shared;
  double amp11 = base + 0.5 * (a * b * (-4 * ab7 + 16 * a3b5 + 4 * a5b3)) +
                 0.5 * (a * b * q * (-4 * ab7 + 16 * a3b5 + 4 * a5b3)) - shared;
  return {amp00, amp01, amp10, amp11};
}

const char* basis_label(int i) {
  static const char* labels[4] = {"00", "01", "10", "11"};
  return labels[i];
}

}  // namespace

std::vector<SweepRecord> sweep_noise_free(int c_steps, const MarkedElement& marked) {
  if (c_steps < 2)
    throw std::invalid_argument("sweep_noise_free: c_steps must be >= 2");
  std::vector<SweepRecord> records;
  records.reserve(c_steps);
  for (int i = 0; i < c_steps; ++i) {
    double c = static_cast<double>(i) / (c_steps - 1);
    GateParameter param = concurrence_to_alpha(c, Branch::Plus);
    PureState psi2 = apply_oracle(prepare_superposition(param), marked);
    PureState psi3 = grover_pure_pipeline(param, marked);
    DensityMatrix rho = DensityMatrix::from_pure(psi2);

    SweepRecord rec;
    rec.alpha_sq = param.alpha_sq();
    rec.p = 0.0;
    rec.channel = SweepChannel::None;
    rec.concurrence = concurrence_pure(psi2);
    rec.discord_half = geometric_discord(rho, DiscordNormalization::PaperHalf);
    rec.discord_quarter = geometric_discord(rho, DiscordNormalization::DakicQuarter);
    rec.prob_00 = psi3.probability(0);
    rec.prob_01 = psi3.probability(1);
    rec.prob_10 = psi3.probability(2);
    rec.prob_11 = psi3.probability(3);
    records.push_back(rec);
  }
  return records;
}

double find_threshold(double tolerance) {
  if (!(tolerance > 0.0))
    throw std::invalid_argument("find_threshold: tolerance must be positive");
  MarkedElement marked(1);
  auto gap = [&](double c) {
    PureState psi3 = grover_pure_pipeline(concurrence_to_alpha(c, Branch::Plus), marked);
    return psi3.probability(1) - psi3.probability(0);
  };
  double lo = 0.0, hi = 1.0;
  double glo = gap(1e-12), ghi = gap(1.0);
  if (!(glo < 0.0 && ghi > 0.0))
    throw NumericalError("find_threshold: no sign change on (0, 1)");
  while (hi - lo > tolerance) {
    double mid = 0.5 * (lo + hi);
    if (gap(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<SweepRecord> sweep_channel(ChannelKind kind, int alpha_steps,
                                       int p_steps, TargetQubit target,
                                       const MarkedElement& marked) {
  if (alpha_steps < 2 || p_steps < 2)
    throw std::invalid_argument("sweep_channel: step counts must be >= 2");
  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(alpha_steps) * p_steps);
  for (int i = 0; i < alpha_steps; ++i) {
    double alpha_sq = static_cast<double>(i) / (alpha_steps - 1);
    GateParameter param = GateParameter::from_alpha_sq(alpha_sq);
    for (int j = 0; j < p_steps; ++j) {
      double p = static_cast<double>(j) / (p_steps - 1);
      DensityMatrix rho = damped_oracle_state(param, kind, p, target, marked);

      SweepRecord rec;
      rec.alpha_sq = alpha_sq;
      rec.p = p;
      rec.channel = kind == ChannelKind::Amplitude ? SweepChannel::Amplitude
                                                   : SweepChannel::Phase;
      rec.concurrence = concurrence_mixed(rho);
      rec.discord_half = geometric_discord(rho, DiscordNormalization::PaperHalf);
      rec.discord_quarter =
          geometric_discord(rho, DiscordNormalization::DakicQuarter);
      std::array<double, 4> probs = final_probabilities(rho, param);
      rec.prob_00 = probs[0];
      rec.prob_01 = probs[1];
      rec.prob_10 = probs[2];
      rec.prob_11 = probs[3];
      records.push_back(rec);
    }
  }
  return records;
}

std::vector<CrosscheckRow> crosscheck_printed_forms(int samples, std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("crosscheck_printed_forms: samples must be >= 1");

  std::vector<CrosscheckRow> rows;
  Lcg rng{seed};
  MarkedElement marked(1);

  auto emit = [&rows](std::string id, double alpha_sq, double p, double computed,
                      double printed) {
    rows.push_back(CrosscheckRow{std::move(id), alpha_sq, p, computed, printed,
                                 std::abs(computed - printed)});
  };

  for (int sample = 0; sample < samples; ++sample) {
    double alpha_sq = rng.next_unit();
    double p = rng.next_unit();
    GateParameter param = GateParameter::from_alpha_sq(alpha_sq);
    double a = param.alpha(), b = param.beta();

    // Generalized diffusion matrix, printed entry by entry.
    Eigen::Matrix4d d_printed = printed_diffusion(a, b);
    Eigen::Matrix4cd d = make_diffusion(param);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        emit(std::string("eq10-entry-") + static_cast<char>('0' + i) +
                 static_cast<char>('0' + j),
             alpha_sq, p, d(i, j).real(), d_printed(i, j));

    // Final noise-free amplitudes in terms of c.
    double c = 4 * alpha_sq * (1 - alpha_sq);
    bool plus_branch = alpha_sq >= 0.5;
    Eigen::Vector4d amps_printed = printed_final_amplitudes(c, plus_branch);
    PureState psi3 = grover_pure_pipeline(param, marked);
    for (int i = 0; i < 4; ++i)
      emit(std::string("eq12-amp-") + basis_label(i), alpha_sq, p,
           psi3.amplitudes(i).real(), amps_printed(i));

    // Amplitude damping applied after the oracle.
    DensityMatrix ad =
        damped_oracle_state(param, ChannelKind::Amplitude, p, TargetQubit::Second,
                            marked);
    Eigen::Matrix4d ad_printed = printed_amplitude_damped_state(a, b, p);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        emit(std::string("eq16-entry-") + static_cast<char>('0' + i) +
                 static_cast<char>('0' + j),
             alpha_sq, p, ad.matrix()(i, j).real(), ad_printed(i, j));

    BlochDecomposition ad_bloch = bloch_decompose(ad);
    PrintedBloch ad_bloch_printed = printed_sec3_bloch(a, b, p);
    static const char* axis = "xyz";
    for (int i = 0; i < 3; ++i) {
      emit(std::string("sec3-bloch-r") + axis[i], alpha_sq, p, ad_bloch.r(i),
           ad_bloch_printed.r(i));
      emit(std::string("sec3-bloch-s") + axis[i], alpha_sq, p, ad_bloch.s(i),
           ad_bloch_printed.s(i));
      for (int j = 0; j < 3; ++j)
        emit(std::string("sec3-bloch-t") + axis[i] + axis[j], alpha_sq, p,
             ad_bloch.t(i, j), ad_bloch_printed.t(i, j));
    }

    // Final-probability expansions, fed with the state's actual correlation
    // matrix; the computed side is the direct trace.
    std::array<double, 4> ad_probs = final_probabilities(ad, param);
    std::array<double, 4> a_printed = printed_a_expansions(ad_bloch.t, a, b);
    for (int i = 0; i < 4; ++i)
      emit("sec3-A" + std::to_string(i + 1), alpha_sq, p, ad_probs[i],
           a_printed[i]);

    emit("sec3-discord", alpha_sq, p,
         geometric_discord(ad, DiscordNormalization::PaperHalf),
         printed_sec3_discord(a, b, p));

    // Phase damping.
    DensityMatrix pd = damped_oracle_state(param, ChannelKind::Phase, p,
                                           TargetQubit::Second, marked);
    emit("sec4-concurrence", alpha_sq, p, concurrence_mixed(pd),
         printed_sec4_concurrence(a, b, p));
    emit("eq19", alpha_sq, p, geometric_discord(pd, DiscordNormalization::PaperHalf),
         printed_eq19_discord(a, b, p));

    BlochDecomposition pd_bloch = bloch_decompose(pd);
    PrintedBloch pd_bloch_printed = printed_sec4_bloch(a, b, p);
    for (const auto& [i, j] : {std::pair{0, 2}, {1, 1}, {2, 0}, {2, 2}})
      emit(std::string("sec4-bloch-t") + axis[i] + axis[j], alpha_sq, p,
           pd_bloch.t(i, j), pd_bloch_printed.t(i, j));

    std::array<double, 4> pd_probs = final_probabilities(pd, param);
    std::array<double, 4> pd_amps_printed = printed_sec4_amplitudes(a, b, p);
    for (int i = 0; i < 4; ++i)
      emit(std::string("sec4-amp-") + basis_label(i), alpha_sq, p, pd_probs[i],
           pd_amps_printed[i]);
  }
  return rows;
}

std::vector<std::pair<std::string, double>> crosscheck_summary(
    const std::vector<CrosscheckRow>& rows) {
  std::vector<std::pair<std::string, double>> summary;
  for (const CrosscheckRow& row : rows) {
    auto it = std::find_if(summary.begin(), summary.end(),
                           [&](const auto& e) { return e.first == row.formula_id; });
    if (it == summary.end())
      summary.emplace_back(row.formula_id, row.abs_deviation);
    else
      it->second = std::max(it->second, row.abs_deviation);
  }
  return summary;
}

}  // namespace qsearch
