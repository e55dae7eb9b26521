// Command-line front end: parameter sweeps, threshold search, baseline
// statevector runs, and the printed-formula crosscheck audit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qsearch/csv.hpp"
#include "qsearch/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open output file: " + path);
  return out;
}

void write_plot_script(const std::string& csv_path, const std::string& body) {
  std::string script_path = csv_path + ".plot.py";
  std::ofstream out = open_output(script_path);
  std::string csv_name = csv_path;
  if (auto pos = csv_name.find_last_of('/'); pos != std::string::npos)
    csv_name = csv_name.substr(pos + 1);
  out << "#!/usr/bin/env python3\n"
      << "# Renders the figure for the CSV emitted next to this script.\n"
      << "import csv\n"
      << "import matplotlib\n"
      << "matplotlib.use('Agg')\n"
      << "import matplotlib.pyplot as plt\n\n"
      << "CSV = '" << csv_name << "'\n"
      << "with open(CSV) as fh:\n"
      << "    rows = list(csv.DictReader(fh))\n\n"
      << body;
}

const char* kNoiseFreePlot = R"PY(c = [float(r['c']) for r in rows]
for state in ('00', '01', '10', '11'):
    plt.plot(c, [float(r['raw_amp_' + state]) for r in rows], label='|%s>' % state)
plt.xlabel('concurrence c')
plt.ylabel('raw amplitude (x8 scale)')
plt.legend()
plt.savefig(CSV + '.png', dpi=150)
)PY";

const char* kChannelPlot = R"PY(import numpy as np
from mpl_toolkits.mplot3d import Axes3D  # noqa: F401

alpha = sorted({float(r['alpha_sq']) for r in rows})
p = sorted({float(r['p']) for r in rows})
by_key = {(float(r['alpha_sq']), float(r['p'])): r for r in rows}

fig = plt.figure(figsize=(12, 4))
for idx, column in enumerate(('concurrence', 'discord_half')):
    ax = fig.add_subplot(1, 3, idx + 1, projection='3d')
    grid = np.array([[float(by_key[(a, q)][column]) for a in alpha] for q in p])
    A, P = np.meshgrid(alpha, p)
    ax.plot_surface(A, P, grid, cmap='viridis')
    ax.set_xlabel('alpha^2'); ax.set_ylabel('p'); ax.set_title(column)

ax = fig.add_subplot(1, 3, 3)
mid = min(alpha, key=lambda a: abs(a - 0.5))
line = sorted((r for r in rows if float(r['alpha_sq']) == mid),
              key=lambda r: float(r['p']))
for state in ('00', '01', '10', '11'):
    ax.plot([float(r['p']) for r in line],
            [float(r['prob_' + state]) for r in line], label='|%s>' % state)
ax.set_xlabel('p'); ax.set_ylabel('probability')
ax.set_title('alpha^2 = %.3g' % mid)
ax.legend()
fig.tight_layout()
fig.savefig(CSV + '.png', dpi=150)
)PY";

struct Options {
  int c_steps = 101;
  int alpha_steps = 51;
  int p_steps = 51;
  int marked = 1;
  std::string kind = "amplitude";
  std::string target = "second";
  std::string discord_norm = "paper";
  double tolerance = 1e-6;
  int qubits = 2;
  int iterations = -1;
  std::uint64_t baseline_marked = 1;
  int samples = 1000;
  std::uint64_t seed = 42;
  std::string out_path;
  bool emit_plot = false;
};

int run_noise_free(const Options& opt) {
  std::ofstream out = open_output(opt.out_path);
  auto records = qsearch::sweep_noise_free(opt.c_steps, qsearch::MarkedElement(opt.marked));
  qsearch::write_noise_free_csv(records, out);
  if (opt.emit_plot) write_plot_script(opt.out_path, kNoiseFreePlot);
  return kExitOk;
}

int run_channel(const Options& opt) {
  std::ofstream out = open_output(opt.out_path);
  qsearch::ChannelKind kind = opt.kind == "amplitude"
                                  ? qsearch::ChannelKind::Amplitude
                                  : qsearch::ChannelKind::Phase;
  qsearch::TargetQubit target = opt.target == "second"
                                    ? qsearch::TargetQubit::Second
                                    : qsearch::TargetQubit::First;
  auto records = qsearch::sweep_channel(kind, opt.alpha_steps, opt.p_steps, target,
                                        qsearch::MarkedElement(opt.marked));
  qsearch::write_channel_csv(records, out);
  if (opt.emit_plot) write_plot_script(opt.out_path, kChannelPlot);
  return kExitOk;
}

int run_threshold(const Options& opt) {
  double c_star = qsearch::find_threshold(opt.tolerance);
  std::cout << "c_star=" << qsearch::format_double(c_star) << "\n";
  if (!opt.out_path.empty()) {
    std::ofstream out = open_output(opt.out_path);
    out << "c_star\n" << qsearch::format_double(c_star) << "\n";
  }
  return kExitOk;
}

int run_baseline(const Options& opt) {
  int iterations = opt.iterations >= 0
                       ? opt.iterations
                       : qsearch::baseline_optimal_iterations(opt.qubits);
  double prob = qsearch::baseline_grover(opt.qubits, opt.baseline_marked, iterations);
  std::cout << "qubits=" << opt.qubits << " iterations=" << iterations
            << " success_probability=" << qsearch::format_double(prob) << "\n";
  if (!opt.out_path.empty()) {
    std::ofstream out = open_output(opt.out_path);
    out << "iteration,success_probability\n";
    for (int k = 0; k <= iterations; ++k)
      out << k << ','
          << qsearch::format_double(
                 qsearch::baseline_grover(opt.qubits, opt.baseline_marked, k))
          << '\n';
  }
  return kExitOk;
}

int run_crosscheck(const Options& opt) {
  auto rows = qsearch::crosscheck_printed_forms(opt.samples, opt.seed);
  for (const auto& [formula_id, max_dev] : qsearch::crosscheck_summary(rows))
    std::cout << formula_id << " max_deviation=" << qsearch::format_double(max_dev)
              << "\n";
  if (!opt.out_path.empty()) {
    std::ofstream out = open_output(opt.out_path);
    qsearch::write_crosscheck_csv(rows, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized two-qubit quantum search simulator"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* noise_free = app.add_subcommand(
      "noise-free", "Sweep the noise-free pipeline over concurrence c");
  noise_free->add_option("--c-steps", opt.c_steps, "Grid points on c in [0,1]")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  noise_free->add_option("--marked", opt.marked, "Marked basis state 0..3")
      ->check(CLI::Range(0, 3))
      ->capture_default_str();
  noise_free->add_option("--out", opt.out_path, "Output CSV path")->required();
  noise_free->add_flag("--emit-plot", opt.emit_plot, "Write an adjacent plot script");

  CLI::App* channel = app.add_subcommand(
      "channel", "Sweep a damping channel over the (alpha^2, p) grid");
  channel->add_option("--kind", opt.kind, "Channel kind")
      ->check(CLI::IsMember({"amplitude", "phase"}))
      ->required();
  channel->add_option("--alpha-steps", opt.alpha_steps, "Grid points on alpha^2")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  channel->add_option("--p-steps", opt.p_steps, "Grid points on p")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  channel->add_option("--target", opt.target, "Qubit the channel acts on")
      ->check(CLI::IsMember({"first", "second"}))
      ->capture_default_str();
  channel->add_option("--marked", opt.marked, "Marked basis state 0..3")
      ->check(CLI::Range(0, 3))
      ->capture_default_str();
  channel->add_option("--discord-norm", opt.discord_norm,
                      "Which discord normalization is primary in reports")
      ->check(CLI::IsMember({"paper", "quarter"}))
      ->capture_default_str();
  channel->add_option("--out", opt.out_path, "Output CSV path")->required();
  channel->add_flag("--emit-plot", opt.emit_plot, "Write an adjacent plot script");

  CLI::App* threshold = app.add_subcommand(
      "threshold", "Find the c where the solution probability overtakes |00>");
  threshold->add_option("--tol", opt.tolerance, "Bisection bracket width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  threshold->add_option("--out", opt.out_path, "Optional output CSV path");

  CLI::App* baseline = app.add_subcommand(
      "baseline", "Standard n-qubit statevector search with Hadamard gates");
  baseline->add_option("--qubits", opt.qubits, "Number of qubits")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  baseline->add_option("--iterations", opt.iterations,
                       "Iteration count (default: floor(pi*sqrt(N)/4))");
  baseline->add_option("--marked", opt.baseline_marked, "Marked basis index")
      ->capture_default_str();
  baseline->add_option("--out", opt.out_path,
                       "Optional per-iteration probability CSV");

  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "Audit published closed forms against direct computation");
  crosscheck->add_option("--samples", opt.samples, "Sampled (alpha^2, p) points")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  crosscheck->add_option("--seed", opt.seed, "LCG seed")->capture_default_str();
  crosscheck->add_option("--out", opt.out_path, "Optional full-row CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (noise_free->parsed()) return run_noise_free(opt);
    if (channel->parsed()) return run_channel(opt);
    if (threshold->parsed()) return run_threshold(opt);
    if (baseline->parsed()) return run_baseline(opt);
    if (crosscheck->parsed()) return run_crosscheck(opt);
  } catch (const qsearch::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
