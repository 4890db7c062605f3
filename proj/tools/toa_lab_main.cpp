// toa-lab: compare time-of-arrival distributions for a free Gaussian packet
// and emit CSV/JSON/SVG artifacts.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toalab/toalab.hpp"

namespace fs = std::filesystem;
using namespace toalab;

namespace {

struct FlagSet {
  std::string config_file;
  double x0 = 0, p0 = 0, sigma0 = 0, detector = 0, det_width = 0;
  double t_max = 0, t_prime = 0, tolerance = 0;
  std::size_t samples = 0;
  std::string out;

  CLI::Option* o_x0 = nullptr;
  CLI::Option* o_p0 = nullptr;
  CLI::Option* o_sigma0 = nullptr;
  CLI::Option* o_detector = nullptr;
  CLI::Option* o_det_width = nullptr;
  CLI::Option* o_t_max = nullptr;
  CLI::Option* o_t_prime = nullptr;
  CLI::Option* o_samples = nullptr;
  CLI::Option* o_tolerance = nullptr;
  CLI::Option* o_out = nullptr;
};

void add_scenario_flags(CLI::App* cmd, FlagSet& f) {
  cmd->add_option("--config", f.config_file, "JSON config file");
  f.o_x0 = cmd->add_option("--x0", f.x0, "packet center [l0]");
  f.o_p0 = cmd->add_option("--p0", f.p0, "packet momentum [hbar/l0]");
  f.o_sigma0 = cmd->add_option("--sigma0", f.sigma0, "packet spread [l0]");
  f.o_detector = cmd->add_option("--detector", f.detector, "detector position [l0]");
  f.o_det_width = cmd->add_option("--det_width", f.det_width, "detector width [l0]");
  f.o_t_max = cmd->add_option("--t_max", f.t_max, "observation stop T [1/omega]");
  f.o_t_prime = cmd->add_option("--t_prime", f.t_prime, "QC normalization window T'");
  f.o_samples = cmd->add_option("--samples", f.samples, "time grid intervals");
  f.o_tolerance = cmd->add_option("--tolerance", f.tolerance, "agreement tolerance");
  f.o_out = cmd->add_option("--out", f.out, "output directory");
}

// precedence: defaults < config file < flags < TOA_LAB_OUT (for out only)
ScenarioConfig resolve_config(const FlagSet& f) {
  ScenarioConfig cfg;
  if (!f.config_file.empty()) cfg = load_config(f.config_file);
  if (f.o_x0->count()) cfg.packet.x0 = f.x0;
  if (f.o_p0->count()) cfg.packet.p0 = f.p0;
  if (f.o_sigma0->count()) cfg.packet.sigma0 = f.sigma0;
  if (f.o_detector->count()) cfg.detector.position = f.detector;
  if (f.o_det_width->count()) cfg.detector.width = f.det_width;
  if (f.o_t_max->count()) {
    cfg.grid.t_max = f.t_max;
    cfg.window.t_stop = f.t_max;
    if (!f.o_t_prime->count() && f.config_file.empty())
      cfg.window.normalization_stop = 10.0 * f.t_max;
  }
  if (f.o_t_prime->count()) cfg.window.normalization_stop = f.t_prime;
  if (f.o_samples->count()) cfg.grid.n_samples = f.samples;
  if (f.o_tolerance->count()) cfg.tolerance = f.tolerance;
  if (f.o_out->count()) cfg.output_dir = f.out;
  if (const char* env = std::getenv("TOA_LAB_OUT"); env && *env)
    cfg.output_dir = env;
  cfg.validate();
  return cfg;
}

std::vector<double> default_thresholds(const TimeGrid& grid, std::size_t count = 200) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j)
    out.push_back(static_cast<double>(j) * grid.t_max / static_cast<double>(count));
  return out;
}

const std::vector<DistributionKind> kAllKinds{DistributionKind::QC, DistributionKind::K,
                                              DistributionKind::F, DistributionKind::SC};

std::map<DistributionKind, SampledDistribution> sample_requested(const ScenarioConfig& cfg) {
  std::map<DistributionKind, SampledDistribution> out;
  for (DistributionKind k : kAllKinds)
    if (cfg.kinds.count(k))
      out.emplace(k, sample(k, cfg.packet, cfg.detector, cfg.window, cfg.grid));
  return out;
}

void write_densities_csv(const ScenarioConfig& cfg,
                         const std::map<DistributionKind, SampledDistribution>& dists) {
  std::vector<std::string> columns{"t"};
  for (const auto& [k, d] : dists)
    columns.push_back(std::string("pi_") +
                      (k == DistributionKind::QC   ? "qc"
                       : k == DistributionKind::K  ? "k"
                       : k == DistributionKind::F  ? "f"
                                                   : "sc"));
  std::vector<std::vector<double>> rows;
  rows.reserve(cfg.grid.n_nodes());
  for (std::size_t i = 0; i < cfg.grid.n_nodes(); ++i) {
    std::vector<double> row{cfg.grid.node(i)};
    for (const auto& [k, d] : dists) row.push_back(d.density[i]);
    rows.push_back(std::move(row));
  }
  write_csv(cfg.output_dir / "densities.csv", columns, rows);
}

struct TailResult {
  std::vector<double> thresholds;
  std::vector<TailCurve> curves;
  ComparisonReport report;
};

TailResult compute_tails(const ScenarioConfig& cfg,
                         const std::map<DistributionKind, SampledDistribution>& dists) {
  TailResult r;
  r.thresholds = default_thresholds(cfg.grid);
  for (const auto& [k, d] : dists) r.curves.push_back(tail_curve(d, r.thresholds));
  r.report = compare_tails(r.curves, cfg.tolerance);
  return r;
}

void write_tail_artifacts(const ScenarioConfig& cfg, const TailResult& r,
                          bool with_svg) {
  std::vector<std::string> columns{"T"};
  for (const auto& c : r.curves)
    columns.push_back(std::string("tail_") +
                      (c.kind == DistributionKind::QC   ? "qc"
                       : c.kind == DistributionKind::K  ? "k"
                       : c.kind == DistributionKind::F  ? "f"
                                                        : "sc"));
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < r.thresholds.size(); ++i) {
    std::vector<double> row{r.thresholds[i]};
    for (const auto& c : r.curves) row.push_back(c.values[i]);
    rows.push_back(std::move(row));
  }
  write_csv(cfg.output_dir / "tails.csv", columns, rows);

  std::ofstream js(cfg.output_dir / "report.json", std::ios::binary);
  if (!js) throw io_error("cannot open report.json for writing");
  js << r.report.to_json().dump(2) << '\n';

  if (with_svg) {
    static const std::map<DistributionKind, std::string> colors{
        {DistributionKind::QC, "#1f77b4"},
        {DistributionKind::K, "#d62728"},
        {DistributionKind::F, "#2ca02c"},
        {DistributionKind::SC, "#9467bd"}};
    std::vector<SvgCurve> curves;
    for (const auto& c : r.curves)
      curves.push_back(SvgCurve{kind_name(c.kind), colors.at(c.kind), r.thresholds,
                                c.values});
    render_svg(cfg.output_dir / "fig1.svg",
               "Joint probability of arrival after T", "T [1/omega]",
               "tail probability", curves);
  }
}

int run_fig1(const ScenarioConfig& cfg) {
  fs::create_directories(cfg.output_dir);
  const auto dists = sample_requested(cfg);
  write_densities_csv(cfg, dists);
  const TailResult r = compute_tails(cfg, dists);
  write_tail_artifacts(cfg, r, true);
  std::printf("global max pairwise tail deviation: %.6g (tolerance %.6g)\n",
              r.report.global_max, r.report.tolerance);
  std::printf("agreement: %s\n", r.report.agreement_flag ? "yes" : "no");
  return r.report.agreement_flag ? 0 : 1;
}

int run_classical(double tau, const std::vector<double>& durations,
                  const fs::path& out_dir) {
  fs::create_directories(out_dir);
  std::vector<std::vector<double>> rows;
  for (double T : durations) {
    ClassicalScenario s{tau, T, true};
    rows.push_back({T, classical_found_probability(s),
                    classical_not_found_probability(s)});
  }
  write_csv(out_dir / "classical.csv", {"T", "p_found", "p_not_found"}, rows);
  return 0;
}

int run_oracle_check() {
  const std::vector<WavePacketSpec> packets{{-10, 7, 1}, {0, 0, 1}, {-5, 2, 0.5}};
  const std::vector<double> times{0.0, 0.5, 1.0, 10.0 / 7.0, 3.0};
  bool ok = true;
  for (const auto& packet : packets) {
    const GridState initial = discretize(packet, -40.0, 40.0, 8192);
    for (double t : times) {
      const GridState evolved = spectral_propagate(initial, t);
      double max_dev = 0.0;
      for (std::size_t j = 0; j < evolved.n_points(); ++j)
        max_dev = std::max(max_dev, std::abs(evolved.amplitudes[j] -
                                             psi_position(packet, evolved.x_at(j), t)));
      const double norm_drift = std::abs(evolved.norm() - initial.norm());
      const bool pass = max_dev < 1e-8 && norm_drift < 1e-10;
      ok = ok && pass;
      std::printf("packet(x0=%g,p0=%g,sigma0=%g) t=%g: max|dpsi|=%.3e dnorm=%.3e %s\n",
                  packet.x0, packet.p0, packet.sigma0, t, max_dev, norm_drift,
                  pass ? "ok" : "FAIL");
    }
  }
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-of-arrival distribution laboratory"};
  app.require_subcommand(1);

  FlagSet f_fig1, f_dens, f_tails;
  auto* fig1 = app.add_subcommand("fig1", "tail-curve comparison with artifacts");
  add_scenario_flags(fig1, f_fig1);
  auto* dens = app.add_subcommand("densities", "write densities.csv");
  add_scenario_flags(dens, f_dens);
  auto* tails = app.add_subcommand("tails", "write tails.csv and report.json");
  add_scenario_flags(tails, f_tails);

  double tau = 1.0;
  std::vector<double> durations{1.0, 10.0, 30.0};
  std::string classical_out = ".";
  auto* classical = app.add_subcommand("classical", "classical dwell-time table");
  classical->add_option("--tau", tau, "dwell time [s]");
  classical->add_option("--durations", durations, "observation durations [s]");
  auto* cl_out = classical->add_option("--out", classical_out, "output directory");

  auto* oracle = app.add_subcommand("oracle-check",
                                    "analytic vs spectral propagation suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fig1->parsed()) return run_fig1(resolve_config(f_fig1));
    if (dens->parsed()) {
      const ScenarioConfig cfg = resolve_config(f_dens);
      fs::create_directories(cfg.output_dir);
      write_densities_csv(cfg, sample_requested(cfg));
      return 0;
    }
    if (tails->parsed()) {
      const ScenarioConfig cfg = resolve_config(f_tails);
      fs::create_directories(cfg.output_dir);
      const auto dists = sample_requested(cfg);
      write_tail_artifacts(cfg, compute_tails(cfg, dists), false);
      return 0;
    }
    if (classical->parsed()) {
      fs::path out = classical_out;
      if (const char* env = std::getenv("TOA_LAB_OUT"); env && *env) out = env;
      else if (!cl_out->count()) out = ".";
      return run_classical(tau, durations, out);
    }
    if (oracle->parsed()) return run_oracle_check();
  } catch (const degenerate_normalization& e) {
    std::cerr << "error (degenerate normalization): " << e.what() << '\n';
    return 3;
  } catch (const validation_error& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "config parse error: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
