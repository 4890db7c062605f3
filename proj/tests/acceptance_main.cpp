// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 1 also exercises the installed CLI binary.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "toalab/toalab.hpp"

using namespace toalab;
namespace fs = std::filesystem;

namespace {

const WavePacketSpec kFig1{-10.0, 7.0, 1.0};
const DetectorSpec kOrigin{0.0, 0.0};
const ObservationWindow kWindow{5.0, 50.0};
const TimeGrid kGrid{5.0, 2000};

int failures = 0;

void report(int number, const char* title, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number, title,
              detail.c_str());
  if (!pass) ++failures;
}

std::vector<double> thresholds200(double t_max) {
  std::vector<double> out;
  for (std::size_t j = 0; j < 200; ++j)
    out.push_back(static_cast<double>(j) * t_max / 200.0);
  return out;
}

std::vector<TailCurve> all_tails(const TimeGrid& grid, const ObservationWindow& window,
                                 const std::vector<double>& thresholds) {
  std::vector<TailCurve> curves;
  for (DistributionKind kind : {DistributionKind::QC, DistributionKind::K,
                                DistributionKind::F, DistributionKind::SC})
    curves.push_back(tail_curve(sample(kind, kFig1, kOrigin, window, grid), thresholds));
  return curves;
}

char buf[256];

void criterion1_fig1() {
  const ComparisonReport report_internal =
      compare_tails(all_tails(kGrid, kWindow, thresholds200(5.0)), 0.02);

  const fs::path dir = fs::temp_directory_path() / "toalab_acceptance_fig1";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cmd =
      std::string(TOA_LAB_BIN) + " fig1 --out " + dir.string() + " >/dev/null";
  const int rc = WEXITSTATUS(std::system(cmd.c_str()));
  const bool artifacts = fs::exists(dir / "densities.csv") &&
                         fs::exists(dir / "tails.csv") &&
                         fs::exists(dir / "report.json") && fs::exists(dir / "fig1.svg");

  std::snprintf(buf, sizeof(buf), "max pairwise tail deviation %.4g, cli exit %d",
                report_internal.global_max, rc);
  report(1, "tail curves of QC/K/F/SC coincide within 0.02",
         report_internal.global_max < 0.02 && rc == 0 && artifacts, buf);
}

void criterion2_classical() {
  bool pass = classical_found_probability({1.0, 1.0, true}) == 1.0 &&
              classical_found_probability({1.0, 10.0, true}) == 1.0 / 10.0 &&
              classical_found_probability({1.0, 30.0, true}) == 1.0 / 30.0;
  double prev = -1.0;
  for (double T : {1.0, 2.0, 10.0, 30.0, 1e3, 1e6, 1e9}) {
    const double p = classical_not_found_probability({1.0, T, true});
    pass = pass && p >= prev;
    prev = p;
  }
  pass = pass && prev > 1.0 - 1e-8;
  std::snprintf(buf, sizeof(buf), "exact 1, 1/10, 1/30; not-found -> %.10g", prev);
  report(2, "classical dwell-time probabilities", pass, buf);
}

void criterion3_normalization() {
  bool pass = true;
  double worst_mass = 0.0, worst_tail = 0.0;
  const TimeGrid fine{5.0, 4000};
  const auto thresholds = thresholds200(5.0);
  for (DistributionKind kind : {DistributionKind::QC, DistributionKind::K,
                                DistributionKind::F, DistributionKind::SC}) {
    const SampledDistribution d = sample(kind, kFig1, kOrigin, kWindow, kGrid);
    double mass;
    if (kind == DistributionKind::QC)
      mass = simpson([&](double t) { return qc_raw_density(kFig1, kOrigin, t); }, 0.0,
                     d.normalization_window, 20000) /
             d.normalization_constant;
    else
      mass = simpson(d.density, d.grid.dt());
    worst_mass = std::max(worst_mass, std::abs(mass - 1.0));

    const SampledDistribution refined = sample(kind, kFig1, kOrigin, kWindow, fine);
    const TailCurve coarse_tail = tail_curve(d, thresholds);
    const TailCurve fine_tail = tail_curve(refined, thresholds);
    for (std::size_t i = 0; i < thresholds.size(); ++i)
      worst_tail = std::max(worst_tail,
                            std::abs(coarse_tail.values[i] - fine_tail.values[i]));
  }
  pass = worst_mass < 1e-6 && worst_tail < 1e-4;
  std::snprintf(buf, sizeof(buf), "max |mass-1| %.3g, max refinement shift %.3g",
                worst_mass, worst_tail);
  report(3, "normalization and grid-refinement stability", pass, buf);
}

void criterion4_oracle() {
  const std::vector<WavePacketSpec> packets{{-10, 7, 1}, {0, 0, 1}, {-5, 2, 0.5}};
  const std::vector<double> times{0.0, 0.5, 1.0, 10.0 / 7.0, 3.0};
  double worst_dev = 0.0, worst_norm = 0.0;
  for (const auto& packet : packets) {
    const GridState initial = discretize(packet, -40.0, 40.0, 8192);
    for (double t : times) {
      const GridState evolved = spectral_propagate(initial, t);
      for (std::size_t j = 0; j < evolved.n_points(); ++j)
        worst_dev = std::max(worst_dev,
                             std::abs(evolved.amplitudes[j] -
                                      psi_position(packet, evolved.x_at(j), t)));
      worst_norm = std::max(worst_norm, std::abs(evolved.norm() - initial.norm()));
    }
  }
  std::snprintf(buf, sizeof(buf), "max pointwise dev %.3g, max norm drift %.3g",
                worst_dev, worst_norm);
  report(4, "analytic vs spectral propagation equivalence", worst_dev < 1e-8 &&
         worst_norm < 1e-10, buf);
}

void criterion5_divergence() {
  const WavePacketSpec rest{0.0, 0.0, 1.0};
  const double n10 = qc_normalization_constant(rest, kOrigin, 10.0);
  const double n100 = qc_normalization_constant(rest, kOrigin, 100.0);
  const double n1000 = qc_normalization_constant(rest, kOrigin, 1000.0);
  const bool pass = n10 + 1e-6 < n100 && n100 + 1e-6 < n1000;
  std::snprintf(buf, sizeof(buf), "N(10)=%.6g N(100)=%.6g N(1000)=%.6g", n10, n100,
                n1000);
  report(5, "QC normalization constant keeps growing for a resting packet", pass, buf);
}

void criterion6_distinction() {
  const double T = 5.0;
  const double not_found = qc_not_found_probability(kFig1, kOrigin, T);
  const SampledDistribution qc = sample_qc(kFig1, kOrigin, kWindow, kGrid);
  const double tail = tail_curve(qc, {T}).values[0];
  const double gap = std::abs(not_found - tail);
  std::snprintf(buf, sizeof(buf), "not-found %.4g vs tail %.4g, gap %.4g", not_found,
                tail, gap);
  report(6, "not-found probability and arrival tail are distinct quantities",
         gap > 0.1, buf);
}

void criterion7_mass_identities() {
  const double right_mass =
      simpson([&](double p) { return std::norm(psi_momentum(kFig1, p)); }, 0.0, 19.0,
              8192);
  const KijowskiEvaluator eval(kFig1, kOrigin);
  std::vector<double> raw_k(kGrid.n_nodes()), raw_sc(kGrid.n_nodes());
  for (std::size_t k = 0; k < kGrid.n_nodes(); ++k) {
    raw_k[k] = eval(kGrid.node(k));
    raw_sc[k] = semiclassical_raw_density(kFig1, kOrigin, kGrid.node(k));
  }
  const double mass_k = simpson(raw_k, kGrid.dt());
  const double mass_sc = simpson(raw_sc, kGrid.dt());
  const bool pass =
      std::abs(mass_k - right_mass) < 1e-6 && std::abs(mass_sc - right_mass) < 1e-6;
  std::snprintf(buf, sizeof(buf), "K %.9g, SC %.9g, right-movers %.9g", mass_k, mass_sc,
                right_mass);
  report(7, "raw K and SC masses equal the right-mover momentum mass", pass, buf);
}

} // namespace

int main() {
  criterion1_fig1();
  criterion2_classical();
  criterion3_normalization();
  criterion4_oracle();
  criterion5_divergence();
  criterion6_distinction();
  criterion7_mass_identities();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all acceptance criteria passed\n");
  return failures == 0 ? 0 : 1;
}
