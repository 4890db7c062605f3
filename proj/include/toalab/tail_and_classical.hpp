#ifndef TOALAB_TAIL_AND_CLASSICAL_HPP
#define TOALAB_TAIL_AND_CLASSICAL_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "toalab/errors.hpp"
#include "toalab/quadrature.hpp"
#include "toalab/toa_distributions.hpp"

namespace toalab {

/// T -> integral of the normalized density over [T, t_max].
/// For QC (normalized over T' > t_max) this is a joint, not conditional,
/// probability of arrival after T.
struct TailCurve {
  DistributionKind kind;
  std::vector<double> thresholds;
  std::vector<double> values;
};

inline TailCurve tail_curve(const SampledDistribution& dist,
                            const std::vector<double>& thresholds) {
  const TimeGrid& grid = dist.grid;
  const double dt = grid.dt();
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] < 0.0 || thresholds[i] > grid.t_max + 1e-12)
      throw invalid_parameter("tail_curve: threshold outside [0, t_max]");
    if (i > 0 && thresholds[i] < thresholds[i - 1])
      throw invalid_parameter("tail_curve: thresholds must be sorted ascending");
  }

  const std::vector<double> cum = cumulative_simpson(dist.density, dt);
  const double total = cum.back();

  TailCurve curve{dist.kind, thresholds, {}};
  curve.values.reserve(thresholds.size());
  for (double T : thresholds) {
    const double u = std::min(T / dt, static_cast<double>(grid.n_samples));
    const auto i = static_cast<std::size_t>(u);
    double c;
    if (i >= grid.n_samples) {
      c = total;
    } else {
      const double frac = u - static_cast<double>(i);
      c = cum[i] + frac * (cum[i + 1] - cum[i]);
    }
    curve.values.push_back(std::clamp(total - c, 0.0, 1.0 + 1e-9));
  }
  return curve;
}

struct PairDeviation {
  std::string pair;
  std::vector<double> per_threshold_deviation;
  double max_deviation = 0.0;
};

struct ComparisonReport {
  std::vector<double> thresholds;
  std::vector<PairDeviation> pairs;
  double global_max = 0.0;
  bool agreement_flag = false;
  double tolerance = 0.0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["tolerance"] = tolerance;
    j["global_max"] = global_max;
    j["agreement_flag"] = agreement_flag;
    j["thresholds"] = thresholds;
    j["pairs"] = nlohmann::json::array();
    for (const auto& p : pairs)
      j["pairs"].push_back({{"pair", p.pair},
                            {"per_threshold_deviation", p.per_threshold_deviation},
                            {"global_max", p.max_deviation}});
    return j;
  }
};

/// Max pairwise |tail_A(T) - tail_B(T)| per threshold and globally; flags
/// agreement when the global max stays under `tolerance`.
inline ComparisonReport compare_tails(const std::vector<TailCurve>& curves,
                                      double tolerance) {
  if (curves.empty()) throw invalid_parameter("compare_tails: no curves");
  const auto& ref = curves.front().thresholds;
  for (const auto& c : curves) {
    if (c.thresholds.size() != ref.size())
      throw invalid_parameter("compare_tails: threshold grids differ");
    for (std::size_t i = 0; i < ref.size(); ++i)
      if (c.thresholds[i] != ref[i])
        throw invalid_parameter("compare_tails: threshold grids differ");
  }

  ComparisonReport report;
  report.thresholds = ref;
  report.tolerance = tolerance;
  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      PairDeviation pd;
      pd.pair = std::string(kind_name(curves[a].kind)) + "-" + kind_name(curves[b].kind);
      pd.per_threshold_deviation.reserve(ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) {
        const double d = std::abs(curves[a].values[i] - curves[b].values[i]);
        pd.per_threshold_deviation.push_back(d);
        pd.max_deviation = std::max(pd.max_deviation, d);
      }
      report.global_max = std::max(report.global_max, pd.max_deviation);
      report.pairs.push_back(std::move(pd));
    }
  }
  report.agreement_flag = report.global_max < tolerance;
  return report;
}

/// Classical counterexample: a particle dwells at the detector for `dwell`
/// seconds during an observation of `duration` seconds that covers the
/// dwell period.
struct ClassicalScenario {
  double dwell = 1.0;
  double duration = 1.0;
  bool contains_dwell = true;
};

inline double classical_found_probability(const ClassicalScenario& s) {
  if (!(s.dwell > 0.0)) throw invalid_parameter("dwell must be > 0");
  if (!(s.duration > 0.0)) throw invalid_parameter("duration must be > 0");
  if (!s.contains_dwell)
    throw unsupported_scenario("observation window must contain the dwell period");
  return std::min(s.dwell / s.duration, 1.0);
}

inline double classical_not_found_probability(const ClassicalScenario& s) {
  return 1.0 - classical_found_probability(s);
}

/// Probability of NOT finding the particle at the detector during [0, T]:
/// the quantum analogue of 1 - dwell/duration, i.e. 1 - N(T)/T with
/// N(T) = int_0^T |psi(D,t)|^2 dt the time the packet spends at D. Tends to
/// 1 as T grows. Deliberately distinct from any tail integral of a
/// normalized TOA density.
inline double qc_not_found_probability(const WavePacketSpec& packet,
                                       const DetectorSpec& det, double t_stop) {
  if (!(t_stop > 0.0)) throw invalid_parameter("t_stop must be > 0");
  const double dwell = qc_normalization_constant(packet, det, t_stop);
  return std::clamp(1.0 - dwell / t_stop, 0.0, 1.0);
}

} // namespace toalab

#endif
