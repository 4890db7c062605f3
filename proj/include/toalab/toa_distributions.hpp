#ifndef TOALAB_TOA_DISTRIBUTIONS_HPP
#define TOALAB_TOA_DISTRIBUTIONS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "toalab/errors.hpp"
#include "toalab/quadrature.hpp"
#include "toalab/units_packets.hpp"

namespace toalab {

enum class DistributionKind { QC, K, F, SC };

inline const char* kind_name(DistributionKind k) {
  switch (k) {
    case DistributionKind::QC: return "QC";
    case DistributionKind::K: return "K";
    case DistributionKind::F: return "F";
    case DistributionKind::SC: return "SC";
  }
  return "?";
}

/// Uniform time grid with nodes t_k = k dt, k = 0..n_samples, dt = t_max/n_samples.
/// n_samples must be even so Simpson weights apply everywhere.
struct TimeGrid {
  double t_max = 5.0;
  std::size_t n_samples = 2000;

  double dt() const { return t_max / static_cast<double>(n_samples); }
  double node(std::size_t k) const { return static_cast<double>(k) * dt(); }
  std::size_t n_nodes() const { return n_samples + 1; }

  void validate() const {
    if (!(t_max > 0.0)) throw invalid_parameter("t_max must be > 0");
    if (n_samples < 2) throw invalid_parameter("n_samples must be >= 2");
    if (n_samples % 2 != 0) throw invalid_parameter("n_samples must be even");
  }
};

/// A TOA density tabulated on a time grid, together with how it was normalized.
/// K/F/SC are normalized over [0, t_max]; QC over the larger window [0, T'].
struct SampledDistribution {
  DistributionKind kind;
  TimeGrid grid;
  std::vector<double> density;
  double normalization_constant = 0.0;
  double normalization_window = 0.0;
};

// ---------------------------------------------------------------------------
// raw (unnormalized) densities
// ---------------------------------------------------------------------------

/// QC presence density: |psi(D,t)|^2 for a point detector, otherwise the
/// position probability inside the detector window.
inline double qc_raw_density(const WavePacketSpec& packet, const DetectorSpec& det,
                             double t) {
  det.validate();
  if (det.width == 0.0) return std::norm(psi_position(packet, det.position, t));
  return simpson([&](double x) { return std::norm(psi_position(packet, x, t)); },
                 det.position - 0.5 * det.width, det.position + 0.5 * det.width, 128);
}

/// Probability current J(D,t) = Im[psi* d_x psi] from the closed form.
/// May be negative (backflow).
inline double flux_raw_density(const WavePacketSpec& packet, const DetectorSpec& det,
                               double t) {
  const complexd psi = psi_position(packet, det.position, t);
  const complexd dpsi = psi_position_dx(packet, det.position, t);
  return std::imag(std::conj(psi) * dpsi);
}

/// Kijowski density evaluator. The positive-momentum amplitude
///   I(t) = int_0^{p_max} dp sqrt(p) psi~(p) e^{i p D - i p^2 t / 2}
/// is computed by composite Simpson on a fixed p grid (precomputed once),
/// and Pi_K(t) = |I(t)|^2 / (2 pi).
class KijowskiEvaluator {
public:
  KijowskiEvaluator(const WavePacketSpec& packet, const DetectorSpec& det,
                    std::size_t p_nodes = 4096)
      : p_nodes_(p_nodes) {
    packet.validate();
    det.validate();
    if (p_nodes_ < 2 || p_nodes_ % 2 != 0)
      throw invalid_parameter("kijowski: p_nodes must be even and >= 2");
    p_max_ = std::max(packet.p0, 0.0) + 10.0 / packet.sigma0;
    dp_ = p_max_ / static_cast<double>(p_nodes_);
    weighted_.resize(p_nodes_ + 1);
    p2_.resize(p_nodes_ + 1);
    for (std::size_t j = 0; j <= p_nodes_; ++j) {
      const double p = static_cast<double>(j) * dp_;
      p2_[j] = p * p;
      weighted_[j] = std::sqrt(p) * psi_momentum(packet, p) *
                     std::polar(1.0, p * det.position);
    }
  }

  double operator()(double t) const {
    std::vector<complexd> integrand(p_nodes_ + 1);
    for (std::size_t j = 0; j <= p_nodes_; ++j)
      integrand[j] = weighted_[j] * std::polar(1.0, -0.5 * p2_[j] * t);
    const complexd amp = simpson_complex(integrand, dp_);
    return std::norm(amp) / (2.0 * std::numbers::pi);
  }

private:
  std::size_t p_nodes_;
  double p_max_ = 0.0;
  double dp_ = 0.0;
  std::vector<complexd> weighted_;
  std::vector<double> p2_;
};

inline double kijowski_raw_density(const WavePacketSpec& packet, const DetectorSpec& det,
                                   double t, std::size_t p_nodes = 4096) {
  return KijowskiEvaluator(packet, det, p_nodes)(t);
}

/// Semi-classical density: each classical particle drawn from the initial
/// position and momentum distributions arrives at t = (D - x)/p, so
///   Pi_SC(t) = int dp |p| |psi~(p)|^2 |psi(D - p t, 0)|^2.
/// Evaluated in the p variable while the momentum factor is the narrow one
/// (t <= 2 sigma0^2) and in the x variable afterwards.
inline double semiclassical_raw_density(const WavePacketSpec& packet,
                                        const DetectorSpec& det, double t,
                                        std::size_t nodes = 4096) {
  const double d = det.position - packet.x0;
  if (d == 0.0) throw undefined_map("semiclassical: detector sits on the packet center");
  if (t < 0.0) throw invalid_parameter("semiclassical: t must be >= 0");

  const double s0 = packet.sigma0;
  if (t <= 2.0 * s0 * s0) {
    const double p_lo = packet.p0 - 10.0 / s0;
    const double p_hi = packet.p0 + 10.0 / s0;
    return simpson(
        [&](double p) {
          return std::abs(p) * std::norm(psi_momentum(packet, p)) *
                 std::norm(psi_position(packet, det.position - p * t, 0.0));
        },
        p_lo, p_hi, nodes);
  }
  const double x_lo = packet.x0 - 10.0 * s0;
  const double x_hi = packet.x0 + 10.0 * s0;
  return simpson(
      [&](double x) {
        const double p = (det.position - x) / t;
        return std::abs(p) / t * std::norm(psi_momentum(packet, p)) *
               std::norm(psi_position(packet, x, 0.0));
      },
      x_lo, x_hi, nodes);
}

// ---------------------------------------------------------------------------
// sampled, normalized distributions
// ---------------------------------------------------------------------------

namespace detail {

// resolution used when integrating the QC presence density over [0, T']
inline std::size_t qc_window_intervals(double t_prime) {
  auto n = static_cast<std::size_t>(std::ceil(t_prime * 400.0));
  n = std::max<std::size_t>(n, 2000);
  return n + (n % 2);
}

} // namespace detail

/// N(T') = int_0^{T'} |psi(D,t)|^2 dt; strictly increasing in T'.
inline double qc_normalization_constant(const WavePacketSpec& packet,
                                        const DetectorSpec& det, double t_prime,
                                        std::size_t n_intervals = 0) {
  packet.validate();
  if (!(t_prime > 0.0)) throw invalid_parameter("t_prime must be > 0");
  if (n_intervals == 0) n_intervals = detail::qc_window_intervals(t_prime);
  if (n_intervals % 2 != 0) ++n_intervals;
  return simpson([&](double t) { return qc_raw_density(packet, det, t); }, 0.0, t_prime,
                 n_intervals);
}

inline SampledDistribution sample_qc(const WavePacketSpec& packet,
                                     const DetectorSpec& det,
                                     const ObservationWindow& window,
                                     const TimeGrid& grid) {
  packet.validate();
  det.validate();
  window.validate();
  grid.validate();
  if (grid.t_max > window.normalization_stop)
    throw invalid_parameter("sample_qc: grid.t_max exceeds the normalization window");

  const double norm = qc_normalization_constant(packet, det, window.normalization_stop);
  if (norm < 1e-30)
    throw degenerate_normalization("QC: normalization constant vanished "
                                   "(packet never near the detector)");

  SampledDistribution dist{DistributionKind::QC, grid, {}, norm,
                           window.normalization_stop};
  dist.density.resize(grid.n_nodes());
  for (std::size_t k = 0; k < grid.n_nodes(); ++k)
    dist.density[k] = qc_raw_density(packet, det, grid.node(k)) / norm;
  return dist;
}

inline SampledDistribution sample_flux(const WavePacketSpec& packet,
                                       const DetectorSpec& det, const TimeGrid& grid) {
  packet.validate();
  det.validate();
  grid.validate();

  SampledDistribution dist{DistributionKind::F, grid, {}, 0.0, grid.t_max};
  dist.density.resize(grid.n_nodes());
  for (std::size_t k = 0; k < grid.n_nodes(); ++k)
    dist.density[k] = flux_raw_density(packet, det, grid.node(k));
  const double norm = simpson(dist.density, grid.dt());
  if (norm <= 0.0)
    throw degenerate_normalization("F: flux normalization integral is not positive");
  dist.normalization_constant = norm;
  for (auto& v : dist.density) v /= norm;
  return dist;
}

inline SampledDistribution sample_kijowski(const WavePacketSpec& packet,
                                           const DetectorSpec& det, const TimeGrid& grid,
                                           std::size_t p_nodes = 4096) {
  grid.validate();
  KijowskiEvaluator eval(packet, det, p_nodes);

  SampledDistribution dist{DistributionKind::K, grid, {}, 0.0, grid.t_max};
  dist.density.resize(grid.n_nodes());
  for (std::size_t k = 0; k < grid.n_nodes(); ++k)
    dist.density[k] = eval(grid.node(k));
  const double norm = simpson(dist.density, grid.dt());
  if (norm <= 0.0)
    throw degenerate_normalization("K: normalization integral is not positive");
  dist.normalization_constant = norm;
  for (auto& v : dist.density) v /= norm;
  return dist;
}

inline SampledDistribution sample_semiclassical(const WavePacketSpec& packet,
                                                const DetectorSpec& det,
                                                const TimeGrid& grid,
                                                std::size_t nodes = 4096) {
  packet.validate();
  det.validate();
  grid.validate();
  if (det.position == packet.x0)
    throw undefined_map("SC: detector sits on the packet center");

  SampledDistribution dist{DistributionKind::SC, grid, {}, 0.0, grid.t_max};
  dist.density.resize(grid.n_nodes());
  for (std::size_t k = 0; k < grid.n_nodes(); ++k)
    dist.density[k] = semiclassical_raw_density(packet, det, grid.node(k), nodes);
  const double norm = simpson(dist.density, grid.dt());
  if (norm <= 0.0)
    throw degenerate_normalization("SC: normalization integral is not positive");
  dist.normalization_constant = norm;
  for (auto& v : dist.density) v /= norm;
  return dist;
}

inline SampledDistribution sample(DistributionKind kind, const WavePacketSpec& packet,
                                  const DetectorSpec& det, const ObservationWindow& window,
                                  const TimeGrid& grid) {
  switch (kind) {
    case DistributionKind::QC: return sample_qc(packet, det, window, grid);
    case DistributionKind::K: return sample_kijowski(packet, det, grid);
    case DistributionKind::F: return sample_flux(packet, det, grid);
    case DistributionKind::SC: return sample_semiclassical(packet, det, grid);
  }
  throw invalid_parameter("unknown distribution kind");
}

} // namespace toalab

#endif
