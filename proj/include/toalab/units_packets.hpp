#ifndef TOALAB_UNITS_PACKETS_HPP
#define TOALAB_UNITS_PACKETS_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "toalab/errors.hpp"
#include "toalab/quadrature.hpp"

namespace toalab {

using complexd = std::complex<double>;

/// Natural units: hbar = m = omega = 1, so the trap length l0 = sqrt(hbar/(m omega)) = 1.
/// Lengths are multiples of l0, momenta of hbar/l0, times of 1/omega.
struct UnitSystem {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double l0() const { return std::sqrt(hbar / (mass * omega)); }
};

/// Gaussian initial state: center x0, mean momentum p0, position spread sigma0.
struct WavePacketSpec {
  double x0 = -10.0;
  double p0 = 7.0;
  double sigma0 = 1.0;

  void validate() const {
    if (!(sigma0 > 0.0)) throw invalid_parameter("sigma0 must be > 0");
    if (!std::isfinite(x0) || !std::isfinite(p0) || !std::isfinite(sigma0))
      throw invalid_parameter("wave packet parameters must be finite");
  }
};

/// Detector at `position` with window `width` (0 = point detector).
struct DetectorSpec {
  double position = 0.0;
  double width = 0.0;

  void validate() const {
    if (width < 0.0) throw invalid_parameter("detector width must be >= 0");
  }
};

/// Observation runs over [0, t_stop]; the QC density is normalized over the
/// larger period [0, normalization_stop].
struct ObservationWindow {
  double t_stop = 5.0;
  double normalization_stop = 50.0;

  void validate() const {
    if (!(t_stop > 0.0)) throw invalid_parameter("t_stop must be > 0");
    if (!(normalization_stop >= t_stop))
      throw invalid_parameter("normalization_stop must be >= t_stop");
  }
};

/// Position spread at time t under free evolution.
inline double sigma_t(const WavePacketSpec& s, double t) {
  const double r = t / (2.0 * s.sigma0 * s.sigma0);
  return s.sigma0 * std::sqrt(1.0 + r * r);
}

/// Analytic free evolution of the Gaussian packet:
///   psi(x,t) = (2 pi s0^2)^(-1/4) a^(-1/2)
///              exp(-(x - x0 - p0 t)^2 / (4 s0^2 a) + i p0 (x - x0) - i p0^2 t / 2),
/// with a = 1 + i t / (2 s0^2). Requires t >= 0.
inline complexd psi_position(const WavePacketSpec& s, double x, double t) {
  s.validate();
  if (t < 0.0) throw invalid_parameter("psi_position: t must be >= 0");
  const double s2 = s.sigma0 * s.sigma0;
  const complexd a{1.0, t / (2.0 * s2)};
  const double xc = s.x0 + s.p0 * t;
  const complexd exponent =
      -(x - xc) * (x - xc) / (4.0 * s2 * a) +
      complexd{0.0, s.p0 * (x - s.x0) - 0.5 * s.p0 * s.p0 * t};
  const double prefactor = std::pow(2.0 * std::numbers::pi * s2, -0.25);
  return prefactor / std::sqrt(a) * std::exp(exponent);
}

/// Spatial derivative of psi_position, from the closed form.
inline complexd psi_position_dx(const WavePacketSpec& s, double x, double t) {
  const double s2 = s.sigma0 * s.sigma0;
  const complexd a{1.0, t / (2.0 * s2)};
  const double xc = s.x0 + s.p0 * t;
  const complexd dlog = -(x - xc) / (2.0 * s2 * a) + complexd{0.0, s.p0};
  return psi_position(s, x, t) * dlog;
}

/// Momentum representation of the initial state:
///   psi~(p) = (2 s0^2 / pi)^(1/4) exp(-s0^2 (p - p0)^2 - i p x0).
inline complexd psi_momentum(const WavePacketSpec& s, double p) {
  s.validate();
  const double s2 = s.sigma0 * s.sigma0;
  const double prefactor = std::pow(2.0 * s2 / std::numbers::pi, 0.25);
  return prefactor * std::exp(complexd{-s2 * (p - s.p0) * (p - s.p0), -p * s.x0});
}

/// The t = 0 state as a callable amplitude.
struct InitialState {
  WavePacketSpec spec;
  complexd operator()(double x) const { return psi_position(spec, x, 0.0); }
};

inline InitialState make_gaussian(const WavePacketSpec& s) {
  s.validate();
  return InitialState{s};
}

/// L2 mass of |psi(.,t)|^2 by Simpson over [center - 10 sigma_t, center + 10 sigma_t].
inline double position_norm(const WavePacketSpec& s, double t, std::size_t n = 4096) {
  const double xc = s.x0 + s.p0 * t;
  const double half = 10.0 * sigma_t(s, t);
  return simpson([&](double x) { return std::norm(psi_position(s, x, t)); },
                 xc - half, xc + half, n);
}

} // namespace toalab

#endif
