#ifndef TOALAB_PROPAGATION_ORACLE_HPP
#define TOALAB_PROPAGATION_ORACLE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <ostream>
#include <vector>

#include "toalab/errors.hpp"
#include "toalab/units_packets.hpp"

namespace toalab {

namespace detail {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place iterative radix-2 FFT (forward: e^{-2 pi i jk/n} kernel).
inline void fft_inplace(std::vector<complexd>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw invalid_parameter("fft: size must be a power of two");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // twiddle table at full resolution, reused by every stage
  static thread_local std::vector<complexd> table;
  static thread_local std::size_t table_n = 0;
  if (table_n != n) {
    table.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
      table[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                     static_cast<double>(n));
    table_n = n;
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        complexd w = table[k * stride];
        if (inverse) w = std::conj(w);
        const complexd u = a[i + k];
        const complexd v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& c : a) c *= inv;
  }
}

} // namespace detail

/// Wavefunction sampled on a uniform periodic grid x_j = x_min + j dx,
/// j = 0..n-1, dx = (x_max - x_min)/n.
struct GridState {
  double x_min = 0.0;
  double x_max = 0.0;
  std::vector<complexd> amplitudes;
  double time = 0.0;

  std::size_t n_points() const { return amplitudes.size(); }
  double length() const { return x_max - x_min; }
  double dx() const { return length() / static_cast<double>(n_points()); }
  double x_at(std::size_t j) const { return x_min + static_cast<double>(j) * dx(); }

  /// Discrete probability mass dx * sum |psi_j|^2.
  double norm() const {
    double acc = 0.0;
    for (const auto& c : amplitudes) acc += std::norm(c);
    return acc * dx();
  }
};

/// Samples the t = 0 Gaussian on the grid and renormalizes discretely.
/// The grid must be wide enough that |psi| < 1e-12 at both edges.
inline GridState discretize(const WavePacketSpec& spec, double x_min, double x_max,
                            std::size_t n_points) {
  spec.validate();
  if (!(x_max > x_min)) throw invalid_parameter("discretize: x_max must exceed x_min");
  if (!detail::is_power_of_two(n_points))
    throw invalid_parameter("discretize: n_points must be a power of two");

  if (std::abs(psi_position(spec, x_min, 0.0)) >= 1e-12 ||
      std::abs(psi_position(spec, x_max, 0.0)) >= 1e-12)
    throw domain_too_small("discretize: packet tail exceeds 1e-12 at a grid edge");

  GridState state;
  state.x_min = x_min;
  state.x_max = x_max;
  state.time = 0.0;
  state.amplitudes.resize(n_points);
  for (std::size_t j = 0; j < n_points; ++j)
    state.amplitudes[j] = psi_position(spec, state.x_at(j), 0.0);

  const double scale = 1.0 / std::sqrt(state.norm());
  for (auto& c : state.amplitudes) c *= scale;
  return state;
}

/// Free evolution to t_target through a single exact momentum-space step:
/// psi~_k *= exp(-i k^2 (t_target - t)/2). Unitary up to rounding.
inline GridState spectral_propagate(const GridState& state, double t_target) {
  if (t_target < state.time)
    throw invalid_parameter("spectral_propagate: t_target must be >= current time");

  const std::size_t n = state.n_points();
  const double dt = t_target - state.time;

  GridState out = state;
  out.time = t_target;
  detail::fft_inplace(out.amplitudes, false);
  const double dk = 2.0 * std::numbers::pi / state.length();
  for (std::size_t j = 0; j < n; ++j) {
    const double idx = (j < n / 2) ? static_cast<double>(j)
                                   : static_cast<double>(j) - static_cast<double>(n);
    const double k = dk * idx;
    out.amplitudes[j] *= std::polar(1.0, -0.5 * k * k * dt);
  }
  detail::fft_inplace(out.amplitudes, true);

  // wrap-around guard: the outermost 1/64 of the box must stay empty
  const std::size_t band = std::max<std::size_t>(1, n / 64);
  double edge_max = 0.0;
  for (std::size_t j = 0; j < band; ++j) {
    edge_max = std::max(edge_max, std::abs(out.amplitudes[j]));
    edge_max = std::max(edge_max, std::abs(out.amplitudes[n - 1 - j]));
  }
  if (edge_max >= 1e-8)
    throw domain_too_small("spectral_propagate: packet reached the grid edge");
  return out;
}

/// Debug dump, columns: x, re_psi, im_psi.
inline void dump_grid_csv(const GridState& state, std::ostream& os) {
  os << "x,re_psi,im_psi\n";
  char buf[128];
  for (std::size_t j = 0; j < state.n_points(); ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", state.x_at(j),
                  state.amplitudes[j].real(), state.amplitudes[j].imag());
    os << buf;
  }
}

} // namespace toalab

#endif
