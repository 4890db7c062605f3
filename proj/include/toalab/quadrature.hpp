#ifndef TOALAB_QUADRATURE_HPP
#define TOALAB_QUADRATURE_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "toalab/errors.hpp"

namespace toalab {

/// Running integral of uniformly sampled data using per-pair Simpson
/// parabolas. Needs an even number of intervals (odd sample count >= 3);
/// the last entry then equals the composite Simpson total exactly.
inline std::vector<double> cumulative_simpson(std::span<const double> f, double dx) {
  const std::size_t n = f.size();
  if (n < 3 || n % 2 == 0)
    throw invalid_parameter("cumulative_simpson: sample count must be odd and >= 3");
  if (!(dx > 0.0)) throw invalid_parameter("cumulative_simpson: dx must be > 0");

  std::vector<double> cum(n);
  cum[0] = 0.0;
  const double h12 = dx / 12.0;
  for (std::size_t i = 0; i + 2 < n; i += 2) {
    // parabola through (f_i, f_{i+1}, f_{i+2}), split into its two halves
    cum[i + 1] = cum[i] + h12 * (5.0 * f[i] + 8.0 * f[i + 1] - f[i + 2]);
    cum[i + 2] = cum[i + 1] + h12 * (-f[i] + 8.0 * f[i + 1] + 5.0 * f[i + 2]);
  }
  return cum;
}

/// Composite Simpson over an odd number of uniform samples.
inline double simpson(std::span<const double> f, double dx) {
  return cumulative_simpson(f, dx).back();
}

/// Composite Simpson of f over [a, b] with n intervals (n even).
template <class F>
double simpson(F&& f, double a, double b, std::size_t n) {
  if (n < 2 || n % 2 != 0) throw invalid_parameter("simpson: n must be even and >= 2");
  const double dx = (b - a) / static_cast<double>(n);
  std::vector<double> samples(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    samples[i] = f(a + static_cast<double>(i) * dx);
  return simpson(samples, dx);
}

/// Complex-valued composite Simpson of pre-tabulated samples.
inline std::complex<double> simpson_complex(std::span<const std::complex<double>> f,
                                            double dx) {
  const std::size_t n = f.size();
  if (n < 3 || n % 2 == 0)
    throw invalid_parameter("simpson_complex: sample count must be odd and >= 3");
  std::complex<double> acc = f[0] + f[n - 1];
  for (std::size_t i = 1; i + 1 < n; ++i)
    acc += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  return acc * (dx / 3.0);
}

} // namespace toalab

#endif
