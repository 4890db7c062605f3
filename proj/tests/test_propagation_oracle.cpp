#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toalab/propagation_oracle.hpp"

using namespace toalab;
using Catch::Matchers::WithinAbs;

namespace {
const WavePacketSpec kFig1{-10.0, 7.0, 1.0};

double max_pointwise_deviation(const GridState& state, const WavePacketSpec& spec) {
  double max_dev = 0.0;
  for (std::size_t j = 0; j < state.n_points(); ++j)
    max_dev = std::max(max_dev, std::abs(state.amplitudes[j] -
                                         psi_position(spec, state.x_at(j), state.time)));
  return max_dev;
}
} // namespace

TEST_CASE("discretize yields a unit-mass grid state") {
  const GridState s = discretize(kFig1, -40.0, 40.0, 8192);
  CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-9));
  CHECK(s.time == 0.0);
}

TEST_CASE("discretize rejects grids the packet leaks out of") {
  CHECK_THROWS_AS(discretize(kFig1, -11.0, -9.0, 512), domain_too_small);
}

TEST_CASE("discretize validates grid parameters") {
  CHECK_THROWS_AS(discretize(kFig1, -40.0, 40.0, 1000), invalid_parameter);
  CHECK_THROWS_AS(discretize(kFig1, 40.0, -40.0, 1024), invalid_parameter);
}

TEST_CASE("discretize reproduces the peak sample") {
  const GridState s = discretize(WavePacketSpec{0.0, 0.0, 1.0}, -40.0, 40.0, 8192);
  CHECK_THAT(std::norm(s.amplitudes[4096]), WithinAbs(0.3989422804014327, 1e-9));
}

TEST_CASE("zero-time propagation is the identity") {
  const GridState s = discretize(kFig1, -40.0, 40.0, 8192);
  const GridState out = spectral_propagate(s, 0.0);
  double max_dev = 0.0;
  for (std::size_t j = 0; j < s.n_points(); ++j)
    max_dev = std::max(max_dev, std::abs(out.amplitudes[j] - s.amplitudes[j]));
  CHECK(max_dev < 1e-13);
}

TEST_CASE("spectral propagation matches the analytic closed form") {
  const std::vector<WavePacketSpec> packets{{-10, 7, 1}, {0, 0, 1}, {-5, 2, 0.5}};
  const std::vector<double> times{0.0, 0.5, 1.0, 10.0 / 7.0, 3.0};
  for (const auto& packet : packets) {
    const GridState initial = discretize(packet, -40.0, 40.0, 8192);
    for (double t : times) {
      const GridState evolved = spectral_propagate(initial, t);
      INFO("packet x0=" << packet.x0 << " p0=" << packet.p0 << " t=" << t);
      CHECK(max_pointwise_deviation(evolved, packet) < 1e-8);
    }
  }
}

TEST_CASE("spectral step is unitary") {
  const GridState s = discretize(kFig1, -40.0, 40.0, 8192);
  for (double t : {0.5, 10.0 / 7.0, 3.0})
    CHECK_THAT(spectral_propagate(s, t).norm(), WithinAbs(s.norm(), 1e-10));
}

TEST_CASE("one step to t equals two steps to t/2 each") {
  const double t = 10.0 / 7.0;
  const GridState s = discretize(kFig1, -40.0, 40.0, 8192);
  const GridState direct = spectral_propagate(s, t);
  const GridState halves = spectral_propagate(spectral_propagate(s, t / 2.0), t);
  double max_dev = 0.0;
  for (std::size_t j = 0; j < s.n_points(); ++j)
    max_dev = std::max(max_dev, std::abs(direct.amplitudes[j] - halves.amplitudes[j]));
  CHECK(max_dev < 1e-12);
}

TEST_CASE("wrap-around is detected") {
  // by t = 8 the fast packet center (x0 + p0 t = 46) has left the box
  const GridState s = discretize(kFig1, -40.0, 40.0, 8192);
  CHECK_THROWS_AS(spectral_propagate(s, 8.0), domain_too_small);
  CHECK_THROWS_AS(spectral_propagate(s, -1.0), invalid_parameter);
}

TEST_CASE("free spreading law for the second moment") {
  const WavePacketSpec rest{0.0, 0.0, 1.0};
  const double t = 4.0;
  const GridState evolved = spectral_propagate(discretize(rest, -40.0, 40.0, 8192), t);
  double second = 0.0;
  for (std::size_t j = 0; j < evolved.n_points(); ++j) {
    const double x = evolved.x_at(j);
    second += x * x * std::norm(evolved.amplitudes[j]);
  }
  second *= evolved.dx();
  const double expected = rest.sigma0 * rest.sigma0 *
                          (1.0 + std::pow(t / (2.0 * rest.sigma0 * rest.sigma0), 2));
  CHECK_THAT(second, WithinAbs(expected, 1e-6));
}

TEST_CASE("grid state dumps as x, re_psi, im_psi") {
  const GridState s = discretize(kFig1, -40.0, 40.0, 1024);
  std::ostringstream os;
  dump_grid_csv(s, os);
  const std::string csv = os.str();
  CHECK(csv.rfind("x,re_psi,im_psi\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1025);
}
