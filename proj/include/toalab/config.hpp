#ifndef TOALAB_CONFIG_HPP
#define TOALAB_CONFIG_HPP

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "toalab/errors.hpp"
#include "toalab/toa_distributions.hpp"
#include "toalab/units_packets.hpp"

namespace toalab {

/// One scenario: packet, detector, observation window, time grid, requested
/// distribution kinds, agreement tolerance and output directory.
/// Defaults reproduce the reference scenario (fast right-moving packet,
/// point detector at the origin).
struct ScenarioConfig {
  WavePacketSpec packet{-10.0, 7.0, 1.0};
  DetectorSpec detector{0.0, 0.0};
  ObservationWindow window{5.0, 50.0};
  TimeGrid grid{5.0, 2000};
  std::set<DistributionKind> kinds{DistributionKind::QC, DistributionKind::K,
                                   DistributionKind::F, DistributionKind::SC};
  double tolerance = 0.02;
  std::filesystem::path output_dir = ".";

  void validate() const {
    try {
      packet.validate();
      detector.validate();
      window.validate();
      grid.validate();
    } catch (const invalid_parameter& e) {
      throw validation_error(e.what());
    }
    if (kinds.empty()) throw validation_error("kinds must not be empty");
    if (!(tolerance > 0.0)) throw validation_error("tolerance must be > 0");
  }
};

inline DistributionKind kind_from_string(const std::string& s) {
  if (s == "QC") return DistributionKind::QC;
  if (s == "K") return DistributionKind::K;
  if (s == "F") return DistributionKind::F;
  if (s == "SC") return DistributionKind::SC;
  throw parse_error("unknown distribution kind: " + s);
}

/// Applies a flat JSON object onto a config. Field names match the CLI flags.
inline void apply_json(ScenarioConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw parse_error("config root must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "x0") cfg.packet.x0 = value.get<double>();
      else if (key == "p0") cfg.packet.p0 = value.get<double>();
      else if (key == "sigma0") cfg.packet.sigma0 = value.get<double>();
      else if (key == "detector") cfg.detector.position = value.get<double>();
      else if (key == "det_width") cfg.detector.width = value.get<double>();
      else if (key == "t_max") {
        cfg.grid.t_max = value.get<double>();
        cfg.window.t_stop = cfg.grid.t_max;
      } else if (key == "t_prime") cfg.window.normalization_stop = value.get<double>();
      else if (key == "samples") cfg.grid.n_samples = value.get<std::size_t>();
      else if (key == "tolerance") cfg.tolerance = value.get<double>();
      else if (key == "out") cfg.output_dir = value.get<std::string>();
      else if (key == "kinds") {
        cfg.kinds.clear();
        for (const auto& k : value) cfg.kinds.insert(kind_from_string(k.get<std::string>()));
      } else {
        throw parse_error("unknown config field: " + key);
      }
    } catch (const nlohmann::json::exception& e) {
      throw parse_error("field '" + key + "': " + e.what());
    }
  }
}

inline ScenarioConfig load_config(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) throw parse_error("cannot open config file: " + file.string());
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(file.string() + ": " + e.what());
  }
  ScenarioConfig cfg;
  apply_json(cfg, j);
  return cfg;
}

} // namespace toalab

#endif
