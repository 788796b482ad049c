#pragma once

#include <stdexcept>
#include <string>

#include "cardiodg/dynamics.hpp"
#include "cardiodg/verify.hpp"

namespace cardiodg::app {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Box-in-space, window-in-time applied current (a localized shock).
struct StimulusSpec {
  double amplitude = 2e6;
  double x0 = 0.4, x1 = 0.6;
  double y0 = 0.4, y1 = 0.6;
  double t0 = 0.0, t1 = 1e-3;

  double operator()(double x, double y, double t) const {
    const bool in = x >= x0 && x <= x1 && y >= y0 && y <= y1 && t >= t0 && t <= t1;
    return in ? amplitude : 0.0;
  }
};

enum class Scenario { manufactured, stimulus, custom };

/// Fully validated run configuration. Defaults are the verification-study
/// values; a config file overrides individual keys.
struct RunConfig {
  verify::Model model = verify::Model::monodomain;
  Scenario scenario = Scenario::manufactured;
  int p = 1;
  int sigma = 3;
  dynamics::ModelParams params;
  StimulusSpec stimulus;
  std::string out_dir = "out";
  int stride = 1;

  struct Convergence {
    enum class Mode { h, p };
    Mode mode = Mode::h;
    int p = 1;
    int sigma_min = 0;
    int sigma_max = 5;
    int sigma = 3; // fixed mesh for p-refinement
    int p_min = 1;
    int p_max = 5;
  } convergence;
};

/// Parses the sectioned key-value config file. Unknown keys are rejected,
/// parse errors carry the line number, constraint violations name the field.
/// Throws ConfigError.
RunConfig parse_config(const std::string& path);

/// Parses config text directly (used by parse_config and tests).
RunConfig parse_config_text(const std::string& text, const std::string& origin);

} // namespace cardiodg::app
