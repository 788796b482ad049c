#pragma once

#include <string>
#include <vector>

#include "cardiodg/config.hpp"
#include "cardiodg/output.hpp"

namespace cardiodg::app {

/// Monodomain forcing of a stimulus run (flux datum is zero).
dynamics::MonodomainScenario stimulus_scenario(const StimulusSpec& s);
/// Bidomain variant: the same current applied to both equations, which keeps
/// the compatibility condition exact.
dynamics::BidomainScenario stimulus_scenario_bidomain(const StimulusSpec& s);

struct RunResult {
  std::vector<SnapshotInfo> snapshots;
  std::vector<std::string> snapshot_files;
};

/// Executes the configured time loop, writing VTK snapshots every `stride`
/// steps (plus the initial and final states) and a per-snapshot run summary
/// CSV into the output directory. Throws ConfigError / dynamics::SolverError /
/// IoError.
RunResult run_simulation(const RunConfig& cfg);

/// Runs the configured convergence sweep and writes convergence.csv.
void run_convergence(const RunConfig& cfg);

/// Min/max of the element averages of a modal field. Cell means are the
/// oscillation-robust range measure: pointwise sampling of an unlimited
/// modal field near an under-resolved front reads the sub-cell overshoot,
/// not the wave amplitude.
std::pair<double, double> field_range(const assembly::Discretization& d,
                                      const assembly::ModalField& f);

/// Min/max over all volume quadrature nodes (the raw pointwise range).
std::pair<double, double> field_range_pointwise(const assembly::Discretization& d,
                                                const assembly::ModalField& f);

} // namespace cardiodg::app
