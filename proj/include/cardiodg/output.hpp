#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cardiodg/assembly.hpp"
#include "cardiodg/verify.hpp"

namespace cardiodg::app {

/// Legacy ASCII VTK (unstructured grid) writer. Each element is emitted as a
/// sub-triangulated patch of linear cells sampling the modal expansion at the
/// (p+1)(p+2)/2 lattice points of the reference triangle. One point-data
/// scalar array per named field. File writes go through a temp file + rename.
void write_vtk(const assembly::Discretization& d,
               const std::vector<std::pair<std::string, const assembly::ModalField*>>& fields,
               double time, const std::string& path);

/// Header: sigma,h,Linf,L2,H1,DG,slope_Linf,slope_L2,slope_H1,slope_DG.
/// Errors in scientific notation with 6 significant digits, slopes with six
/// decimals; rows without slopes leave the slope fields empty.
void write_convergence_csv(const std::vector<verify::ConvergenceRow>& rows,
                           const std::string& path);

void write_p_convergence_csv(const std::vector<verify::PConvergenceRow>& rows,
                             double h, const std::string& path);

struct SnapshotInfo {
  int step = 0;
  double time = 0.0;
  int iterations = 0;
  double residual = 0.0;
  double min_v = 0.0;
  double max_v = 0.0;
};

void write_run_summary_csv(const std::vector<SnapshotInfo>& rows,
                           const std::string& path);

} // namespace cardiodg::app
