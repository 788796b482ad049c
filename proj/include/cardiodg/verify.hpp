#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cardiodg/assembly.hpp"
#include "cardiodg/dynamics.hpp"

namespace cardiodg::verify {

enum class Model { monodomain, bidomain };

/// Gating-constant of the separable manufactured solution: substituting
/// w = k V with dV/dt = -lambda V into dw/dt = eps (V - Gamma w) gives
/// k = eps / (eps*Gamma - lambda). Throws when eps*Gamma == lambda.
double derive_gating_constant(double epsilon, double gamma_fhn, double lambda);

/// Closed-form manufactured solution on the unit square:
///   phi_i = 2 sin(2 pi x) sin(2 pi y) e^{-5t},
///   phi_e =   sin(2 pi x) sin(2 pi y) e^{-5t},
///   V = phi_i - phi_e, w = k V,
/// with the forcings and flux data that make the continuous problems hold
/// identically for the given parameters.
struct ExactSolution {
  double chi_m, c_m, kappa, a, epsilon, gamma_fhn;
  double k;      // gating constant
  double lambda; // temporal decay rate (5)
  assembly::DiffusionTensor sigma_mono, sigma_i, sigma_e;

  double v(double x, double y, double t) const;
  std::array<double, 2> grad_v(double x, double y, double t) const;
  double w(double x, double y, double t) const;
  double phi_i(double x, double y, double t) const;
  double phi_e(double x, double y, double t) const;
  std::array<double, 2> grad_phi_i(double x, double y, double t) const;
  std::array<double, 2> grad_phi_e(double x, double y, double t) const;

  double forcing_mono(double x, double y, double t) const;
  double flux_mono(double x, double y, double nx, double ny, double t) const;
  double forcing_i(double x, double y, double t) const;
  double forcing_e(double x, double y, double t) const;
  double flux_i(double x, double y, double nx, double ny, double t) const;
  double flux_e(double x, double y, double nx, double ny, double t) const;

  dynamics::MonodomainScenario monodomain_scenario() const;
  dynamics::BidomainScenario bidomain_scenario() const;
};

ExactSolution make_manufactured(const dynamics::ModelParams& p);

/// Residuals of the manufactured construction, measured by numerical
/// differentiation (complex-step central difference quotients of the closed
/// forms, independent of the forcing derivation) at `n_samples` random
/// space-time points. Returns the max absolute residual.
double max_pde_residual(const ExactSolution& exact, Model model, int n_samples,
                        unsigned seed);

/// Max |dw/dt - eps (V - Gamma w)| over random samples (analytic identity).
double max_gating_residual(const ExactSolution& exact, int n_samples,
                           unsigned seed);

struct Norms {
  double linf = 0.0;
  double l2 = 0.0;
  double h1 = 0.0;
  double dg = 0.0;
};

/// Error norms of a modal field against a closed-form exact solution:
/// L2/H1 by element quadrature, Linf as the max over the volume quadrature
/// nodes, DG as broken gradient plus the (alpha p^2 / h_F)-weighted jumps on
/// interior faces (the exact solution is continuous, so its jumps vanish).
Norms error_norms(const assembly::Discretization& d,
                  const assembly::PenaltySpec& pen,
                  const assembly::ModalField& numeric,
                  const std::function<double(double, double)>& exact,
                  const std::function<std::array<double, 2>(double, double)>&
                      exact_grad);

struct ConvergenceRow {
  int sigma = 0;
  double h = 0.0;
  Norms errors;
  Norms slopes; // vs the previous row; meaningless when has_slopes is false
  bool has_slopes = false;
};

/// Runs the manufactured problem over uniformly refined meshes and reports
/// errors at the final time plus incremental slopes.
std::vector<ConvergenceRow> run_h_convergence(Model model, int p, int sigma_min,
                                              int sigma_max,
                                              const dynamics::ModelParams& params);

struct PConvergenceRow {
  int p = 0;
  Norms errors;
};

std::vector<PConvergenceRow> run_p_convergence(Model model, int sigma, int p_min,
                                               int p_max,
                                               const dynamics::ModelParams& params);

/// Least-squares slope of log(err) against log(h).
double least_squares_slope(const std::vector<double>& h,
                           const std::vector<double>& err);

} // namespace cardiodg::verify
