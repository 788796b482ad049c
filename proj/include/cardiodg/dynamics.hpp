#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "cardiodg/assembly.hpp"
#include "cardiodg/sparse.hpp"

namespace cardiodg::dynamics {

/// Physical and numerical constants of one run.
struct ModelParams {
  double chi_m = 1e5;  // surface-to-volume ratio
  double c_m = 1.0;    // membrane capacitance
  double kappa = 19.5; // FHN cubic strength
  double a = 1.3e-2;   // FHN threshold, 0 < a < 1
  double epsilon = 1.2;
  double gamma_fhn = 0.1;
  assembly::DiffusionTensor sigma_mono = assembly::DiffusionTensor::isotropic(0.12);
  assembly::DiffusionTensor sigma_i = assembly::DiffusionTensor::isotropic(0.12);
  assembly::DiffusionTensor sigma_e = assembly::DiffusionTensor::isotropic(0.12);
  assembly::PenaltySpec penalty; // theta = 1 (SIP), alpha = 10
  double dt = 1e-4;
  double t_end = 3e-3;

  double rel_tol = 1e-10;
  int max_iter = 2000;
  int restart = 30;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  int n_steps() const;
};

/// FitzHugh-Nagumo ionic current kappa*V*(V-a)*(V-1) + w.
double i_ion(double v, double w, const ModelParams& p);

/// Implicit gating update: w_next = (w + dt*eps*V) / (1 + dt*eps*Gamma),
/// coefficient-wise (the diagonal mass matrix cancels exactly).
void gating_step(std::vector<double>& w, const std::vector<double>& v,
                 double dt, double epsilon, double gamma_fhn);

/// Space-time forcing f(x, y, t) and flux datum b(x, y, nx, ny, t).
using ForcingFn = std::function<double(double, double, double)>;
using FluxFn = std::function<double(double, double, double, double, double)>;

struct MonodomainScenario {
  ForcingFn i_ext;
  FluxFn b;
};

struct BidomainScenario {
  ForcingFn i_int;
  ForcingFn i_ext;
  FluxFn b_int;
  FluxFn b_ext;
};

struct SolverError : std::runtime_error {
  sparse::SolverReport report;
  SolverError(const std::string& msg, sparse::SolverReport r)
      : std::runtime_error(msg), report(r) {}
};

struct CompatibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Semi-implicit monodomain time stepper. The stiffness matrix and system
/// pattern are assembled once; the reaction matrix and forcing are rebuilt
/// every step. Update order within a step is fixed: gating first (from V^n),
/// then the potential solve (with w^{n+1}).
class MonodomainStepper {
 public:
  MonodomainStepper(const assembly::Discretization& d, const ModelParams& p,
                    MonodomainScenario scenario);

  void set_state(assembly::ModalField v, assembly::ModalField w);
  /// Advances to t_next = t^{n+1}. Throws SolverError on non-convergence.
  void step(double t_next);

  const assembly::ModalField& v() const { return v_; }
  const assembly::ModalField& w() const { return w_; }
  const sparse::SolverReport& last_report() const { return report_; }
  const sparse::SparseMatrix& stiffness() const { return stiffness_; }

 private:
  const assembly::Discretization& disc_;
  ModelParams params_;
  MonodomainScenario scenario_;
  sparse::SparseMatrix stiffness_;
  sparse::SparseMatrix system_; // same pattern, values rebuilt per step
  std::vector<std::int32_t> diag_pos_;
  std::vector<std::int32_t> block_pos_; // per element, n_loc^2 CSR slots
  assembly::ModalField v_, w_;
  sparse::SolverReport report_;
};

struct BidomainState {
  assembly::ModalField phi_i;
  assembly::ModalField phi_e;
  assembly::ModalField v; // phi_i - phi_e, kept exactly in sync
  assembly::ModalField w;
};

/// Semi-implicit bidomain time stepper. The singular 2N x 2N block system is
/// solved with the constant pair (1,1) deflated, then both potentials are
/// shifted by the same constant so the weighted mean of phi_e vanishes
/// (V_m is invariant under the shift). Internally the solve runs in
/// sum/difference variables, an exact row/column transform of the block
/// system that keeps the Jacobi-preconditioned spectrum O(1).
class BidomainStepper {
 public:
  BidomainStepper(const assembly::Discretization& d, const ModelParams& p,
                  BidomainScenario scenario);

  void set_state(assembly::ModalField phi_i, assembly::ModalField phi_e,
                 assembly::ModalField w);
  void step(double t_next);

  const BidomainState& state() const { return state_; }
  const sparse::SolverReport& last_report() const { return report_; }

 private:
  const assembly::Discretization& disc_;
  ModelParams params_;
  BidomainScenario scenario_;
  sparse::SparseMatrix base_;   // static sum/difference stiffness blocks
  sparse::SparseMatrix system_; // per-step values
  std::vector<std::int32_t> diag_pos_dd_;
  std::vector<std::int32_t> block_pos_dd_;
  std::vector<double> deflate_;
  BidomainState state_;
  sparse::SolverReport report_;
};

/// Signed defect of the current/flux balance required for bidomain
/// solvability: integral(I_i) - integral(I_e) + boundary(b_i) + boundary(b_e).
/// Integrated with a dedicated high-exactness rule, compensated summation.
double check_compatibility(const assembly::Discretization& d,
                           const ForcingFn& i_int, const ForcingFn& i_ext,
                           const FluxFn& b_int, const FluxFn& b_ext, double t);

struct MonodomainReduction {
  assembly::DiffusionTensor sigma;
  ForcingFn i_ext;
};

/// Proportional-tensor reduction Sigma = xi/(1+xi) Sigma_i,
/// I = (xi I_i + I_e)/(1+xi). Throws for xi <= 0.
MonodomainReduction monodomain_reduce(const assembly::DiffusionTensor& sigma_i,
                                      double xi, ForcingFn i_int,
                                      ForcingFn i_ext);

/// Subtracts the constant field that zeroes the weighted mean
/// sum_j phi_j d_j, with d_j the integrals of the basis functions.
void enforce_zero_mean(const assembly::Discretization& d,
                       assembly::ModalField& phi);

/// Weighted mean sum_j phi_j d_j (equals the integral of the field).
double weighted_mean(const assembly::Discretization& d,
                     const assembly::ModalField& phi);

} // namespace cardiodg::dynamics
