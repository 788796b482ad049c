#pragma once

#include <functional>
#include <vector>

#include "cardiodg/mesh.hpp"
#include "cardiodg/sparse.hpp"
#include "cardiodg/specfun.hpp"

namespace cardiodg::assembly {

/// Global coefficient vector of a DG function, element-major then local
/// Dubiner mode.
struct ModalField {
  int degree = 0;
  int n_elements = 0;
  std::vector<double> coeff;

  static ModalField zero(int degree, int n_elements, int n_loc) {
    return {degree, n_elements,
            std::vector<double>(static_cast<std::size_t>(n_elements) * n_loc, 0.0)};
  }
};

/// Constant symmetric positive semi-definite conductivity tensor.
struct DiffusionTensor {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  static DiffusionTensor isotropic(double s) { return {s, 0.0, s}; }
};

/// Interior-penalty parameters: theta in {-1, 0, 1} selects NIP/IIP/SIP,
/// the face penalty is gamma_bar = alpha p^2 / h_F scaled by n^T Sigma n.
struct PenaltySpec {
  double alpha = 10.0;
  int theta = 1;
};

/// Scalar field of space, f(x, y).
using SpatialFn = std::function<double(double, double)>;
/// Boundary flux datum b(x, y, nx, ny) evaluated with the outward normal.
using BoundaryFn = std::function<double(double, double, double, double)>;

/// Everything assembled operators need, precomputed once per (mesh, p):
/// affine maps, the volume-tabulated basis (exactness 2p+2), basis traces on
/// every face (2p+2 Gauss points per face), the diagonal mass entries and the
/// integrals d_j of each basis function.
struct Discretization {
  mesh::Triangulation tri;
  std::vector<mesh::AffineMap> maps;
  specfun::DubinerBasis basis;
  int n_loc = 0;
  int n_dofs = 0;

  struct FaceData {
    int elem1 = -1;
    int elem2 = -1; // -1 on boundary faces
    double nx = 0.0, ny = 0.0;
    double h_face = 0.0;
    std::vector<mesh::Vec2> points;
    std::vector<double> weights;
    // Node-major tables [q * n_loc + m]; side-2 tables empty on the boundary.
    std::vector<double> v1, v2;
    std::vector<double> g1x, g1y, g2x, g2y;
  };
  std::vector<FaceData> interior_faces;
  std::vector<FaceData> boundary_faces;

  std::vector<double> mass_diag; // per dof: |det J| of the owning element
  std::vector<double> d_weights; // d_j = integral of basis function j

  int dof(int elem, int local) const { return elem * n_loc + local; }
};

Discretization make_discretization(mesh::Triangulation tri, int p);

/// Diagonal mass matrix; the entry of every mode of element K is |det J_K|.
sparse::SparseMatrix assemble_mass(const Discretization& d);

/// Stiffness pieces of the interior-penalty form: volume term K, consistency
/// face term W, penalty face term S. A = K - W^T - theta W + S.
struct StiffnessParts {
  sparse::SparseMatrix volume;      // K
  sparse::SparseMatrix consistency; // W
  sparse::SparseMatrix penalty;     // S
};

StiffnessParts assemble_stiffness_parts(const Discretization& d,
                                        const DiffusionTensor& sigma,
                                        const PenaltySpec& pen);

sparse::SparseMatrix assemble_stiffness(const Discretization& d,
                                        const DiffusionTensor& sigma,
                                        const PenaltySpec& pen);

/// Element-block-diagonal reaction matrix with scalar factor
/// chi_m * kappa * (V-1)(V-a) evaluated at quadrature points from V's modal
/// expansion.
sparse::SparseMatrix assemble_reaction(const Discretization& d,
                                       const ModalField& v, double chi_m,
                                       double kappa, double a);

/// Forcing vector: volume integral of i_ext against each basis function plus
/// the boundary-face integral of the flux datum b.
std::vector<double> assemble_forcing(const Discretization& d,
                                     const SpatialFn& i_ext,
                                     const BoundaryFn& b);

/// L2 projection onto the modal space (diagonal mass inverse applied).
ModalField modal_project(const Discretization& d, const SpatialFn& f);

/// Modal expansion value at a reference point of one element.
/// Throws std::domain_error for eta >= 1.
double evaluate_field(const Discretization& d, const ModalField& v, int elem,
                      double xi, double eta);

/// Values of field v at all volume quadrature nodes of element `elem`
/// (contraction of the tabulated basis with the local coefficients).
void evaluate_at_quad_nodes(const Discretization& d, const ModalField& v,
                            int elem, std::vector<double>& out);

/// Modal representation of the constant function 1.
std::vector<double> constant_one_vector(const Discretization& d);

} // namespace cardiodg::assembly
