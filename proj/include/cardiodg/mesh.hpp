#pragma once

#include <array>
#include <vector>

#include "cardiodg/specfun.hpp"

namespace cardiodg::mesh {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Structured triangulation of the unit square at refinement level sigma:
/// (2^sigma)^2 cells, each split by the diagonal parallel to (0,0)-(1,1),
/// giving 2*4^sigma counter-clockwise triangles.
struct Triangulation {
  struct InteriorFace {
    int elem1 = -1;
    int elem2 = -1;
    int edge1 = -1; // local edge of elem1 (edge k joins vertices k, k+1 mod 3)
    int edge2 = -1;
    Vec2 normal;    // unit, oriented from elem1 to elem2
    double length = 0.0;
    double h_face = 0.0; // min of the two adjacent element diameters
  };
  struct BoundaryFace {
    int elem = -1;
    int edge = -1;
    Vec2 normal;    // outward unit normal
    double length = 0.0;
    double h_face = 0.0;
  };

  int level = 0;
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> elements;
  std::vector<InteriorFace> interior_faces;
  std::vector<BoundaryFace> boundary_faces;

  int n_elements() const { return static_cast<int>(elements.size()); }
};

/// Throws std::invalid_argument for sigma outside [0, 12].
Triangulation unit_square_mesh(int sigma);

/// Affine map x = origin + J * (xi, eta) from the reference triangle onto a
/// physical element; jac_inv_t pushes reference gradients forward.
struct AffineMap {
  Vec2 origin;
  double jac[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  double jac_inv[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  double det = 0.0; // > 0 for CCW elements

  Vec2 to_physical(const specfun::RefPoint& p) const {
    return {origin.x + jac[0][0] * p.xi + jac[0][1] * p.eta,
            origin.y + jac[1][0] * p.xi + jac[1][1] * p.eta};
  }
  specfun::RefPoint to_reference(const Vec2& x) const {
    const double dx = x.x - origin.x;
    const double dy = x.y - origin.y;
    return {jac_inv[0][0] * dx + jac_inv[0][1] * dy,
            jac_inv[1][0] * dx + jac_inv[1][1] * dy};
  }
  /// Physical gradient from a reference gradient: J^{-T} * g.
  Vec2 push_gradient(double g_xi, double g_eta) const {
    return {jac_inv[0][0] * g_xi + jac_inv[1][0] * g_eta,
            jac_inv[0][1] * g_xi + jac_inv[1][1] * g_eta};
  }
};

/// Throws std::runtime_error on a degenerate (non-positive-area) element.
std::vector<AffineMap> build_affine_maps(const Triangulation& tri);

double element_diameter(const Triangulation& tri, int elem);

/// Matched trace points on a face: the q-th entry of ref1 (in elem1's
/// reference coordinates) and of ref2 (elem2's) map to the same physical
/// point phys[q]. For boundary faces ref2 is empty. Weights sum to the
/// physical face length.
struct FaceTrace {
  std::vector<Vec2> phys;
  std::vector<double> weights;
  std::vector<specfun::RefPoint> ref1;
  std::vector<specfun::RefPoint> ref2;
};

FaceTrace face_trace_nodes(const Triangulation& tri,
                           const std::vector<AffineMap>& maps,
                           const Triangulation::InteriorFace& face,
                           int n_points);

FaceTrace face_trace_nodes(const Triangulation& tri,
                           const std::vector<AffineMap>& maps,
                           const Triangulation::BoundaryFace& face,
                           int n_points);

} // namespace cardiodg::mesh
