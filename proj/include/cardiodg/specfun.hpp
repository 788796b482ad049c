#pragma once

#include <array>
#include <utility>
#include <vector>

namespace cardiodg::specfun {

/// Point in the reference triangle K = {xi, eta >= 0, xi + eta <= 1}.
struct RefPoint {
  double xi;
  double eta;
};

/// Jacobi polynomial P_n^{alpha,beta}(x), three-term recurrence.
/// Requires n >= 0 and alpha, beta > -1.
double jacobi_eval(int n, double alpha, double beta, double x);

/// d/dx P_n^{alpha,beta}(x).
double jacobi_deriv(int n, double alpha, double beta, double x);

/// Square-to-triangle collapse: xi = (1+a)(1-b)/4, eta = (1+b)/2.
/// The whole edge b = 1 maps to the single point (0, 1).
RefPoint collapse(double a, double b);

/// Orthonormal Dubiner basis function phi_{i,j} on the reference triangle.
/// Throws std::domain_error for eta >= 1 (collapsed-vertex singularity).
double dubiner_eval(int i, int j, double xi, double eta);

/// Analytic gradient (d/dxi, d/deta) of phi_{i,j}. Same domain restriction.
std::array<double, 2> dubiner_grad(int i, int j, double xi, double eta);

/// 1D Gauss rule on [-1,1] with weight (1-x)^alpha (1+x)^beta.
struct Rule1D {
  std::vector<double> points;
  std::vector<double> weights;
};

Rule1D gauss_legendre(int n);
Rule1D gauss_jacobi(int n, double alpha, double beta);

/// Quadrature rule on the reference triangle: tensor Gauss-Legendre x
/// Gauss-Jacobi(1,0) on the collapsed square, Jacobian absorbed into the
/// weights. Exact for all bivariate polynomials of total degree <=
/// `exactness`, with every node strictly interior to the triangle.
struct QuadRule {
  int exactness = 0;
  std::vector<RefPoint> points;
  std::vector<double> weights;
};

QuadRule make_quad_rule(int exactness_degree);

/// Gauss points on one edge of the reference triangle. Edge 0 runs from
/// (0,0) to (1,0), edge 1 from (1,0) to (0,1), edge 2 from (0,1) to (0,0).
/// Weights include the reference edge length; nodes exclude the vertices.
struct EdgeRule {
  std::vector<RefPoint> points;
  std::vector<double> weights;
};

EdgeRule edge_quad_points(int edge_id, int n_points);

/// Dubiner basis of total degree p tabulated at the nodes of a volume rule.
/// Index pairs are ordered by total degree, then by i; tables are stored
/// node-major: values[q * n_loc + m].
struct DubinerBasis {
  int degree = 0;
  int n_loc = 0;
  std::vector<std::pair<int, int>> index_pairs;
  QuadRule rule;
  std::vector<double> values;
  std::vector<double> grad_xi;
  std::vector<double> grad_eta;
};

DubinerBasis tabulate_basis(int p, QuadRule rule);

/// Fixed (i,j) ordering shared by every consumer of the basis.
std::vector<std::pair<int, int>> dubiner_index_pairs(int p);

} // namespace cardiodg::specfun
