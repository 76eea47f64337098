#ifndef FRICKE_POISSON_HPP
#define FRICKE_POISSON_HPP

#include <functional>

#include "fricke/surface.hpp"

namespace fricke {

// Antisymmetric coefficient matrix of a bivector field at a point.
struct Bivector {
  SurfaceModel model;
  // components[i][j] = xi^{ij}; only the leading n x n block is used.
  std::array<std::array<Scalar, 6>, 6> components{};

  Scalar at(int i, int j) const { return components[i][j]; }
};

// One-holed torus: xi_yz = 2x-yz, xi_zx = 2y-zx, xi_xy = 2z-xy
// (the contraction of d(kappa) into dx^dy^dz).
Bivector bivector_oneholed(const TracePoint& p);

// Four-holed sphere: xi_yz = ab+cd-2x-yz, xi_zx = bc+da-2y-zx,
// xi_xy = ca+bd-2z-xy.
Bivector bivector_fourholed(const TracePoint& p, const BoundaryData& bd);

// Two-holed torus bivector on (x,y,z,u,v,w); both defining invariants are
// Casimirs and the Jacobi identity holds (verified in the test suite). Pairs
// not listed below are zero.
Bivector bivector_twoholed(const TracePoint& p, const BoundaryData& bd);

// Dispatch on the model; the three-holed sphere gets the zero bivector
// (its symplectic leaves are points). bd may be null for models without
// boundary parameters in their bivector.
Bivector bivector_for(const TracePoint& p, const BoundaryData* bd);

// Scalar function of a trace point, with an optional analytic gradient
// (holomorphic derivative per coordinate). When absent, gradients are central
// finite differences with step 1e-6 * (1 + |coordinate|).
struct SmoothFunction {
  std::function<Scalar(const TracePoint&)> eval;
  std::function<std::vector<Scalar>(const TracePoint&)> gradient;  // optional
};

// The i-th coordinate as a SmoothFunction (unit analytic gradient).
SmoothFunction coordinate_function(int i);

std::vector<Scalar> fd_gradient(const std::function<Scalar(const TracePoint&)>& f,
                                const TracePoint& p);

// Richardson-extrapolated central differences (used for the inner brackets
// of the Jacobi check).
std::vector<Scalar> fd_gradient_richardson(const std::function<Scalar(const TracePoint&)>& f,
                                           const TracePoint& p);

// {f,g}(p) = sum_{i,j} xi^{ij} (df_i dg_j - df_j dg_i): the double sum runs
// over ordered pairs, so {x_i,x_j} = 2 xi^{ij}. Only ratios and vanishing are
// consumed downstream; the convention is kept as printed.
Scalar poisson_bracket(const SmoothFunction& f, const SmoothFunction& g,
                       const TracePoint& p, const BoundaryData* bd = nullptr);

// max over coordinate triples (f,g,h) of |{f,{g,h}} + {g,{h,f}} + {h,{f,g}}|,
// inner brackets differentiated by Richardson finite differences.
double jacobi_residual(const TracePoint& p, const BoundaryData* bd = nullptr);

struct DegenerateChartError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Density 1/|xi_{ij}(p)| of the leafwise symplectic measure in the chart that
// projects out the remaining coordinate (one-holed torus). Throws
// DegenerateChartError when the component vanishes at p.
double leaf_measure_density(const TracePoint& p, int chart_i, int chart_j);

}  // namespace fricke

#endif
