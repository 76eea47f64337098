#ifndef FRICKE_ORACLE_HPP
#define FRICKE_ORACLE_HPP

#include <tuple>

#include "fricke/mat2.hpp"
#include "fricke/moves.hpp"
#include "fricke/surface.hpp"

namespace fricke {

// Normal-form lift of (x,y,z) to a rank-2 representation:
//   X = [[x,-1],[1,0]],  Y = [[0,zeta],[-1/zeta,y]],  zeta + 1/zeta = z,
// zeta = (z + sqrt(z^2-4))/2 with the principal branch (zeta = +-1 at z = +-2).
// tr X = x, tr Y = y, tr XY = z hold to roundoff for all inputs.
Representation lift_oneholed(Scalar x, Scalar y, Scalar z);

// rho -> rho . phi: new generator images are phi's images evaluated in rho.
Representation apply_automorphism(const Representation& rep, const FreeAutomorphism& phi);

// 1-cocycle on the free group, determined by its generator values (traceless).
struct Cocycle {
  std::vector<Mat2> generator_values;
};

// Value on an arbitrary word via u(gw) = u(g) + Ad_rho(g) u(w) and
// u(g^{-1}) = -Ad_rho(g^{-1}) u(g); empty word -> 0.
Mat2 extend_cocycle(const Representation& rep, const Cocycle& u, const GroupWord& w);

// Coboundary of v: generator values v - Ad_rho(g) v.
Cocycle coboundary(const Representation& rep, const Mat2& v);

// First-order deformation: generator images exp(t u(g)) rho(g).
Representation deform(const Representation& rep, const Cocycle& u, Scalar t);

struct CohomologyDims {
  int z1 = 0;  // dim Z^1 = 3 * rank (free group)
  int b1 = 0;  // rank of v -> (v - Ad_rho(g) v)_g
  int h1 = 0;  // z1 - b1
};

// Complex dimensions; numerical rank with threshold 1e-8 * sigma_max.
CohomologyDims cohomology_dimensions(const Representation& rep);

// Test-data constructors for the relative-variety residual checks.
struct FourholedSample {
  TracePoint point;
  BoundaryData boundary;
};
FourholedSample random_fourholed_sample(Rng& rng);

struct TwoholedSample {
  TracePoint point;
  BoundaryData boundary;
};
TwoholedSample random_twoholed_sample(Rng& rng);

}  // namespace fricke

#endif
