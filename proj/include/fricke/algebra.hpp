#ifndef FRICKE_ALGEBRA_HPP
#define FRICKE_ALGEBRA_HPP

#include <array>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "fricke/mat2.hpp"
#include "fricke/surface.hpp"

namespace fricke {

using BigInt = boost::multiprecision::cpp_int;

// Boundary trace of the commutator on the one-holed torus:
//   kappa(x,y,z) = x^2 + y^2 + z^2 - x y z - 2.
inline Scalar kappa3(Scalar x, Scalar y, Scalar z) {
  return x * x + y * y + z * z - x * y * z - 2.0;
}

Scalar kappa(const TracePoint& p);

// Exact variant for the integer enumeration paths.
inline BigInt kappa_exact(const BigInt& x, const BigInt& y, const BigInt& z) {
  return x * x + y * y + z * z - x * y * z - 2;
}

// LHS - RHS of the four-holed sphere relation
//   x^2+y^2+z^2+xyz = (ab+cd)x + (bc+ad)y + (ac+bd)z + (4-a^2-b^2-c^2-d^2-abcd);
// zero exactly on the relative character variety for boundary traces (a,b,c,d).
Scalar fourholed_residual(const TracePoint& p, const BoundaryData& bd);

// Residuals of the two defining equations of the two-holed torus variety:
//   eq1 = (a+b) - (xw + yv + uz - xyu)
//   eq2 = ab  - (x^2+y^2+z^2+u^2+v^2+w^2 + vwz - xyz - xuv - yuw - 4).
std::pair<Scalar, Scalar> twoholed_residuals(const TracePoint& p, const BoundaryData& bd);

// (tr A, tr B, tr C) with C = (AB)^{-1}; determines the character (Vogt-Fricke).
TracePoint threeholed_traces(const Representation& rep);

// Real-point classification on the one-holed torus. Interval membership uses
// closed [-2,2] with tolerance; points within tol of a boundary resolve toward
// the compact side (SU2 / SO2Locus).
CharacterClass classify_real_point(const TracePoint& p, double tol = kRealTol);

// Sector pattern of a tagged point (the four G+- components).
enum class GpmSector { RRR, R_iR_iR, iR_R_iR, iR_iR_R, Invalid };

const char* gpm_sector_name(GpmSector s);

// Requires sector tags; Invalid when a value violates its tag, when the tag
// pattern is not one of the four components, or when kappa fails to be real.
GpmSector classify_gpm_sector(const TracePoint& p, double tol = kRealTol);

struct EulerRange {
  int lo = 0;
  int hi = 0;
  int component_count = 0;  // 4g + 2b - 3
};

// Euler-class range Z cap [2-2g-b, 2g-2+b] for genus g with b boundary
// components; requires chi = 2-2g-b < 0.
EulerRange euler_class_range(int genus, int boundary_components);

// chi + (1/2pi) sum(theta_i - 2pi), the Euler class of a singular hyperbolic
// structure with the given cone angles (Gauss-Bonnet).
double euler_class_cone(int chi, const std::vector<double>& cone_angles);

// Admissibility of a singular uniformization: euler_class_cone(...) < 0.
bool cone_structure_admissible(int chi, const std::vector<double>& cone_angles);

// Sign triple labelling the four Fricke components (kappa <= -2, coordinates
// real, nonzero; sign product is forced positive there).
std::array<int, 3> fricke_component_label(const TracePoint& p, double tol = kRealTol);

}  // namespace fricke

#endif
