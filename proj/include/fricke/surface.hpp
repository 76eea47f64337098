#ifndef FRICKE_SURFACE_HPP
#define FRICKE_SURFACE_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fricke {

using Scalar = std::complex<double>;

// Absolute tolerance for "is real" / boundary-of-interval decisions.
inline constexpr double kRealTol = 1e-9;

enum class ModelKind {
  ThreeHoledSphere,
  OneHoledTorus,
  FourHoledSphere,
  TwoHoledTorus,
};

const char* model_name(ModelKind kind);
ModelKind model_from_name(const std::string& name);

// One of the four supported surfaces, with its fixed trace-coordinate chart.
// Coordinate and boundary counts are intrinsic to the kind:
//   three-holed sphere: (x,y,z), 3 boundary traces (a,b,c)
//   one-holed torus:    (x,y,z), 1 boundary trace (t)
//   four-holed sphere:  (x,y,z), 4 boundary traces (a,b,c,d)
//   two-holed torus:    (x,y,z,u,v,w), 2 boundary traces (a,b)
struct SurfaceModel {
  ModelKind kind = ModelKind::OneHoledTorus;

  int coordinate_count() const;
  int boundary_count() const;
  const std::vector<std::string>& coordinate_names() const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

inline SurfaceModel three_holed_sphere() { return {ModelKind::ThreeHoledSphere}; }
inline SurfaceModel one_holed_torus() { return {ModelKind::OneHoledTorus}; }
inline SurfaceModel four_holed_sphere() { return {ModelKind::FourHoledSphere}; }
inline SurfaceModel two_holed_torus() { return {ModelKind::TwoHoledTorus}; }

struct ModelMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericalDriftError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-coordinate tag for the G+- sectors of the one-holed torus:
// a coordinate is constrained to the real or the imaginary axis.
enum class SectorTag { Real, Imaginary };

// A character in the trace chart of a fixed surface model.
struct TracePoint {
  SurfaceModel model;
  std::vector<Scalar> values;
  std::optional<std::vector<SectorTag>> sector;
};

// Throws std::invalid_argument if the value count does not match the model.
TracePoint make_point(SurfaceModel model, std::vector<Scalar> values);
TracePoint make_sector_point(std::vector<Scalar> values, std::vector<SectorTag> tags);

inline TracePoint torus_point(Scalar x, Scalar y, Scalar z) {
  return make_point(one_holed_torus(), {x, y, z});
}

// True when every value is real to within tol.
bool all_real(const TracePoint& p, double tol = kRealTol);

// True when every tagged value lies on its axis to within tol.
bool sector_consistent(const TracePoint& p, double tol = kRealTol);

void require_model(const TracePoint& p, ModelKind kind, const char* where);

// Fixed boundary traces selecting a relative character variety.
struct BoundaryData {
  std::vector<Scalar> traces;
};

void require_boundary(const BoundaryData& bd, const SurfaceModel& model, const char* where);

enum class CharacterClass { SU2, SL2R, SO2Locus, ComplexOnly };

const char* character_class_name(CharacterClass c);

}  // namespace fricke

#endif
