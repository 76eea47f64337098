#ifndef FRICKE_MOVES_HPP
#define FRICKE_MOVES_HPP

#include <array>
#include <optional>

#include "fricke/algebra.hpp"
#include "fricke/mat2.hpp"
#include "fricke/surface.hpp"

namespace fricke {

// Polynomial moves on trace coordinates. Conventions (z = tr(XY)):
//   TwistX:  (x,y,z) -> (x, z, xz-y)        induced by X->X, Y->YX
//   TwistY:  (x,y,z) -> (z, y, yz-x)        induced by X->XY, Y->Y
//   VietaX:  (x,y,z) -> (yz-x, y, z)        and cyclic
//   SignFlipYZ: (x,y,z) -> (x,-y,-z)        lift symmetry, not in Mod
// On the four-holed sphere the Vieta moves replace one coordinate by the
// other root of the defining quadratic; twists are two-Vieta composites.
enum class MoveKind {
  TwistX,
  TwistXInv,
  TwistY,
  TwistYInv,
  VietaX,
  VietaY,
  VietaZ,
  SignFlipYZ,
  SignFlipXZ,
  SignFlipXY,
};

const char* move_name(MoveKind k);
MoveKind move_from_name(const std::string& name);
MoveKind move_inverse(MoveKind k);
bool is_twist(MoveKind k);
bool is_vieta(MoveKind k);
bool is_sign_flip(MoveKind k);

struct Move {
  MoveKind kind = MoveKind::TwistX;
  SurfaceModel model = one_holed_torus();
};

struct McgWord {
  std::vector<Move> moves;

  McgWord operator*(const McgWord& o) const;
  McgWord reversed_inverse() const;
};

TracePoint apply_move_oneholed(MoveKind m, const TracePoint& p);
TracePoint apply_move_fourholed(MoveKind m, const TracePoint& p, const BoundaryData& bd);

// Left-to-right composition; boundary data required for four-holed moves.
TracePoint apply_word(const McgWord& w, TracePoint p,
                      const BoundaryData* bd = nullptr);

// Exact integer action on the one-holed torus (for orbit enumeration).
struct IntTriple {
  BigInt x, y, z;
  friend bool operator==(const IntTriple&, const IntTriple&) = default;
  friend bool operator<(const IntTriple& p, const IntTriple& q) {
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return p.z < q.z;
  }
};

IntTriple apply_move_exact(MoveKind m, const IntTriple& t);

// Sector-tag image under a one-holed torus move (tags form a group: the
// product of the three tags is preserved). Throws for tag patterns outside
// the four valid sectors.
std::array<SectorTag, 3> sector_after_move(MoveKind m, const std::array<SectorTag, 3>& tags);

// Free-group automorphism of F2 = <X,Y> given by generator images.
struct FreeAutomorphism {
  std::array<GroupWord, 2> images;          // images of X, Y
  std::array<GroupWord, 2> inverse_images;  // images under the inverse

  FreeAutomorphism compose(const FreeAutomorphism& then) const;
};

struct NoInducedAutomorphismError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The F2-automorphism inducing a one-holed-torus twist move. Vieta and
// sign-flip moves are not induced by a single automorphism acting on
// SL(2,C)-characters (they permute lifts); requesting one throws
// NoInducedAutomorphismError.
FreeAutomorphism automorphism_of(MoveKind m);

}  // namespace fricke

#endif
