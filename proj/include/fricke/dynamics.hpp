#ifndef FRICKE_DYNAMICS_HPP
#define FRICKE_DYNAMICS_HPP

#include <cstdint>
#include <map>
#include <set>

#include "fricke/algebra.hpp"
#include "fricke/moves.hpp"
#include "fricke/surface.hpp"

namespace fricke {

// Dynamical regime of the mapping class group action on a real level set
// kappa^{-1}(t) of the one-holed torus, as a function of the boundary trace.
enum class RegimeTag {
  ProperFricke,                    // t < -2: four discs, proper action
  TeichPlusFixedPoint,             // t = -2: Teichmueller discs + fixed origin
  MixedCompactErgodicProperCone,   // -2 < t < 2: ergodic compact + proper cone components
  AbelianLevel,                    // t = 2: abelian characters
  Ergodic,                         // 2 < t <= 18 (closed at 18)
  WanderingPlusErgodic,            // t > 18: wandering domains + ergodic complement
  OpenProblem,                     // mixed G+- sectors, t >= 2
};

const char* regime_name(RegimeTag tag);

struct Regime {
  RegimeTag tag;
  double t = 0.0;
  std::string note;
};

// Breakpoints {-2, 2, 18}; equality decided with tolerance tol.
Regime classify_level_set_regime(double t, double tol = kRealTol);

// Mixed G+- sectors: t < -14 wandering + ergodic, -14 <= t < 2 ergodic,
// t >= 2 open (the note records the known wandering domains for t > 6).
Regime gpm_sector_regime(GpmSector sector, double t, double tol = kRealTol);

// True iff all three coordinates are <= -2 (the closed region of three-holed
// sphere characters on high level sets; kappa >= 18 there).
bool wandering_membership(const TracePoint& p, double tol = kRealTol);

struct Histogram2d {
  int bins = 20;
  double lo = -2.0;
  double hi = 2.0;
  int chart_i = 0;
  int chart_j = 1;
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;
  std::int64_t out_of_range = 0;

  void init(int nbins, double lo_, double hi_);
  void add(double a, double b);
  std::int64_t at(int i, int j) const { return counts[static_cast<std::size_t>(i) * bins + j]; }
};

struct OrbitConfig {
  std::uint64_t seed = 0;
  std::int64_t steps = 0;
  std::int64_t record_every = 1;
  bool extended_moves = false;      // add Vieta + sign-flip moves to the sampler
  double drift_tolerance = 1e-9;    // relative; exceeding it marks the run failed
  double abort_drift = 1e-6;        // relative; exceeding it throws NumericalDriftError
  double recurrence_epsilon = 0.1;  // sup-norm radius around the start
  std::size_t max_stored_samples = 10000;
  int histogram_bins = 20;
};

struct OrbitReport {
  TracePoint start;
  OrbitConfig config;
  Scalar kappa0{};
  std::vector<TracePoint> samples;  // first max_stored_samples recorded points
  std::int64_t recorded = 0;
  double kappa_drift = 0.0;  // max |kappa - kappa0| over non-escaped samples
  std::map<CharacterClass, std::int64_t> classification_counts;
  double recurrence_stat = 0.0;
  Histogram2d bins;
  bool failed = false;    // drift exceeded config.drift_tolerance
  bool escaped = false;   // trajectory left the floating-point-faithful range
  std::int64_t escape_step = -1;
};

// Iterates uniformly random generator moves from the start point, recording
// every record_every steps. Deterministic given the seed. Orbits whose
// coordinates exceed 1e150 are frozen and flagged escaped (they count as
// far-from-start for recurrence; kappa checks stop applying).
OrbitReport random_walk_orbit(const TracePoint& start, const OrbitConfig& cfg,
                              const BoundaryData* bd = nullptr);

struct RecurrenceStats {
  double fraction = 0.0;  // recorded samples within eps of the start
  Regime predicted;       // regime prediction for kappa(start)
  std::int64_t recorded = 0;
  bool escaped = false;
};

RecurrenceStats recurrence_probe(const TracePoint& start, OrbitConfig cfg, double eps);

// Expected SU(2)-leaf masses of the bins x bins grid over [-2,2]^2 in the
// (x,y) chart at level t in (-2,2): per bin, the integral of 1/|xi_xy| summed
// over the two z-sheets. The y-integral is closed-form (arcsine); the
// x-integral is composite Simpson. Row-major, unnormalized.
std::vector<double> su2_leaf_bin_masses(double t, int bins);

struct EquidistStats {
  int bins = 0;
  std::int64_t samples = 0;
  int qualifying_bins = 0;  // expected count >= min_expected
  double min_expected = 0.0;
  double chi_square = 0.0;  // over qualifying bins
  double max_rel_dev = 0.0; // over qualifying bins
  bool degenerate = false;  // empty histogram or too few qualifying bins
};

// Compares the report's (x,y) histogram against the leaf measure on
// kappa^{-1}(t); requires -2 < t < 2 and a histogram with the given bin count.
EquidistStats equidistribution_test(const OrbitReport& report, double t, int bins,
                                    double min_expected = 100.0);

// Canonical representative of a triple under coordinate permutations and
// double sign changes: absolute values sorted ascending; a negative sign
// product is recorded by negating the largest entry.
IntTriple canonical_triple(const IntTriple& t);

enum class Traversal { BreadthFirst, DepthFirst };

// Exact breadth-first closure of the start triple under twists, Vieta moves
// and double sign changes, restricted to max |coordinate| <= bound. Returns
// canonical representatives by default, the raw reachable set when canonical
// is false. Throws std::length_error if the visited set exceeds an internal
// safety cap.
std::set<IntTriple> integer_orbit_bfs(const IntTriple& start, const BigInt& bound,
                                      bool canonical = true,
                                      Traversal order = Traversal::BreadthFirst);

}  // namespace fricke

#endif
