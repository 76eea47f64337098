#ifndef FRICKE_MAT2_HPP
#define FRICKE_MAT2_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "fricke/surface.hpp"

namespace fricke {

// 2x2 complex matrix, row major. Group elements are expected to satisfy
// |det - 1| <= 1e-9; Lie-algebra elements |tr| <= 1e-12.
struct Mat2 {
  Scalar a{0}, b{0}, c{0}, d{0};

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 zero() { return {0, 0, 0, 0}; }

  Scalar trace() const { return a + d; }
  Scalar det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator*(Scalar s) const { return {a * s, b * s, c * s, d * s}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  // General inverse; divides by det.
  Mat2 inverse() const;

  double norm() const;  // max of entry magnitudes
};

inline Mat2 operator*(Scalar s, const Mat2& m) { return m * s; }

bool approx_equal(const Mat2& p, const Mat2& q, double tol);

// exp(M) for traceless M via Cayley-Hamilton: M^2 = -det(M) I, so
// exp(M) = cosh(delta) I + sinh(delta)/delta M with delta = sqrt(-det M).
Mat2 exp_traceless(const Mat2& m);

// Ad_g(v) = g v g^{-1}.
Mat2 ad(const Mat2& g, const Mat2& v);

// Word in a rank-r free group: letters are (generator index, exponent +-1).
struct GroupWord {
  struct Letter {
    int gen = 0;
    int exp = 1;
  };
  std::vector<Letter> letters;

  static GroupWord empty() { return {}; }
  static GroupWord gen(int i, int e = 1) { return {{{i, e}}}; }

  GroupWord operator*(const GroupWord& o) const;
  GroupWord inverse() const;
  GroupWord reduced() const;  // free reduction (cancel adjacent g g^{-1})
  bool operator==(const GroupWord& o) const;
};

// Images of the free generators; rank = generator_images.size().
struct Representation {
  std::vector<Mat2> generator_images;

  int rank() const { return static_cast<int>(generator_images.size()); }
};

// Product of generator images along the word; empty word -> identity.
// Throws std::out_of_range for a generator index outside the rank.
Mat2 word_eval(const Representation& rep, const GroupWord& w);

// Deterministic random source. All sampling in the library goes through
// explicit Rng values; there are no global generators.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  // uniform in [0,1) with 53-bit resolution
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // standard normal (polar method)
  double normal();
  // uniform over {0,...,n-1}, rejection sampled
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Haar-random SU(2) via unit quaternions.
Mat2 random_su2(Rng& rng);
// Random SL(2,R): rotation * diag(r, 1/r) * rotation, log r ~ N(0,1).
Mat2 random_sl2r(Rng& rng);
// Random SL(2,C): Gaussian entries rescaled to unit determinant.
Mat2 random_sl2c(Rng& rng);

}  // namespace fricke

#endif
