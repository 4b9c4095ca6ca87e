#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace volterra {

// Tolerance for "coordinates sum to 1" at construction / validation time.
inline constexpr double SUM_TOL = 1e-12;
// Residual bound for accepting a candidate fixed point.
inline constexpr double FP_TOL = 1e-12;
// Guard for exhaustive enumeration / canonicalization (2^21 operators at m=7).
inline constexpr int MAX_ENUM_M = 7;
// Seed used when the caller does not pick one; all Monte-Carlo entry points
// derive per-start seeds as seed + start_index, so results never depend on
// thread scheduling.
inline constexpr std::uint64_t DEFAULT_SEED = 12345;

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct InvalidPointError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimensionTooLargeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A point of the (m-1)-dimensional probability simplex: m coordinates >= 0
// summing to 1 within SUM_TOL.
//
// Indexing convention used across the library: coordinate *access* is 0-based
// like any C++ container, while genotype/vertex labels in the public API
// (vertex(), FaceId, dominance pairs, face restriction) are 1-based, matching
// the usual 1..m labeling of genotypes.
class SimplexPoint {
public:
  explicit SimplexPoint(std::vector<double> coords) : c_(std::move(coords)) {
    if (c_.size() < 2) throw InvalidPointError("simplex point needs m >= 2 coordinates");
    double sum = 0.0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (!(c_[k] >= -SUM_TOL))  // also rejects NaN
        throw InvalidPointError("coordinate " + std::to_string(k + 1) + " is negative");
      if (c_[k] < 0.0) c_[k] = 0.0;  // absorb sub-tolerance rounding dust
      sum += c_[k];
    }
    if (std::abs(sum - 1.0) > SUM_TOL)
      throw InvalidPointError("coordinates sum to " + std::to_string(sum) + ", not 1");
  }

  // Fast path for library internals that construct provably valid points
  // (e.g. renormalized operator output); skips validation.
  static SimplexPoint unchecked(std::vector<double> coords) {
    return SimplexPoint(std::move(coords), 0);
  }

  int dim() const { return static_cast<int>(c_.size()); }
  double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<double>& coords() const { return c_; }

  bool operator==(const SimplexPoint& o) const { return c_ == o.c_; }

private:
  SimplexPoint(std::vector<double> coords, int) : c_(std::move(coords)) {}
  std::vector<double> c_;
};

// i-th vertex M_i of the (m-1)-simplex, i in 1..m.
inline SimplexPoint vertex(int i, int m) {
  if (m < 2) throw DimensionMismatchError("m must be >= 2");
  if (i < 1 || i > m) throw IndexError("vertex index " + std::to_string(i) + " out of 1.." + std::to_string(m));
  std::vector<double> c(static_cast<std::size_t>(m), 0.0);
  c[static_cast<std::size_t>(i - 1)] = 1.0;
  return SimplexPoint::unchecked(std::move(c));
}

inline SimplexPoint barycenter(int m) {
  if (m < 2) throw DimensionMismatchError("m must be >= 2");
  return SimplexPoint::unchecked(std::vector<double>(static_cast<std::size_t>(m), 1.0 / m));
}

inline double dist_inf(const SimplexPoint& a, const SimplexPoint& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("dist_inf: dimension mismatch");
  double d = 0.0;
  for (int k = 0; k < a.dim(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

// Divide by the exact coordinate sum; clamps rounding-level negatives to 0
// first so the result is a valid point. Exact zeros are preserved.
inline SimplexPoint renormalized(std::vector<double> c) {
  double sum = 0.0;
  for (double& v : c) {
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (!(sum > 0.0)) throw InvalidPointError("cannot renormalize: nonpositive mass");
  for (double& v : c) v /= sum;
  return SimplexPoint::unchecked(std::move(c));
}

// Face of the simplex given by zeroing a set of coordinates: the classic
// F_i = {x : x_i = 0} is FaceId::single(i); intersections like
// {x : x_1 = x_2 = 0} carry several zeroed indices. Indices are 1-based.
struct FaceId {
  std::vector<int> zeroed;

  static FaceId single(int i) { return FaceId{{i}}; }
};

inline bool on_face(const SimplexPoint& x, const FaceId& f, double tol = 0.0) {
  for (int i : f.zeroed) {
    if (i < 1 || i > x.dim()) throw IndexError("face index " + std::to_string(i) + " out of range");
    if (x[i - 1] > tol) return false;
  }
  return true;
}

inline bool is_interior(const SimplexPoint& x) {
  for (int k = 0; k < x.dim(); ++k)
    if (x[k] <= 0.0) return false;
  return true;
}

// Uniform double in [0, 1) with exactly 53 random bits. Used instead of
// std::uniform_real_distribution, whose output sequence is not pinned by the
// standard; this mapping is reproducible across platforms.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform (flat Dirichlet) sample from the open simplex: normalized
// exponential draws, redrawing degenerate cases so every coordinate is
// strictly positive.
inline SimplexPoint sample_interior(int m, std::mt19937_64& gen) {
  if (m < 2) throw DimensionMismatchError("m must be >= 2");
  std::vector<double> c(static_cast<std::size_t>(m));
  for (;;) {
    double sum = 0.0;
    for (double& v : c) {
      double u;
      do u = uniform01(gen); while (u == 0.0);
      v = -std::log(u);
      sum += v;
    }
    bool ok = sum > 0.0;
    if (ok) {
      for (double& v : c) {
        v /= sum;
        if (v <= 0.0) { ok = false; break; }
      }
    }
    if (ok) return SimplexPoint::unchecked(c);
  }
}

inline SimplexPoint sample_interior(int m, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return sample_interior(m, gen);
}

}  // namespace volterra
