#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "volterra/extremal.hpp"
#include "volterra/simplex.hpp"

namespace volterra {

// Oscillation-amplitude band for the Cesaro diagnostic: amplitudes above
// OSC_THRESH count as oscillating, below CONV_THRESH as converged, anything
// between is inconclusive (avoids misreading slow convergence).
inline constexpr double OSC_THRESH = 0.05;
inline constexpr double CONV_THRESH = 0.005;

struct TrajectoryTooShortError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Stored orbit x^(n+1) = V(x^(n)); points[0] is the initial point.
struct Trajectory {
  std::vector<SimplexPoint> points;

  const SimplexPoint& x0() const { return points.front(); }
  long steps() const { return static_cast<long>(points.size()) - 1; }
};

template <class Op>
Trajectory iterate(const Op& V, const SimplexPoint& x0, long n) {
  if (n < 0) throw std::invalid_argument("step count must be >= 0");
  Trajectory t;
  t.points.reserve(static_cast<std::size_t>(n) + 1);
  t.points.push_back(x0);
  for (long k = 0; k < n; ++k) t.points.push_back(apply(V, t.points.back()));
  return t;
}

namespace detail {

// Compensated (Kahan) accumulator; keeps 10^6-term sums at full precision.
struct KahanSum {
  double s = 0.0, c = 0.0;

  void add(double v) {
    const double y = v - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

inline void check_checkpoints(const std::vector<long>& cps) {
  if (cps.empty()) throw std::invalid_argument("need at least one checkpoint");
  long prev = 0;
  for (long c : cps) {
    if (c <= prev) throw std::invalid_argument("checkpoints must be positive and strictly increasing");
    prev = c;
  }
}

}  // namespace detail

// Running means c_n = (1/n) sum_{k=0}^{n-1} x^(k) captured at the given
// checkpoint indices.
struct CesaroSequence {
  std::vector<long> checkpoints;
  std::vector<SimplexPoint> means;

  // max pairwise infinity-distance between checkpoint means — the
  // oscillation amplitude used by the ergodicity diagnostic
  double amplitude() const {
    double a = 0.0;
    for (std::size_t i = 0; i < means.size(); ++i)
      for (std::size_t j = i + 1; j < means.size(); ++j) a = std::max(a, dist_inf(means[i], means[j]));
    return a;
  }
};

inline CesaroSequence cesaro(const Trajectory& traj, const std::vector<long>& checkpoints) {
  detail::check_checkpoints(checkpoints);
  if (checkpoints.back() > static_cast<long>(traj.points.size()))
    throw TrajectoryTooShortError("trajectory has " + std::to_string(traj.points.size()) +
                                  " points, last checkpoint needs " + std::to_string(checkpoints.back()));
  const int m = traj.points.front().dim();
  std::vector<detail::KahanSum> acc(static_cast<std::size_t>(m));
  CesaroSequence out;
  out.checkpoints = checkpoints;
  std::size_t next = 0;
  for (long n = 1; n <= checkpoints.back(); ++n) {
    const SimplexPoint& x = traj.points[static_cast<std::size_t>(n - 1)];
    for (int k = 0; k < m; ++k) acc[static_cast<std::size_t>(k)].add(x[k]);
    if (n == checkpoints[next]) {
      std::vector<double> mean(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k) mean[static_cast<std::size_t>(k)] = acc[static_cast<std::size_t>(k)].s / n;
      out.means.push_back(renormalized(std::move(mean)));
      ++next;
    }
  }
  return out;
}

// Streaming variant: iterates the operator on the fly instead of storing the
// orbit; same means as cesaro(iterate(V, x0, n), cps).
template <class Op>
CesaroSequence cesaro_stream(const Op& V, const SimplexPoint& x0, const std::vector<long>& checkpoints) {
  detail::check_checkpoints(checkpoints);
  const int m = x0.dim();
  std::vector<detail::KahanSum> acc(static_cast<std::size_t>(m));
  CesaroSequence out;
  out.checkpoints = checkpoints;
  SimplexPoint cur = x0;
  std::size_t next = 0;
  const long last = checkpoints.back();
  for (long n = 1; n <= last; ++n) {
    for (int k = 0; k < m; ++k) acc[static_cast<std::size_t>(k)].add(cur[k]);
    if (n == checkpoints[next]) {
      std::vector<double> mean(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k) mean[static_cast<std::size_t>(k)] = acc[static_cast<std::size_t>(k)].s / n;
      out.means.push_back(renormalized(std::move(mean)));
      ++next;
    }
    if (n < last) cur = apply(V, cur);
  }
  return out;
}

// --- boundary-resolved extremal stepper -------------------------------------
//
// Long extremal orbits visit the simplex boundary at double-exponentially
// shrinking distances; in plain 64-bit arithmetic the smallest coordinate
// underflows to exact 0 within ~100 steps and the orbit is glued to a face it
// never actually reaches. For diagnostics that need the true long-run
// statistics we integrate in log-coordinates instead. The extremal update
//
//   x'_k = x_k * (x_k + 2 * sum over genotypes i that k dominates of x_i)
//
// has a nonnegative-sum update factor, so in logs it is one small
// log-sum-exp per coordinate: cancellation-free, and accurate until
// log-values leave the double range (~1e308, unreachable on any realistic
// horizon). Coordinates that are exactly 0 stay exactly 0 (-inf logs), so
// faces remain invariant.
class ResolvedExtremalStepper {
public:
  explicit ResolvedExtremalStepper(const ExtremalVolterra& E) : m_(E.dim()) {
    dominated_.resize(static_cast<std::size_t>(m_));
    for (int k = 1; k <= m_; ++k)
      for (int i = 1; i <= m_; ++i)
        if (i != k && E.dominates(k, i)) dominated_[static_cast<std::size_t>(k - 1)].push_back(i - 1);
  }

  int dim() const { return m_; }

  static std::vector<double> to_log(const SimplexPoint& x) {
    std::vector<double> l(static_cast<std::size_t>(x.dim()));
    for (int k = 0; k < x.dim(); ++k)
      l[static_cast<std::size_t>(k)] = x[k] > 0.0 ? std::log(x[k]) : -std::numeric_limits<double>::infinity();
    return l;
  }

  // materialize linear coordinates (coordinates below exp(-745) flush to 0)
  static void to_linear(const std::vector<double>& logx, std::vector<double>& x) {
    x.resize(logx.size());
    for (std::size_t k = 0; k < logx.size(); ++k) x[k] = std::exp(logx[k]);
  }

  void step(std::vector<double>& logx) const {
    scratch_.resize(logx.size());
    for (int k = 0; k < m_; ++k) {
      // log(x_k + 2 * sum of dominated x_i) via max-shifted log-sum-exp
      double mx = logx[static_cast<std::size_t>(k)];
      for (int i : dominated_[static_cast<std::size_t>(k)])
        mx = std::max(mx, std::numbers::ln2 + logx[static_cast<std::size_t>(i)]);
      double lse;
      if (mx == -std::numeric_limits<double>::infinity()) {
        lse = mx;  // the whole factor mass is zero: coordinate stays dead
      } else {
        double sum = std::exp(logx[static_cast<std::size_t>(k)] - mx);
        for (int i : dominated_[static_cast<std::size_t>(k)])
          sum += std::exp(std::numbers::ln2 + logx[static_cast<std::size_t>(i)] - mx);
        lse = mx + std::log(sum);
      }
      scratch_[static_cast<std::size_t>(k)] = logx[static_cast<std::size_t>(k)] + lse;
    }
    // renormalize: subtract log of the total mass
    double mx = scratch_[0];
    for (double v : scratch_) mx = std::max(mx, v);
    double sum = 0.0;
    for (double v : scratch_) sum += std::exp(v - mx);
    const double logz = mx + std::log(sum);
    for (std::size_t k = 0; k < scratch_.size(); ++k) logx[k] = scratch_[k] - logz;
  }

private:
  int m_;
  std::vector<std::vector<int>> dominated_;
  mutable std::vector<double> scratch_;
};

// Cesaro means of an extremal orbit integrated with the boundary-resolved
// stepper. This is the engine behind the ergodicity diagnostics.
inline CesaroSequence cesaro_resolved(const ExtremalVolterra& E, const SimplexPoint& x0,
                                      const std::vector<long>& checkpoints) {
  detail::check_checkpoints(checkpoints);
  if (E.dim() != x0.dim()) throw DimensionMismatchError("cesaro_resolved: dimension mismatch");
  const int m = E.dim();
  const ResolvedExtremalStepper stepper(E);
  std::vector<double> logx = ResolvedExtremalStepper::to_log(x0);
  std::vector<double> x;
  std::vector<detail::KahanSum> acc(static_cast<std::size_t>(m));
  CesaroSequence out;
  out.checkpoints = checkpoints;
  std::size_t next = 0;
  const long last = checkpoints.back();
  for (long n = 1; n <= last; ++n) {
    ResolvedExtremalStepper::to_linear(logx, x);
    for (int k = 0; k < m; ++k) acc[static_cast<std::size_t>(k)].add(x[static_cast<std::size_t>(k)]);
    if (n == checkpoints[next]) {
      std::vector<double> mean(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k) mean[static_cast<std::size_t>(k)] = acc[static_cast<std::size_t>(k)].s / n;
      out.means.push_back(renormalized(std::move(mean)));
      ++next;
    }
    if (n < last) stepper.step(logx);
  }
  return out;
}

// --- omega-limit estimation --------------------------------------------------

// Cluster the trailing tail_fraction of the orbit by greedy single linkage in
// trajectory order; returns cluster centroids. A singleton suggests apparent
// convergence, several clusters apparent cycling.
inline std::vector<SimplexPoint> estimate_omega_set(const Trajectory& traj, double tail_fraction = 0.1,
                                                    double cluster_tol = 1e-3) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) throw std::invalid_argument("tail_fraction must be in (0,1]");
  const long total = static_cast<long>(traj.points.size());
  const long tail = static_cast<long>(tail_fraction * static_cast<double>(total));
  if (tail < 100)
    throw TrajectoryTooShortError("tail holds " + std::to_string(tail) + " points; need >= 100");
  struct Cluster {
    std::vector<std::size_t> members;
    std::vector<double> sum;
  };
  std::vector<Cluster> clusters;
  for (long n = total - tail; n < total; ++n) {
    const SimplexPoint& p = traj.points[static_cast<std::size_t>(n)];
    Cluster* home = nullptr;
    for (Cluster& c : clusters) {
      // newest members first: successive orbit points are usually close
      for (auto it = c.members.rbegin(); it != c.members.rend(); ++it) {
        if (dist_inf(p, traj.points[*it]) <= cluster_tol) {
          home = &c;
          break;
        }
      }
      if (home) break;
    }
    if (!home) {
      clusters.push_back(Cluster{{}, std::vector<double>(static_cast<std::size_t>(p.dim()), 0.0)});
      home = &clusters.back();
    }
    home->members.push_back(static_cast<std::size_t>(n));
    for (int k = 0; k < p.dim(); ++k) home->sum[static_cast<std::size_t>(k)] += p[k];
  }
  std::vector<SimplexPoint> centers;
  centers.reserve(clusters.size());
  for (const Cluster& c : clusters) {
    std::vector<double> mean = c.sum;
    for (double& v : mean) v /= static_cast<double>(c.members.size());
    centers.push_back(renormalized(std::move(mean)));
  }
  return centers;
}

// --- fixed points -------------------------------------------------------------

struct FixedPoint {
  enum class Tag { Vertex, FaceInterior, Interior };

  SimplexPoint x;
  std::vector<int> support;  // 1-based genotype indices carrying mass
  Tag tag;
  double residual;           // inf-norm of V(x)-x
};

struct FixedPointSet {
  std::vector<FixedPoint> points;
};

namespace detail {

// Null vector of a k x k skew-symmetric +-1 matrix when the kernel is
// one-dimensional (always the case for odd k here: every even principal
// submatrix of a +-1 skew matrix has odd, hence nonzero, Pfaffian, which
// forces rank k-1). Returns empty when the kernel is trivial.
inline std::vector<double> skew_null_vector(std::vector<std::vector<double>> a) {
  const std::size_t k = a.size();
  std::vector<std::size_t> col(k);
  for (std::size_t i = 0; i < k; ++i) col[i] = i;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < k && row < k; ++c) {
    std::size_t best = row;
    for (std::size_t r = row; r < k; ++r)
      if (std::abs(a[r][c]) > std::abs(a[best][c])) best = r;
    if (std::abs(a[best][c]) < 1e-9) continue;  // structurally exact zeros only
    std::swap(a[row], a[best]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || a[r][c] == 0.0) continue;
      const double f = a[r][c] / a[row][c];
      for (std::size_t cc = c; cc < k; ++cc) a[r][cc] -= f * a[row][cc];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (k - row != 1) return {};  // kernel not one-dimensional
  // identify the free column and back-substitute with free value 1
  std::vector<char> is_pivot(k, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  std::size_t free_col = k;
  for (std::size_t c = 0; c < k; ++c)
    if (!is_pivot[c]) free_col = c;
  std::vector<double> v(k, 0.0);
  v[free_col] = 1.0;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    const std::size_t c = pivot_col[r];
    double rhs = 0.0;
    for (std::size_t cc = 0; cc < k; ++cc)
      if (cc != c) rhs -= a[r][cc] * v[cc];
    v[c] = rhs / a[r][c];
  }
  return v;
}

}  // namespace detail

// All fixed points of an extremal operator, found exactly by support
// enumeration: a point with support S is fixed iff its support coordinates
// null the S x S skew submatrix. The +-1 structure limits solutions to odd
// supports with a unique kernel direction, so the set below is complete.
inline FixedPointSet fixed_points_extremal(const ExtremalVolterra& E) {
  const int m = E.dim();
  if (m > MAX_ENUM_M) throw DimensionTooLargeError("fixed-point enumeration supports m <= " + std::to_string(MAX_ENUM_M));
  FixedPointSet out;
  auto push = [&](std::vector<double> coords, std::vector<int> support) {
    SimplexPoint x = SimplexPoint::unchecked(std::move(coords));
    const double res = dist_inf(apply(E, x), x);
    if (res > FP_TOL) return;  // numerical guard; candidates are exact solves
    FixedPoint::Tag tag = FixedPoint::Tag::FaceInterior;
    if (support.size() == 1) tag = FixedPoint::Tag::Vertex;
    else if (static_cast<int>(support.size()) == m) tag = FixedPoint::Tag::Interior;
    out.points.push_back(FixedPoint{std::move(x), std::move(support), tag, res});
  };
  // vertices first (always fixed), then larger supports by size and position
  for (int v = 1; v <= m; ++v) push(vertex(v, m).coords(), {v});
  for (int size = 3; size <= m; size += 2) {
    // lexicographic combinations of 1..m of the given size
    std::vector<int> s(static_cast<std::size_t>(size));
    std::iota(s.begin(), s.end(), 1);
    for (;;) {
      std::vector<std::vector<double>> sub(static_cast<std::size_t>(size),
                                           std::vector<double>(static_cast<std::size_t>(size), 0.0));
      for (int p = 0; p < size; ++p)
        for (int q = 0; q < size; ++q)
          if (p != q)
            sub[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
                E.dominates(s[static_cast<std::size_t>(p)], s[static_cast<std::size_t>(q)]) ? 1.0 : -1.0;
      std::vector<double> v = detail::skew_null_vector(std::move(sub));
      if (!v.empty()) {
        if (v[0] < 0.0)
          for (double& w : v) w = -w;
        double sum = 0.0;
        bool positive = true;
        for (double w : v) {
          if (w <= 0.0) { positive = false; break; }
          sum += w;
        }
        // components of genuine solutions are rationals with small
        // denominators, so the positivity test needs no tolerance subtlety
        if (positive) {
          std::vector<double> coords(static_cast<std::size_t>(m), 0.0);
          for (int p = 0; p < size; ++p)
            coords[static_cast<std::size_t>(s[static_cast<std::size_t>(p)] - 1)] = v[static_cast<std::size_t>(p)] / sum;
          push(std::move(coords), s);
        }
      }
      // next combination
      int i = size - 1;
      while (i >= 0 && s[static_cast<std::size_t>(i)] == m - (size - 1 - i)) --i;
      if (i < 0) break;
      ++s[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

// --- invariant segment check ---------------------------------------------------

struct SegmentReport {
  double max_deviation = 0.0;          // worst off-segment distance of an image
  std::optional<SimplexPoint> limit;   // common limit of segment trajectories
  long limit_steps = 0;                // steps until the slowest start settled
};

// For sampled tau, checks that V(tau a + (1-tau) b) stays on the segment
// [a, b]; then follows trajectories from interior tau values until they
// settle within limit_tol of either endpoint.
inline SegmentReport check_invariant_segment(const ExtremalVolterra& E, const SimplexPoint& a,
                                             const SimplexPoint& b, int samples,
                                             long max_steps = 100000, double limit_tol = 1e-6) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  const int m = E.dim();
  if (a.dim() != m || b.dim() != m) throw DimensionMismatchError("segment endpoints of wrong dimension");
  double ab2 = 0.0;
  for (int k = 0; k < m; ++k) ab2 += (a[k] - b[k]) * (a[k] - b[k]);
  if (ab2 == 0.0) throw std::invalid_argument("segment endpoints coincide");
  SegmentReport rep;
  for (int s = 0; s < samples; ++s) {
    const double tau = static_cast<double>(s) / (samples - 1);
    std::vector<double> p(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) p[static_cast<std::size_t>(k)] = tau * a[k] + (1.0 - tau) * b[k];
    const SimplexPoint q = apply(E, SimplexPoint::unchecked(std::move(p)));
    // project the image back onto the segment and measure the residual
    double dot = 0.0;
    for (int k = 0; k < m; ++k) dot += (q[k] - b[k]) * (a[k] - b[k]);
    const double tau2 = dot / ab2;
    double dev = 0.0;
    for (int k = 0; k < m; ++k) dev = std::max(dev, std::abs(q[k] - (tau2 * a[k] + (1.0 - tau2) * b[k])));
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  // limit behavior from a spread of interior tau values
  for (double tau : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    std::vector<double> p(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) p[static_cast<std::size_t>(k)] = tau * a[k] + (1.0 - tau) * b[k];
    SimplexPoint cur = SimplexPoint::unchecked(std::move(p));
    long n = 0;
    while (n < max_steps && dist_inf(cur, a) > limit_tol && dist_inf(cur, b) > limit_tol) {
      cur = apply(E, cur);
      ++n;
    }
    const SimplexPoint* endpoint = nullptr;
    if (dist_inf(cur, a) <= limit_tol) endpoint = &a;
    else if (dist_inf(cur, b) <= limit_tol) endpoint = &b;
    if (!endpoint) {
      rep.limit.reset();
      rep.limit_steps = max_steps;
      return rep;  // did not settle within budget
    }
    if (rep.limit && dist_inf(*rep.limit, *endpoint) > limit_tol) {
      rep.limit.reset();  // starts disagree on the endpoint
      return rep;
    }
    if (!rep.limit) rep.limit = *endpoint;
    rep.limit_steps = std::max(rep.limit_steps, n);
  }
  return rep;
}

// --- Monte-Carlo Cesaro diagnostic ---------------------------------------------

enum class CesaroVerdict { Converged, Oscillating, Inconclusive };

inline std::string to_string(CesaroVerdict v) {
  switch (v) {
    case CesaroVerdict::Converged: return "CesaroConverged";
    case CesaroVerdict::Oscillating: return "CesaroOscillating";
    default: return "Inconclusive";
  }
}

// Fixed diagnostic protocol: Dirichlet-random interior starts, a long
// trajectory each, oscillation amplitude = max pairwise inf-distance between
// the running means at the checkpoints.
struct DiagnosticConfig {
  int starts = 32;
  long steps = 1000000;
  std::vector<long> checkpoints = {10000, 30000, 100000, 300000, 1000000};
  std::uint64_t seed = DEFAULT_SEED;
  int threads = 0;  // 0 = hardware concurrency; VOLTERRA_THREADS caps either way
};

struct StartDiagnostic {
  std::uint64_t seed;
  SimplexPoint start;
  double amplitude;
  std::vector<SimplexPoint> means;
};

struct MonteCarloResult {
  std::vector<long> checkpoints;
  std::vector<StartDiagnostic> starts;
  double max_amplitude = 0.0;
  double fraction_oscillating = 0.0;
  CesaroVerdict verdict = CesaroVerdict::Inconclusive;
};

namespace detail {

inline int env_thread_cap() {
  if (const char* s = std::getenv("VOLTERRA_THREADS")) {
    const int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 0;
}

inline int resolve_threads(int requested, int jobs) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const int cap = env_thread_cap(); cap > 0) n = std::min(n, cap);
  return std::max(1, std::min(n, jobs));
}

}  // namespace detail

// Runs the diagnostic protocol. Start k draws its point from seed
// cfg.seed + k, so the result is identical no matter how many worker threads
// execute it.
inline MonteCarloResult monte_carlo_cesaro(const ExtremalVolterra& E, const DiagnosticConfig& cfg = {}) {
  if (cfg.starts < 1) throw std::invalid_argument("need at least one start");
  std::vector<long> cps = cfg.checkpoints;
  detail::check_checkpoints(cps);
  if (cps.back() > cfg.steps) throw std::invalid_argument("last checkpoint exceeds the step budget");

  MonteCarloResult result;
  result.checkpoints = cps;
  result.starts.resize(static_cast<std::size_t>(cfg.starts),
                       StartDiagnostic{0, barycenter(E.dim()), 0.0, {}});

  const int threads = detail::resolve_threads(cfg.threads, cfg.starts);
  auto worker = [&](int first) {
    for (int k = first; k < cfg.starts; k += threads) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
      const SimplexPoint x0 = sample_interior(E.dim(), seed);
      CesaroSequence seq = cesaro_resolved(E, x0, cps);
      result.starts[static_cast<std::size_t>(k)] =
          StartDiagnostic{seed, x0, seq.amplitude(), std::move(seq.means)};
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (std::thread& t : pool) t.join();
  }

  int oscillating = 0, converged = 0;
  for (const StartDiagnostic& s : result.starts) {
    result.max_amplitude = std::max(result.max_amplitude, s.amplitude);
    if (s.amplitude > OSC_THRESH) ++oscillating;
    if (s.amplitude < CONV_THRESH) ++converged;
  }
  result.fraction_oscillating = static_cast<double>(oscillating) / cfg.starts;
  if (result.fraction_oscillating >= 0.9)
    result.verdict = CesaroVerdict::Oscillating;
  else if (converged == cfg.starts)
    result.verdict = CesaroVerdict::Converged;
  else
    result.verdict = CesaroVerdict::Inconclusive;
  return result;
}

}  // namespace volterra
