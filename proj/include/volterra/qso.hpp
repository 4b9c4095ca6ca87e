#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "volterra/simplex.hpp"

namespace volterra {

struct InvalidCoefficientsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Permutation of genotype labels 1..m. operator()(i) gives pi(i), 1-based.
class Permutation {
public:
  explicit Permutation(std::vector<int> image_1based) : img_(std::move(image_1based)) {
    const int m = static_cast<int>(img_.size());
    if (m < 1) throw std::invalid_argument("empty permutation");
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int v : img_) {
      if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("permutation image is not a bijection of 1.." + std::to_string(m));
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  int dim() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= dim(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv));
  }

  const std::vector<int>& image() const { return img_; }
  bool operator==(const Permutation& o) const { return img_ == o.img_; }

private:
  std::vector<int> img_;
};

// All m! permutations of 1..m in lexicographic order of their image vectors.
inline std::vector<Permutation> all_permutations(int m) {
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(img); while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// T_pi: (T_pi x)_k = x_{pi(k)}.
inline SimplexPoint apply_permutation(const Permutation& pi, const SimplexPoint& x) {
  if (pi.dim() != x.dim()) throw DimensionMismatchError("apply_permutation: dimension mismatch");
  std::vector<double> y(static_cast<std::size_t>(x.dim()));
  for (int k = 1; k <= x.dim(); ++k) y[static_cast<std::size_t>(k - 1)] = x[pi(k) - 1];
  return SimplexPoint::unchecked(std::move(y));
}

// Heredity coefficients p_{ij,k} of a quadratic stochastic operator
//   (Vx)_k = sum_{i,j} p_{ij,k} x_i x_j
// with p_{ij,k} >= 0, p_{ij,k} = p_{ji,k} and sum_k p_{ij,k} = 1.
// Stored for i <= j only, so the symmetry condition is structural.
class QsoCoefficients {
public:
  // entries: flat values for pairs i<=j in lexicographic pair order, k-major
  // within a pair: value of p_{ij,k} at [pair_rank(i,j)*m + (k-1)].
  // Validates nonnegativity and the per-pair unit sums.
  QsoCoefficients(int m, std::vector<double> packed) : m_(m), p_(std::move(packed)) {
    if (m_ < 2) throw DimensionMismatchError("m must be >= 2");
    const std::size_t expected = static_cast<std::size_t>(pair_count(m_)) * static_cast<std::size_t>(m_);
    if (p_.size() != expected)
      throw InvalidCoefficientsError("packed coefficient vector has wrong length");
    for (int i = 1; i <= m_; ++i)
      for (int j = i; j <= m_; ++j) {
        double sum = 0.0;
        for (int k = 1; k <= m_; ++k) {
          const double v = p(i, j, k);
          if (!(v >= 0.0))
            throw InvalidCoefficientsError("p[" + std::to_string(i) + "," + std::to_string(j) +
                                           "," + std::to_string(k) + "] is negative");
          sum += v;
        }
        if (std::abs(sum - 1.0) > SUM_TOL)
          throw InvalidCoefficientsError("coefficients for pair (" + std::to_string(i) + "," +
                                         std::to_string(j) + ") sum to " + std::to_string(sum) +
                                         ", not 1");
      }
  }

  // Convenience builder from sparse entries; omitted entries are 0 and
  // symmetric duplicates (i,j)/(j,i) may both appear if they agree.
  struct Entry {
    int i, j, k;
    double v;
  };
  static QsoCoefficients from_entries(int m, const std::vector<Entry>& entries) {
    std::vector<double> packed(static_cast<std::size_t>(pair_count(m)) * static_cast<std::size_t>(m), 0.0);
    std::vector<char> set_flags(packed.size(), 0);
    for (const Entry& e : entries) {
      if (e.i < 1 || e.i > m || e.j < 1 || e.j > m || e.k < 1 || e.k > m)
        throw InvalidCoefficientsError("entry index out of range for pair (" + std::to_string(e.i) +
                                       "," + std::to_string(e.j) + ")");
      const std::size_t idx = flat_index(m, e.i, e.j, e.k);
      if (set_flags[idx] && packed[idx] != e.v)
        throw InvalidCoefficientsError("conflicting values for pair (" + std::to_string(e.i) + "," +
                                       std::to_string(e.j) + ")");
      packed[idx] = e.v;
      set_flags[idx] = 1;
    }
    return QsoCoefficients(m, std::move(packed));
  }

  int dim() const { return m_; }

  // p_{ij,k}, any index order, 1-based.
  double p(int i, int j, int k) const { return p_[flat_index(m_, i, j, k)]; }

  const std::vector<double>& packed() const { return p_; }

  bool operator==(const QsoCoefficients& o) const { return m_ == o.m_ && p_ == o.p_; }

  static int pair_count(int m) { return m * (m + 1) / 2; }

  // Rank of the unordered pair {i,j} (with i<=j after sorting) among pairs in
  // lexicographic order (1,1),(1,2),...,(1,m),(2,2),...,(m,m).
  static int pair_rank(int m, int i, int j) {
    if (i > j) std::swap(i, j);
    return (i - 1) * m - (i - 1) * i / 2 + (j - 1);
  }

private:
  static std::size_t flat_index(int m, int i, int j, int k) {
    return static_cast<std::size_t>(pair_rank(m, i, j)) * static_cast<std::size_t>(m) +
           static_cast<std::size_t>(k - 1);
  }

  int m_;
  std::vector<double> p_;
};

// (Vx)_k = sum_{i,j} p_{ij,k} x_i x_j, computed as the off-diagonal pairs
// twice plus the diagonal, then renormalized by the exact sum.
inline SimplexPoint apply(const QsoCoefficients& V, const SimplexPoint& x) {
  const int m = V.dim();
  if (x.dim() != m) throw DimensionMismatchError("apply: dimension mismatch");
  std::vector<double> y(static_cast<std::size_t>(m), 0.0);
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      const double w = (i == j ? 1.0 : 2.0) * x[i - 1] * x[j - 1];
      if (w == 0.0) continue;
      for (int k = 1; k <= m; ++k) y[static_cast<std::size_t>(k - 1)] += w * V.p(i, j, k);
    }
  }
  return renormalized(std::move(y));
}

// Conjugated operator W = T_pi^{-1} . V . T_pi, i.e. the unique coefficient
// tensor with apply(W, x) == T_pi^{-1}(apply(V, T_pi x)) for all x. In index
// form: p^W_{ij,k} = p^V_{pi^{-1}(i), pi^{-1}(j), pi^{-1}(k)}.
inline QsoCoefficients conjugate(const QsoCoefficients& V, const Permutation& pi) {
  const int m = V.dim();
  if (pi.dim() != m) throw DimensionMismatchError("conjugate: dimension mismatch");
  const Permutation inv = pi.inverse();
  std::vector<double> packed(static_cast<std::size_t>(QsoCoefficients::pair_count(m)) *
                                 static_cast<std::size_t>(m),
                             0.0);
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        packed[static_cast<std::size_t>(QsoCoefficients::pair_rank(m, i, j)) *
                   static_cast<std::size_t>(m) +
               static_cast<std::size_t>(k - 1)] = V.p(inv(i), inv(j), inv(k));
  return QsoCoefficients(m, std::move(packed));
}

}  // namespace volterra
