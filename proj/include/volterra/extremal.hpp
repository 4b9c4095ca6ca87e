#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "volterra/qso.hpp"
#include "volterra/simplex.hpp"

namespace volterra {

struct NotVolterraError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidMatrixError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct FaceNotInvariantError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Strict pairs i<j of 1..m in lexicographic order (1,2),(1,3),...,(2,3),...
// shared by the bit encoding, the Greek parameter tuple and tournament
// serialization.
inline int strict_pair_count(int m) { return m * (m - 1) / 2; }

inline int strict_pair_rank(int m, int i, int j) {
  // pre: 1 <= i < j <= m
  return (i - 1) * (2 * m - i) / 2 + (j - i - 1);
}

// Skew-symmetric interaction matrix of a Volterra operator:
//   (Vx)_k = x_k (1 + sum_i a_{ki} x_i),  a_{ik} = -a_{ki},  |a_{ik}| <= 1.
// Constructed from the strict upper triangle so skew-symmetry is structural.
class VolterraMatrix {
public:
  // upper: values a_{ij} for pairs i<j in lexicographic order.
  VolterraMatrix(int m, const std::vector<double>& upper) : m_(m), a_(static_cast<std::size_t>(m) * m, 0.0) {
    if (m_ < 2) throw DimensionMismatchError("m must be >= 2");
    if (upper.size() != static_cast<std::size_t>(strict_pair_count(m_)))
      throw InvalidMatrixError("expected " + std::to_string(strict_pair_count(m_)) + " upper-triangle entries");
    for (int i = 1; i <= m_; ++i)
      for (int j = i + 1; j <= m_; ++j) {
        double v = upper[static_cast<std::size_t>(strict_pair_rank(m_, i, j))];
        if (!(std::abs(v) <= 1.0 + SUM_TOL))
          throw InvalidMatrixError("entry a[" + std::to_string(i) + "," + std::to_string(j) + "] exceeds 1 in magnitude");
        if (v > 1.0) v = 1.0;
        if (v < -1.0) v = -1.0;
        at(i, j) = v;
        at(j, i) = -v;
      }
  }

  int dim() const { return m_; }
  double a(int i, int j) const { return a_[static_cast<std::size_t>(i - 1) * m_ + (j - 1)]; }

  bool operator==(const VolterraMatrix& o) const { return m_ == o.m_ && a_ == o.a_; }

private:
  double& at(int i, int j) { return a_[static_cast<std::size_t>(i - 1) * m_ + (j - 1)]; }
  int m_;
  std::vector<double> a_;
};

// Extremal Volterra operator: the interaction matrix has only +-1 entries, so
// the operator is encoded by one bit per strict pair. bit(i,j) = true means
// genotype i dominates genotype j (all offspring of an i x j cross are i).
//
// Serialization is the bit string over pairs in lexicographic order, e.g.
// m=4 -> 6 chars; internally the string maps onto an integer code MSB-first,
// so the numeric order of codes equals the lexicographic order of strings.
class ExtremalVolterra {
public:
  ExtremalVolterra(int m, std::uint32_t code) : m_(m), code_(code) {
    check_dim(m_);
    if (strict_pair_count(m_) < 32 && (code_ >> strict_pair_count(m_)) != 0)
      throw std::invalid_argument("bit code out of range for m=" + std::to_string(m_));
  }

  ExtremalVolterra(int m, const std::string& bits) : m_(m), code_(0) {
    check_dim(m_);
    if (bits.size() != static_cast<std::size_t>(strict_pair_count(m_)))
      throw std::invalid_argument("expected " + std::to_string(strict_pair_count(m_)) +
                                  " bits for m=" + std::to_string(m_) + ", got " + std::to_string(bits.size()));
    for (char ch : bits) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("bit string may contain only 0/1");
      code_ = (code_ << 1) | static_cast<std::uint32_t>(ch - '0');
    }
  }

  // Derive m from the bit-string length L = m(m-1)/2.
  static ExtremalVolterra from_bits(const std::string& bits) {
    const std::size_t len = bits.size();
    for (int m = 2; m <= MAX_ENUM_M + 1; ++m)
      if (static_cast<std::size_t>(strict_pair_count(m)) == len) return ExtremalVolterra(m, bits);
    throw std::invalid_argument("bit-string length " + std::to_string(len) + " is not m(m-1)/2 for any supported m");
  }

  int dim() const { return m_; }
  std::uint32_t code() const { return code_; }
  int pair_count() const { return strict_pair_count(m_); }

  // i < j, 1-based: does i dominate j?
  bool bit(int i, int j) const {
    const int r = strict_pair_rank(m_, i, j);
    return (code_ >> (pair_count() - 1 - r)) & 1u;
  }

  // any i != j
  bool dominates(int i, int j) const { return i < j ? bit(i, j) : !bit(j, i); }

  // number of genotypes that v dominates
  int score(int v) const {
    int s = 0;
    for (int u = 1; u <= m_; ++u)
      if (u != v && dominates(v, u)) ++s;
    return s;
  }

  std::string bits() const {
    std::string s(static_cast<std::size_t>(pair_count()), '0');
    for (int r = 0; r < pair_count(); ++r)
      if ((code_ >> (pair_count() - 1 - r)) & 1u) s[static_cast<std::size_t>(r)] = '1';
    return s;
  }

  // The bit values as an integer tuple in pair order — the conventional
  // (alpha, beta, gamma, ...) parameterization for m = 3, 4.
  std::vector<int> params() const {
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(pair_count()));
    for (int i = 1; i <= m_; ++i)
      for (int j = i + 1; j <= m_; ++j) t.push_back(bit(i, j) ? 1 : 0);
    return t;
  }

  VolterraMatrix to_matrix() const {
    std::vector<double> upper;
    upper.reserve(static_cast<std::size_t>(pair_count()));
    for (int i = 1; i <= m_; ++i)
      for (int j = i + 1; j <= m_; ++j) upper.push_back(bit(i, j) ? 1.0 : -1.0);
    return VolterraMatrix(m_, upper);
  }

  QsoCoefficients to_qso() const;

  bool operator==(const ExtremalVolterra& o) const { return m_ == o.m_ && code_ == o.code_; }
  bool operator<(const ExtremalVolterra& o) const { return code_ < o.code_; }

private:
  static void check_dim(int m) {
    if (m < 2) throw DimensionMismatchError("m must be >= 2");
    if (strict_pair_count(m) > 32) throw DimensionTooLargeError("bit encoding supports m <= 8");
  }

  int m_;
  std::uint32_t code_;
};

// --- conversions -----------------------------------------------------------

// Volterra condition: offspring type is always one of the parent types, i.e.
// p_{ij,k} = 0 whenever k is not i or j.
inline bool is_volterra(const QsoCoefficients& V, double tol = 1e-12) {
  const int m = V.dim();
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        if (k != i && k != j && V.p(i, j, k) > tol) return false;
  return true;
}

inline VolterraMatrix volterra_from_qso(const QsoCoefficients& V, double tol = 1e-12) {
  const int m = V.dim();
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        if (k != i && k != j && V.p(i, j, k) > tol)
          throw NotVolterraError("p[" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + "] = " + std::to_string(V.p(i, j, k)) +
                                 " violates the Volterra condition");
  // a_{ij} = 2 p_{ij,i} - 1 for i<j; the lower triangle is the structural
  // negation (p_{ij,i} + p_{ij,j} = 1 makes both readings agree).
  std::vector<double> upper;
  upper.reserve(static_cast<std::size_t>(strict_pair_count(m)));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) upper.push_back(2.0 * V.p(i, j, i) - 1.0);
  return VolterraMatrix(m, upper);
}

inline QsoCoefficients qso_from_volterra(const VolterraMatrix& A) {
  const int m = A.dim();
  std::vector<QsoCoefficients::Entry> entries;
  for (int k = 1; k <= m; ++k) entries.push_back({k, k, k, 1.0});
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      entries.push_back({i, j, i, (1.0 + A.a(i, j)) / 2.0});
      entries.push_back({i, j, j, (1.0 - A.a(i, j)) / 2.0});
    }
  return QsoCoefficients::from_entries(m, entries);
}

inline QsoCoefficients ExtremalVolterra::to_qso() const { return qso_from_volterra(to_matrix()); }

// --- application -----------------------------------------------------------

inline SimplexPoint apply_volterra(const VolterraMatrix& A, const SimplexPoint& x) {
  const int m = A.dim();
  if (x.dim() != m) throw DimensionMismatchError("apply_volterra: dimension mismatch");
  std::vector<double> y(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    double s = 0.0;
    for (int i = 1; i <= m; ++i) s += A.a(k, i) * x[i - 1];
    y[static_cast<std::size_t>(k - 1)] = x[k - 1] * (1.0 + s);
  }
  return renormalized(std::move(y));
}

// Extremal application with exact +-1 signs: the inner sum adds/subtracts the
// coordinates directly instead of multiplying by a float matrix.
inline SimplexPoint apply(const ExtremalVolterra& E, const SimplexPoint& x) {
  const int m = E.dim();
  if (x.dim() != m) throw DimensionMismatchError("apply: dimension mismatch");
  std::vector<double> y(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    double won = 0.0, lost = 0.0;
    for (int i = 1; i <= m; ++i) {
      if (i == k) continue;
      if (E.dominates(k, i))
        won += x[i - 1];
      else
        lost += x[i - 1];
    }
    y[static_cast<std::size_t>(k - 1)] = x[k - 1] * (1.0 + (won - lost));
  }
  return renormalized(std::move(y));
}

inline SimplexPoint apply(const VolterraMatrix& A, const SimplexPoint& x) { return apply_volterra(A, x); }

// --- permutation action ----------------------------------------------------

// Relabeled operator: vertex v of E becomes vertex pi(v), which matches the
// coefficient conjugation p^W_{ij,k} = p_{pi^{-1}(i),pi^{-1}(j),pi^{-1}(k)}.
inline ExtremalVolterra relabel(const ExtremalVolterra& E, const Permutation& pi) {
  const int m = E.dim();
  if (pi.dim() != m) throw DimensionMismatchError("relabel: dimension mismatch");
  const Permutation inv = pi.inverse();
  std::uint32_t code = 0;
  const int pc = strict_pair_count(m);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (E.dominates(inv(i), inv(j)))
        code |= 1u << (pc - 1 - strict_pair_rank(m, i, j));
  return ExtremalVolterra(m, code);
}

// Delete genotype v and relabel the rest order-preservingly to 1..m-1.
inline ExtremalVolterra erase_genotype(const ExtremalVolterra& E, int v) {
  const int m = E.dim();
  if (v < 1 || v > m) throw IndexError("genotype index out of range");
  if (m <= 2) throw DimensionMismatchError("cannot restrict below m=2");
  std::vector<int> keep;
  for (int u = 1; u <= m; ++u)
    if (u != v) keep.push_back(u);
  const int mm = m - 1;
  const int pc = strict_pair_count(mm);
  std::uint32_t code = 0;
  for (int i = 1; i <= mm; ++i)
    for (int j = i + 1; j <= mm; ++j)
      if (E.dominates(keep[static_cast<std::size_t>(i - 1)], keep[static_cast<std::size_t>(j - 1)]))
        code |= 1u << (pc - 1 - strict_pair_rank(mm, i, j));
  return ExtremalVolterra(mm, code);
}

// Restriction to the face opposite genotype i. Only a genotype that wins all
// or loses all of its matchups induces an invariant face restriction that the
// classification recursion may use, so that is required here.
inline ExtremalVolterra restrict_to_face(const ExtremalVolterra& E, int i) {
  const int m = E.dim();
  if (i < 1 || i > m) throw IndexError("genotype index out of range");
  const int s = E.score(i);
  if (s != 0 && s != m - 1)
    throw FaceNotInvariantError("genotype " + std::to_string(i) +
                                " is neither a source nor a sink (score " + std::to_string(s) + ")");
  return erase_genotype(E, i);
}

// --- enumeration -----------------------------------------------------------

// All 2^(m(m-1)/2) extremal operators in lexicographic bit-string order.
inline std::vector<ExtremalVolterra> enumerate_extremal(int m) {
  if (m < 2) throw DimensionMismatchError("m must be >= 2");
  if (m > MAX_ENUM_M) throw DimensionTooLargeError("enumeration supports m <= " + std::to_string(MAX_ENUM_M));
  const std::uint64_t n = 1ull << strict_pair_count(m);
  std::vector<ExtremalVolterra> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t c = 0; c < n; ++c) out.emplace_back(m, static_cast<std::uint32_t>(c));
  return out;
}

}  // namespace volterra
