#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "volterra/extremal.hpp"

namespace volterra {

// Complete directed graph on genotypes 1..m: every pair joined by exactly one
// directed dominance relation. Shares the strict-pair bit layout of
// ExtremalVolterra, so the two are in fixed bijection.
class Tournament {
public:
  Tournament(int m, std::uint32_t code) : e_(m, code) {}
  explicit Tournament(const ExtremalVolterra& e) : e_(e) {}
  Tournament(int m, const std::string& bits) : e_(m, bits) {}

  int dim() const { return e_.dim(); }
  std::uint32_t code() const { return e_.code(); }
  std::string bits() const { return e_.bits(); }
  bool dominates(int i, int j) const { return e_.dominates(i, j); }
  int score(int v) const { return e_.score(v); }
  const ExtremalVolterra& extremal() const { return e_; }

  bool operator==(const Tournament& o) const { return e_ == o.e_; }

private:
  ExtremalVolterra e_;
};

inline Tournament tournament_from_extremal(const ExtremalVolterra& e) { return Tournament(e); }

inline std::vector<int> scores(const Tournament& T) {
  std::vector<int> s(static_cast<std::size_t>(T.dim()));
  for (int v = 1; v <= T.dim(); ++v) s[static_cast<std::size_t>(v - 1)] = T.score(v);
  return s;
}

// Sources and sinks of the flow graph. Edges are oriented from the dominated
// genotype toward its dominator ("flow toward the winner"), so a sink is the
// genotype that wins every matchup (it attracts trajectories) and a source is
// the genotype that wins none (it repels). A tournament has at most one of
// each.
struct SourceSink {
  std::vector<int> sources;
  std::vector<int> sinks;
};

inline SourceSink sources_and_sinks(const Tournament& T) {
  SourceSink r;
  for (int v = 1; v <= T.dim(); ++v) {
    const int s = T.score(v);
    if (s == 0) r.sources.push_back(v);
    if (s == T.dim() - 1) r.sinks.push_back(v);
  }
  return r;
}

inline bool strongly_connected(const Tournament& T) {
  const int m = T.dim();
  // reachability along dominance edges from vertex 1, then against them;
  // bitmask BFS is plenty at m <= 8
  for (int dir = 0; dir < 2; ++dir) {
    std::uint32_t reached = 1u, frontier = 1u;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 1; v <= m; ++v) {
        if (!(frontier >> (v - 1) & 1u)) continue;
        for (int u = 1; u <= m; ++u) {
          if (u == v || (reached >> (u - 1) & 1u)) continue;
          const bool edge = dir == 0 ? T.dominates(v, u) : T.dominates(u, v);
          if (edge) next |= 1u << (u - 1);
        }
      }
      reached |= next;
      frontier = next;
    }
    if (reached != (1u << m) - 1u) return false;
  }
  return true;
}

// A tournament on >= 3 vertices has a Hamiltonian cycle iff it is strongly
// connected (Camion/Moon); on 2 vertices never.
inline bool has_hamiltonian_cycle(const Tournament& T) {
  return T.dim() >= 3 && strongly_connected(T);
}

// Brute-force oracle: search all vertex orders 1,p2,...,pm for a directed
// cycle. Exponential; kept as the independent cross-check of
// has_hamiltonian_cycle.
inline bool has_hamiltonian_cycle_brute(const Tournament& T) {
  const int m = T.dim();
  if (m < 3) return false;
  std::vector<int> rest(static_cast<std::size_t>(m - 1));
  std::iota(rest.begin(), rest.end(), 2);
  do {
    int prev = 1;
    bool ok = true;
    for (int v : rest) {
      if (!T.dominates(prev, v)) {
        ok = false;
        break;
      }
      prev = v;
    }
    if (ok && T.dominates(prev, 1)) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// Transitive (acyclic) tournaments are exactly those whose score multiset is
// {0, 1, ..., m-1}.
inline bool is_transitive(const Tournament& T) {
  std::vector<int> s = scores(T);
  std::sort(s.begin(), s.end());
  for (int v = 0; v < T.dim(); ++v)
    if (s[static_cast<std::size_t>(v)] != v) return false;
  return true;
}

inline bool has_any_cycle(const Tournament& T) { return !is_transitive(T); }

// Oracle for has_any_cycle: in a tournament, any directed cycle implies a
// directed 3-cycle.
inline bool has_three_cycle(const Tournament& T) {
  const int m = T.dim();
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c)
        if (a != b && b != c && a != c && T.dominates(a, b) && T.dominates(b, c) && T.dominates(c, a))
          return true;
  return false;
}

inline Tournament relabel(const Tournament& T, const Permutation& pi) {
  return Tournament(relabel(T.extremal(), pi));
}

inline Tournament erase_vertex(const Tournament& T, int v) {
  return Tournament(erase_genotype(T.extremal(), v));
}

// Orbit identifier under vertex relabeling: the lexicographically smallest
// bit string over all m! relabelings, plus the orbit size. Two tournaments
// (equivalently, two extremal operators) are equivalent iff their canonical
// forms coincide.
struct EquivalenceClassId {
  std::string bits;
  long size = 0;

  bool operator==(const EquivalenceClassId& o) const { return bits == o.bits; }
  bool operator<(const EquivalenceClassId& o) const { return bits < o.bits; }
};

inline EquivalenceClassId canonical_form(const Tournament& T) {
  const int m = T.dim();
  if (m > MAX_ENUM_M) throw DimensionTooLargeError("canonicalization supports m <= " + std::to_string(MAX_ENUM_M));
  std::uint32_t best = T.code();
  std::vector<std::uint32_t> orbit;
  for (const Permutation& pi : all_permutations(m)) {
    const std::uint32_t c = relabel(T.extremal(), pi).code();
    orbit.push_back(c);
    best = std::min(best, c);
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return EquivalenceClassId{ExtremalVolterra(m, best).bits(), static_cast<long>(orbit.size())};
}

inline EquivalenceClassId canonical_form(const ExtremalVolterra& E) { return canonical_form(Tournament(E)); }

// Group an explicit list by canonical form; member lists keep input order.
inline std::map<std::string, std::vector<std::string>> partition_into_classes(const std::vector<Tournament>& ts) {
  std::map<std::string, std::vector<std::string>> classes;
  int m = 0;
  for (const Tournament& t : ts) {
    if (m == 0) m = t.dim();
    if (t.dim() != m) throw DimensionMismatchError("partition_into_classes: mixed dimensions");
    classes[canonical_form(t).bits].push_back(t.bits());
  }
  return classes;
}

// Orbit-sweep partition of all 2^(m(m-1)/2) tournaments without materializing
// the member lists: walk codes in lexicographic order; each unseen code is
// the canonical representative of a fresh orbit, whose members are marked by
// applying all m! relabelings.
struct ClassSummary {
  std::string class_id;  // canonical bit string
  long size = 0;
};

inline std::vector<ClassSummary> enumerate_classes(int m) {
  if (m < 2) throw DimensionMismatchError("m must be >= 2");
  if (m > MAX_ENUM_M) throw DimensionTooLargeError("enumeration supports m <= " + std::to_string(MAX_ENUM_M));
  const std::vector<Permutation> perms = all_permutations(m);
  const std::uint64_t n = 1ull << strict_pair_count(m);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<ClassSummary> out;
  for (std::uint64_t c = 0; c < n; ++c) {
    if (seen[static_cast<std::size_t>(c)]) continue;
    const ExtremalVolterra rep(m, static_cast<std::uint32_t>(c));
    long size = 0;
    for (const Permutation& pi : perms) {
      const std::uint32_t img = relabel(rep, pi).code();
      if (!seen[img]) {
        seen[img] = 1;
        ++size;
      }
    }
    out.push_back(ClassSummary{rep.bits(), size});
  }
  return out;
}

}  // namespace volterra
