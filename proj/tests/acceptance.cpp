// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit if any
// criterion fails. Each check is self-contained and uses independent oracles
// where the criterion asks for cross-validation.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "volterra/volterra.hpp"

using namespace volterra;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int number, const std::string& name, bool ok, double elapsed, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(), elapsed,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// ---------------------------------------------------------------------------

void criterion_1_enumeration_counts() {
  const Clock::time_point t0 = Clock::now();
  const bool ok = enumerate_extremal(2).size() == 2 && enumerate_extremal(3).size() == 8 &&
                  enumerate_extremal(4).size() == 64;
  const double dt = seconds_since(t0);
  report(1, "enumeration counts for m=2,3,4", ok && dt < 1.0, dt);
}

void criterion_2_class_partition() {
  const Clock::time_point t0 = Clock::now();
  // full canonicalization of all 64 operators, then the orbit summary
  std::map<std::string, long> sizes_by_id;
  for (const ExtremalVolterra& e : enumerate_extremal(4)) {
    const EquivalenceClassId id = canonical_form(e);
    sizes_by_id[id.bits] = id.size;
  }
  std::multiset<long> sizes;
  for (const auto& [id, size] : sizes_by_id) sizes.insert(size);
  bool ok = sizes == std::multiset<long>{8, 8, 24, 24};
  // the sweep enumerator must agree
  const std::vector<ClassSummary> classes = enumerate_classes(4);
  ok = ok && classes.size() == 4;
  long total = 0;
  for (const ClassSummary& c : classes) {
    ok = ok && sizes_by_id.count(c.class_id) == 1 && sizes_by_id[c.class_id] == c.size;
    total += c.size;
  }
  ok = ok && total == 64;
  const double dt = seconds_since(t0);
  report(2, "m=4 partition into classes of sizes {24,8,8,24}", ok && dt < 5.0, dt);
}

void criterion_3_m3_structure() {
  const Clock::time_point t0 = Clock::now();
  int hamiltonian = 0, acyclic = 0;
  for (const ExtremalVolterra& e : enumerate_extremal(3)) {
    const Tournament t(e);
    if (has_hamiltonian_cycle(t)) ++hamiltonian;
    if (!has_any_cycle(t)) ++acyclic;
  }
  const bool ok = hamiltonian == 2 && acyclic == 6 && enumerate_classes(3).size() == 2;
  report(3, "m=3 structure: 2 cyclic, 6 acyclic, 2 classes", ok, seconds_since(t0));
}

void criterion_4_decision_table() {
  const Clock::time_point t0 = Clock::now();
  bool ok = true;
  std::map<GraphClaim, int> tally;
  std::map<std::string, GraphClaim> by_class;
  for (const ExtremalVolterra& e : enumerate_extremal(4)) {
    const Tournament t(e);
    // expected claim from independently computed graph features
    GraphClaim expected;
    if (has_hamiltonian_cycle_brute(t)) {
      expected = GraphClaim::NonErgodicHamiltonian;
    } else if (!has_three_cycle(t)) {
      expected = GraphClaim::Regular;
    } else if (!sources_and_sinks(t).sinks.empty()) {
      expected = GraphClaim::Ergodic;
    } else {
      expected = GraphClaim::NonErgodicSourceRecursion;
    }
    const GraphClaim got = classify_graph(e).claim;
    ok = ok && got == expected;
    ++tally[got];
    const std::string id = canonical_form(t).bits;
    const auto [it, fresh] = by_class.emplace(id, got);
    if (!fresh) ok = ok && it->second == got;
  }
  ok = ok && tally[GraphClaim::NonErgodicHamiltonian] == 24 && tally[GraphClaim::Ergodic] == 8 &&
       tally[GraphClaim::NonErgodicSourceRecursion] == 8 && tally[GraphClaim::Regular] == 24;
  report(4, "decision table on all 64 m=4 operators, constant per class", ok, seconds_since(t0));
}

void criterion_5_fixed_points() {
  const Clock::time_point t0 = Clock::now();
  bool ok = true;

  const FixedPointSet a = fixed_points_extremal(ExtremalVolterra(4, "110111"));
  const SimplexPoint m5({1.0 / 3, 0.0, 1.0 / 3, 1.0 / 3});
  const SimplexPoint m6({1.0 / 3, 1.0 / 3, 0.0, 1.0 / 3});
  bool saw5 = false, saw6 = false;
  for (const FixedPoint& fp : a.points) {
    ok = ok && fp.residual <= 1e-12;
    if (dist_inf(fp.x, m5) <= 1e-12) saw5 = true;
    if (dist_inf(fp.x, m6) <= 1e-12) saw6 = true;
  }
  ok = ok && saw5 && saw6;

  const FixedPointSet b = fixed_points_extremal(ExtremalVolterra(4, "111101"));
  const SimplexPoint f({0.0, 1.0 / 3, 1.0 / 3, 1.0 / 3});
  bool sawf = false;
  for (const FixedPoint& fp : b.points)
    if (dist_inf(fp.x, f) <= 1e-12 && fp.residual <= 1e-12) sawf = true;
  ok = ok && sawf;

  const FixedPointSet c = fixed_points_extremal(ExtremalVolterra(4, "111111"));
  ok = ok && c.points.size() == 4;
  for (const FixedPoint& fp : c.points) ok = ok && fp.tag == FixedPoint::Tag::Vertex;

  report(5, "fixed-point sets of the three reference operators", ok, seconds_since(t0));
}

void criterion_6_regular_convergence() {
  const Clock::time_point t0 = Clock::now();
  bool ok = true;

  // two genotypes, second one wins: every start reaches the winning vertex fast
  const ExtremalVolterra two(2, "0");
  for (int s = 0; s < 20; ++s) {
    SimplexPoint x = sample_interior(2, DEFAULT_SEED + static_cast<std::uint64_t>(s));
    bool reached = false;
    for (int n = 1; n <= 200; ++n) {
      x = apply(two, x);
      if (dist_inf(x, vertex(2, 2)) < 1e-6) {
        reached = true;
        break;
      }
    }
    ok = ok && reached;
  }

  // total order on four genotypes: limits depend on the starting face
  const ExtremalVolterra total(4, "111111");
  auto runs_to = [&](SimplexPoint x, const SimplexPoint& target) {
    for (int n = 1; n <= 10000; ++n) {
      x = apply(total, x);
      if (dist_inf(x, target) < 1e-6) return true;
    }
    return false;
  };
  for (int s = 0; s < 5; ++s) {
    // interior starts go to the overall winner
    ok = ok && runs_to(sample_interior(4, 100 + static_cast<std::uint64_t>(s)), vertex(1, 4));
    // starts without genotype 1 (but with genotype 2) go to the runner-up
    const SimplexPoint inner3 = sample_interior(3, 200 + static_cast<std::uint64_t>(s));
    ok = ok && runs_to(SimplexPoint({0.0, inner3[0], inner3[1], inner3[2]}), vertex(2, 4));
    // starts with only genotypes 3,4 go to genotype 3
    const SimplexPoint inner2 = sample_interior(2, 300 + static_cast<std::uint64_t>(s));
    ok = ok && runs_to(SimplexPoint({0.0, 0.0, inner2[0], inner2[1]}), vertex(3, 4));
  }

  report(6, "regular operators converge to the predicted vertices", ok, seconds_since(t0));
}

void criterion_7_oscillation_diagnostic() {
  const Clock::time_point t0 = Clock::now();
  bool ok = true;
  std::string detail;

  struct Case {
    ExtremalVolterra e;
    bool expect_oscillation;
  };
  const std::vector<Case> cases = {
      {ExtremalVolterra(3, "101"), true},
      {ExtremalVolterra(3, "000"), false},
      {ExtremalVolterra(4, "111111"), false},
  };
  for (const Case& c : cases) {
    const Clock::time_point op0 = Clock::now();
    const MonteCarloResult r = monte_carlo_cesaro(c.e, DiagnosticConfig{});
    const double op_dt = seconds_since(op0);
    if (c.expect_oscillation) {
      ok = ok && r.verdict == CesaroVerdict::Oscillating && r.fraction_oscillating >= 0.9;
    } else {
      ok = ok && r.verdict == CesaroVerdict::Converged && r.max_amplitude < CONV_THRESH;
    }
    ok = ok && op_dt <= 120.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s[%s: %.0f%% osc, max %.2e, %.1f s]", detail.empty() ? "" : " ",
                  c.e.bits().c_str(), 100.0 * r.fraction_oscillating, r.max_amplitude, op_dt);
    detail += buf;
  }

  report(7, "running-mean oscillation protocol (32 starts, 1e6 steps)", ok, seconds_since(t0), detail);
}

void criterion_8_invariant_segment() {
  const Clock::time_point t0 = Clock::now();
  const ExtremalVolterra e(4, "110111");
  const SimplexPoint m5({1.0 / 3, 0.0, 1.0 / 3, 1.0 / 3});
  const SimplexPoint m6({1.0 / 3, 1.0 / 3, 0.0, 1.0 / 3});
  const SegmentReport rep = check_invariant_segment(e, m5, m6, 100);
  const bool ok = rep.max_deviation <= 1e-10 && rep.limit.has_value() &&
                  dist_inf(*rep.limit, m6) == 0.0 && rep.limit_steps <= 100000;
  report(8, "invariant segment: images stay on it, trajectories reach one end", ok, seconds_since(t0));
}

void criterion_9_structural_identities() {
  const Clock::time_point t0 = Clock::now();
  bool ok = true;
  std::mt19937_64 g(424242);
  const int kCases = 10000;

  auto random_matrix = [&](int m) {
    std::vector<double> upper(static_cast<std::size_t>(strict_pair_count(m)));
    for (double& v : upper) v = 2.0 * uniform01(g) - 1.0;
    return VolterraMatrix(m, upper);
  };

  // matrix and tensor application formulas agree
  for (int i = 0; i < kCases && ok; ++i) {
    const int m = 2 + static_cast<int>(g() % 4);
    const VolterraMatrix A = random_matrix(m);
    const SimplexPoint x = sample_interior(m, g);
    ok = dist_inf(apply_volterra(A, x), apply(qso_from_volterra(A), x)) <= 1e-14;
  }

  // conjugation acts as permute, apply, permute back
  for (int i = 0; i < kCases && ok; ++i) {
    const int m = 2 + static_cast<int>(g() % 4);
    const QsoCoefficients V = qso_from_volterra(random_matrix(m));
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) img[static_cast<std::size_t>(k)] = k + 1;
    std::shuffle(img.begin(), img.end(), g);
    const Permutation pi(img);
    const SimplexPoint x = sample_interior(m, g);
    const SimplexPoint lhs = apply(conjugate(V, pi), x);
    const SimplexPoint rhs = apply_permutation(pi.inverse(), apply(V, apply_permutation(pi, x)));
    ok = dist_inf(lhs, rhs) <= 1e-12;
  }

  // conjugating an extremal operator always lands on an extremal operator
  for (int i = 0; i < kCases && ok; ++i) {
    const int m = 2 + static_cast<int>(g() % 4);
    const std::uint32_t code = static_cast<std::uint32_t>(g() & ((1u << strict_pair_count(m)) - 1));
    const ExtremalVolterra e(m, code);
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) img[static_cast<std::size_t>(k)] = k + 1;
    std::shuffle(img.begin(), img.end(), g);
    const Permutation pi(img);
    try {
      const VolterraMatrix back = volterra_from_qso(conjugate(e.to_qso(), pi));
      ok = back == relabel(e, pi).to_matrix();
    } catch (const NotVolterraError&) {
      ok = false;
    }
  }

  // faces are exactly invariant
  for (int i = 0; i < kCases && ok; ++i) {
    const int m = 3 + static_cast<int>(g() % 3);
    const std::uint32_t code = static_cast<std::uint32_t>(g() & ((1u << strict_pair_count(m)) - 1));
    const ExtremalVolterra e(m, code);
    const int dead = 1 + static_cast<int>(g() % m);
    std::vector<double> c(static_cast<std::size_t>(m), 0.0);
    const SimplexPoint inner = sample_interior(m - 1, g);
    int idx = 0;
    for (int k = 1; k <= m; ++k)
      if (k != dead) c[static_cast<std::size_t>(k - 1)] = inner[idx++];
    ok = apply(e, SimplexPoint(c))[dead - 1] == 0.0;
  }

  // spanning-cycle decision equals brute force on every tournament up to m=5
  for (int m = 2; m <= 5 && ok; ++m)
    for (std::uint32_t c = 0; c < (1u << strict_pair_count(m)) && ok; ++c) {
      const Tournament t(m, c);
      ok = has_hamiltonian_cycle(t) == has_hamiltonian_cycle_brute(t);
    }

  report(9, "structural identities (fuzz, 1e4 cases each)", ok, seconds_since(t0));
}

}  // namespace

int main() {
  criterion_1_enumeration_counts();
  criterion_2_class_partition();
  criterion_3_m3_structure();
  criterion_4_decision_table();
  criterion_5_fixed_points();
  criterion_6_regular_convergence();
  criterion_7_oscillation_diagnostic();
  criterion_8_invariant_segment();
  criterion_9_structural_identities();
  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", failures);
  return 1;
}
