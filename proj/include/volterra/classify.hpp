#pragma once

#include <optional>
#include <string>
#include <utility>

#include "volterra/dynamics.hpp"
#include "volterra/extremal.hpp"
#include "volterra/tournament.hpp"

namespace volterra {

// Long-run behavior of an extremal operator as decided from its tournament
// alone. NonErgodic claims split by the structural witness: a spanning cycle,
// or an always-losing genotype whose opposite face already behaves
// non-ergodically.
enum class GraphClaim {
  Regular,
  Ergodic,
  NonErgodicHamiltonian,
  NonErgodicSourceRecursion,
  Unclassified,
};

inline std::string to_string(GraphClaim c) {
  switch (c) {
    case GraphClaim::Regular: return "Regular";
    case GraphClaim::Ergodic: return "Ergodic";
    case GraphClaim::NonErgodicHamiltonian: return "NonErgodic-Hamiltonian";
    case GraphClaim::NonErgodicSourceRecursion: return "NonErgodic-SourceRecursion";
    default: return "Unclassified";
  }
}

inline bool is_non_ergodic(GraphClaim c) {
  return c == GraphClaim::NonErgodicHamiltonian || c == GraphClaim::NonErgodicSourceRecursion;
}

struct GraphClassification {
  GraphClaim claim = GraphClaim::Unclassified;
  std::string justification;
};

// Decision table over the tournament, complete for m <= 4:
//   m = 2                          -> Regular
//   spanning cycle                 -> NonErgodic-Hamiltonian
//   source with non-ergodic face   -> NonErgodic-SourceRecursion
//   acyclic                        -> Regular
//   sink over a cyclic remainder   -> Ergodic
// For m > 4 the table is not known to be exhaustive, so we refuse to guess.
inline GraphClassification classify_graph(const ExtremalVolterra& E) {
  const int m = E.dim();
  if (m == 2) {
    return {GraphClaim::Regular,
            "m = 2: the losing genotype dies out monotonically, so trajectories converge"};
  }
  if (m > 4) {
    return {GraphClaim::Unclassified, "no decision rule covers m = " + std::to_string(m)};
  }
  const Tournament t(E);
  if (has_hamiltonian_cycle(t)) {
    return {GraphClaim::NonErgodicHamiltonian,
            "tournament has a spanning cycle: running means oscillate for interior starts"};
  }
  const SourceSink ss = sources_and_sinks(t);
  if (!ss.sources.empty()) {
    const int src = ss.sources.front();
    const GraphClassification inner = classify_graph(restrict_to_face(E, src));
    if (is_non_ergodic(inner.claim)) {
      return {GraphClaim::NonErgodicSourceRecursion,
              "genotype " + std::to_string(src) + " loses every matchup and the face without it is " +
                  to_string(inner.claim) + " (" + inner.justification + ")"};
    }
  }
  if (!has_any_cycle(t)) {
    return {GraphClaim::Regular,
            "tournament is acyclic: genotypes are totally ordered and trajectories converge to the top vertex"};
  }
  if (!ss.sinks.empty()) {
    const int snk = ss.sinks.front();
    const Tournament rest = erase_vertex(t, snk);
    if (has_any_cycle(rest)) {
      return {GraphClaim::Ergodic,
              "genotype " + std::to_string(snk) +
                  " wins every matchup over a cyclic remainder: trajectories converge to that vertex "
                  "but the convergence is not regular"};
    }
  }
  // unreachable for m <= 4 (strong components have size 1 or >= 3)
  return {GraphClaim::Unclassified, "no decision rule matched"};
}

struct ErgodicityVerdict {
  GraphClassification graph;
  std::optional<MonteCarloResult> diagnostic;
};

struct ClassifyConfig {
  DiagnosticConfig diagnostic;        // protocol for the numerical cross-check
  bool run_diagnostic = true;         // graph verdict alone when false
};

// Graph classification plus, unless disabled, the Monte-Carlo running-mean
// diagnostic as an independent numerical cross-check.
inline ErgodicityVerdict classify(const ExtremalVolterra& E, const ClassifyConfig& cfg = {}) {
  ErgodicityVerdict v;
  v.graph = classify_graph(E);
  if (cfg.run_diagnostic && cfg.diagnostic.steps > 0 && cfg.diagnostic.starts > 0)
    v.diagnostic = monte_carlo_cesaro(E, cfg.diagnostic);
  return v;
}

}  // namespace volterra
