#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "volterra/classify.hpp"
#include "volterra/dynamics.hpp"
#include "volterra/extremal.hpp"
#include "volterra/qso.hpp"
#include "volterra/simplex.hpp"
#include "volterra/tournament.hpp"

namespace volterra {

using json = nlohmann::ordered_json;

struct JsonFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json point_to_json(const SimplexPoint& x) {
  json a = json::array();
  for (int k = 0; k < x.dim(); ++k) a.push_back(x[k]);
  return a;
}

inline json extremal_to_json(const ExtremalVolterra& E) {
  json j;
  j["m"] = E.dim();
  j["bits"] = E.bits();
  j["params"] = E.params();
  return j;
}

// --- general coefficient tables -----------------------------------------------

inline json qso_to_json(const QsoCoefficients& V) {
  json j;
  j["m"] = V.dim();
  json entries = json::array();
  for (int i = 1; i <= V.dim(); ++i)
    for (int jj = i; jj <= V.dim(); ++jj)
      for (int k = 1; k <= V.dim(); ++k)
        if (const double v = V.p(i, jj, k); v != 0.0)
          entries.push_back(json{{"i", i}, {"j", jj}, {"k", k}, {"v", v}});
  j["p"] = std::move(entries);
  return j;
}

// Schema: {"m": int, "p": [{"i","j","k","v"}...]}; entries not listed are 0.
inline QsoCoefficients qso_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer())
    throw JsonFormatError("coefficient table needs an integer field \"m\"");
  const int m = j["m"].get<int>();
  std::vector<QsoCoefficients::Entry> entries;
  if (j.contains("p")) {
    if (!j["p"].is_array()) throw JsonFormatError("field \"p\" must be an array of entries");
    for (const json& e : j["p"]) {
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("k") || !e.contains("v"))
        throw JsonFormatError("each entry needs fields i, j, k, v");
      entries.push_back(QsoCoefficients::Entry{e["i"].get<int>(), e["j"].get<int>(), e["k"].get<int>(),
                                               e["v"].get<double>()});
    }
  }
  return QsoCoefficients::from_entries(m, entries);
}

inline QsoCoefficients qso_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw JsonFormatError("invalid JSON");
  return qso_from_json(j);
}

// --- equivalence-class reports ---------------------------------------------------

inline std::string cycle_structure(const Tournament& t) {
  if (has_hamiltonian_cycle(t)) return "hamiltonian";
  if (!has_any_cycle(t)) return "acyclic";
  return "cyclic-non-hamiltonian";
}

inline json class_report_json(const ClassSummary& c) {
  json j;
  j["class_id"] = c.class_id;
  j["size"] = c.size;
  j["representative_bits"] = c.class_id;  // the id is the lexicographically least member
  const Tournament t(ExtremalVolterra::from_bits(c.class_id));
  const SourceSink ss = sources_and_sinks(t);
  j["has_hamiltonian"] = has_hamiltonian_cycle(t);
  j["sources"] = ss.sources;
  j["sinks"] = ss.sinks;
  j["cycle_structure"] = cycle_structure(t);
  return j;
}

inline json partition_report_json(int m, const std::vector<ClassSummary>& classes) {
  json j;
  j["m"] = m;
  j["operator_count"] = static_cast<long>(1) << strict_pair_count(m);
  j["class_count"] = classes.size();
  json arr = json::array();
  for (const ClassSummary& c : classes) arr.push_back(class_report_json(c));
  j["classes"] = std::move(arr);
  return j;
}

inline json enumerate_report_json(int m, const std::vector<ExtremalVolterra>& ops) {
  json j;
  j["m"] = m;
  j["count"] = ops.size();
  json arr = json::array();
  for (const ExtremalVolterra& e : ops) arr.push_back(extremal_to_json(e));
  j["operators"] = std::move(arr);
  return j;
}

// --- dynamics reports -------------------------------------------------------------

inline json cesaro_to_json(const CesaroSequence& seq) {
  json j;
  j["checkpoints"] = seq.checkpoints;
  json means = json::array();
  for (const SimplexPoint& p : seq.means) means.push_back(point_to_json(p));
  j["means"] = std::move(means);
  j["amplitude"] = seq.amplitude();
  return j;
}

inline std::string to_string(FixedPoint::Tag t) {
  switch (t) {
    case FixedPoint::Tag::Vertex: return "vertex";
    case FixedPoint::Tag::FaceInterior: return "face-interior";
    default: return "interior";
  }
}

inline json fixed_points_json(const FixedPointSet& fps) {
  json arr = json::array();
  for (const FixedPoint& fp : fps.points) {
    json j;
    j["x"] = point_to_json(fp.x);
    j["support"] = fp.support;
    j["tag"] = to_string(fp.tag);
    j["residual"] = fp.residual;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline json diagnostic_json(const MonteCarloResult& r, const DiagnosticConfig& cfg) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["max_amplitude"] = r.max_amplitude;
  j["fraction_oscillating"] = r.fraction_oscillating;
  j["starts"] = cfg.starts;
  j["steps"] = cfg.steps;
  j["seed"] = cfg.seed;
  j["checkpoints"] = r.checkpoints;
  json per = json::array();
  for (const StartDiagnostic& s : r.starts) {
    json e;
    e["seed"] = s.seed;
    e["start"] = point_to_json(s.start);
    e["amplitude"] = s.amplitude;
    json means = json::array();
    for (const SimplexPoint& p : s.means) means.push_back(point_to_json(p));
    e["means"] = std::move(means);
    per.push_back(std::move(e));
  }
  j["per_start"] = std::move(per);
  return j;
}

// Full per-operator report: identity, equivalence class, graph features,
// classification, optional numerical diagnostic, and the fixed-point set.
inline json classification_report_json(const ExtremalVolterra& E, const ErgodicityVerdict& v,
                                       const DiagnosticConfig& cfg) {
  const Tournament t(E);
  const SourceSink ss = sources_and_sinks(t);
  json j;
  j["operator"] = extremal_to_json(E);
  const EquivalenceClassId id = canonical_form(t);
  j["equivalence_class"] = json{{"class_id", id.bits}, {"size", id.size}};
  json g;
  g["scores"] = scores(t);
  g["sources"] = ss.sources;
  g["sinks"] = ss.sinks;
  g["has_hamiltonian"] = has_hamiltonian_cycle(t);
  g["cycle_structure"] = cycle_structure(t);
  j["graph"] = std::move(g);
  j["graph_claim"] = to_string(v.graph.claim);
  j["justification"] = v.graph.justification;
  if (v.diagnostic) j["numeric_diagnostic"] = diagnostic_json(*v.diagnostic, cfg);
  j["fixed_points"] = fixed_points_json(fixed_points_extremal(E));
  return j;
}

// --- CSV ---------------------------------------------------------------------------

namespace detail {

inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_header(int m) {
  std::string h = "n";
  for (int k = 1; k <= m; ++k) h += ",x" + std::to_string(k);
  h += "\n";
  return h;
}

inline void csv_row(std::string& out, long n, const SimplexPoint& x) {
  out += std::to_string(n);
  for (int k = 0; k < x.dim(); ++k) {
    out += ',';
    out += fmt_g17(x[k]);
  }
  out += '\n';
}

}  // namespace detail

// Rows n = 0, stride, 2*stride, ...; the final point is always included.
inline std::string trajectory_csv(const Trajectory& traj, long stride = 1) {
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");
  const int m = traj.points.front().dim();
  std::string out = detail::csv_header(m);
  const long last = static_cast<long>(traj.points.size()) - 1;
  for (long n = 0; n <= last; ++n)
    if (n % stride == 0 || n == last) detail::csv_row(out, n, traj.points[static_cast<std::size_t>(n)]);
  return out;
}

inline std::string cesaro_csv(const CesaroSequence& seq) {
  const int m = seq.means.front().dim();
  std::string out = detail::csv_header(m);
  for (std::size_t i = 0; i < seq.means.size(); ++i) detail::csv_row(out, seq.checkpoints[i], seq.means[i]);
  return out;
}

// --- output plumbing -----------------------------------------------------------------

// Writes via a temp file in the same directory plus rename, so readers never
// observe a half-written file.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace volterra
