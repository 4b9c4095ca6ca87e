// Command-line front end: enumeration, equivalence partitioning, ergodicity
// classification, trajectory simulation, running-mean diagnostics, and
// fixed-point reports for Volterra operators on the simplex.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "volterra/volterra.hpp"

namespace {

using namespace volterra;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_double_list(const std::string& text, const char* field) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string(field) + ": cannot parse \"" + tok + "\" as a number");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw UsageError(std::string(field) + ": empty list");
  return out;
}

std::vector<long> parse_long_list(const std::string& text, const char* field) {
  std::vector<long> out;
  for (double v : parse_double_list(text, field)) {
    const long n = static_cast<long>(v);
    if (static_cast<double>(n) != v) throw UsageError(std::string(field) + ": expected integers");
    out.push_back(n);
  }
  return out;
}

int dim_from_pair_count(std::size_t c, const char* field) {
  for (int m = 2; m <= 8; ++m)
    if (static_cast<std::size_t>(strict_pair_count(m)) == c) return m;
  throw UsageError(std::string(field) + ": length " + std::to_string(c) +
                   " is not m(m-1)/2 for any m in 2..8");
}

// Parsed operator selector: always a Volterra operator, extremal when every
// matchup probability is exactly 0 or 1.
struct ChosenOp {
  int m = 0;
  std::optional<ExtremalVolterra> extremal;
  std::optional<VolterraMatrix> matrix;
};

// --bits: 0/1 string over the strict pairs (1,2),(1,3),...,(m-1,m).
// --params: comma list of matchup probabilities p, one per strict pair in the
//           same order, each in [0,1]; entry a_ij = 2p-1. All-0/1 lists give
//           the extremal operator with those bits.
ChosenOp parse_selector(int m_flag, const std::string& bits, const std::string& params, bool require_extremal) {
  if (bits.empty() == params.empty())
    throw UsageError("selector: provide exactly one of --bits or --params");
  ChosenOp op;
  if (!bits.empty()) {
    for (char c : bits)
      if (c != '0' && c != '1') throw UsageError("--bits: expected a string of 0s and 1s");
    op.m = dim_from_pair_count(bits.size(), "--bits");
    op.extremal = ExtremalVolterra(op.m, bits);
  } else {
    const std::vector<double> p = parse_double_list(params, "--params");
    op.m = dim_from_pair_count(p.size(), "--params");
    bool all_binary = true;
    std::string b;
    for (double v : p) {
      if (v < 0.0 || v > 1.0) throw UsageError("--params: matchup probabilities must lie in [0,1]");
      if (v == 0.0) b += '0';
      else if (v == 1.0) b += '1';
      else all_binary = false;
    }
    if (all_binary) {
      op.extremal = ExtremalVolterra(op.m, b);
    } else {
      if (require_extremal)
        throw UsageError("--params: this command needs an extremal operator (every value 0 or 1)");
      std::vector<double> upper;
      upper.reserve(p.size());
      for (double v : p) upper.push_back(2.0 * v - 1.0);
      op.matrix = VolterraMatrix(op.m, upper);
    }
  }
  if (m_flag > 0 && m_flag != op.m)
    throw UsageError("--m: " + std::to_string(m_flag) + " contradicts the selector (m = " +
                     std::to_string(op.m) + ")");
  return op;
}

SimplexPoint parse_x0(const std::string& text, int m, std::uint64_t seed) {
  if (text.empty()) return sample_interior(m, seed);
  const std::vector<double> v = parse_double_list(text, "--x0");
  if (static_cast<int>(v.size()) != m)
    throw UsageError("--x0: expected " + std::to_string(m) + " coordinates, got " + std::to_string(v.size()));
  try {
    return SimplexPoint(v);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--x0: ") + e.what());
  }
}

std::vector<long> parse_checkpoints(const std::string& text, long steps) {
  if (!text.empty()) return parse_long_list(text, "--checkpoints");
  // default ladder: 1%, 3%, 10%, 30%, 100% of the step budget
  std::vector<long> cps;
  for (long c : {steps / 100, 3 * steps / 100, steps / 10, 3 * steps / 10, steps})
    if (c >= 1 && (cps.empty() || c > cps.back())) cps.push_back(c);
  return cps;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    atomic_write(out_path, content);
  }
}

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

// Shared option state. Several subcommands bind the same fields, so defaults
// that differ per command (steps, format) use sentinels here and are filled
// in at dispatch.
struct Options {
  int m = 0;
  std::string bits, params, x0, checkpoints, format, out;
  long steps = -1;  // -1 = command default
  long stride = 1;
  int starts = 32;
  std::uint64_t seed = DEFAULT_SEED;
};

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("--format: \"" + format + "\" not supported by this command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volterra operators on the simplex: enumeration, classification, simulation"};
  app.require_subcommand(1);
  Options o;

  auto add_selector = [&](CLI::App* cmd) {
    cmd->add_option("--m", o.m, "dimension (derived from the selector when omitted)");
    cmd->add_option("--bits", o.bits, "matchup bit string, pairs (1,2),(1,3),...,(m-1,m)");
    cmd->add_option("--params", o.params, "comma list of matchup probabilities, one per pair");
  };

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list all extremal operators for a dimension");
  enumerate_cmd->add_option("--m", o.m, "dimension, 2..7")->required();
  enumerate_cmd->add_option("--out", o.out, "output file (default stdout)");
  enumerate_cmd->add_option("--format", o.format, "json");

  CLI::App* partition_cmd = app.add_subcommand("partition", "group extremal operators into relabeling classes");
  partition_cmd->add_option("--m", o.m, "dimension, 2..7")->required();
  partition_cmd->add_option("--out", o.out, "output file (default stdout)");
  partition_cmd->add_option("--format", o.format, "json");

  CLI::App* classify_cmd = app.add_subcommand("classify", "ergodicity classification with numerical cross-check");
  add_selector(classify_cmd);
  classify_cmd->add_option("--steps", o.steps, "diagnostic trajectory length (default 1000000, 0 = graph verdict only)");
  classify_cmd->add_option("--starts", o.starts, "diagnostic start points (default 32)");
  classify_cmd->add_option("--seed", o.seed, "base RNG seed");
  classify_cmd->add_option("--checkpoints", o.checkpoints, "comma list of running-mean checkpoints");
  classify_cmd->add_option("--out", o.out, "output file (default stdout)");
  classify_cmd->add_option("--format", o.format, "json");

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "dump a trajectory as CSV");
  add_selector(simulate_cmd);
  simulate_cmd->add_option("--x0", o.x0, "start point (comma list; random interior point when omitted)");
  simulate_cmd->add_option("--steps", o.steps, "trajectory length (default 1000)");
  simulate_cmd->add_option("--stride", o.stride, "emit every k-th row (default 1)");
  simulate_cmd->add_option("--seed", o.seed, "seed for the random start");
  simulate_cmd->add_option("--out", o.out, "output file (default stdout)");
  simulate_cmd->add_option("--format", o.format, "csv");

  CLI::App* cesaro_cmd = app.add_subcommand("cesaro", "running means along one trajectory");
  add_selector(cesaro_cmd);
  cesaro_cmd->add_option("--x0", o.x0, "start point (comma list; random interior point when omitted)");
  cesaro_cmd->add_option("--steps", o.steps, "step budget, sets the default checkpoint ladder (default 1000000)");
  cesaro_cmd->add_option("--checkpoints", o.checkpoints, "comma list of checkpoints");
  cesaro_cmd->add_option("--seed", o.seed, "seed for the random start");
  cesaro_cmd->add_option("--out", o.out, "output file (default stdout)");
  cesaro_cmd->add_option("--format", o.format, "json|csv");

  CLI::App* fixed_cmd = app.add_subcommand("fixed-points", "all fixed points of an extremal operator");
  add_selector(fixed_cmd);
  fixed_cmd->add_option("--out", o.out, "output file (default stdout)");
  fixed_cmd->add_option("--format", o.format, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // per-command defaults for the shared fields
  if (o.format.empty()) o.format = app.got_subcommand(simulate_cmd) ? "csv" : "json";
  if (o.steps < 0) o.steps = app.got_subcommand(simulate_cmd) ? 1000 : 1000000;

  try {
    if (app.got_subcommand(enumerate_cmd)) {
      check_format(o.format, {"json"});
      emit(o.out, dumped(enumerate_report_json(o.m, enumerate_extremal(o.m))));
      return 0;
    }
    if (app.got_subcommand(partition_cmd)) {
      check_format(o.format, {"json"});
      emit(o.out, dumped(partition_report_json(o.m, enumerate_classes(o.m))));
      return 0;
    }
    if (app.got_subcommand(classify_cmd)) {
      check_format(o.format, {"json"});
      if (o.starts < 1) throw UsageError("--starts: must be >= 1");
      const ChosenOp op = parse_selector(o.m, o.bits, o.params, /*require_extremal=*/true);
      ClassifyConfig cfg;
      cfg.run_diagnostic = o.steps > 0;
      cfg.diagnostic.steps = o.steps;
      cfg.diagnostic.starts = o.starts;
      cfg.diagnostic.seed = o.seed;
      if (cfg.run_diagnostic) {
        cfg.diagnostic.checkpoints = parse_checkpoints(o.checkpoints, o.steps);
        if (cfg.diagnostic.checkpoints.back() > o.steps)
          throw UsageError("--checkpoints: last checkpoint exceeds --steps");
      }
      const ErgodicityVerdict verdict = classify(*op.extremal, cfg);
      emit(o.out, dumped(classification_report_json(*op.extremal, verdict, cfg.diagnostic)));
      return verdict.graph.claim == GraphClaim::Unclassified ? 3 : 0;
    }
    if (app.got_subcommand(simulate_cmd)) {
      check_format(o.format, {"csv"});
      if (o.steps < 1) throw UsageError("--steps: must be >= 1");
      if (o.stride < 1) throw UsageError("--stride: must be >= 1");
      const ChosenOp op = parse_selector(o.m, o.bits, o.params, /*require_extremal=*/false);
      const SimplexPoint x0 = parse_x0(o.x0, op.m, o.seed);
      const Trajectory traj =
          op.extremal ? iterate(*op.extremal, x0, o.steps) : iterate(*op.matrix, x0, o.steps);
      emit(o.out, trajectory_csv(traj, o.stride));
      return 0;
    }
    if (app.got_subcommand(cesaro_cmd)) {
      check_format(o.format, {"json", "csv"});
      if (o.steps < 1) throw UsageError("--steps: must be >= 1");
      const ChosenOp op = parse_selector(o.m, o.bits, o.params, /*require_extremal=*/false);
      const SimplexPoint x0 = parse_x0(o.x0, op.m, o.seed);
      const std::vector<long> cps = parse_checkpoints(o.checkpoints, o.steps);
      const CesaroSequence seq =
          op.extremal ? cesaro_resolved(*op.extremal, x0, cps) : cesaro_stream(*op.matrix, x0, cps);
      emit(o.out, o.format == "csv" ? cesaro_csv(seq) : dumped(cesaro_to_json(seq)));
      return 0;
    }
    if (app.got_subcommand(fixed_cmd)) {
      check_format(o.format, {"json"});
      const ChosenOp op = parse_selector(o.m, o.bits, o.params, /*require_extremal=*/true);
      json j;
      j["operator"] = extremal_to_json(*op.extremal);
      j["fixed_points"] = fixed_points_json(fixed_points_extremal(*op.extremal));
      emit(o.out, dumped(j));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
