// Copyright 2026 The xdeficit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: every computation is a subcommand that prints a
// CSV table or a JSON document.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xdeficit/boundary.hpp"
#include "xdeficit/deficit.hpp"
#include "xdeficit/parallel.hpp"
#include "xdeficit/phase.hpp"
#include "xdeficit/shape.hpp"
#include "xdeficit/solve.hpp"
#include "xdeficit/validation.hpp"
#include "xdeficit/xstate.hpp"

namespace {

using nlohmann::ordered_json;
using namespace xdeficit;

constexpr const char* kSchemaVersion = "1.0";

enum ExitCode { kOk = 0, kFailure = 1, kDomain = 2, kUnresolved = 3, kNoConvergence = 4 };

struct Settings {
  std::string format = "csv";
  std::string output;
  int precision = 6;
  bool degrees = false;
  int threads = 0;
};

// A cell is a number, a string or a flag. Numbers are rounded once, to the
// requested significant digits, so CSV and JSON carry identical values.
class Cell {
 public:
  Cell(double v) : num_(v), kind_(Kind::Number) {}             // NOLINT
  Cell(int v) : num_(v), kind_(Kind::Number) {}                // NOLINT
  Cell(std::string_view s) : str_(s), kind_(Kind::Text) {}     // NOLINT
  Cell(const char* s) : str_(s), kind_(Kind::Text) {}          // NOLINT
  Cell(std::string s) : str_(std::move(s)), kind_(Kind::Text) {}  // NOLINT
  Cell(bool b) : flag_(b), kind_(Kind::Flag) {}                // NOLINT

  std::string text(int precision) const {
    switch (kind_) {
      case Kind::Number: {
        if (std::isnan(num_)) return "nan";
        std::ostringstream os;
        os.precision(precision);
        os << num_;
        return os.str();
      }
      case Kind::Text:
        return str_;
      case Kind::Flag:
        return flag_ ? "true" : "false";
    }
    return {};
  }

  ordered_json json(int precision) const {
    switch (kind_) {
      case Kind::Number:
        if (!std::isfinite(num_)) return nullptr;
        return std::stod(text(precision));
      case Kind::Text:
        return str_;
      case Kind::Flag:
        return flag_;
    }
    return nullptr;
  }

 private:
  enum class Kind { Number, Text, Flag };
  double num_ = 0.0;
  std::string str_;
  bool flag_ = false;
  Kind kind_;
};

struct Report {
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  ordered_json params = ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  ordered_json summary;  // null when absent
};

double rounded(double v, int precision) { return Cell(v).json(precision).get<double>(); }

void emit(const Report& r, const Settings& s) {
  std::ofstream file;
  if (!s.output.empty()) {
    file.open(s.output);
    if (!file) throw std::runtime_error("cannot open " + s.output + " for writing");
  }
  std::ostream& out = s.output.empty() ? std::cout : file;

  if (s.format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = r.command;
    doc["params"] = r.params;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
      ordered_json obj;
      for (std::size_t c = 0; c < r.columns.size(); ++c) obj[r.columns[c]] = row[c].json(s.precision);
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    if (!r.summary.is_null()) doc["summary"] = r.summary;
    out << doc.dump(2) << "\n";
    return;
  }

  for (std::size_t c = 0; c < r.columns.size(); ++c) out << (c ? "," : "") << r.columns[c];
  out << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c].text(s.precision);
    out << "\n";
  }
  // CSV stays a single table; the summary goes to stderr.
  if (!r.summary.is_null()) std::cerr << "# summary " << r.summary.dump() << "\n";
}

double angle_out(double rad, const Settings& s) { return s.degrees ? rad * 180.0 / kPi : rad; }
std::string angle_col(const std::string& stem, const Settings& s) {
  return stem + (s.degrees ? "_deg" : "_rad");
}

// ---------------------------------------------------------------- commands

Report cmd_deficit(double q1, double q2, const ShapeOptions& shape, const Settings& s) {
  const StateParams p(q1, q2);
  const DeficitResult r = one_way_deficit(p, shape);
  Report rep("deficit");
  rep.params = {{"q1", q1}, {"q2", q2}, {"grid_n", shape.grid_n}};
  rep.columns = {"q1", "q2", "delta_bits", "branch", angle_col("theta_opt", s), "tie"};
  rep.rows.push_back({p.q1(), p.q2(), r.delta, to_string(r.branch),
                      angle_out(r.optimal_theta, s), r.tie});
  return rep;
}

Report cmd_shape(double q1, double q2, const ShapeOptions& shape, int samples, const Settings& s) {
  const StateParams p(q1, q2);
  const ShapeReport sr = classify_shape(p, shape);
  const double pre = pre_entropy(p);
  Report rep("shape");
  rep.params = {{"q1", q1}, {"q2", q2}, {"grid_n", shape.grid_n}, {"samples", samples}};
  rep.columns = {angle_col("theta", s), "post_entropy_bits", "deficit_bits"};
  for (int k = 0; k <= samples; ++k) {
    const double theta = kHalfPi * k / samples;
    const double post = post_entropy(p, theta);
    rep.rows.push_back({angle_out(theta, s), post, post - pre});
  }
  ordered_json extrema = ordered_json::array();
  for (const auto& e : sr.extrema) {
    extrema.push_back({{"kind", to_string(e.kind)},
                       {angle_col("theta", s), rounded(angle_out(e.theta, s), s.precision)},
                       {"post_entropy_bits", rounded(e.value, s.precision)}});
  }
  rep.summary = {{"shape_class", to_string(sr.shape_class)},
                 {"extrema", extrema},
                 {"pre_entropy_bits", rounded(pre, s.precision)}};
  return rep;
}

Report cmd_scan(double total, int samples, const ShapeOptions& shape, const Settings& s) {
  const auto traj = TrajectorySpec::diagonal(total);
  const TrajectoryProfile prof = trajectory_profile(traj, samples, shape);
  Report rep("scan");
  rep.params = {{"total", total}, {"samples", samples}, {"grid_n", shape.grid_n}};
  rep.columns = {"q1", "q2", "delta_bits", "branch", angle_col("theta_opt", s)};
  for (const auto& row : prof.rows) {
    rep.rows.push_back({row.p.q1(), row.p.q2(), row.result.delta, to_string(row.result.branch),
                        angle_out(row.result.optimal_theta, s)});
  }
  ordered_json tr = ordered_json::array();
  ordered_json detail = ordered_json::array();
  for (std::size_t k : prof.transitions) {
    const auto& row = prof.rows[k];
    tr.push_back(rounded(row.p.q1(), s.precision));
    detail.push_back({{"q1", rounded(row.p.q1(), s.precision)},
                      {"from", to_string(prof.rows[k - 1].result.branch)},
                      {"to", to_string(row.result.branch)}});
  }
  rep.summary = {{"transitions", tr}, {"transition_detail", detail}};
  return rep;
}

std::string curve_name(BoundaryKind k, bool mirrored) {
  return std::string(to_string(k)) + (mirrored ? "_mirror" : "");
}

Report cmd_boundaries(int resolution, const SolverOptions& opt) {
  const auto curves = trace_boundaries(resolution, opt);
  Report rep("boundaries");
  rep.params = {{"resolution", resolution}, {"tol", opt.tol}};
  rep.columns = {"kind", "q1", "q2", "residual"};
  ordered_json gaps = ordered_json::object();
  for (const auto& c : curves) {
    const std::string name = curve_name(c.kind, c.mirrored);
    gaps[name] = c.gaps;
    for (const auto& bp : c.points) rep.rows.push_back({name, bp.p.q1(), bp.p.q2(), bp.residual});
  }
  for (const auto& bp : zero_boundary_axis()) {
    rep.rows.push_back({to_string(bp.kind), bp.p.q1(), bp.p.q2(), bp.residual});
  }
  rep.summary = {{"gaps", gaps}};
  return rep;
}

struct Table1Reference {
  double q1, q2, angle;
};

// Reference rows: boundary point and jump of the optimal angle.
constexpr Table1Reference kTable1[] = {
    {0.5, 0.0, 0.0},
    {0.544535, 0.55 - 0.544535, 0.1267},
    {0.588104, 0.6 - 0.588104, 0.2470},
    {0.631766, 0.65 - 0.631766, 0.4020},
    {0.676082, 0.7 - 0.676082, 0.6252},
    {0.721590, 0.75 - 0.721590, 1.0409},
    {0.739409, 0.029686, kHalfPi},
};

Report cmd_table1(const SolverOptions& opt, const Settings& s) {
  const auto rows = jump_angle_table(opt);
  Report rep("table1");
  rep.params = {{"tol", opt.tol}};
  rep.columns = {"q1",
                 "q2",
                 angle_col("jump", s),
                 "reference_q1",
                 "reference_q2",
                 angle_col("reference_jump", s),
                 "dq1",
                 angle_col("djump", s)};
  double max_dq1 = 0.0, max_dangle = 0.0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    const auto& ref = kTable1[k];
    const double dq1 = r.boundary.p.q1() - ref.q1;
    const double da = r.jump_angle - ref.angle;
    max_dq1 = std::max(max_dq1, std::abs(dq1));
    max_dangle = std::max(max_dangle, std::abs(da));
    rep.rows.push_back({r.boundary.p.q1(), r.boundary.p.q2(), angle_out(r.jump_angle, s), ref.q1,
                        ref.q2, angle_out(ref.angle, s), dq1, angle_out(da, s)});
  }
  rep.summary = {{"max_abs_dq1", rounded(max_dq1, s.precision)},
                 {angle_col("max_abs_djump", s), rounded(angle_out(max_dangle, s), s.precision)}};
  return rep;
}

Report cmd_phase(int resolution, int theta_grid, const Settings& s) {
  const PhaseGrid g = sweep(resolution, theta_grid);
  Report rep("phase-diagram");
  rep.params = {{"resolution", resolution}, {"theta_grid", theta_grid}};
  rep.columns = {"q1", "q2", "branch", "delta_bits", angle_col("theta_opt", s)};
  for (const auto& c : g.cells) {
    rep.rows.push_back({c.p.q1(), c.p.q2(), to_string(c.label), c.delta, angle_out(c.optimal_theta, s)});
  }
  rep.summary = {{"cells", g.cells.size()},
                 {"area_fraction_interior", rounded(g.area_fraction_interior, s.precision)},
                 {"unresolved", g.unresolved}};
  return rep;
}

constexpr double kOracleLimit = 1e-10;

Report cmd_oracle_check(std::uint64_t seed, int samples, bool& passed) {
  ValidationOptions opt;
  opt.seed = seed;
  opt.random_samples = samples;
  const ValidationReport v = validate_closed_form(opt);
  passed = v.max_deviation <= kOracleLimit && v.max_azimuth_spread <= kOracleLimit;
  Report rep("oracle-check");
  rep.params = {{"seed", seed}, {"random_samples", samples}};
  rep.columns = {"evaluations", "max_deviation_bits", "max_azimuth_spread_bits", "worst_q1",
                 "worst_q2", "worst_theta_rad", "pass"};
  rep.rows.push_back({static_cast<double>(v.evaluations), v.max_deviation, v.max_azimuth_spread,
                      v.worst_state.q1(), v.worst_state.q2(), v.worst_theta, passed});
  return rep;
}

Report cmd_fidelity(double a1, double a2, double b1, double b2) {
  const StateParams a(a1, a2), b(b1, b2);
  Report rep("fidelity");
  rep.params = {{"a", {a1, a2}}, {"b", {b1, b2}}};
  rep.columns = {"q1_a", "q2_a", "q1_b", "q2_b", "fidelity"};
  rep.rows.push_back({a.q1(), a.q2(), b.q1(), b.q2(), family_fidelity(a, b)});
  return rep;
}

int fail(int code, const std::string& kind, const std::string& message) {
  ordered_json err = {{"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-way quantum deficit of a two-parameter family of X states"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", s.output, "Write to a file instead of stdout");
  app.add_option("--precision", s.precision, "Significant digits")->check(CLI::Range(1, 15));
  app.add_flag("--degrees", s.degrees, "Report angles in degrees");
  app.add_option("--threads", s.threads, "Worker threads (0: all available)")
      ->check(CLI::NonNegativeNumber);

  ShapeOptions shape;
  SolverOptions solver;
  int resolution = 100;
  int theta_grid = ShapeOptions::kDefaultGrid;
  std::uint64_t seed = 42;
  double q1 = 0, q2 = 0, b1 = 0, b2 = 0, total = 0;
  int samples = 2000;
  int curve_samples = 180;
  int oracle_samples = 2000;

  auto* deficit = app.add_subcommand("deficit", "Deficit, winning branch and optimal angle");
  deficit->add_option("q1", q1)->required();
  deficit->add_option("q2", q2)->required();
  deficit->add_option("--grid-n", shape.grid_n, "Angle grid for the shape pass");

  auto* shape_cmd = app.add_subcommand("shape", "Shape of the post-measurement entropy curve");
  shape_cmd->add_option("q1", q1)->required();
  shape_cmd->add_option("q2", q2)->required();
  shape_cmd->add_option("--grid-n", shape.grid_n, "Angle grid for the shape pass");
  shape_cmd->add_option("--samples", curve_samples, "Curve intervals on [0, pi/2]")
      ->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "Deficit profile along q1 + q2 = total");
  scan->add_option("total", total)->required();
  scan->add_option("samples", samples)->check(CLI::Range(100, 1000000));
  scan->add_option("--grid-n", shape.grid_n, "Angle grid for the shape pass");

  auto* boundaries = app.add_subcommand("boundaries", "Trace the phase boundaries");
  boundaries->add_option("--resolution", resolution, "Trajectories per unit");
  boundaries->add_option("--tol", solver.tol, "Root tolerance");

  auto* table1 = app.add_subcommand("table1", "Jump angles on the hopping boundary");
  table1->add_option("--tol", solver.tol, "Root tolerance");

  auto* phase = app.add_subcommand("phase-diagram", "Label every cell of the triangle");
  phase->add_option("--resolution", resolution, "Cells per unit");
  phase->add_option("--theta-grid", theta_grid, "Angle grid per cell");

  auto* oracle = app.add_subcommand("oracle-check", "Closed form against the dense-matrix oracle");
  oracle->add_option("--seed", seed, "Seed for the random probes");
  oracle->add_option("--samples", oracle_samples, "Random probes on top of the grid")
      ->check(CLI::NonNegativeNumber);

  auto* fidelity = app.add_subcommand("fidelity", "Fidelity between two family members");
  fidelity->add_option("q1_a", q1)->required();
  fidelity->add_option("q2_a", q2)->required();
  fidelity->add_option("q1_b", b1)->required();
  fidelity->add_option("q2_b", b2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (s.threads > 0) set_threads(s.threads);

    if (*deficit) {
      emit(cmd_deficit(q1, q2, shape, s), s);
    } else if (*shape_cmd) {
      emit(cmd_shape(q1, q2, shape, curve_samples, s), s);
    } else if (*scan) {
      emit(cmd_scan(total, samples, shape, s), s);
    } else if (*boundaries) {
      emit(cmd_boundaries(resolution, solver), s);
    } else if (*table1) {
      emit(cmd_table1(solver, s), s);
    } else if (*phase) {
      emit(cmd_phase(resolution, theta_grid, s), s);
    } else if (*oracle) {
      bool passed = false;
      emit(cmd_oracle_check(seed, oracle_samples, passed), s);
      if (!passed) {
        return fail(kFailure, "oracle_mismatch", "closed form differs from the oracle by more than 1e-10");
      }
    } else if (*fidelity) {
      emit(cmd_fidelity(q1, q2, b1, b2), s);
    }
  } catch (const DomainError& e) {
    return fail(kDomain, "domain_error", e.what());
  } catch (const UnresolvedShape& e) {
    return fail(kUnresolved, "unresolved_shape", e.what());
  } catch (const ConvergenceError& e) {
    return fail(kNoConvergence, "no_convergence", e.what());
  } catch (const std::exception& e) {
    return fail(kFailure, "error", e.what());
  }
  return kOk;
}
