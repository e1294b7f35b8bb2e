// Copyright 2026 The selfcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "selfcomp/cli.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "selfcomp/io.hpp"
#include "selfcomp/selfcomp.hpp"

namespace selfcomp::cli {

namespace {

using io::Json;

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out_path.empty()) {
    out << text;
  } else {
    io::write_file_atomic(config.out_path, text);
  }
}

Json nullable(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// Displayed entropy-like quantity and its key under --bits.
double in_units(const RunConfig& config, double nats) {
  return config.bits ? nats / std::numbers::ln2 : nats;
}

std::string unit_key(const RunConfig& config, const std::string& stem) {
  return stem + (config.bits ? "_bits" : "_nats");
}

ComplexMatrix<> load_w(const RunConfig& config, Index n) {
  if (config.w == "identity") return ComplexMatrix<>::Identity(n, n);
  if (config.w == "fourier") return fourier_matrix(n);
  return io::matrix_from_json(io::read_json_file(config.w));
}

KrausSet<> build_family(const RunConfig& config) {
  const std::string& id = config.family;
  if (id == "qubit-a") return qubit_family_a(config.theta, config.phi);
  if (id == "qubit-b") return qubit_family_b(config.theta, config.phi);
  if (id == "ad") return amplitude_damping(config.p);
  if (id == "ndim-theta0") return ndim_theta0(config.n);
  if (id == "qutrit") return qutrit_family(config.theta, load_w(config, 3)).channel;
  if (id == "ndim") {
    if (config.n < 2) throw ParameterError("--n must be at least 2");
    return ndim_family(config.n, config.theta, load_w(config, config.n)).channel;
  }
  throw ParameterError("unknown family id '" + id + "'");
}

Json validation_block(const KrausSet<>& channel, double tol) {
  const auto report = validate(channel, tol);
  return Json{{"cptp_residual", report.cptp.completeness_residual},
              {"selfcomplementary", report.selfcomplementary},
              {"choi_rank", report.choi_rank}};
}

std::vector<DensityMatrix<>> computational_basis(Index n) {
  std::vector<DensityMatrix<>> basis;
  for (Index i = 0; i < n; ++i) basis.push_back(DensityMatrix<>::basis(n, i));
  return basis;
}

TrajectoryFamily trajectory_family(const std::string& id) {
  if (id == "qubit-a") return TrajectoryFamily::qubit_a;
  if (id == "qubit-b") return TrajectoryFamily::qubit_b;
  if (id == "ad") return TrajectoryFamily::amplitude_damping;
  throw ParameterError("dynamics: --id must be qubit-a, qubit-b or ad, got '" +
                       id + "'");
}

std::string bloch_csv(const KrausSet<>& channel, int points) {
  std::string text = io::csv_line(std::vector<std::string>{"x", "y", "z"});
  for (const auto& v : bloch_image(channel, points)) {
    text += io::csv_line(std::vector<double>{v(0), v(1), v(2)});
  }
  return text;
}

}  // namespace

void validate_config(const RunConfig& config) {
  if (!(config.tol > 0)) throw ParameterError("--tol must be positive");
  if (config.grid < 2) throw ParameterError("--grid must be at least 2");
  if (config.points < 1) throw ParameterError("--points must be at least 1");
  if (config.steps < 2) throw ParameterError("--steps must be at least 2");
}

void cmd_family(const RunConfig& config, std::ostream& out) {
  const KrausSet<> channel = build_family(config);
  Json doc = io::channel_to_json(channel);
  Json params{{"id", config.family}};
  if (config.family == "qubit-a" || config.family == "qubit-b") {
    params["theta"] = config.theta;
    params["phi"] = config.phi;
  } else if (config.family == "ad") {
    params["p"] = config.p;
  } else {
    params["n"] = channel.n_in();
    if (config.family != "ndim-theta0") {
      params["theta"] = config.theta;
      params["w"] = config.w;
    }
  }
  doc["family"] = std::move(params);
  doc["validation"] = validation_block(channel, config.tol);
  emit(config, out, doc.dump(2) + "\n");
}

void cmd_analyze(const RunConfig& config, std::ostream& out) {
  if (config.in_path.empty()) throw ParameterError("analyze: --in is required");
  const KrausSet<> channel =
      io::channel_from_json(io::read_json_file(config.in_path));
  const auto report = validate(channel, config.tol);
  Json doc{{"n_in", channel.n_in()},
           {"n_out", channel.n_out()},
           {"kraus_count", channel.size()},
           {"cptp_residual", report.cptp.completeness_residual},
           {"cptp", report.cptp.passed},
           {"selfcomplementarity_residual",
            nullable(report.selfcomplementarity_residual)},
           {"selfcomplementary", report.selfcomplementary},
           {"choi_rank", report.choi_rank}};
  const std::string entropy_key = unit_key(config, "map_entropy");
  const std::string coherent_key = unit_key(config, "coherent_information");
  const std::string chi_key = unit_key(config, "chi_bound");
  if (report.cptp.passed) {
    const auto rho_star = DensityMatrix<>::maximally_mixed(channel.n_in());
    doc[entropy_key] = in_units(config, map_entropy(channel));
    doc[coherent_key] =
        in_units(config, coherent_information(channel, rho_star));
    doc[chi_key] = in_units(config, classical_capacity_lower_bound(
                                        channel,
                                        computational_basis(channel.n_in())));
  } else {
    doc[entropy_key] = nullptr;
    doc[coherent_key] = nullptr;
    doc[chi_key] = nullptr;
    doc["measures_skipped"] = "channel fails the completeness check";
  }
  emit(config, out, doc.dump(2) + "\n");
}

void cmd_sweep(const RunConfig& config, std::ostream& out) {
  if (config.family != "qubit-a" && config.family != "qubit-b") {
    throw ParameterError("sweep: --id must be qubit-a or qubit-b");
  }
  if (!(config.theta_min <= config.theta_max)) {
    throw ParameterError("sweep: --theta-min must not exceed --theta-max");
  }
  const double half_pi = std::numbers::pi / 2;
  std::string text = io::csv_line(std::vector<std::string>{
      "theta", "negativity_numeric", "negativity_closed", "concurrence_numeric",
      "concurrence_closed", unit_key(config, "chi_bound"),
      unit_key(config, "map_entropy")});
  const auto basis = computational_basis(2);
  for (int i = 0; i < config.grid; ++i) {
    const double theta = config.theta_min + (config.theta_max - config.theta_min) *
                                                i / (config.grid - 1);
    RunConfig point = config;
    point.theta = theta;
    const KrausSet<> channel = build_family(point);
    const auto omega = choi_state(channel);
    const double conc_closed =
        (theta >= 0 && theta <= half_pi)
            ? concurrence_closed_form(theta)
            : std::numeric_limits<double>::quiet_NaN();
    text += io::csv_line(std::vector<double>{
        theta, negativity(omega, {2, 2}), negativity_closed_form(theta),
        concurrence(omega), conc_closed,
        in_units(config, classical_capacity_lower_bound(channel, basis)),
        in_units(config, von_neumann_entropy(omega))});
  }
  emit(config, out, text);
}

void cmd_bloch(const RunConfig& config, std::ostream& out) {
  auto channel_at = [&config](double theta) {
    if (config.identity) return KrausSet<>::identity(2);
    RunConfig point = config;
    point.theta = theta;
    if (point.family != "qubit-a" && point.family != "qubit-b" &&
        point.family != "ad") {
      throw ParameterError("bloch: --id must be qubit-a, qubit-b or ad");
    }
    return build_family(point);
  };
  if (!config.batch) {
    emit(config, out, bloch_csv(channel_at(config.theta), config.points));
    return;
  }
  if (config.out_path.empty()) {
    throw ParameterError("bloch: --batch needs --out DIR");
  }
  const std::filesystem::path dir = config.out_path;
  std::filesystem::create_directories(dir);
  for (int k = 0; k <= 8; ++k) {
    const double theta = k * std::numbers::pi / 8;
    io::write_file_atomic(dir / ("bloch_k" + std::to_string(k) + ".csv"),
                          bloch_csv(channel_at(theta), config.points));
  }
}

void cmd_dynamics(const RunConfig& config, std::ostream& out) {
  const TrajectoryFamily family = trajectory_family(config.family);
  const auto traj = run_trajectory(family, config.omega, config.t_max,
                                   config.steps, config.phi);
  std::string text = io::csv_line(std::vector<std::string>{
      "t", "theta", "negativity", "concurrence",
      unit_key(config, "map_entropy")});
  for (const auto& r : traj.records) {
    text += io::csv_line(std::vector<double>{r.t, r.theta, r.negativity,
                                             r.concurrence,
                                             in_units(config, r.map_entropy)});
  }

  double max_coherent = 0;
  for (const auto& r : traj.records) {
    max_coherent = std::max(max_coherent, std::abs(r.coherent_information));
  }
  const Json summary{
      {"id", config.family},
      {"omega", config.omega},
      {"t_max", config.t_max},
      {"steps", config.steps},
      {"measure", "negativity"},
      {"non_markovianity_positive_variation",
       non_markovianity_measure(traj, EntanglementMeasure::negativity)},
      {"increase_duration",
       increase_duration(traj, EntanglementMeasure::negativity)},
      {"concurrence_positive_variation",
       non_markovianity_measure(traj, EntanglementMeasure::concurrence)},
      {"max_abs_coherent_information_nats", max_coherent}};

  emit(config, out, text);
  std::string summary_path = config.summary_path;
  if (summary_path.empty() && !config.out_path.empty()) {
    summary_path = config.out_path + ".summary.json";
  }
  if (summary_path.empty()) {
    out << summary.dump(2) << "\n";
  } else {
    io::write_file_atomic(summary_path, summary.dump(2) + "\n");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  CLI::App app{"Selfcomplementary quantum channel toolkit", "selfcomp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", config.out_path, "Output file (directory for bloch --batch)");
  app.add_option("--tol", config.tol, "Numerical tolerance");
  app.add_flag("--bits", config.bits, "Report entropies and chi in bits");

  auto add_family_opts = [&config](CLI::App* sub) {
    sub->add_option("--id", config.family, "Family id");
    sub->add_option("--theta", config.theta, "Family angle");
    sub->add_option("--phi", config.phi, "Phase");
  };

  CLI::App* family = app.add_subcommand("family", "Generate a channel as JSON");
  add_family_opts(family);
  family->add_option("--p", config.p, "Amplitude-damping probability");
  family->add_option("--n", config.n, "Dimension for qutrit/ndim families");
  family->add_option("--w", config.w, "identity, fourier, or a matrix JSON path");

  CLI::App* analyze = app.add_subcommand("analyze", "Validate and measure a channel");
  analyze->add_option("--in", config.in_path, "Channel JSON")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Entanglement and capacity sweep over theta");
  add_family_opts(sweep);
  sweep->add_option("--grid", config.grid, "Number of theta points");
  sweep->add_option("--theta-min", config.theta_min);
  sweep->add_option("--theta-max", config.theta_max);

  CLI::App* bloch = app.add_subcommand("bloch", "Image of the Bloch sphere");
  add_family_opts(bloch);
  bloch->add_option("--p", config.p, "Amplitude-damping probability");
  bloch->add_option("--points", config.points, "Sample points on the sphere");
  bloch->add_flag("--batch", config.batch, "theta = k pi / 8, k = 0..8");
  bloch->add_flag("--identity", config.identity, "Use the identity channel");

  CLI::App* dynamics = app.add_subcommand("dynamics", "Time-dependent trajectory");
  dynamics->add_option("--id", config.family, "qubit-a, qubit-b or ad");
  dynamics->add_option("--phi", config.phi);
  dynamics->add_option("--omega", config.omega);
  dynamics->add_option("--t-max", config.t_max);
  dynamics->add_option("--steps", config.steps, "Number of time intervals");
  dynamics->add_option("--summary", config.summary_path, "Summary JSON path");

  std::vector<const char*> argv{"selfcomp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParameterError;
  }

  try {
    validate_config(config);
    const std::string cmd = app.get_subcommands().front()->get_name();
    config.command = cmd;
    if (cmd == "family") cmd_family(config, out);
    else if (cmd == "analyze") cmd_analyze(config, out);
    else if (cmd == "sweep") cmd_sweep(config, out);
    else if (cmd == "bloch") cmd_bloch(config, out);
    else cmd_dynamics(config, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kParameterError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const Error& e) {
    // Preconditions and dimension mismatches come from user-supplied input.
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace selfcomp::cli
