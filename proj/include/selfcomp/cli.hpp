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

#pragma once

// Command-line front end: family, analyze, sweep, bloch, dynamics.

#include <iosfwd>
#include <string>
#include <vector>

namespace selfcomp::cli {

enum ExitCode : int {
  kOk = 0,
  kParameterError = 2,
  kInputError = 3,
  kNumericalError = 4,
};

struct RunConfig {
  std::string command;

  std::string family = "qubit-a";  // qubit-a | qubit-b | ad | qutrit | ndim | ndim-theta0
  double theta = 0;
  double phi = 0;
  double p = 0.5;
  int n = 2;
  std::string w = "identity";  // identity | fourier | path to a matrix JSON

  std::string in_path;
  std::string out_path;
  std::string summary_path;

  double tol = 1e-10;
  bool bits = false;

  int grid = 100;
  double theta_min = 0;
  double theta_max = 1.5707963267948966;

  bool batch = false;
  bool identity = false;
  int points = 500;

  double omega = 1;
  double t_max = 3.141592653589793;
  int steps = 4096;
};

// Each command writes to config.out_path when set, otherwise to `out`.
// Library errors propagate as exceptions; run() maps them to exit codes.
void cmd_family(const RunConfig& config, std::ostream& out);
void cmd_analyze(const RunConfig& config, std::ostream& out);
void cmd_sweep(const RunConfig& config, std::ostream& out);
void cmd_bloch(const RunConfig& config, std::ostream& out);
void cmd_dynamics(const RunConfig& config, std::ostream& out);

// Throws ParameterError for bad grid sizes or tolerances.
void validate_config(const RunConfig& config);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace selfcomp::cli
