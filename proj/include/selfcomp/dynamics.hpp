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

// Bloch-ball geometry of qubit channels, time evolution along a family with
// theta = omega * t, and entanglement-based non-Markovianity scores.

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "selfcomp/channel.hpp"
#include "selfcomp/families.hpp"
#include "selfcomp/measures.hpp"

namespace selfcomp {

template <typename Real = double>
using Vector3 = Eigen::Matrix<Real, 3, 1>;

template <typename Real = double>
using Matrix3 = Eigen::Matrix<Real, 3, 3>;

/// r -> linear * r + shift on Bloch vectors.
template <typename Real = double>
struct AffineQubitMap {
  Matrix3<Real> linear;
  Vector3<Real> shift;

  Vector3<Real> operator()(const Vector3<Real>& r) const {
    return linear * r + shift;
  }
};

/// (Tr sigma_x A, Tr sigma_y A, Tr sigma_z A), real parts.
template <typename Derived>
Vector3<RealOf<Derived>> bloch_vector(const Eigen::MatrixBase<Derived>& a) {
  using Real = RealOf<Derived>;
  if (a.rows() != 2 || a.cols() != 2) {
    throw DimensionError("bloch_vector: expected a 2x2 matrix");
  }
  const ComplexMatrix<Real> m = a.template cast<std::complex<Real>>();
  return {(pauli_x<Real>() * m).trace().real(),
          (pauli_y<Real>() * m).trace().real(),
          (pauli_z<Real>() * m).trace().real()};
}

/// (1 + r . sigma) / 2.
template <typename Real>
ComplexMatrix<Real> operator_from_bloch(const Vector3<Real>& r) {
  ComplexMatrix<Real> m = ComplexMatrix<Real>::Identity(2, 2);
  m += r(0) * pauli_x<Real>() + r(1) * pauli_y<Real>() + r(2) * pauli_z<Real>();
  return m / Real(2);
}

namespace detail {

template <typename Real>
void require_qubit_channel(const KrausSet<Real>& channel, const char* what) {
  if (channel.n_in() != 2 || channel.n_out() != 2) {
    std::ostringstream msg;
    msg << what << ": expected a qubit channel, got " << channel.n_in()
        << " -> " << channel.n_out();
    throw DimensionError(msg.str());
  }
}

}  // namespace detail

/// Column j of the linear part is the Bloch vector of Phi(sigma_j) / 2; the
/// shift is the Bloch vector of Phi(1/2).
template <typename Real>
AffineQubitMap<Real> affine_of_channel(const KrausSet<Real>& channel) {
  detail::require_qubit_channel(channel, "affine_of_channel");
  AffineQubitMap<Real> map;
  const ComplexMatrix<Real> paulis[3] = {pauli_x<Real>(), pauli_y<Real>(),
                                         pauli_z<Real>()};
  for (int j = 0; j < 3; ++j) {
    map.linear.col(j) = bloch_vector(apply_operator(channel, paulis[j])) / 2;
  }
  map.shift = bloch_vector(
      apply_operator(channel, ComplexMatrix<Real>::Identity(2, 2)) / Real(2));
  return map;
}

/// Deterministic Fibonacci lattice of n points on the unit sphere.
template <typename Real = double>
std::vector<Vector3<Real>> fibonacci_sphere(Index n) {
  if (n < 1) throw ParameterError("fibonacci_sphere: need at least one point");
  const Real golden_angle =
      std::numbers::pi_v<Real> * (3 - std::sqrt(Real(5)));
  std::vector<Vector3<Real>> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const Real z = 1 - Real(2 * i + 1) / Real(n);
    const Real rho = std::sqrt(std::max(Real(0), 1 - z * z));
    const Real az = golden_angle * Real(i);
    pts.emplace_back(rho * std::cos(az), rho * std::sin(az), z);
  }
  return pts;
}

/// Largest |M r + t| over a Fibonacci sample of the unit sphere. At most
/// 1 (+ rounding) for any channel.
template <typename Real>
Real max_image_radius(const AffineQubitMap<Real>& map, Index n_samples = 2000) {
  Real worst = 0;
  for (const auto& r : fibonacci_sphere<Real>(n_samples)) {
    worst = std::max(worst, map(r).norm());
  }
  return worst;
}

/// Images of n_points Fibonacci-sampled pure states, as Bloch vectors.
template <typename Real>
std::vector<Vector3<Real>> bloch_image(const KrausSet<Real>& channel,
                                       Index n_points) {
  detail::require_qubit_channel(channel, "bloch_image");
  std::vector<Vector3<Real>> out;
  for (const auto& r : fibonacci_sphere<Real>(n_points)) {
    out.push_back(bloch_vector(apply_operator(channel, operator_from_bloch(r))));
  }
  return out;
}

enum class TrajectoryFamily { qubit_a, qubit_b, amplitude_damping };

enum class EntanglementMeasure { negativity, concurrence };

template <typename Real = double>
struct TrajectoryRecord {
  Real t;
  Real theta;  // family angle in [0, pi); omega*t for amplitude damping
  Real negativity;
  Real concurrence;
  Real map_entropy;           // nats
  Real coherent_information;  // at the maximally mixed input, nats
};

template <typename Real = double>
struct Trajectory {
  TrajectoryFamily family;
  Real omega;
  Real phi;
  std::vector<Real> times;  // strictly ascending
  std::vector<TrajectoryRecord<Real>> records;
};

/// Channel at time t. The qubit families take theta = omega*t wrapped into
/// [0, pi); amplitude damping follows p = 1 - exp(-omega*t).
template <typename Real>
KrausSet<Real> trajectory_channel(TrajectoryFamily family, Real omega, Real t,
                                  Real phi, Real* theta_out = nullptr) {
  const Real arg = omega * t;
  if (family == TrajectoryFamily::amplitude_damping) {
    if (theta_out) *theta_out = arg;
    return amplitude_damping<Real>(1 - std::exp(-arg));
  }
  const Real pi = std::numbers::pi_v<Real>;
  Real theta = arg - pi * std::floor(arg / pi);
  if (theta >= pi) theta -= pi;
  if (theta < 0) theta = 0;
  if (theta_out) *theta_out = theta;
  return family == TrajectoryFamily::qubit_a ? qubit_family_a<Real>(theta, phi)
                                             : qubit_family_b<Real>(theta, phi);
}

/// Evaluates the family on the uniform grid t_i = t_max * i / n_steps,
/// i = 0..n_steps (n_steps intervals, n_steps + 1 records).
template <typename Real = double>
Trajectory<Real> run_trajectory(TrajectoryFamily family,
                                std::type_identity_t<Real> omega,
                                std::type_identity_t<Real> t_max,
                                Index n_steps,
                                std::type_identity_t<Real> phi = 0) {
  if (n_steps < 2) throw ParameterError("run_trajectory: n_steps must be >= 2");
  if (!(t_max > 0) || !std::isfinite(t_max)) {
    throw ParameterError("run_trajectory: t_max must be positive and finite");
  }
  if (!(omega >= 0) || !std::isfinite(omega)) {
    throw ParameterError("run_trajectory: omega must be nonnegative and finite");
  }
  detail::require_range<Real>("phi", phi, Real(0), 2 * std::numbers::pi_v<Real>);

  Trajectory<Real> traj{family, omega, phi, {}, {}};
  const auto rho_star = DensityMatrix<Real>::maximally_mixed(2);
  for (Index i = 0; i <= n_steps; ++i) {
    const Real t = t_max * Real(i) / Real(n_steps);
    Real theta = 0;
    const auto channel = trajectory_channel<Real>(family, omega, t, phi, &theta);
    const auto omega_state = choi_state(channel);
    traj.times.push_back(t);
    traj.records.push_back({t, theta, negativity(omega_state, {2, 2}),
                            concurrence(omega_state),
                            von_neumann_entropy(omega_state),
                            coherent_information(channel, rho_star)});
  }
  return traj;
}

namespace detail {

template <typename Real>
Real measure_value(const TrajectoryRecord<Real>& r, EntanglementMeasure m) {
  return m == EntanglementMeasure::negativity ? r.negativity : r.concurrence;
}

}  // namespace detail

/// Accumulated positive variation sum_i max(E(t_{i+1}) - E(t_i), 0).
template <typename Real>
Real non_markovianity_measure(const Trajectory<Real>& traj,
                              EntanglementMeasure measure) {
  if (traj.records.size() < 2) {
    throw PreconditionError("non_markovianity_measure: need two records");
  }
  Real total = 0;
  for (std::size_t i = 0; i + 1 < traj.records.size(); ++i) {
    total += std::max(Real(0), detail::measure_value(traj.records[i + 1], measure) -
                                   detail::measure_value(traj.records[i], measure));
  }
  return total;
}

/// Total time spent on steps where E rises by more than `tol`.
template <typename Real>
Real increase_duration(const Trajectory<Real>& traj,
                       EntanglementMeasure measure,
                       std::type_identity_t<Real> tol = Real(1e-12)) {
  if (traj.records.size() < 2) {
    throw PreconditionError("increase_duration: need two records");
  }
  Real total = 0;
  for (std::size_t i = 0; i + 1 < traj.records.size(); ++i) {
    const Real rise = detail::measure_value(traj.records[i + 1], measure) -
                      detail::measure_value(traj.records[i], measure);
    if (rise > tol) total += traj.times[i + 1] - traj.times[i];
  }
  return total;
}

}  // namespace selfcomp
