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

// Entropies, capacity bounds and two-qubit entanglement monotones.
// Entropies are in nats.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "selfcomp/channel.hpp"

namespace selfcomp {

namespace detail {

// Eigenvalues at or below this are exact zeros in entropy sums.
template <typename Real>
inline constexpr Real kEntropyZero = Real(1e-14);

template <typename Real>
Real entropy_of_spectrum(const RealVector<Real>& values) {
  Real s = 0;
  for (Index i = 0; i < values.size(); ++i) {
    const Real v = values(i);
    if (v > kEntropyZero<Real>) s -= v * std::log(v);
  }
  return s;
}

template <typename Real>
Real checked_sqrt(Real x) {
  if (x < 0 && x >= Real(-1e-12)) return Real(0);
  if (x < 0) return std::numeric_limits<Real>::quiet_NaN();
  return std::sqrt(x);
}

template <typename Real>
void require_two_qubit(const DensityMatrix<Real>& omega, const char* what) {
  if (omega.dim() != 4) {
    std::ostringstream msg;
    msg << what << ": expected a two-qubit (4x4) state, got dimension "
        << omega.dim();
    throw DimensionError(msg.str());
  }
}

}  // namespace detail

template <typename Real>
Real von_neumann_entropy(const DensityMatrix<Real>& rho) {
  return detail::entropy_of_spectrum(hermitian_eigenvalues(rho.matrix()));
}

/// Entropy of the normalized Choi state. Refuses maps failing completeness.
template <typename Real>
Real map_entropy(const KrausSet<Real>& channel) {
  require_cptp(channel, "map_entropy");
  return von_neumann_entropy(choi_state(channel));
}

/// S(Phi(rho)) - S(Phi~(rho)).
template <typename Real>
Real coherent_information(const KrausSet<Real>& channel,
                          const DensityMatrix<Real>& rho) {
  require_cptp(channel, "coherent_information");
  const auto out = apply(channel, rho);
  const auto env = apply(complementary(channel), rho);
  return von_neumann_entropy(out) - von_neumann_entropy(env);
}

template <typename Real = double>
class Ensemble {
 public:
  Ensemble(std::vector<Real> probabilities,
           std::vector<DensityMatrix<Real>> states)
      : p_(std::move(probabilities)), states_(std::move(states)) {
    if (p_.empty() || p_.size() != states_.size()) {
      throw DimensionError(
          "Ensemble: probabilities and states must be non-empty and aligned");
    }
    Real total = 0;
    for (Real p : p_) {
      if (!(p >= 0)) throw PreconditionError("Ensemble: negative probability");
      total += p;
    }
    if (std::abs(total - 1) > Real(1e-12)) {
      throw PreconditionError("Ensemble: probabilities do not sum to 1");
    }
    for (const auto& s : states_) {
      if (s.dim() != states_.front().dim()) {
        throw DimensionError("Ensemble: states of different dimension");
      }
    }
  }

  const std::vector<Real>& probabilities() const { return p_; }
  const std::vector<DensityMatrix<Real>>& states() const { return states_; }

 private:
  std::vector<Real> p_;
  std::vector<DensityMatrix<Real>> states_;
};

/// S(sum p_i rho_i) - sum p_i S(rho_i).
template <typename Real>
Real holevo_chi(const Ensemble<Real>& ensemble) {
  const auto& p = ensemble.probabilities();
  const auto& rho = ensemble.states();
  const Index d = rho.front().dim();
  ComplexMatrix<Real> mean = ComplexMatrix<Real>::Zero(d, d);
  Real weighted = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mean += p[i] * rho[i].matrix();
    weighted += p[i] * von_neumann_entropy(rho[i]);
  }
  mean = (mean + mean.adjoint().eval()) / Real(2);
  const Real chi =
      von_neumann_entropy(DensityMatrix<Real>(std::move(mean), Real(1e-10))) -
      weighted;
  return std::max(chi, Real(0));
}

/// Holevo quantity of the channel outputs for equiprobable, mutually
/// orthogonal pure inputs.
template <typename Real>
Real classical_capacity_lower_bound(
    const KrausSet<Real>& channel,
    const std::vector<DensityMatrix<Real>>& basis_states) {
  require_cptp(channel, "classical_capacity_lower_bound");
  if (basis_states.empty()) {
    throw PreconditionError("classical_capacity_lower_bound: no input states");
  }
  std::vector<ComplexVector<Real>> kets;
  for (const auto& s : basis_states) {
    if (s.dim() != channel.n_in()) {
      throw DimensionError(
          "classical_capacity_lower_bound: state dimension mismatch");
    }
    if (std::abs(s.purity() - 1) > kDefaultTol<Real>) {
      throw PreconditionError(
          "classical_capacity_lower_bound: input states must be pure");
    }
    const auto sys = hermitian_eigensystem(s.matrix());
    kets.push_back(sys.vectors.col(sys.values.size() - 1));
  }
  for (std::size_t i = 0; i < kets.size(); ++i) {
    for (std::size_t j = i + 1; j < kets.size(); ++j) {
      const Real overlap = std::abs(kets[i].dot(kets[j]));
      if (overlap > kDefaultTol<Real>) {
        std::ostringstream msg;
        msg << "classical_capacity_lower_bound: states " << i << " and " << j
            << " are not orthogonal (|<i|j>| = " << overlap << ")";
        throw PreconditionError(msg.str());
      }
    }
  }
  const Real w = Real(1) / Real(basis_states.size());
  std::vector<Real> p(basis_states.size(), w);
  std::vector<DensityMatrix<Real>> outputs;
  for (const auto& s : basis_states) outputs.push_back(apply(channel, s));
  return holevo_chi(Ensemble<Real>(std::move(p), std::move(outputs)));
}

/// (sigma_y (x) sigma_y) conj(omega) (sigma_y (x) sigma_y).
template <typename Real>
ComplexMatrix<Real> spin_flip(const DensityMatrix<Real>& omega) {
  detail::require_two_qubit(omega, "spin_flip");
  const ComplexMatrix<Real> yy = kron(pauli_y<Real>(), pauli_y<Real>());
  return yy * omega.matrix().conjugate() * yy;
}

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), l_i the square roots of
/// the spectrum of omega * spin_flip(omega) in descending order.
template <typename Real>
Real concurrence(const DensityMatrix<Real>& omega) {
  const ComplexMatrix<Real> r = omega.matrix() * spin_flip(omega);
  const Real scale = r.norm();
  if (scale == 0) return 0;
  const RealVector<Real> gamma = sanitize_nonnegative_spectrum(
      general_eigenvalues(r), scale, Real(1e-9), Real(1e-14));
  std::vector<Real> lambda(static_cast<std::size_t>(gamma.size()));
  for (Index i = 0; i < gamma.size(); ++i) {
    lambda[static_cast<std::size_t>(i)] = std::sqrt(gamma(i));
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(Real(0), lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

/// The printed three-branch formula for the family-a Choi concurrence.
///
/// theta < pi/4: (sqrt(4 cos 2t - 1) - sqrt(2 - cos 2t)) / 2; theta = pi/4:
/// 0; theta > pi/4: the same expression at pi/2 - theta. NaN where a
/// radicand is below -1e-12.
template <typename Real = double>
Real concurrence_closed_form(std::type_identity_t<Real> theta) {
  constexpr Real quarter_pi = std::numbers::pi_v<Real> / 4;
  detail::require_range<Real>("theta", theta, Real(0), 2 * quarter_pi);
  if (std::abs(theta - quarter_pi) <= Real(1e-12)) return 0;
  const Real t = theta < quarter_pi ? theta : 2 * quarter_pi - theta;
  const Real c2 = std::cos(2 * t);
  return (detail::checked_sqrt(4 * c2 - 1) - detail::checked_sqrt(2 - c2)) / 2;
}

/// (||omega^{T_A}||_1 - 1) / 2.
template <typename Real>
Real negativity(const DensityMatrix<Real>& omega, BipartiteDims dims) {
  const ComplexMatrix<Real> pt = partial_transpose(omega.matrix(), dims);
  const RealVector<Real> ev = hermitian_eigenvalues(pt);
  return std::max(Real(0), (ev.cwiseAbs().sum() - 1) / 2);
}

template <typename Real = double>
Real negativity_closed_form(std::type_identity_t<Real> theta) {
  return std::abs(std::cos(2 * theta)) / 4;
}

enum class ConcurrenceBranch { lower, point, upper };

/// The printed concurrence-versus-negativity relation, branch chosen by the
/// caller. NaN where a radicand is below -1e-12.
template <typename Real = double>
Real concurrence_from_negativity(std::type_identity_t<Real> neg,
                                 ConcurrenceBranch branch) {
  detail::require_range<Real>("negativity", neg, Real(0), Real(0.25));
  const Real a = detail::checked_sqrt(16 * neg - 1);
  const Real b = detail::checked_sqrt(2 - 4 * neg);
  switch (branch) {
    case ConcurrenceBranch::lower:
      return (a - b) / 2;
    case ConcurrenceBranch::point:
      return 0;
    case ConcurrenceBranch::upper:
      return (b - a) / 2;
  }
  return std::numeric_limits<Real>::quiet_NaN();
}

template <typename Real = double>
struct EntanglementFactor {
  Real predicted;  // C(rho_in) * C(omega_Phi)
  Real direct;     // C((1 (x) Phi)(rho_in))
};

/// Checks C(rho_out) = C(rho_in) C(omega_Phi) for a one-qubit channel applied
/// to the second qubit of a pure two-qubit state.
template <typename Real>
EntanglementFactor<Real> entanglement_evolution_factor(
    const KrausSet<Real>& channel, const DensityMatrix<Real>& rho_in) {
  if (channel.n_in() != 2 || channel.n_out() != 2) {
    throw DimensionError(
        "entanglement_evolution_factor: expected a one-qubit channel");
  }
  detail::require_two_qubit(rho_in, "entanglement_evolution_factor");
  if (std::abs(rho_in.purity() - 1) > Real(1e-10)) {
    throw PreconditionError(
        "entanglement_evolution_factor: input state must be pure");
  }
  std::vector<ComplexMatrix<Real>> local;
  for (const auto& k : channel) {
    local.push_back(kron(ComplexMatrix<Real>::Identity(2, 2), k));
  }
  const auto out = apply(KrausSet<Real>(std::move(local)), rho_in);
  return {concurrence(rho_in) * concurrence(choi_state(channel)),
          concurrence(out)};
}

}  // namespace selfcomp
