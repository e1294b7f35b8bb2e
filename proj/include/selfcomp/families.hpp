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

// Generators for selfcomplementary channel families in dimension 2, 3 and N.

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "selfcomp/channel.hpp"

namespace selfcomp {

namespace detail {

template <typename Real>
void require_angles(Real theta, Real phi) {
  require_range("theta", theta, Real(0), std::numbers::pi_v<Real>);
  require_range("phi", phi, Real(0), 2 * std::numbers::pi_v<Real>);
}

template <typename Real>
void require_unitary_parameter(const ComplexMatrix<Real>& w, Index n) {
  if (w.rows() != n || w.cols() != n) {
    std::ostringstream msg;
    msg << "W must be " << n << "x" << n << ", got " << w.rows() << "x"
        << w.cols();
    throw ParameterError(msg.str());
  }
  const Real residual = unitarity_residual(w);
  if (!(residual <= kDefaultTol<Real>)) {
    std::ostringstream msg;
    msg << "W is not unitary (residual " << residual << ")";
    throw ParameterError(msg.str());
  }
}

}  // namespace detail

/// A generated channel together with its validation report. Used where the
/// parameterization is not guaranteed to be valid everywhere.
template <typename Real = double>
struct ReportedChannel {
  KrausSet<Real> channel;
  ChannelReport<Real> report;
};

/// Cyclic shift P with P e_j = e_{(j+1) mod n}.
template <typename Real = double>
ComplexMatrix<Real> cyclic_permutation(Index n) {
  ComplexMatrix<Real> p = ComplexMatrix<Real>::Zero(n, n);
  for (Index j = 0; j < n; ++j) p((j + 1) % n, j) = 1;
  return p;
}

/// Unitary DFT matrix F_{jk} = exp(2 pi i jk / n) / sqrt(n).
template <typename Real = double>
ComplexMatrix<Real> fourier_matrix(Index n) {
  ComplexMatrix<Real> f(n, n);
  const Real norm = Real(1) / std::sqrt(Real(n));
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k)
      f(j, k) = std::polar(norm, 2 * std::numbers::pi_v<Real> *
                                     Real((j * k) % n) / Real(n));
  return f;
}

/// First one-qubit class: K1 = [[sin t, 0], [0, 1/sqrt2]],
/// K2 = [[0, 1/sqrt2], [cos t e^{i phi}, 0]].
template <typename Real = double>
KrausSet<Real> qubit_family_a(std::type_identity_t<Real> theta,
                              std::type_identity_t<Real> phi) {
  detail::require_angles<Real>(theta, phi);
  using C = std::complex<Real>;
  const Real h = Real(1) / std::numbers::sqrt2_v<Real>;
  ComplexMatrix<Real> k1(2, 2), k2(2, 2);
  k1 << C(std::sin(theta)), C(0), C(0), C(h);
  k2 << C(0), C(h), std::cos(theta) * std::exp(C(0, phi)), C(0);
  return KrausSet<Real>({k1, k2});
}

/// Second one-qubit class: K1 = [[1, 0], [0, sin t / sqrt2]],
/// K2 = [[0, sin t / sqrt2], [0, cos t e^{i phi}]]. (0, 0) is dephasing.
template <typename Real = double>
KrausSet<Real> qubit_family_b(std::type_identity_t<Real> theta,
                              std::type_identity_t<Real> phi) {
  detail::require_angles<Real>(theta, phi);
  using C = std::complex<Real>;
  const Real s = std::sin(theta) / std::numbers::sqrt2_v<Real>;
  ComplexMatrix<Real> k1(2, 2), k2(2, 2);
  k1 << C(1), C(0), C(0), C(s);
  k2 << C(0), C(s), C(0), std::cos(theta) * std::exp(C(0, phi));
  return KrausSet<Real>({k1, k2});
}

template <typename Real = double>
KrausSet<Real> amplitude_damping(std::type_identity_t<Real> p) {
  detail::require_range<Real>("p", p, Real(0), Real(1));
  const Real q = std::min(std::max(p, Real(0)), Real(1));
  ComplexMatrix<Real> k1 = ComplexMatrix<Real>::Zero(2, 2);
  ComplexMatrix<Real> k2 = ComplexMatrix<Real>::Zero(2, 2);
  k1(0, 0) = 1;
  k1(1, 1) = std::sqrt(1 - q);
  k2(0, 1) = std::sqrt(q);
  return KrausSet<Real>({k1, k2});
}

/// K1 = diag(1, 1/sqrt2, ..., 1/sqrt2); K_i (i >= 2) holds 1/sqrt2 at row 1,
/// column i. Selfcomplementary and CPTP for every n >= 2.
template <typename Real = double>
KrausSet<Real> ndim_theta0(Index n) {
  if (n < 2) throw ParameterError("ndim_theta0: n must be at least 2");
  const Real h = Real(1) / std::numbers::sqrt2_v<Real>;
  std::vector<ComplexMatrix<Real>> ops;
  ComplexMatrix<Real> k1 = ComplexMatrix<Real>::Zero(n, n);
  k1(0, 0) = 1;
  for (Index i = 1; i < n; ++i) k1(i, i) = h;
  ops.push_back(k1);
  for (Index i = 1; i < n; ++i) {
    ComplexMatrix<Real> k = ComplexMatrix<Real>::Zero(n, n);
    k(0, i) = h;
    ops.push_back(std::move(k));
  }
  return KrausSet<Real>(std::move(ops));
}

/// The printed one-qutrit parameterization, entry for entry, including the
/// rows that repeat W22, W12, W23 in both K2 and K3. Its validity is not
/// assumed; see the attached report.
template <typename Real = double>
ReportedChannel<Real> qutrit_family(std::type_identity_t<Real> theta,
                                    const ComplexMatrix<Real>& w) {
  detail::require_range<Real>("theta", theta, Real(0),
                              std::numbers::pi_v<Real>);
  detail::require_unitary_parameter(w, 3);
  const Real c = std::cos(theta);
  const Real s = std::sin(theta);
  const Real h = Real(1) / std::numbers::sqrt2_v<Real>;
  // 1-based accessor to keep the entries readable against the display.
  auto W = [&w](int r, int col) { return w(r - 1, col - 1); };

  ComplexMatrix<Real> k1 = ComplexMatrix<Real>::Zero(3, 3);
  k1(0, 0) = c;
  k1(1, 1) = h * c;
  k1(2, 2) = h * c;

  ComplexMatrix<Real> k2(3, 3);
  k2.row(0) << 0, h * c, 0;
  k2.row(1) << W(1, 1) * s, W(2, 1) * s, W(3, 1) * s;
  k2.row(2) << h * W(2, 2) * s, h * W(1, 2) * s, h * W(2, 3) * s;

  ComplexMatrix<Real> k3(3, 3);
  k3.row(0) << 0, 0, h * c;
  k3.row(1) << h * W(2, 2) * s, h * W(1, 2) * s, h * W(2, 3) * s;
  k3.row(2) << W(1, 3) * s, W(2, 3) * s, W(3, 3) * s;

  KrausSet<Real> channel({k1, k2, k3});
  auto report = validate(channel);
  return {std::move(channel), report};
}

/// The printed N-dimensional parameterization.
///
/// K_1 = diag(cos t, cos t / sqrt2, ...). For m = 1..N-1 (0-based Kraus
/// index) K_m has cos t / sqrt2 at row 0, column m; rows r = 1..N-2 are
/// sin t / sqrt(N-2) * col(P^{-m} W, r-1)^T and the last row is
/// sin t / sqrt(N-1) * col(P^{-m} W, N-1)^T. Validity is reported.
template <typename Real = double>
ReportedChannel<Real> ndim_family(Index n, std::type_identity_t<Real> theta,
                                  const ComplexMatrix<Real>& w) {
  if (n < 2) throw ParameterError("ndim_family: n must be at least 2");
  detail::require_range<Real>("theta", theta, Real(0),
                              std::numbers::pi_v<Real>);
  detail::require_unitary_parameter(w, n);
  const Real c = std::cos(theta);
  const Real s = std::sin(theta);
  const Real h = Real(1) / std::numbers::sqrt2_v<Real>;

  std::vector<ComplexMatrix<Real>> ops;
  ComplexMatrix<Real> k1 = ComplexMatrix<Real>::Zero(n, n);
  k1(0, 0) = c;
  for (Index i = 1; i < n; ++i) k1(i, i) = h * c;
  ops.push_back(std::move(k1));

  const ComplexMatrix<Real> p_inv = cyclic_permutation<Real>(n).transpose();
  ComplexMatrix<Real> shifted = w;  // P^{-m} W, updated per m
  for (Index m = 1; m < n; ++m) {
    shifted = p_inv * shifted;
    ComplexMatrix<Real> k = ComplexMatrix<Real>::Zero(n, n);
    k(0, m) = h * c;
    for (Index r = 1; r + 1 < n; ++r) {
      k.row(r) = (s / std::sqrt(Real(n - 2))) * shifted.col(r - 1).transpose();
    }
    k.row(n - 1) = (s / std::sqrt(Real(n - 1))) * shifted.col(n - 1).transpose();
    ops.push_back(std::move(k));
  }
  KrausSet<Real> channel(std::move(ops));
  auto report = validate(channel);
  return {std::move(channel), report};
}

}  // namespace selfcomp
