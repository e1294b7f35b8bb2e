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

// Channel representations and the conversions among them.
//
// Index conventions:
//  * Kraus operator K^i is n_out x n_in; the channel acts as
//    rho -> sum_i K^i rho K^i^dagger.
//  * SuperOperator S = sum_i K^i (x) conj(K^i), acting on row-major vec(rho);
//    S[(a,b),(c,d)] = <a|Phi(|c><d|)|b>.
//  * ChoiMatrix stores D with the OUTPUT factor first:
//    D[(a,c),(b,d)] = S[(a,b),(c,d)] = <a|Phi(|c><d|)|b>, so D / n_in is the
//    normalized Choi state and tracing out the output factor gives 1_{n_in}
//    for trace-preserving maps.
//  * StinespringUnitary is ordered environment (x) system. The environment
//    starts in basis state 0 and K^i is the i-th n_sys x n_sys block of the
//    first n_sys columns.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

#include "selfcomp/numerics.hpp"

namespace selfcomp {

/// Ordered list of equally shaped Kraus operators.
///
/// Completeness is not enforced here: maps failing it stay representable so
/// that printed parameterizations can be inspected. Use is_cptp() to check.
template <typename Real = double>
class KrausSet {
 public:
  using Matrix = ComplexMatrix<Real>;

  explicit KrausSet(std::vector<Matrix> operators)
      : ops_(std::move(operators)) {
    if (ops_.empty()) throw DimensionError("KrausSet: no operators");
    const Index rows = ops_.front().rows();
    const Index cols = ops_.front().cols();
    if (rows < 1 || cols < 1) throw DimensionError("KrausSet: empty operator");
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (ops_[i].rows() != rows || ops_[i].cols() != cols) {
        std::ostringstream msg;
        msg << "KrausSet: operator " << i << " is " << ops_[i].rows() << "x"
            << ops_[i].cols() << ", expected " << rows << "x" << cols;
        throw DimensionError(msg.str());
      }
      if (!all_finite(ops_[i])) {
        throw PreconditionError("KrausSet: non-finite entry");
      }
    }
  }

  static KrausSet identity(Index n) {
    return KrausSet({Matrix::Identity(n, n)});
  }

  Index n_in() const { return ops_.front().cols(); }
  Index n_out() const { return ops_.front().rows(); }
  std::size_t size() const { return ops_.size(); }

  const Matrix& operator[](std::size_t i) const { return ops_[i]; }
  const std::vector<Matrix>& operators() const { return ops_; }
  auto begin() const { return ops_.begin(); }
  auto end() const { return ops_.end(); }

 private:
  std::vector<Matrix> ops_;
};

template <typename Real = double>
struct SuperOperator {
  Index n_in;
  Index n_out;
  ComplexMatrix<Real> matrix;  // n_out^2 x n_in^2
};

template <typename Real = double>
struct ChoiMatrix {
  Index n_in;
  Index n_out;
  ComplexMatrix<Real> matrix;  // (n_out*n_in) x (n_out*n_in), trace n_in
};

template <typename Real = double>
struct StinespringUnitary {
  Index n_sys;
  Index n_env;
  ComplexMatrix<Real> matrix;  // (n_env*n_sys) square, environment first
};

template <typename Real = double>
struct CptpReport {
  Real completeness_residual;  // max |sum K^dagger K - 1|
  Real tolerance;
  bool passed;
};

/// Everything the CLI and the higher-dimensional families report.
template <typename Real = double>
struct ChannelReport {
  CptpReport<Real> cptp;
  Real selfcomplementarity_residual;  // +inf when k != n_out
  bool selfcomplementary;
  Index choi_rank;
};

template <typename Real>
CptpReport<Real> is_cptp(const KrausSet<Real>& channel,
                         std::type_identity_t<Real> tol = kDefaultTol<Real>) {
  const Index n = channel.n_in();
  ComplexMatrix<Real> sum = ComplexMatrix<Real>::Zero(n, n);
  for (const auto& k : channel) sum.noalias() += k.adjoint() * k;
  const Real residual = max_abs(sum - ComplexMatrix<Real>::Identity(n, n));
  return {residual, tol, residual <= tol};
}

template <typename Real>
void require_cptp(const KrausSet<Real>& channel, const char* what,
                  std::type_identity_t<Real> tol = kDefaultTol<Real>) {
  const auto report = is_cptp(channel, tol);
  if (!report.passed) {
    std::ostringstream msg;
    msg << what << ": channel fails completeness (residual "
        << report.completeness_residual << " > " << tol << ")";
    throw PreconditionError(msg.str());
  }
}

/// Sum_i K^i X K^i^dagger for an arbitrary n_in x n_in operator X.
template <typename Real, typename Derived>
ComplexMatrix<Real> apply_operator(const KrausSet<Real>& channel,
                                   const Eigen::MatrixBase<Derived>& x) {
  if (x.rows() != channel.n_in() || x.cols() != channel.n_in()) {
    std::ostringstream msg;
    msg << "apply: operator is " << x.rows() << "x" << x.cols()
        << ", channel input dimension is " << channel.n_in();
    throw DimensionError(msg.str());
  }
  const ComplexMatrix<Real> in = x.template cast<std::complex<Real>>();
  ComplexMatrix<Real> out =
      ComplexMatrix<Real>::Zero(channel.n_out(), channel.n_out());
  for (const auto& k : channel) out.noalias() += k * in * k.adjoint();
  return out;
}

template <typename Real>
DensityMatrix<Real> apply(const KrausSet<Real>& channel,
                          const DensityMatrix<Real>& rho) {
  ComplexMatrix<Real> out = apply_operator(channel, rho.matrix());
  out = (out + out.adjoint().eval()) / Real(2);
  return DensityMatrix<Real>(std::move(out), kDefaultTol<Real>);
}

/// Complementary channel by the index swap  K~^a_{ij} = K^i_{aj}.
///
/// Input: k operators of shape M x N. Output: M operators of shape k x N.
template <typename Real>
KrausSet<Real> complementary(const KrausSet<Real>& channel) {
  const Index k = static_cast<Index>(channel.size());
  const Index m = channel.n_out();
  const Index n = channel.n_in();
  std::vector<ComplexMatrix<Real>> ops(
      static_cast<std::size_t>(m), ComplexMatrix<Real>::Zero(k, n));
  for (Index a = 0; a < m; ++a)
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < n; ++j)
        ops[static_cast<std::size_t>(a)](i, j) =
            channel[static_cast<std::size_t>(i)](a, j);
  return KrausSet<Real>(std::move(ops));
}

/// max |K^i_{aj} - K^a_{ij}|, or +inf when the Kraus count differs from n_out.
template <typename Real>
Real selfcomplementarity_residual(const KrausSet<Real>& channel) {
  const auto k = static_cast<Index>(channel.size());
  if (k != channel.n_out()) return std::numeric_limits<Real>::infinity();
  Real worst = 0;
  for (Index i = 0; i < k; ++i)
    for (Index a = 0; a < k; ++a)
      for (Index j = 0; j < channel.n_in(); ++j)
        worst = std::max(worst,
                         std::abs(channel[static_cast<std::size_t>(i)](a, j) -
                                  channel[static_cast<std::size_t>(a)](i, j)));
  return worst;
}

// Strict tensor-symmetry check; no search over output unitaries.
template <typename Real>
bool is_selfcomplementary(const KrausSet<Real>& channel,
                          std::type_identity_t<Real> tol = kDefaultTol<Real>) {
  return selfcomplementarity_residual(channel) <= tol;
}

template <typename Real>
SuperOperator<Real> kraus_to_superop(const KrausSet<Real>& channel) {
  const Index m = channel.n_out();
  const Index n = channel.n_in();
  ComplexMatrix<Real> s = ComplexMatrix<Real>::Zero(m * m, n * n);
  for (const auto& k : channel) s += kron(k, k.conjugate());
  return {n, m, std::move(s)};
}

/// Reshuffle D[(a,c),(b,d)] = S[(a,b),(c,d)].
template <typename Real>
ChoiMatrix<Real> superop_to_choi(const SuperOperator<Real>& s) {
  const Index m = s.n_out;
  const Index n = s.n_in;
  if (s.matrix.rows() != m * m || s.matrix.cols() != n * n) {
    throw DimensionError("superop_to_choi: matrix shape inconsistent with dims");
  }
  ComplexMatrix<Real> d(m * n, m * n);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index e = 0; e < n; ++e)
          d(a * n + c, b * n + e) = s.matrix(a * m + b, c * n + e);
  return {n, m, std::move(d)};
}

template <typename Real>
SuperOperator<Real> choi_to_superop(const ChoiMatrix<Real>& c) {
  const Index m = c.n_out;
  const Index n = c.n_in;
  if (c.matrix.rows() != m * n || c.matrix.cols() != m * n) {
    throw DimensionError("choi_to_superop: matrix shape inconsistent with dims");
  }
  ComplexMatrix<Real> s(m * m, n * n);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          s(a * m + b, i * n + j) = c.matrix(a * n + i, b * n + j);
  return {n, m, std::move(s)};
}

template <typename Real>
ChoiMatrix<Real> choi_matrix(const KrausSet<Real>& channel) {
  return superop_to_choi(kraus_to_superop(channel));
}

/// Normalized Choi state D / n_in.
template <typename Real>
DensityMatrix<Real> choi_state(const KrausSet<Real>& channel) {
  const ChoiMatrix<Real> c = choi_matrix(channel);
  ComplexMatrix<Real> w = c.matrix / Real(c.n_in);
  w = (w + w.adjoint().eval()) / Real(2);
  return DensityMatrix<Real>(std::move(w), kDefaultTol<Real>);
}

template <typename Real>
Index channel_rank(const ChoiMatrix<Real>& c,
                   std::type_identity_t<Real> tol = kDefaultTol<Real>) {
  const RealVector<Real> ev = hermitian_eigenvalues(c.matrix);
  return static_cast<Index>((ev.array() > tol).count());
}

template <typename Real>
Index channel_rank(const KrausSet<Real>& channel,
                   std::type_identity_t<Real> tol = kDefaultTol<Real>) {
  return channel_rank(choi_matrix(channel), tol);
}

/// Minimal Kraus set from a Choi matrix: one operator per eigenvalue above
/// rank_tol, K = sqrt(lambda) * reshape(v, n_out, n_in).
///
/// Operators come in descending eigenvalue order; equal eigenvalues (within
/// rank_tol) are ordered lexicographically by the real parts of their
/// eigenvectors. Each eigenvector is rotated so that its first
/// largest-magnitude entry is real and positive.
template <typename Real>
KrausSet<Real> choi_to_kraus(const ChoiMatrix<Real>& c,
                             std::type_identity_t<Real> rank_tol = kDefaultTol<Real>,
                             std::type_identity_t<Real> psd_tol = kDefaultTol<Real>) {
  const auto sys = hermitian_eigensystem(c.matrix, psd_tol);
  if (sys.values.size() == 0 || sys.values(0) < -psd_tol) {
    std::ostringstream msg;
    msg << "choi_to_kraus: Choi matrix is not positive semidefinite "
        << "(min eigenvalue " << (sys.values.size() ? sys.values(0) : Real(0))
        << ")";
    throw PreconditionError(msg.str());
  }

  struct Term {
    Real value;
    ComplexVector<Real> vec;
  };
  std::vector<Term> terms;
  for (Index k = 0; k < sys.values.size(); ++k) {
    if (sys.values(k) <= rank_tol) continue;
    ComplexVector<Real> v = sys.vectors.col(k);
    Index pivot = 0;
    Real best = -1;
    for (Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > best + Real(1e-12)) {
        best = std::abs(v(i));
        pivot = i;
      }
    }
    v *= std::conj(v(pivot)) / std::abs(v(pivot));
    terms.push_back({sys.values(k), std::move(v)});
  }
  if (terms.empty()) {
    throw PreconditionError("choi_to_kraus: Choi matrix has rank zero");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [rank_tol](const Term& x, const Term& y) {
                     if (std::abs(x.value - y.value) > rank_tol) {
                       return x.value > y.value;
                     }
                     for (Index i = 0; i < x.vec.size(); ++i) {
                       if (x.vec(i).real() != y.vec(i).real()) {
                         return x.vec(i).real() < y.vec(i).real();
                       }
                     }
                     return false;
                   });

  std::vector<ComplexMatrix<Real>> ops;
  ops.reserve(terms.size());
  for (const auto& t : terms) {
    ops.push_back(std::sqrt(t.value) * unvectorize(t.vec, c.n_out, c.n_in));
  }
  return KrausSet<Real>(std::move(ops));
}

/// Unitary dilation of a channel with n_in == n_out.
///
/// The first n_sys columns hold the Kraus operators stacked vertically;
/// the rest are filled by Gram-Schmidt against canonical basis vectors taken
/// in ascending index order.
template <typename Real>
StinespringUnitary<Real> stinespring(const KrausSet<Real>& channel,
                                     std::type_identity_t<Real> tol = kDefaultTol<Real>) {
  const Index n = channel.n_in();
  if (channel.n_out() != n) {
    throw DimensionError(
        "stinespring: square dilation needs n_in == n_out");
  }
  require_cptp(channel, "stinespring", tol);
  const auto k = static_cast<Index>(channel.size());
  const Index dim = n * k;
  ComplexMatrix<Real> u = ComplexMatrix<Real>::Zero(dim, dim);
  for (Index i = 0; i < k; ++i) {
    u.block(i * n, 0, n, n) = channel[static_cast<std::size_t>(i)];
  }

  Index filled = n;
  for (Index e = 0; e < dim && filled < dim; ++e) {
    ComplexVector<Real> v = ComplexVector<Real>::Unit(dim, e);
    // Two passes of classical Gram-Schmidt keep the completion orthonormal to
    // working precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (Index c = 0; c < filled; ++c) {
        v -= u.col(c) * u.col(c).dot(v);
      }
    }
    const Real norm = v.norm();
    if (norm < Real(1e-6)) continue;
    u.col(filled++) = v / norm;
  }
  if (filled != dim) {
    throw NumericalError("stinespring: unitary completion failed");
  }
  return {n, k, std::move(u)};
}

/// Reads the Kraus operators K^i = <i|U|0> out of an environment-first
/// unitary. Exact inverse of stinespring() on its first block-column.
template <typename Real>
KrausSet<Real> kraus_from_unitary(const ComplexMatrix<Real>& u, Index n_env,
                                  std::type_identity_t<Real> tol = kDefaultTol<Real>) {
  detail::require_square(u, "kraus_from_unitary");
  if (n_env < 1 || u.rows() % n_env != 0) {
    throw DimensionError(
        "kraus_from_unitary: unitary side not divisible by n_env");
  }
  const Real residual = unitarity_residual(u);
  if (residual > tol) {
    std::ostringstream msg;
    msg << "kraus_from_unitary: matrix is not unitary (residual " << residual
        << ")";
    throw PreconditionError(msg.str());
  }
  const Index n = u.rows() / n_env;
  std::vector<ComplexMatrix<Real>> ops;
  for (Index i = 0; i < n_env; ++i) ops.push_back(u.block(i * n, 0, n, n));
  return KrausSet<Real>(std::move(ops));
}

template <typename Real>
KrausSet<Real> kraus_from_unitary(const StinespringUnitary<Real>& u,
                                  std::type_identity_t<Real> tol = kDefaultTol<Real>) {
  return kraus_from_unitary(u.matrix, u.n_env, tol);
}

/// Phi (x) Psi, operators ordered (i, j) with i from `a` major.
template <typename Real>
KrausSet<Real> tensor_channel(const KrausSet<Real>& a, const KrausSet<Real>& b) {
  std::vector<ComplexMatrix<Real>> ops;
  ops.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) ops.push_back(kron(x, y));
  return KrausSet<Real>(std::move(ops));
}

/// outer o inner, operators K_i L_j with i from `outer` major.
template <typename Real>
KrausSet<Real> compose(const KrausSet<Real>& outer, const KrausSet<Real>& inner) {
  if (inner.n_out() != outer.n_in()) {
    std::ostringstream msg;
    msg << "compose: inner output dimension " << inner.n_out()
        << " != outer input dimension " << outer.n_in();
    throw DimensionError(msg.str());
  }
  std::vector<ComplexMatrix<Real>> ops;
  ops.reserve(outer.size() * inner.size());
  for (const auto& x : outer)
    for (const auto& y : inner) ops.push_back(x * y);
  return KrausSet<Real>(std::move(ops));
}

template <typename Real>
ChannelReport<Real> validate(const KrausSet<Real>& channel,
                             std::type_identity_t<Real> tol = kDefaultTol<Real>) {
  const Real sc = selfcomplementarity_residual(channel);
  return {is_cptp(channel, tol), sc, sc <= tol,
          channel_rank(choi_matrix(channel), tol)};
}

}  // namespace selfcomp
