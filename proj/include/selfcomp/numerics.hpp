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

// Dense complex linear algebra used by every other module. Nothing in here
// knows about channels.
//
// Vectorization is row-major lexicographic throughout the library: the
// entry (i, j) of an r x c matrix sits at position i * c + j.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "selfcomp/error.hpp"

namespace selfcomp {

using Index = Eigen::Index;

template <typename Real = double>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real = double>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real = double>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Real scalar behind an Eigen expression, complex or not.
template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

// Default absolute entrywise tolerance for comparisons.
template <typename Real = double>
inline constexpr Real kDefaultTol = Real(1e-10);

struct BipartiteDims {
  Index first;
  Index second;

  Index total() const { return first * second; }
};

enum class Subsystem { first, second };

namespace detail {

template <typename Derived>
ComplexMatrix<RealOf<Derived>> to_complex(const Eigen::MatrixBase<Derived>& a) {
  return a.template cast<std::complex<RealOf<Derived>>>();
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
  if (a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << what << ": expected a square matrix, got " << a.rows() << "x"
        << a.cols();
    throw DimensionError(msg.str());
  }
}

template <typename Derived>
void require_bipartite(const Eigen::MatrixBase<Derived>& a, BipartiteDims dims,
                       const char* what) {
  require_square(a, what);
  if (dims.first < 1 || dims.second < 1 || a.rows() != dims.total()) {
    std::ostringstream msg;
    msg << what << ": matrix side " << a.rows() << " does not factor as "
        << dims.first << "*" << dims.second;
    throw DimensionError(msg.str());
  }
}

// Closed interval check with 1e-12 slack for values computed from pi.
template <typename Real>
void require_range(const char* name, Real value, Real lo, Real hi) {
  const Real slack = Real(1e-12);
  if (!(value >= lo - slack && value <= hi + slack)) {
    std::ostringstream msg;
    msg << name << " = " << value << " outside [" << lo << ", " << hi << "]";
    throw ParameterError(msg.str());
  }
}

}  // namespace detail

template <typename Derived>
RealOf<Derived> max_abs(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return RealOf<Derived>(0);
  return a.cwiseAbs().maxCoeff();
}

template <typename DA, typename DB>
auto max_abs_diff(const Eigen::MatrixBase<DA>& a,
                  const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  return a.allFinite();
}

template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<
      typename DA::Scalar, typename DB::Scalar>::ReturnType;
  using Result = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Result lhs = a.template cast<Scalar>();
  const Result rhs = b.template cast<Scalar>();
  Result out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (Index i = 0; i < lhs.rows(); ++i) {
    for (Index j = 0; j < lhs.cols(); ++j) {
      out.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) =
          lhs(i, j) * rhs;
    }
  }
  return out;
}

template <typename Derived>
auto dagger(const Eigen::MatrixBase<Derived>& a) {
  return Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic,
                       Eigen::Dynamic>(a.adjoint());
}

template <typename Derived>
RealOf<Derived> hermiticity_residual(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a, "hermiticity_residual");
  return max_abs(a - a.adjoint());
}

template <typename Derived>
RealOf<Derived> unitarity_residual(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a, "unitarity_residual");
  using Matrix = ComplexMatrix<RealOf<Derived>>;
  const Matrix m = detail::to_complex(a);
  return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols()));
}

// Row-major vectorization and its inverse.
template <typename Derived>
ComplexVector<RealOf<Derived>> vectorize(const Eigen::MatrixBase<Derived>& a) {
  ComplexVector<RealOf<Derived>> v(a.size());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

template <typename Derived>
ComplexMatrix<RealOf<Derived>> unvectorize(const Eigen::MatrixBase<Derived>& v,
                                           Index rows, Index cols) {
  if (v.size() != rows * cols) {
    throw DimensionError("unvectorize: length does not match rows*cols");
  }
  ComplexMatrix<RealOf<Derived>> a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  return a;
}

/// Spectrum of a Hermitian matrix in ascending order.
///
/// Throws PreconditionError when max|A - A^dagger| exceeds `tol`.
template <typename Derived>
RealVector<RealOf<Derived>> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& a,
    RealOf<Derived> tol = kDefaultTol<RealOf<Derived>>) {
  using Real = RealOf<Derived>;
  const Real residual = hermiticity_residual(a);
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: input is not Hermitian (residual "
        << residual << " > " << tol << ")";
    throw PreconditionError(msg.str());
  }
  const ComplexMatrix<Real> m = detail::to_complex(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> solver(
      m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigenvalues: solver did not converge");
  }
  return solver.eigenvalues();
}

template <typename Real>
struct HermitianEigensystem {
  RealVector<Real> values;        // ascending
  ComplexMatrix<Real> vectors;    // column k pairs with values(k)
};

template <typename Derived>
HermitianEigensystem<RealOf<Derived>> hermitian_eigensystem(
    const Eigen::MatrixBase<Derived>& a,
    RealOf<Derived> tol = kDefaultTol<RealOf<Derived>>) {
  using Real = RealOf<Derived>;
  const Real residual = hermiticity_residual(a);
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "hermitian_eigensystem: input is not Hermitian (residual "
        << residual << " > " << tol << ")";
    throw PreconditionError(msg.str());
  }
  const ComplexMatrix<Real> m = detail::to_complex(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigensystem: solver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Full complex spectrum of a square matrix, in solver order.
template <typename Derived>
ComplexVector<RealOf<Derived>> general_eigenvalues(
    const Eigen::MatrixBase<Derived>& a) {
  using Real = RealOf<Derived>;
  detail::require_square(a, "general_eigenvalues");
  const ComplexMatrix<Real> m = detail::to_complex(a);
  Eigen::ComplexEigenSolver<ComplexMatrix<Real>> solver(m, false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "general_eigenvalues: QR iteration did not converge for a "
        << m.rows() << "x" << m.cols() << " matrix with max|entry| "
        << max_abs(m);
    throw NumericalError(msg.str());
  }
  return solver.eigenvalues();
}

/// Turns a spectrum that should be real and nonnegative into reals.
///
/// With t = tol * scale: imaginary parts up to t and real parts in [-t, 0)
/// are clipped to zero, and values with modulus at most zero_floor * scale
/// become exact zeros. Anything worse throws NumericalError.
template <typename Real>
RealVector<Real> sanitize_nonnegative_spectrum(
    const ComplexVector<Real>& values,
    std::type_identity_t<Real> scale = Real(1),
    std::type_identity_t<Real> tol = Real(1e-9),
    std::type_identity_t<Real> zero_floor = Real(0)) {
  const Real limit = tol * scale;
  RealVector<Real> out(values.size());
  for (Index i = 0; i < values.size(); ++i) {
    const std::complex<Real> v = values(i);
    if (std::abs(v.imag()) > limit || v.real() < -limit || !std::isfinite(v.real())) {
      std::ostringstream msg;
      msg << "spectrum expected real and nonnegative, found " << v.real()
          << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag())
          << "i (tolerance " << limit << ")";
      throw NumericalError(msg.str());
    }
    Real re = std::max(v.real(), Real(0));
    if (std::abs(v) <= zero_floor * scale) re = Real(0);
    out(i) = re;
  }
  return out;
}

/// Singular values in descending order.
template <typename Derived>
RealVector<RealOf<Derived>> svd_values(const Eigen::MatrixBase<Derived>& a) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic,
                               Eigen::Dynamic>;
  const Eigen::JacobiSVD<Matrix> svd{Matrix(a)};
  return svd.singularValues();
}

/// Reduced matrix of the kept subsystem of a d1*d2 bipartite operator.
template <typename Derived>
auto partial_trace(const Eigen::MatrixBase<Derived>& a, BipartiteDims dims,
                   Subsystem keep) {
  detail::require_bipartite(a, dims, "partial_trace");
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic,
                               Eigen::Dynamic>;
  const Index d1 = dims.first;
  const Index d2 = dims.second;
  if (keep == Subsystem::first) {
    Matrix out = Matrix::Zero(d1, d1);
    for (Index i = 0; i < d1; ++i)
      for (Index j = 0; j < d1; ++j)
        for (Index k = 0; k < d2; ++k) out(i, j) += a(i * d2 + k, j * d2 + k);
    return out;
  }
  Matrix out = Matrix::Zero(d2, d2);
  for (Index k = 0; k < d2; ++k)
    for (Index l = 0; l < d2; ++l)
      for (Index i = 0; i < d1; ++i) out(k, l) += a(i * d2 + k, i * d2 + l);
  return out;
}

/// Transpose on the first tensor factor only.
template <typename Derived>
auto partial_transpose(const Eigen::MatrixBase<Derived>& a,
                       BipartiteDims dims) {
  detail::require_bipartite(a, dims, "partial_transpose");
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic,
                               Eigen::Dynamic>;
  const Index d1 = dims.first;
  const Index d2 = dims.second;
  Matrix out(a.rows(), a.cols());
  for (Index i = 0; i < d1; ++i)
    for (Index j = 0; j < d1; ++j)
      for (Index k = 0; k < d2; ++k)
        for (Index l = 0; l < d2; ++l)
          out(i * d2 + k, j * d2 + l) = a(j * d2 + k, i * d2 + l);
  return out;
}

template <typename Real = double>
ComplexMatrix<Real> pauli_x() {
  ComplexMatrix<Real> m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

template <typename Real = double>
ComplexMatrix<Real> pauli_y() {
  using C = std::complex<Real>;
  ComplexMatrix<Real> m(2, 2);
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

template <typename Real = double>
ComplexMatrix<Real> pauli_z() {
  ComplexMatrix<Real> m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// Hermitian, unit-trace, positive semidefinite matrix.
///
/// Construction validates: Hermitian and unit trace within `tol`, smallest
/// eigenvalue no lower than -max(tol, 1e-10), all entries finite.
template <typename Real = double>
class DensityMatrix {
 public:
  using Matrix = ComplexMatrix<Real>;

  explicit DensityMatrix(Matrix m, Real tol = Real(1e-12)) : m_(std::move(m)) {
    detail::require_square(m_, "DensityMatrix");
    if (m_.rows() < 1) throw DimensionError("DensityMatrix: empty matrix");
    if (!all_finite(m_)) {
      throw PreconditionError("DensityMatrix: non-finite entry");
    }
    const Real herm = hermiticity_residual(m_);
    if (herm > tol) {
      std::ostringstream msg;
      msg << "DensityMatrix: not Hermitian (residual " << herm << ")";
      throw PreconditionError(msg.str());
    }
    const Real trace_err = std::abs(m_.trace() - std::complex<Real>(1));
    if (trace_err > tol) {
      std::ostringstream msg;
      msg << "DensityMatrix: trace differs from 1 by " << trace_err;
      throw PreconditionError(msg.str());
    }
    const Real min_eig = hermitian_eigenvalues(m_, tol)(0);
    if (min_eig < -std::max(tol, Real(1e-10))) {
      std::ostringstream msg;
      msg << "DensityMatrix: negative eigenvalue " << min_eig;
      throw PreconditionError(msg.str());
    }
  }

  static DensityMatrix maximally_mixed(Index n) {
    return DensityMatrix(Matrix::Identity(n, n) / Real(n));
  }

  // |psi><psi| / <psi|psi>.
  static DensityMatrix pure(const ComplexVector<Real>& psi) {
    const Real norm = psi.norm();
    if (!(norm > Real(0))) {
      throw PreconditionError("DensityMatrix::pure: zero vector");
    }
    const ComplexVector<Real> unit = psi / norm;
    Matrix m = unit * unit.adjoint();
    m = (m + m.adjoint().eval()) / Real(2);
    return DensityMatrix(std::move(m));
  }

  static DensityMatrix basis(Index n, Index i) {
    Matrix m = Matrix::Zero(n, n);
    m(i, i) = 1;
    return DensityMatrix(std::move(m));
  }

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

  Real purity() const { return (m_ * m_).trace().real(); }

 private:
  Matrix m_;
};

}  // namespace selfcomp
