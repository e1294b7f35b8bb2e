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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "selfcomp/selfcomp.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace selfcomp {
namespace {

using C = std::complex<double>;
using testing::Rng;

constexpr double kTight = 1e-12;

ComplexMatrix<> mat2(C a, C b, C c, C d) {
  ComplexMatrix<> m(2, 2);
  m << a, b, c, d;
  return m;
}

ComplexMatrix<> phi_plus() {
  ComplexVector<> v = ComplexVector<>::Zero(4);
  v(0) = v(3) = 1 / std::numbers::sqrt2;
  return v * v.adjoint();
}

TEST(Kron, IdentityTimesIdentity) {
  const ComplexMatrix<> i2 = ComplexMatrix<>::Identity(2, 2);
  EXPECT_LE(max_abs_diff(kron(i2, i2), ComplexMatrix<>::Identity(4, 4)), 0.0);
}

TEST(Kron, DiagonalFactors) {
  const ComplexMatrix<> out = kron(mat2(1, 0, 0, 0), mat2(0, 0, 0, 1));
  ComplexMatrix<> expected = ComplexMatrix<>::Zero(4, 4);
  expected(1, 1) = 1;
  EXPECT_LE(max_abs_diff(out, expected), 0.0);
}

TEST(Kron, SigmaYSquaredHasSignedAntidiagonal) {
  const ComplexMatrix<> yy = kron(pauli_y(), pauli_y());
  ComplexMatrix<> expected = ComplexMatrix<>::Zero(4, 4);
  expected(0, 3) = -1;
  expected(1, 2) = 1;
  expected(2, 1) = 1;
  expected(3, 0) = -1;
  EXPECT_LE(max_abs_diff(yy, expected), kTight);
}

TEST(Kron, MatchesLoopsAndIsAssociativeAndBilinear) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto dims = [&] { return 1 + static_cast<Index>(rng() % 4); };
    const ComplexMatrix<> a = testing::ginibre(dims(), dims(), rng);
    const ComplexMatrix<> b = testing::ginibre(dims(), dims(), rng);
    const ComplexMatrix<> b2 = testing::ginibre(b.rows(), b.cols(), rng);
    const ComplexMatrix<> c = testing::ginibre(dims(), dims(), rng);
    const C s(0.3, -1.7);

    EXPECT_LE(max_abs_diff(kron(a, b), testing::kron_loops(a, b)), kTight);
    EXPECT_LE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), kTight);
    const ComplexMatrix<> lhs = kron(a, (s * b + b2).eval());
    const ComplexMatrix<> rhs = s * kron(a, b) + kron(a, b2);
    EXPECT_LE(max_abs_diff(lhs, rhs), kTight);
  }
}

TEST(Kron, AcceptsExpressions) {
  const ComplexMatrix<> a = pauli_x();
  const ComplexMatrix<> out = kron(a * 2.0, pauli_z() + pauli_x());
  EXPECT_LE(max_abs_diff(out, testing::kron_loops(2.0 * a, pauli_z() + pauli_x())),
            kTight);
}

TEST(Dagger, Examples) {
  const ComplexMatrix<> i2 = ComplexMatrix<>::Identity(2, 2);
  EXPECT_LE(max_abs_diff(dagger(i2), i2), 0.0);
  EXPECT_LE(max_abs_diff(dagger(mat2(0, 1, 0, 0)), mat2(0, 0, 1, 0)), 0.0);
  EXPECT_LE(max_abs_diff(dagger(mat2(C(0, 1), 0, 0, C(0, -1))),
                         mat2(C(0, -1), 0, 0, C(0, 1))),
            0.0);
}

TEST(HermitianEigenvalues, Examples) {
  const RealVector<> a = hermitian_eigenvalues(mat2(0.75, 0, 0, 0.25));
  EXPECT_NEAR(a(0), 0.25, kTight);
  EXPECT_NEAR(a(1), 0.75, kTight);
  const RealVector<> b = hermitian_eigenvalues(mat2(0, 1, 1, 0));
  EXPECT_NEAR(b(0), -1, kTight);
  EXPECT_NEAR(b(1), 1, kTight);
}

TEST(HermitianEigenvalues, PartialTransposeOfFamilyAChoiAtZero) {
  const auto omega = choi_state(qubit_family_a(0.0, 0.0));
  const RealVector<> ev = hermitian_eigenvalues(partial_transpose(omega.matrix(), {2, 2}));
  int negatives = 0;
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -1e-12) {
      ++negatives;
      EXPECT_NEAR(ev(i), -0.25, 1e-12);
    }
  }
  EXPECT_EQ(negatives, 1);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eigenvalues(mat2(0, 1, 0, 0)), PreconditionError);
}

TEST(HermitianEigenvalues, SumToTraceAndReconstruct) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 6);
    const ComplexMatrix<> g = testing::ginibre(n, n, rng);
    const ComplexMatrix<> h = (g + g.adjoint()) / 2.0;
    const RealVector<> ev = hermitian_eigenvalues(h);
    EXPECT_NEAR(ev.sum(), h.trace().real(), 1e-10);
    for (Index i = 1; i < n; ++i) EXPECT_LE(ev(i - 1), ev(i));

    const auto sys = hermitian_eigensystem(h);
    const ComplexMatrix<> rebuilt = sys.vectors *
                                    sys.values.cast<C>().asDiagonal() *
                                    sys.vectors.adjoint();
    EXPECT_LE(max_abs_diff(rebuilt, h), 1e-10 * h.norm());
  }
}

TEST(GeneralEigenvalues, DiagonalAndNilpotent) {
  const ComplexVector<> d = general_eigenvalues(mat2(2, 0, 0, 3));
  std::vector<double> re{d(0).real(), d(1).real()};
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], 2, kTight);
  EXPECT_NEAR(re[1], 3, kTight);
  const ComplexVector<> z = general_eigenvalues(mat2(0, 1, 0, 0));
  EXPECT_LE(z.cwiseAbs().maxCoeff(), kTight);
}

TEST(GeneralEigenvalues, WoottersMatrixOfFamilyAAtZero) {
  // R = omega * spin_flip(omega) for the theta = 0 Choi state: a single
  // nonzero eigenvalue 1/2.
  const auto omega = choi_state(qubit_family_a(0.0, 0.0));
  const ComplexMatrix<> r = omega.matrix() * spin_flip(omega);
  RealVector<> ev = sanitize_nonnegative_spectrum(general_eigenvalues(r), r.norm(),
                                                  1e-9, 1e-14);
  std::sort(ev.data(), ev.data() + ev.size());
  EXPECT_NEAR(ev(3), 0.5, 1e-12);
  EXPECT_NEAR(ev(2), 0, 1e-12);
  EXPECT_NEAR(ev(1), 0, 1e-12);
  EXPECT_NEAR(ev(0), 0, 1e-12);
}

TEST(SanitizeSpectrum, ClipsSmallViolationsAndRejectsLargeOnes) {
  ComplexVector<> v(3);
  v << C(0.5, 1e-12), C(-1e-11, 0), C(0.25, 0);
  const RealVector<> s = sanitize_nonnegative_spectrum(v);
  EXPECT_EQ(s(0), 0.5);
  EXPECT_EQ(s(1), 0.0);
  EXPECT_EQ(s(2), 0.25);

  ComplexVector<> bad_im(1);
  bad_im << C(0.5, 1e-6);
  EXPECT_THROW(sanitize_nonnegative_spectrum(bad_im), NumericalError);
  ComplexVector<> bad_re(1);
  bad_re << C(-1e-6, 0);
  EXPECT_THROW(sanitize_nonnegative_spectrum(bad_re), NumericalError);
}

TEST(SvdValues, Examples) {
  const RealVector<> i3 = svd_values(ComplexMatrix<>::Identity(3, 3));
  for (Index i = 0; i < 3; ++i) EXPECT_NEAR(i3(i), 1, kTight);
  const RealVector<> s = svd_values(mat2(0, 2, 0, 0));
  EXPECT_NEAR(s(0), 2, kTight);
  EXPECT_NEAR(s(1), 0, kTight);
}

TEST(SvdValues, FamilyAAffineMapAtQuarterPiHasRankOne) {
  const auto map = affine_of_channel(qubit_family_a(std::numbers::pi / 4, 0.0));
  const Eigen::Vector3d sv = svd_values(map.linear);
  EXPECT_GT(sv(0), 1e-10);
  EXPECT_LE(sv(1), 1e-10);
  EXPECT_LE(sv(2), 1e-10);
}

TEST(SvdValues, UnitaryHasUnitSingularValues) {
  Rng rng(13);
  for (Index n = 1; n <= 6; ++n) {
    const RealVector<> s = svd_values(testing::random_unitary(n, rng));
    EXPECT_LE((s.array() - 1).abs().maxCoeff(), kTight);
  }
}

TEST(PartialTrace, MaximallyEntangledReducesToMaximallyMixed) {
  const ComplexMatrix<> r = partial_trace(phi_plus(), {2, 2}, Subsystem::first);
  EXPECT_LE(max_abs_diff(r, ComplexMatrix<>::Identity(2, 2) / 2.0), kTight);
}

TEST(PartialTrace, ProductRuleAndLoopOracle) {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d1 = 1 + static_cast<Index>(rng() % 4);
    const Index d2 = 1 + static_cast<Index>(rng() % 4);
    const ComplexMatrix<> a = testing::ginibre(d1, d1, rng);
    const ComplexMatrix<> b = testing::ginibre(d2, d2, rng);
    const ComplexMatrix<> ab = kron(a, b);
    EXPECT_LE(max_abs_diff(partial_trace(ab, {d1, d2}, Subsystem::first),
                           a * b.trace()),
              kTight * (1 + ab.norm()));
    EXPECT_LE(max_abs_diff(partial_trace(ab, {d1, d2}, Subsystem::second),
                           b * a.trace()),
              kTight * (1 + ab.norm()));

    const ComplexMatrix<> g = testing::ginibre(d1 * d2, d1 * d2, rng);
    EXPECT_LE(max_abs_diff(partial_trace(g, {d1, d2}, Subsystem::first),
                           testing::trace_second_loops(g, d1, d2)),
              kTight);
    EXPECT_LE(max_abs_diff(partial_trace(g, {d1, d2}, Subsystem::second),
                           testing::trace_first_loops(g, d1, d2)),
              kTight);
    const C full = g.trace();
    EXPECT_LE(std::abs(partial_trace(g, {d1, d2}, Subsystem::first).trace() - full),
              kTight * (1 + std::abs(full)));
    EXPECT_LE(std::abs(partial_trace(g, {d1, d2}, Subsystem::second).trace() - full),
              kTight * (1 + std::abs(full)));
  }
}

TEST(PartialTrace, FamilyAChoiMatrixTracesToIdentityOnInput) {
  // Choi matrices are stored output (x) input; trace preservation means the
  // output factor traces out to the identity on the input.
  const ChoiMatrix<> d = choi_matrix(qubit_family_a(0.0, 0.0));
  EXPECT_LE(max_abs_diff(partial_trace(d.matrix, {2, 2}, Subsystem::second),
                         ComplexMatrix<>::Identity(2, 2)),
            kTight);
}

TEST(PartialTrace, RejectsMismatchedDims) {
  EXPECT_THROW(partial_trace(ComplexMatrix<>::Identity(4, 4), {2, 3}, Subsystem::first),
               DimensionError);
  EXPECT_THROW(partial_transpose(ComplexMatrix<>::Identity(5, 5), {2, 2}),
               DimensionError);
}

TEST(PartialTranspose, ProductAndMaximallyEntangled) {
  Rng rng(15);
  const ComplexMatrix<> a = testing::ginibre(2, 2, rng);
  const ComplexMatrix<> b = testing::ginibre(3, 3, rng);
  EXPECT_LE(max_abs_diff(partial_transpose(kron(a, b), {2, 3}),
                         kron(a.transpose(), b)),
            kTight);

  const ComplexMatrix<> pt = partial_transpose(phi_plus(), {2, 2});
  ComplexMatrix<> swap = ComplexMatrix<>::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = 1;
  swap(1, 2) = swap(2, 1) = 1;
  EXPECT_LE(max_abs_diff(pt, swap / 2.0), kTight);
  EXPECT_NEAR(hermitian_eigenvalues(pt)(0), -0.5, kTight);
}

TEST(PartialTranspose, EntanglementBreakingPointIsPpt) {
  const auto omega = choi_state(qubit_family_a(std::numbers::pi / 4, 0.0));
  EXPECT_GE(hermitian_eigenvalues(partial_transpose(omega.matrix(), {2, 2}))(0),
            -1e-12);
}

TEST(PartialTranspose, InvolutionTracePreservingHermitian) {
  Rng rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d1 = 1 + static_cast<Index>(rng() % 4);
    const Index d2 = 1 + static_cast<Index>(rng() % 4);
    const ComplexMatrix<> g = testing::ginibre(d1 * d2, d1 * d2, rng);
    const ComplexMatrix<> h = (g + g.adjoint()) / 2.0;
    const ComplexMatrix<> pt = partial_transpose(g, {d1, d2});
    EXPECT_LE(max_abs_diff(partial_transpose(pt, {d1, d2}), g), 0.0);
    EXPECT_LE(std::abs(pt.trace() - g.trace()), kTight * (1 + g.norm()));
    EXPECT_LE(hermiticity_residual(partial_transpose(h, {d1, d2})), kTight);
  }
}

TEST(Vectorize, RowMajorRoundTrip) {
  ComplexMatrix<> a(2, 3);
  a << 1, 2, 3, 4, 5, 6;
  const ComplexVector<> v = vectorize(a);
  for (Index i = 0; i < 6; ++i) EXPECT_EQ(v(i), C(double(i + 1), 0));
  EXPECT_LE(max_abs_diff(unvectorize(v, 2, 3), a), 0.0);
}

TEST(DensityMatrix, AcceptsValidStates) {
  EXPECT_NO_THROW(DensityMatrix<>(mat2(0.25, 0, 0, 0.75)));
  EXPECT_NEAR(DensityMatrix<>::maximally_mixed(3).purity(), 1.0 / 3, kTight);
  ComplexVector<> psi(2);
  psi << C(0.6, 0), C(0, 0.8);
  EXPECT_NEAR(DensityMatrix<>::pure(psi).purity(), 1, kTight);
}

TEST(DensityMatrix, RejectsInvalidMatrices) {
  EXPECT_THROW(DensityMatrix<>(mat2(0.5, 0.1, 0, 0.5)), PreconditionError);
  EXPECT_THROW(DensityMatrix<>(mat2(0.5, 0, 0, 0.6)), PreconditionError);
  EXPECT_THROW(DensityMatrix<>(mat2(1.5, 0, 0, -0.5)), PreconditionError);
  EXPECT_THROW(DensityMatrix<>(mat2(std::nan(""), 0, 0, 1)), PreconditionError);
  EXPECT_THROW(DensityMatrix<>(ComplexMatrix<>::Identity(2, 3)), DimensionError);
}

TEST(LongDouble, KernelsInstantiate) {
  using CL = std::complex<long double>;
  ComplexMatrix<long double> a(2, 2);
  a << CL(0.75L), CL(0), CL(0), CL(0.25L);
  const DensityMatrix<long double> rho(a);
  const RealVector<long double> ev = hermitian_eigenvalues(rho.matrix());
  EXPECT_NEAR(static_cast<double>(ev(0)), 0.25, 1e-15);
  const auto pt = partial_transpose(kron(a, a), {2, 2});
  EXPECT_LE(static_cast<double>(max_abs_diff(pt, kron(a, a))), 0.0);
}

}  // namespace
}  // namespace selfcomp
