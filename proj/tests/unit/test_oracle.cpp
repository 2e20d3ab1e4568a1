#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qcf/gaussian.hpp"
#include "qcf/oracle.hpp"
#include "qcf/random.hpp"

namespace qcf {
namespace {

using std::numbers::pi;

constexpr double kTol = 1e-12;

QubitOperator mat(Complex a, Complex b, Complex c, Complex d) {
  QubitOperator m;
  m << a, b, c, d;
  return m;
}

KrausSet identity_channel() { return {{QubitOperator::Identity()}}; }

KrausSet dephasing(double p) {
  return {{std::sqrt(1 - p) * QubitOperator::Identity(), std::sqrt(p) * pauli::z()}};
}

KrausSet full_depolarizing() {
  KrausSet k;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      QubitOperator m = QubitOperator::Zero();
      m(i, j) = std::sqrt(0.5);
      k.operators.push_back(m);
    }
  }
  return k;
}

double max_diff(const QubitOperator& a, const QubitOperator& b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(Oracle, ApplyChannel) {
  const auto rho = mat(0.3, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.7);
  EXPECT_LE(max_diff(apply_channel(identity_channel(), rho), rho), 0.0);
  EXPECT_LE(max_diff(apply_channel(dephasing(0.5), mat(0.5, 0.5, 0.5, 0.5)), mat(0.5, 0, 0, 0.5)), kTol);
  // phi = 0: |0> splits as cos^2 theta / sin^2 theta, |1> is left alone
  const auto k = dilation_kraus({pi / 6, 0.0, 1.0});
  EXPECT_LE(max_diff(apply_channel(k, mat(1, 0, 0, 0)), mat(0.75, 0, 0, 0.25)), kTol);
  EXPECT_LE(max_diff(apply_channel(k, mat(0, 0, 0, 1)), mat(0, 0, 0, 1)), kTol);
}

TEST(Oracle, ChoiConventions) {
  const auto c = choi(identity_channel());
  Eigen::Vector4cd phi(1, 0, 0, 1);
  EXPECT_LE((c.matrix - phi * phi.adjoint()).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_NEAR(c.matrix.trace().real(), 2.0, kTol);
  // complete dephasing is diagonal in the Bell basis
  Eigen::Matrix4cd bell;
  const double r = std::sqrt(0.5);
  bell << r, r, 0, 0, 0, 0, r, r, 0, 0, r, -r, r, -r, 0, 0;
  const Eigen::Matrix4cd in_bell = bell.adjoint() * choi(dephasing(0.5)).matrix * bell;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) EXPECT_NEAR(std::abs(in_bell(i, j)), 0.0, kTol);
    }
  }
}

TEST(Oracle, ChoiRoundTrip) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto k = random_kraus(rng, 1 + i % 4);
    EXPECT_LE(channel_distance(kraus_from_choi(choi(k)), k), 1e-10);
    EXPECT_LE(kraus_from_choi(choi(k)).operators.size(), static_cast<std::size_t>(1 + i % 4));
  }
}

TEST(Oracle, AffineData) {
  const auto id = tT_from_kraus(identity_channel());
  EXPECT_LE(id.t.norm(), 0.0);
  EXPECT_LE((id.T - Matrix3::Identity()).cwiseAbs().maxCoeff(), 0.0);
  for (double p : {0.1, 0.25, 0.5}) {
    const auto d = tT_from_kraus(dephasing(p));
    EXPECT_LE((d.T - Eigen::Vector3d(1 - 2 * p, 1 - 2 * p, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff(),
              kTol);
    EXPECT_LE(d.t.norm(), kTol);
  }
  const CanonicalParams p{0.4, 1.1, 1.0};
  const auto d = tT_from_kraus(dilation_kraus(p));
  const double l1 = std::cos(p.theta - p.phi);
  const double l2 = std::cos(p.theta + p.phi);
  EXPECT_NEAR(d.T(0, 0), l1, kTol);
  EXPECT_NEAR(d.T(1, 1), l2, kTol);
  EXPECT_NEAR(d.T(2, 2), l1 * l2, kTol);
  EXPECT_NEAR(std::abs(d.t(2)), std::sqrt((1 - l1 * l1) * (1 - l2 * l2)), kTol);
}

TEST(Oracle, AffineRoundTripAndRejection) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto k = random_kraus(rng, 1 + i % 4);
    EXPECT_LE(channel_distance(kraus_from_tT(tT_from_kraus(k)), k), 1e-10);
  }
  AffineChannelData bad;
  bad.T = Eigen::Vector3d(1.0, 0.5, 0.5).asDiagonal();
  bad.t = Vector3(0, 0, 0.1);
  try {
    kraus_from_tT(bad);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_LT(e.min_eigenvalue(), -1e-10);
  }
}

TEST(Oracle, CompositionAndCompleteness) {
  EXPECT_LE(channel_distance(compose_kraus(identity_channel(), dephasing(0.2)), dephasing(0.2)), kTol);
  // (1-2p)(1-2r) = 1 - 2s
  const double p = 0.1, r = 0.3;
  const double s = (1 - (1 - 2 * p) * (1 - 2 * r)) / 2;
  EXPECT_LE(channel_distance(compose_kraus(dephasing(p), dephasing(r)), dephasing(s)), kTol);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_kraus(rng, 2);
    const auto b = random_kraus(rng, 3);
    const auto rho = random_state(rng, true);
    const auto ab = compose_kraus(b, a);
    EXPECT_LE(ab.completeness_defect(), 1e-12);
    EXPECT_LE(max_diff(apply_channel(ab, rho), apply_channel(b, apply_channel(a, rho))), kTol);
  }
  EXPECT_THROW(KrausSet{{2.0 * QubitOperator::Identity()}}.validate(), ValidationError);
  EXPECT_THROW(KrausSet{}.validate(), ValidationError);
}

TEST(Oracle, SwapSendsInputToEnvironment) {
  Matrix4 swap = Matrix4::Zero();
  for (int s = 0; s < 2; ++s) {
    for (int e = 0; e < 2; ++e) swap(e + 2 * s, s + 2 * e) = 1.0;
  }
  const auto env = weak_complementary(swap, mat(1, 0, 0, 0));
  const auto rho = mat(0.6, Complex(0.2, 0.1), Complex(0.2, -0.1), 0.4);
  EXPECT_LE(max_diff(apply_channel(env, rho), rho), kTol);
  EXPECT_THROW(weak_complementary(2.0 * swap, mat(1, 0, 0, 0)), ValidationError);
  EXPECT_THROW(weak_complementary(swap, mat(1, 0, 0, 1)), ValidationError);
}

TEST(Oracle, MixedEnvironmentSplitsIntoBranches) {
  const CanonicalParams p{pi / 6, pi / 8, 0.5};
  const auto d = dilation(p);
  const auto full = weak_complementary(d.unitary, d.env_state);
  const auto e0 = weak_complementary(d.unitary, mat(1, 0, 0, 0));
  const auto e1 = weak_complementary(d.unitary, mat(0, 0, 0, 1));
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_state(rng, true);
    const QubitOperator mix = 0.5 * apply_channel(e0, rho) + 0.5 * apply_channel(e1, rho);
    EXPECT_LE(max_diff(apply_channel(full, rho), mix), kTol);
  }
}

TEST(Oracle, ComplementOfKrausMatchesDilation) {
  const CanonicalParams p{0.3, 1.2, 1.0};
  const auto from_kraus = complementary_of_kraus(dilation_kraus(p));
  const auto from_dilation = dilation_weak_complementary(p);
  // The two agree up to an isometry on the environment: compare output spectra.
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_state(rng, i % 2 == 1);
    Eigen::SelfAdjointEigenSolver<QubitOperator> a(apply_channel(from_kraus, rho));
    Eigen::SelfAdjointEigenSolver<QubitOperator> b(apply_channel(from_dilation, rho));
    EXPECT_LE((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
  }
  EXPECT_THROW(complementary_of_kraus(full_depolarizing()), ValidationError);
}

TEST(Oracle, VerifyDegradation) {
  EXPECT_LE(verify_degradation(identity_channel(), identity_channel(), identity_channel()), 0.0);
  const CanonicalParams p{pi / 6, 0.0, 1.0};
  const auto v = degradability_classify(p);
  ASSERT_TRUE(v.witness);
  const auto n = dilation_kraus(p);
  const auto env = dilation_weak_complementary(p);
  EXPECT_LT(verify_degradation(n, env, witness_kraus(*v.witness)), 1e-10);
  auto off = *v.witness;
  off.theta_x += 0.1;
  EXPECT_GT(verify_degradation(n, env, witness_kraus(off)), 1e-3);
}

TEST(Oracle, Entropy) {
  EXPECT_NEAR(von_neumann_entropy(mat(0.5, 0, 0, 0.5)), 1.0, kTol);
  EXPECT_NEAR(von_neumann_entropy(mat(1, 0, 0, 0)), 0.0, kTol);
  std::mt19937_64 rng(14);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_state(rng, true);
    const auto b = random_state(rng, true);
    Eigen::Matrix4cd ab;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) ab.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
    }
    EXPECT_GE(von_neumann_entropy(a), 0.0);
    EXPECT_NEAR(von_neumann_entropy(ab), von_neumann_entropy(a) + von_neumann_entropy(b), 1e-10);
  }
}

TEST(Oracle, CoherentInformation) {
  const auto half = mat(0.5, 0, 0, 0.5);
  EXPECT_NEAR(coherent_information(identity_channel(), half), 1.0, kTol);
  EXPECT_NEAR(coherent_information(full_depolarizing(), half), -1.0, kTol);
  EXPECT_NEAR(coherent_information(identity_channel(), mat(1, 0, 0, 0)), 0.0, kTol);
  std::mt19937_64 rng(15);
  double best = -10.0;
  const auto anti = dilation_kraus({-pi / 6, -pi / 2, 1.0});
  for (int i = 0; i < 200; ++i) best = std::max(best, coherent_information(anti, random_state(rng, i % 2 == 1)));
  EXPECT_LE(best, 1e-9);
}

TEST(Oracle, CpCheck) {
  EXPECT_TRUE(cp_check(choi(identity_channel())).psd);
  AffineChannelData d;
  d.T = Eigen::Vector3d(1.0, 0.5, 0.5).asDiagonal();
  d.t = Vector3(0, 0, 0.1);
  EXPECT_FALSE(cp_check(choi_from_tT(d)).psd);
  d.T = Eigen::Vector3d(0.6, 0.6, 0.36).asDiagonal();
  d.t = Vector3(0, 0, 0.64);
  const auto boundary = cp_check(choi_from_tT(d));
  EXPECT_TRUE(boundary.psd);
  EXPECT_NEAR(boundary.min_eigenvalue, 0.0, 1e-10);
}

TEST(Oracle, DensityMatrixPredicate) {
  EXPECT_TRUE(is_density_matrix(mat(0.5, 0, 0, 0.5)));
  EXPECT_FALSE(is_density_matrix(mat(1.1, 0, 0, -0.1)));
  EXPECT_FALSE(is_density_matrix(mat(0.5, 0.1, 0.0, 0.5)));
  EXPECT_FALSE(is_density_matrix(mat(0.6, 0, 0, 0.6)));
}

}  // namespace
}  // namespace qcf
