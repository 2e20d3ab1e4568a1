#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qcf/gaussian.hpp"
#include "qcf/green.hpp"
#include "qcf/random.hpp"

namespace qcf {
namespace {

constexpr double kTol = 1e-12;

GrassmannElement gen(PairId p, bool c, Complex k = 1.0) {
  return GrassmannElement::generator(green_context(), {p, c}, k);
}

GrassmannElement identity_kernel() { return (gen(kZeta, false) - gen(kXi, false)) * (gen(kZeta, true) - gen(kXi, true)); }
GrassmannElement zz() { return gen(kZeta, false) * gen(kZeta, true); }
GrassmannElement xx() { return gen(kXi, false) * gen(kXi, true); }

KrausSet dephasing(double p) {
  return {{std::sqrt(1 - p) * QubitOperator::Identity(), std::sqrt(p) * pauli::z()}};
}

TEST(Green, KernelsOfBasicChannels) {
  EXPECT_LE(green_from_kraus({{QubitOperator::Identity()}}).kernel.max_abs_diff(identity_kernel()), kTol);
  KrausSet depol;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      QubitOperator m = QubitOperator::Zero();
      m(i, j) = std::sqrt(0.5);
      depol.operators.push_back(m);
    }
  }
  EXPECT_LE(green_from_kraus(depol).kernel.max_abs_diff(zz()), kTol);
  EXPECT_LE(green_from_kraus(dephasing(0.5)).kernel.max_abs_diff(zz() + xx()), kTol);
  EXPECT_THROW(green_from_kraus({{2.0 * QubitOperator::Identity()}}), ValidationError);
}

TEST(Green, AffineForm) {
  AffineChannelData d;
  EXPECT_LE(green_from_tT(d).kernel.max_abs_diff(identity_kernel()), kTol);
  d.T = Eigen::Vector3d(0, 0, 1).asDiagonal();
  EXPECT_LE(green_from_tT(d).kernel.max_abs_diff(zz() + xx()), kTol);
  d.T(0, 1) = 0.1;
  EXPECT_THROW(green_from_tT(d), DomainError);
}

TEST(Green, AffineFormMatchesOracleKraus) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int tested = 0;
  while (tested < 50) {
    AffineChannelData d;
    d.T = Eigen::Vector3d(u(rng), u(rng), u(rng)).asDiagonal();
    d.t = 0.5 * Vector3(u(rng), u(rng), u(rng));
    if (!cp_check(choi_from_tT(d)).psd) continue;
    ++tested;
    EXPECT_LE(green_from_tT(d).max_abs_diff(green_from_kraus(kraus_from_tT(d))), kTol);
  }
}

TEST(Green, TracePreservation) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 50; ++i) {
    EXPECT_LE(green_from_kraus(random_kraus(rng, 1 + i % 4)).trace_preservation_defect(), kTol);
  }
}

TEST(Green, ApplyMatchesOraclePath) {
  std::mt19937_64 rng(23);
  const CharFn any{1.0, Complex(0.2, 0.1), Complex(-0.3, 0.4), Complex(0.1, -0.2)};
  EXPECT_LE(apply_green(identity_green(), any).max_abs_diff(any), kTol);
  const auto depol = GreenFn(zz());
  EXPECT_LE(apply_green(depol, any).max_abs_diff(CharFn{1.0, 0.0, 0.0, 0.0}), kTol);
  for (int i = 0; i < 50; ++i) {
    const auto k = random_kraus(rng, 1 + i % 4);
    const auto rho = random_state(rng, i % 2 == 1);
    const auto chi = char_of(rho);
    EXPECT_LE(apply_green(green_from_kraus(k), chi).max_abs_diff(char_of(apply_channel(k, invert(chi)))), kTol);
  }
}

TEST(Green, Composition) {
  std::mt19937_64 rng(24);
  const auto g = green_from_kraus(random_kraus(rng, 3));
  EXPECT_LE(compose_green(identity_green(), g).max_abs_diff(g), kTol);
  EXPECT_LE(compose_green(g, identity_green()).max_abs_diff(g), kTol);
  const auto half = green_from_kraus(dephasing(0.5));
  EXPECT_LE(compose_green(half, half).max_abs_diff(half), kTol);
  for (int i = 0; i < 50; ++i) {
    const auto k1 = random_kraus(rng, 1 + i % 4);
    const auto k2 = random_kraus(rng, 1 + (i / 4) % 4);
    EXPECT_LE(compose_green(green_from_kraus(k1), green_from_kraus(k2))
                  .max_abs_diff(green_from_kraus(compose_kraus(k2, k1))),
              kTol);
  }
}

TEST(Green, Linearity) {
  std::mt19937_64 rng(25);
  const auto a = random_kraus(rng, 2);
  const auto b = random_kraus(rng, 2);
  const double w = 0.3;
  KrausSet mix;
  for (const auto& m : a.operators) mix.operators.push_back(std::sqrt(w) * m);
  for (const auto& m : b.operators) mix.operators.push_back(std::sqrt(1 - w) * m);
  const auto want = w * green_from_kraus(a) + (1 - w) * green_from_kraus(b);
  EXPECT_LE(green_from_kraus(mix).max_abs_diff(want), kTol);
}

TEST(Green, GaussianDetection) {
  const auto id = detect_gaussian(identity_green());
  ASSERT_TRUE(id);
  EXPECT_LE(max_abs_diff(*id, GaussianParams{1.0, 0.0, 0.0}), kTol);
  EXPECT_FALSE(detect_gaussian(green_from_kraus(dephasing(0.5))));
  const double th = std::numbers::pi / 6;
  const auto p = detect_gaussian(canonical_to_green({th, 0.0, 1.0}));
  ASSERT_TRUE(p);
  EXPECT_NEAR(std::abs(p->a - std::cos(th)), 0.0, kTol);
  EXPECT_NEAR(std::abs(p->b), 0.0, kTol);
  // exponent (cos 2theta - cos 2phi)/4 on xi xi*
  EXPECT_NEAR(canonical_exponent(*p), (std::cos(2 * th) - 1.0) / 4, kTol);
  // exp[-c xi* xi] reading: the xi xi* coefficient of G(0 shift) is c
  EXPECT_NEAR(gaussian_green(*p).kernel.coefficient(Monomial::of({{kZeta, false}, {kZeta, true}, {kXi, false}, {kXi, true}})).real(),
              p->c, kTol);
}

TEST(Green, ComplexExponentIsNotGaussian) {
  auto g = gaussian_green({0.5, 0.0, 0.1});
  g.kernel = g.kernel + Complex(0.0, 1e-6) * (zz() * xx());
  EXPECT_FALSE(detect_gaussian(g));
}

TEST(Green, SemigroupLaw) {
  const auto got = compose_gaussian({0.5, 0.0, 0.1}, {0.8, 0.0, 0.2});
  EXPECT_LE(max_abs_diff(got, GaussianParams{0.4, 0.0, 0.264}), kTol);
  const auto conv = detect_gaussian(compose_green(gaussian_green({0.5, 0.0, 0.1}), gaussian_green({0.8, 0.0, 0.2})));
  ASSERT_TRUE(conv);
  EXPECT_LE(max_abs_diff(*conv, got), kTol);
  EXPECT_LE(max_abs_diff(compose_gaussian({0.3, 0.2, 0.05}, {1.0, 0.0, 0.0}), GaussianParams{0.3, 0.2, 0.05}), kTol);

  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const CanonicalParams p1{angle(rng), angle(rng), unit(rng)};
    const CanonicalParams p2{angle(rng), angle(rng), unit(rng)};
    const auto composed = detect_gaussian(compose_green(canonical_to_green(p1), canonical_to_green(p2)));
    ASSERT_TRUE(composed);
    EXPECT_LE(max_abs_diff(*composed, compose_gaussian(gaussian_params(p1), gaussian_params(p2))), kTol);
  }
}

TEST(Green, GaussianSetIsNotConvex) {
  const auto a = canonical_to_green({0.0, 0.0, 1.0});
  // sigma_z conjugation; the even mixture with the identity is complete dephasing
  const auto b = canonical_to_green({std::numbers::pi, 0.0, 1.0});
  ASSERT_TRUE(detect_gaussian(a));
  ASSERT_TRUE(detect_gaussian(b));
  EXPECT_FALSE(detect_gaussian(0.5 * a + 0.5 * b));
}

}  // namespace
}  // namespace qcf
