#include "qcf/selftest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qcf/gaussian.hpp"
#include "qcf/random.hpp"

namespace qcf {

namespace {

constexpr double kAnchorTolerance = 1e-12;

SelfTestCheck make(std::string name, std::string group, double residual, double tol) {
  return {std::move(name), std::move(group), residual <= tol, residual, tol};
}

GrassmannElement gen(const ContextPtr& ctx, PairId p, bool conjugated, Complex c = 1.0) {
  return GrassmannElement::generator(ctx, {p, conjugated}, c);
}

double sifting_residual() {
  const auto& ctx = green_context();
  const Complex f0(0.3, -1.2), f1(0.7, 0.4), f2(-2.1, 0.5), f3(1.1, 1.9);
  auto on = [&](PairId p) {
    return GrassmannElement::scalar(ctx, f0) + gen(ctx, p, false, f1) + gen(ctx, p, true, f2) +
           f3 * (gen(ctx, p, false) * gen(ctx, p, true));
  };
  const auto sifted = berezin_integrate(delta(kZeta, gen(ctx, kXi, false)) * on(kZeta), kZeta);
  return sifted.max_abs_diff(on(kXi));
}

double char_coefficient_residual() {
  QubitOperator theta;
  theta << Complex(0.9, 0.1), Complex(-0.4, 0.3), Complex(0.25, -0.6), Complex(0.15, 0.2);
  const auto chi = char_of(theta);
  const CharFn expected{theta.trace(), theta(0, 1), -theta(1, 0), -(theta(0, 0) - theta(1, 1)) / 2.0};
  return chi.max_abs_diff(expected);
}

double identity_kernel_residual() {
  const auto& ctx = green_context();
  const auto expected = (gen(ctx, kZeta, false) - gen(ctx, kXi, false)) * (gen(ctx, kZeta, true) - gen(ctx, kXi, true));
  const KrausSet id{{QubitOperator::Identity()}};
  return std::max(green_from_kraus(id).kernel.max_abs_diff(expected), identity_green().kernel.max_abs_diff(expected));
}

double trace_preservation_residual() {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int rank = 1; rank <= 4; ++rank) {
    worst = std::max(worst, green_from_kraus(random_kraus(rng, rank)).trace_preservation_defect());
  }
  return worst;
}

double displacement_adjoint_residual() {
  const auto ctx = charfn_context();
  return hadjoint(displacement(ctx, 0)).max_abs_diff(displacement(ctx, 0, -1.0));
}

}  // namespace

bool SelfTestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SelfTestCheck& c) { return c.passed; });
}

std::vector<std::string> SelfTestReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

std::vector<SelfTestCheck> run_anchors() {
  return {
      make("delta-sifting", "anchor", sifting_residual(), kAnchorTolerance),
      make("char-fn-coefficients", "anchor", char_coefficient_residual(), kAnchorTolerance),
      make("identity-kernel", "anchor", identity_kernel_residual(), kAnchorTolerance),
      make("trace-preservation-kernel", "anchor", trace_preservation_residual(), kAnchorTolerance),
      make("displacement-adjoint", "anchor", displacement_adjoint_residual(), kAnchorTolerance),
  };
}

std::vector<SelfTestCheck> run_correspondence(std::uint64_t seed, int samples) {
  using std::numbers::pi;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::array<double, 9> worst{};
  int disagreements_density = 0;
  int disagreements_cp = 0;

  for (int s = 0; s < samples; ++s) {
    const auto op = random_operator(rng);
    const auto chi = char_of(op);
    const CharFn entries{op.trace(), op(0, 1), -op(1, 0), -(op(0, 0) - op(1, 1)) / 2.0};
    worst[0] = std::max(worst[0], chi.max_abs_diff(entries));
    worst[1] = std::max(worst[1], (invert(chi) - op).cwiseAbs().maxCoeff());

    // Mix valid states with Hermitian unit-trace matrices that may be indefinite.
    QubitOperator rho = random_state(rng, s % 2 == 1);
    if (s % 3 == 0) {
      const QubitOperator h = random_operator(rng);
      rho = 0.5 * (h + h.adjoint());
      rho += (1.0 - rho.trace().real()) / 2.0 * QubitOperator::Identity();
    }
    if (density_checks(char_of(rho)).valid() != is_density_matrix(rho)) ++disagreements_density;

    const auto k1 = random_kraus(rng, 1 + s % 4);
    const auto k2 = random_kraus(rng, 1 + (s + 1) % 4);
    const auto g1 = green_from_kraus(k1);
    const auto state = random_state(rng, true);
    worst[3] = std::max(worst[3], apply_green(g1, char_of(state)).max_abs_diff(char_of(apply_channel(k1, state))));
    worst[4] = std::max(worst[4],
                        compose_green(g1, green_from_kraus(k2)).max_abs_diff(green_from_kraus(compose_kraus(k2, k1))));

    const CanonicalParams p{angle(rng), angle(rng), unit(rng)};
    auto d = affine_data(p);
    d.t(0) = 0.1 * (unit(rng) - 0.5) * (1 - std::abs(d.T(0, 0)));
    d.t(1) = 0.1 * (unit(rng) - 0.5) * (1 - std::abs(d.T(1, 1)));
    d.t(2) *= 0.5;
    if (cp_check(choi_from_tT(d)).psd) {
      worst[5] = std::max(worst[5], green_from_tT(d).max_abs_diff(green_from_kraus(kraus_from_tT(d))));
    }
    worst[6] = std::max(worst[6], canonical_to_green(p).max_abs_diff(green_from_kraus(dilation_kraus(p))));
    worst[7] = std::max(worst[7],
                        complementary_green(p).max_abs_diff(green_from_kraus(dilation_weak_complementary(p))));

    const double l1 = 2 * unit(rng) - 1;
    const double l2 = 2 * unit(rng) - 1;
    const double t3 = 2 * unit(rng) - 1;
    AffineChannelData g;
    g.T = Eigen::Vector3d(l1, l2, l1 * l2).asDiagonal();
    g.t = Vector3(0.0, 0.0, t3);
    if (gaussian_cp_check(l1, l2, t3) != cp_check(choi_from_tT(g)).psd) ++disagreements_cp;
  }
  worst[2] = disagreements_density;
  worst[8] = disagreements_cp;

  const std::array<const char*, 9> names{
      "char-fn-vs-matrix-entries", "char-fn-roundtrip",         "density-vs-psd",
      "green-vs-oracle-apply",     "green-vs-oracle-compose",   "affine-green-vs-kraus",
      "canonical-vs-dilation",     "complementary-vs-oracle",   "cp-bound-vs-choi",
  };
  std::vector<SelfTestCheck> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const bool counted = i == 2 || i == 8;
    out.push_back(make(names[i], "correspondence", worst[i], counted ? 0.0 : kAnchorTolerance));
  }
  return out;
}

SelfTestReport run_selftest(std::uint64_t seed, int samples) {
  SelfTestReport r;
  r.checks = run_anchors();
  auto corr = run_correspondence(seed, samples);
  r.checks.insert(r.checks.end(), corr.begin(), corr.end());
  return r;
}

}  // namespace qcf
