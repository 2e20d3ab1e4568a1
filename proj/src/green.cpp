#include "qcf/green.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qcf {

namespace {

constexpr double kDiagonalTolerance = 1e-12;

GrassmannElement gen(const ContextPtr& ctx, PairId p, bool conjugated, Complex c = 1.0) {
  return GrassmannElement::generator(ctx, {p, conjugated}, c);
}

}  // namespace

const ContextPtr& green_context() {
  static const ContextPtr ctx = make_context({"zeta", "xi"});
  return ctx;
}

const ContextPtr& convolution_context() {
  static const ContextPtr ctx = make_context({"zeta", "xi'", "xi"});
  return ctx;
}

GreenFn::GreenFn() : kernel(green_context()) {}

GreenFn::GreenFn(GrassmannElement k) : kernel(std::move(k)) {
  require_same_context(*kernel.context(), *green_context());
}

double GreenFn::trace_preservation_defect() const {
  const auto& ctx = green_context();
  const auto expected = GrassmannElement::monomial(ctx, Monomial::of({{kZeta, false}, {kZeta, true}}));
  return substitute_zero(kernel, kXi).max_abs_diff(expected);
}

GreenFn green_from_kraus(const KrausSet& channel) {
  channel.validate();
  const auto& ctx = green_context();
  const auto sz_d = hmul(HybridOperator::qubit(ctx, pauli::z()), displacement(ctx, kZeta, -1.0));
  const auto d_xi = displacement(ctx, kXi);
  GrassmannElement kernel(ctx);
  for (const auto& m : channel.operators) {
    const auto inner = hmul({HybridOperator::qubit(ctx, m), sz_d, HybridOperator::qubit(ctx, m.adjoint()), d_xi});
    kernel = kernel + htrace(inner);
  }
  return GreenFn(kernel);
}

GreenFn green_from_tT(const AffineChannelData& data) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && std::abs(data.T(i, j)) > kDiagonalTolerance) {
        throw DomainError("green_from_tT requires a diagonal T");
      }
    }
  }
  const auto& ctx = green_context();
  const double l1 = data.T(0, 0);
  const double l2 = data.T(1, 1);
  const double l3 = data.T(2, 2);
  const double t1 = data.t(0);
  const double t2 = data.t(1);
  const double t3 = data.t(2);
  const Complex I(0.0, 1.0);

  const auto shift = gen(ctx, kXi, false, (l2 + l1) / 2.0) + gen(ctx, kXi, true, (l2 - l1) / 2.0);
  const auto xic_xi = gen(ctx, kXi, true) * gen(ctx, kXi, false);
  const auto xi_xic = gen(ctx, kXi, false) * gen(ctx, kXi, true);
  const auto zz = gen(ctx, kZeta, false) * gen(ctx, kZeta, true);

  auto kernel = delta(kZeta, shift) * graded_exp(Complex(-t3 / 2.0) * xic_xi);
  kernel = kernel + Complex(l3 - l1 * l2) * xi_xic;
  kernel = kernel + ((t1 - I * t2) / 2.0) * (zz * gen(ctx, kXi, false));
  kernel = kernel - ((t1 + I * t2) / 2.0) * (zz * gen(ctx, kXi, true));
  return GreenFn(kernel);
}

GreenFn identity_green() {
  const auto& ctx = green_context();
  return GreenFn(delta(kZeta, gen(ctx, kXi, false)));
}

CharFn apply_green(const GreenFn& g, const CharFn& chi) {
  const auto& ctx = green_context();
  const auto integrand = chi.to_element(ctx, kZeta) * g.kernel;
  const auto out = berezin_integrate(integrand, kZeta);
  const std::array<PairId, 2> to_single{-1, 0};
  return CharFn::from_element(relabel(out, charfn_context(), to_single), 0);
}

GreenFn compose_green(const GreenFn& g1, const GreenFn& g2) {
  const auto& conv = convolution_context();
  const std::array<PairId, 2> first{0, 1};
  const std::array<PairId, 2> second{1, 2};
  const auto product = relabel(g1.kernel, conv, first) * relabel(g2.kernel, conv, second);
  const auto integrated = berezin_integrate(product, 1);
  const std::array<PairId, 3> back{0, -1, 1};
  return GreenFn(relabel(integrated, green_context(), back));
}

GreenFn gaussian_green(const GaussianParams& p) {
  const auto& ctx = green_context();
  const auto shift = gen(ctx, kXi, false, p.a) + gen(ctx, kXi, true, p.b);
  const auto xic_xi = gen(ctx, kXi, true) * gen(ctx, kXi, false);
  return GreenFn(delta(kZeta, shift) * graded_exp(Complex(-p.c) * xic_xi));
}

std::optional<GaussianParams> detect_gaussian(const GreenFn& g, double tol) {
  const GeneratorId z{kZeta, false};
  const GeneratorId zc{kZeta, true};
  const GeneratorId x{kXi, false};
  const GeneratorId xc{kXi, true};
  const Complex a = g.kernel.coefficient(Monomial::of({zc, x}));
  const Complex b = g.kernel.coefficient(Monomial::of({zc, xc}));
  const Complex c = g.kernel.coefficient(Monomial::of({z, zc, x, xc}));
  if (std::abs(c.imag()) > tol) return std::nullopt;
  GaussianParams p{a, b, c.real()};
  if (gaussian_green(p).max_abs_diff(g) > tol) return std::nullopt;
  return p;
}

GaussianParams compose_gaussian(const GaussianParams& p1, const GaussianParams& p2) {
  return {p1.a * p2.a + p1.b * std::conj(p2.b), p1.a * p2.b + p1.b * std::conj(p2.a),
          p1.c * (std::norm(p2.a) - std::norm(p2.b)) + p2.c};
}

double max_abs_diff(const GaussianParams& p, const GaussianParams& q) {
  return std::max({std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c)});
}

}  // namespace qcf
