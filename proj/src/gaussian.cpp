#include "qcf/gaussian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcf {

namespace {

using std::numbers::pi;

GrassmannElement gen(PairId p, bool conjugated, Complex c = 1.0) {
  return GrassmannElement::generator(green_context(), {p, conjugated}, c);
}

GrassmannElement xi_xic() { return gen(kXi, false) * gen(kXi, true); }

// delta(zeta - a xi - b xi*) exp[x xi xi*] with real a, b.
GrassmannElement branch(double a, double b, double x) {
  const auto shift = gen(kXi, false, a) + gen(kXi, true, b);
  return delta(kZeta, shift) * graded_exp(Complex(x) * xi_xic());
}

GaussianParams pure_params(double theta, double phi) { return gaussian_params({theta, phi, 1.0}); }

double param_residual(const GaussianParams& source, double theta_x, double phi_x, const GaussianParams& target) {
  return max_abs_diff(compose_gaussian(source, pure_params(theta_x, phi_x)), target);
}

double clamp_cosine(double v) {
  if (!std::isfinite(v) || std::abs(v) > 1.0 + kArccosSlack) {
    throw ClassificationError("intermediate-map cosine " + std::to_string(v) + " lies outside [-1, 1]");
  }
  return std::clamp(v, -1.0, 1.0);
}

struct Candidate {
  double theta_x = 0.0;
  double phi_x = 0.0;
  double residual = 0.0;
};

Candidate refine(const GaussianParams& source, const GaussianParams& target, Candidate c) {
  auto residual_vector = [&](double tx, double px) {
    const auto got = compose_gaussian(source, pure_params(tx, px));
    return Eigen::Matrix<double, 5, 1>(got.a.real() - target.a.real(), got.a.imag() - target.a.imag(),
                                       got.b.real() - target.b.real(), got.b.imag() - target.b.imag(),
                                       got.c - target.c);
  };
  double mu = 1e-6;
  auto r = residual_vector(c.theta_x, c.phi_x);
  for (int iter = 0; iter < 200 && r.cwiseAbs().maxCoeff() > 1e-15; ++iter) {
    constexpr double h = 1e-7;
    Eigen::Matrix<double, 5, 2> jac;
    jac.col(0) = (residual_vector(c.theta_x + h, c.phi_x) - residual_vector(c.theta_x - h, c.phi_x)) / (2 * h);
    jac.col(1) = (residual_vector(c.theta_x, c.phi_x + h) - residual_vector(c.theta_x, c.phi_x - h)) / (2 * h);
    const Eigen::Matrix2d normal = jac.transpose() * jac + mu * Eigen::Matrix2d::Identity();
    const Eigen::Vector2d step = normal.ldlt().solve(-jac.transpose() * r);
    const auto trial = residual_vector(c.theta_x + step(0), c.phi_x + step(1));
    if (trial.norm() < r.norm()) {
      c.theta_x += step(0);
      c.phi_x += step(1);
      r = trial;
      mu = std::max(mu * 0.3, 1e-15);
    } else {
      mu *= 10.0;
      if (mu > 1e6) break;
    }
  }
  c.residual = r.cwiseAbs().maxCoeff();
  return c;
}

// Grid search over (theta_x, phi_x) followed by local refinement; used where
// the closed-form inversion has a vanishing denominator.
Candidate search_witness(const GaussianParams& source, const GaussianParams& target) {
  constexpr int kGrid = 360;
  Candidate best{0.0, 0.0, std::numeric_limits<double>::infinity()};
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double tx = 2 * pi * i / kGrid;
      const double px = 2 * pi * j / kGrid;
      const double r = param_residual(source, tx, px, target);
      if (r < best.residual) best = {tx, px, r};
    }
  }
  return refine(source, target, best);
}

// Pure-family intermediate map taking the channel with angles `source` to the
// Gaussian `target`. cos 2theta_x and cos 2phi_x come in closed form; the
// branch of each arccos is fixed by the composed parameters.
Candidate solve_intermediate(double theta_s, double phi_s, const GaussianParams& target, bool& searched) {
  const GaussianParams source = pure_params(theta_s, phi_s);
  const double c2t = std::cos(2 * theta_s);
  const double c2p = std::cos(2 * phi_s);
  const double den = c2t + c2p;
  searched = false;
  if (std::abs(den) < kDenominatorFloor) {
    searched = true;
    return search_witness(source, target);
  }
  const double cx = clamp_cosine((c2t - c2p + 2 * c2t * c2p) / den);
  const double cy = clamp_cosine((c2t - c2p - 2 * c2t * c2p) / den);
  const double t = 0.5 * std::acos(cx);
  const double u = 0.5 * std::acos(cy);
  Candidate best{0.0, 0.0, std::numeric_limits<double>::infinity()};
  for (double tx : {t, -t, pi - t, pi + t}) {
    for (double px : {u, -u, pi - u, pi + u}) {
      const double r = param_residual(source, tx, px, target);
      if (r < best.residual) best = {tx, px, r};
    }
  }
  if (best.residual > kDegradationTolerance) {
    searched = true;
    const auto alt = search_witness(source, target);
    if (alt.residual < best.residual) best = alt;
  }
  return best;
}

}  // namespace

Lambdas params_to_lambdas(const CanonicalParams& p) {
  const double l1 = std::cos(p.theta - p.phi);
  const double l2 = std::cos(p.theta + p.phi);
  return {l1, l2, l1 * l2, (2 * p.q - 1) * (std::cos(2 * p.theta) - std::cos(2 * p.phi)) / 2};
}

AffineChannelData affine_data(const CanonicalParams& p) {
  const auto l = params_to_lambdas(p);
  AffineChannelData d;
  d.T = Eigen::Vector3d(l.l1, l.l2, l.l3).asDiagonal();
  d.t = Vector3(0.0, 0.0, l.t3);
  return d;
}

GaussianParams gaussian_params(const CanonicalParams& p) {
  return {std::cos(p.theta) * std::cos(p.phi), -std::sin(p.theta) * std::sin(p.phi),
          (2 * p.q - 1) * (std::cos(2 * p.theta) - std::cos(2 * p.phi)) / 4};
}

bool gaussian_cp_check(double l1, double l2, double t3, double tol) {
  if (std::abs(l1) > 1.0 + tol || std::abs(l2) > 1.0 + tol) return false;
  const double bound = std::sqrt(std::max(0.0, (1 - l1 * l1) * (1 - l2 * l2)));
  return std::abs(t3) <= bound + tol;
}

GreenFn canonical_to_green(const CanonicalParams& p) {
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  const double cp = std::cos(p.phi);
  const double sp = std::sin(p.phi);
  const double x = (2 * p.q - 1) * (std::cos(2 * p.theta) - std::cos(2 * p.phi)) / 4;
  return GreenFn(branch(ct * cp, -st * sp, x));
}

Dilation dilation(const CanonicalParams& p) {
  QubitOperator a0;
  a0 << std::cos(p.theta), 0, 0, std::cos(p.phi);
  QubitOperator a1;
  a1 << 0, std::sin(p.phi), std::sin(p.theta), 0;
  const QubitOperator sx = pauli::x();
  Dilation d;
  d.unitary.block<2, 2>(0, 0) = a0;
  d.unitary.block<2, 2>(0, 2) = -sx * a1 * sx;
  d.unitary.block<2, 2>(2, 0) = a1;
  d.unitary.block<2, 2>(2, 2) = sx * a0 * sx;
  if (unitarity_defect(d.unitary) > 1e-12) throw std::logic_error("dilation unitary failed its self-check");
  d.env_state << p.q, 0, 0, 1 - p.q;
  return d;
}

KrausSet dilation_kraus(const CanonicalParams& p) {
  const auto d = dilation(p);
  return kraus_from_dilation(d.unitary, d.env_state);
}

KrausSet dilation_weak_complementary(const CanonicalParams& p) {
  const auto d = dilation(p);
  return weak_complementary(d.unitary, d.env_state);
}

CanonicalParams complement_angles(const CanonicalParams& p) { return {-p.theta, p.phi - pi / 2, p.q}; }

GreenFn complementary_green(const CanonicalParams& p) {
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  const double cp = std::cos(p.phi);
  const double sp = std::sin(p.phi);
  const double x = (std::cos(2 * p.theta) + std::cos(2 * p.phi)) / 4;
  auto kernel = Complex(p.q) * branch(ct * sp, -st * cp, x);
  if (!is_pure_environment(p.q)) kernel = kernel + Complex(1 - p.q) * branch(-sp * ct, cp * st, -x);
  return GreenFn(kernel);
}

std::string_view to_string(DegradabilityKind k) {
  switch (k) {
    case DegradabilityKind::Degradable:
      return "Degradable";
    case DegradabilityKind::AntiDegradable:
      return "AntiDegradable";
    case DegradabilityKind::Both:
      return "Both";
    case DegradabilityKind::WeaklyDegradable:
      return "WeaklyDegradable";
    case DegradabilityKind::QZero:
      return "QZero";
  }
  return "?";
}

GreenFn witness_green(const Witness& w) {
  if (w.family == IntermediateFamily::PureCanonical) return canonical_to_green({w.theta_x, w.phi_x, 1.0});
  return complementary_green({-w.theta_x, w.phi_x + pi / 2, w.q});
}

KrausSet witness_kraus(const Witness& w) {
  if (w.family == IntermediateFamily::PureCanonical) return dilation_kraus({w.theta_x, w.phi_x, 1.0});
  return dilation_weak_complementary({-w.theta_x, w.phi_x + pi / 2, w.q});
}

DegradabilityVerdict degradability_classify(const CanonicalParams& p) {
  const double product = std::cos(2 * p.theta) * std::cos(2 * p.phi);
  const auto comp = complement_angles(p);
  const GaussianParams pure_comp = pure_params(comp.theta, comp.phi);
  const GaussianParams pure_self = pure_params(p.theta, p.phi);

  auto degrading = [&](IntermediateFamily family) {
    bool searched = false;
    const auto c = solve_intermediate(p.theta, p.phi, pure_comp, searched);
    Witness w{c.theta_x, c.phi_x, family == IntermediateFamily::PureCanonical ? 1.0 : p.q, family, searched};
    const double r = compose_green(canonical_to_green(p), witness_green(w)).max_abs_diff(complementary_green(p));
    return std::pair{w, r};
  };
  auto anti_degrading = [&]() {
    bool searched = false;
    const auto c = solve_intermediate(comp.theta, comp.phi, pure_self, searched);
    Witness w{c.theta_x, c.phi_x, 1.0, IntermediateFamily::PureCanonical, searched};
    const double r = compose_green(complementary_green(p), witness_green(w)).max_abs_diff(canonical_to_green(p));
    return std::pair{w, r};
  };

  DegradabilityVerdict v;
  if (is_pure_environment(p.q)) {
    if (std::abs(product) <= kSignBand) {
      v.kind = DegradabilityKind::Both;
      auto [w, r] = degrading(IntermediateFamily::PureCanonical);
      auto [wa, ra] = anti_degrading();
      v.witness = w;
      v.anti_witness = wa;
      v.residual = std::max(r, ra);
    } else if (product > 0) {
      v.kind = DegradabilityKind::Degradable;
      auto [w, r] = degrading(IntermediateFamily::PureCanonical);
      v.witness = w;
      v.residual = r;
    } else {
      v.kind = DegradabilityKind::AntiDegradable;
      auto [wa, ra] = anti_degrading();
      v.anti_witness = wa;
      v.residual = ra;
    }
  } else if (product >= -kSignBand) {
    v.kind = DegradabilityKind::WeaklyDegradable;
    auto [w, r] = degrading(IntermediateFamily::WeakComplementary);
    v.witness = w;
    v.residual = r;
  } else {
    v.kind = DegradabilityKind::QZero;
  }
  if (v.residual > kDegradationTolerance) {
    throw ClassificationError("degradability identity residual " + std::to_string(v.residual) +
                              " exceeds tolerance for " + std::string(to_string(v.kind)));
  }
  return v;
}

double gaussian_equivalence_defect(const AffineChannelData& d) {
  Eigen::JacobiSVD<Matrix3> svd(d.T, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix3 u = svd.matrixU();
  Matrix3 vm = svd.matrixV();
  Vector3 s = svd.singularValues();
  if (u.determinant() < 0) {
    u.col(2) *= -1.0;
    s(2) *= -1.0;
  }
  if (vm.determinant() < 0) {
    vm.col(2) *= -1.0;
    s(2) *= -1.0;
  }
  // R_out T R_in = diag(s) with R_out = u^T, R_in = vm.
  const Vector3 t_rot = u.transpose() * d.t;
  std::array<int, 3> perm{0, 1, 2};
  double best = std::numeric_limits<double>::infinity();
  do {
    Matrix3 pm = Matrix3::Zero();
    for (int i = 0; i < 3; ++i) pm(i, perm[static_cast<std::size_t>(i)]) = 1.0;
    const double pdet = pm.determinant();
    for (int sa = 0; sa < 8; ++sa) {
      const Vector3 sign_a((sa & 1) ? -1.0 : 1.0, (sa & 2) ? -1.0 : 1.0, (sa & 4) ? -1.0 : 1.0);
      if (sign_a.prod() != pdet) continue;
      for (int sb = 0; sb < 8; ++sb) {
        const Vector3 sign_b((sb & 1) ? -1.0 : 1.0, (sb & 2) ? -1.0 : 1.0, (sb & 4) ? -1.0 : 1.0);
        if (sign_b.prod() != pdet) continue;
        const Vector3 diag = pm * sign_a.cwiseProduct(s).cwiseProduct(sign_b);
        const Vector3 t2 = pm * sign_a.cwiseProduct(t_rot);
        const double defect = std::max(std::abs(diag(2) - diag(0) * diag(1)), std::hypot(t2(0), t2(1)));
        best = std::min(best, defect);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace qcf
