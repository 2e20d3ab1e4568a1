#pragma once

// Green-function kernels G(zeta, xi) of qubit channels. A kernel lives in a
// fixed two-pair context with pair 0 = zeta (input) and pair 1 = xi (output)
// and maps characteristic functions as chi'(xi) = int d^2 zeta chi(zeta) G(zeta, xi).

#include <optional>

#include "qcf/charfn.hpp"
#include "qcf/oracle.hpp"

namespace qcf {

inline constexpr PairId kZeta = 0;
inline constexpr PairId kXi = 1;
inline constexpr double kGaussianTolerance = 1e-10;

const ContextPtr& green_context();
// Three pairs (zeta, xi', xi) used for convolutions.
const ContextPtr& convolution_context();

struct GreenFn {
  GrassmannElement kernel;

  GreenFn();
  explicit GreenFn(GrassmannElement k);

  [[nodiscard]] double max_abs_diff(const GreenFn& o) const { return kernel.max_abs_diff(o.kernel); }
  // Deviation of G(zeta, 0) from zeta zeta*.
  [[nodiscard]] double trace_preservation_defect() const;

  friend GreenFn operator+(const GreenFn& a, const GreenFn& b) { return GreenFn(a.kernel + b.kernel); }
  friend GreenFn operator*(double w, const GreenFn& a) { return GreenFn(Complex(w) * a.kernel); }
};

// Kernel delta(zeta - a xi - b xi*) exp[-c xi* xi].
struct GaussianParams {
  Complex a{1.0};
  Complex b{0.0};
  double c = 0.0;
};

GreenFn green_from_kraus(const KrausSet& channel);

// T must be diagonal; rotating a general T into that form is the caller's job.
GreenFn green_from_tT(const AffineChannelData& data);

// Identity kernel (zeta - xi)(zeta* - xi*).
GreenFn identity_green();

CharFn apply_green(const GreenFn& g, const CharFn& chi);

// Kernel of N2 ∘ N1 (N1 applied first): int d^2 xi' G1(zeta, xi') G2(xi', xi).
GreenFn compose_green(const GreenFn& g1, const GreenFn& g2);

GreenFn gaussian_green(const GaussianParams& p);

// Reads a from the zeta* xi coefficient, b from zeta* xi*, c from
// zeta zeta* xi xi*, then accepts only if the rebuilt kernel matches all
// coefficients and c is real.
std::optional<GaussianParams> detect_gaussian(const GreenFn& g, double tol = kGaussianTolerance);

// Parameters of N2 ∘ N1 for Gaussian N1 (p1) and N2 (p2).
GaussianParams compose_gaussian(const GaussianParams& p1, const GaussianParams& p2);

// Canonical-form exponent x in exp[x xi xi*]; equal to c because xi xi* = -xi* xi.
inline double canonical_exponent(const GaussianParams& p) { return p.c; }

double max_abs_diff(const GaussianParams& p, const GaussianParams& q);

}  // namespace qcf
