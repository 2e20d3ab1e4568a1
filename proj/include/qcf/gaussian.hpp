#pragma once

// Qubit-qubit Gaussian channels in canonical (theta, phi, q) form.

#include <optional>
#include <stdexcept>
#include <string_view>

#include "qcf/green.hpp"
#include "qcf/oracle.hpp"

namespace qcf {

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kSignBand = 1e-12;
inline constexpr double kDenominatorFloor = 1e-12;
inline constexpr double kArccosSlack = 1e-10;
inline constexpr double kDegradationTolerance = 1e-9;
inline constexpr double kCpBoundTolerance = 1e-12;

struct CanonicalParams {
  double theta = 0.0;
  double phi = 0.0;
  double q = 1.0;
};

// q = 1 within the sign band.
inline bool is_pure_environment(double q) { return q >= 1.0 - kSignBand && q <= 1.0 + kSignBand; }

struct Lambdas {
  double l1 = 1.0;
  double l2 = 1.0;
  double l3 = 1.0;
  double t3 = 0.0;
};

Lambdas params_to_lambdas(const CanonicalParams& p);
AffineChannelData affine_data(const CanonicalParams& p);
GaussianParams gaussian_params(const CanonicalParams& p);

// |l1|, |l2| <= 1 and |t3| <= sqrt((1 - l1^2)(1 - l2^2)).
bool gaussian_cp_check(double l1, double l2, double t3, double tol = kCpBoundTolerance);

GreenFn canonical_to_green(const CanonicalParams& p);

struct Dilation {
  Matrix4 unitary;
  QubitOperator env_state;
};

// Block unitary [[A0, -sx A1 sx], [A1, sx A0 sx]] with
// A0 = diag(cos theta, cos phi), A1 = [[0, sin phi], [sin theta, 0]], and
// environment q|0><0| + (1-q)|1><1|.
Dilation dilation(const CanonicalParams& p);
KrausSet dilation_kraus(const CanonicalParams& p);
KrausSet dilation_weak_complementary(const CanonicalParams& p);

// (theta, phi) -> (-theta, phi - pi/2)
CanonicalParams complement_angles(const CanonicalParams& p);

// Green function of the weak complementary: a q-weighted pair of Gaussian
// branches, Gaussian itself only at q = 0 or 1.
GreenFn complementary_green(const CanonicalParams& p);

enum class DegradabilityKind { Degradable, AntiDegradable, Both, WeaklyDegradable, QZero };

std::string_view to_string(DegradabilityKind k);

enum class IntermediateFamily {
  // pure-environment canonical channel (theta_x, phi_x)
  PureCanonical,
  // weak complementary of the canonical channel (-theta_x, phi_x + pi/2, q)
  WeakComplementary,
};

struct Witness {
  double theta_x = 0.0;
  double phi_x = 0.0;
  double q = 1.0;
  IntermediateFamily family = IntermediateFamily::PureCanonical;
  bool searched = false;  // found by numerical search instead of closed form
};

struct DegradabilityVerdict {
  DegradabilityKind kind = DegradabilityKind::QZero;
  // Map T with T ∘ N = N~ (degrading direction).
  std::optional<Witness> witness;
  // Map T' with T' ∘ N~ = N, when established.
  std::optional<Witness> anti_witness;
  double residual = 0.0;
};

DegradabilityVerdict degradability_classify(const CanonicalParams& p);

GreenFn witness_green(const Witness& w);
KrausSet witness_kraus(const Witness& w);

// Smallest violation of the Gaussian conditions (lambda3 = lambda1 lambda2,
// t in the z direction) over the discrete set of Bloch-rotation canonical
// forms reachable from an SVD of T. Zero means unitarily equivalent to a
// Gaussian channel within the searched set; the search is not exhaustive for
// degenerate singular values.
double gaussian_equivalence_defect(const AffineChannelData& d);

}  // namespace qcf
