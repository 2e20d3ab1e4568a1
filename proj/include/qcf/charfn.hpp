#pragma once

#include "qcf/grassmann.hpp"
#include "qcf/hybrid.hpp"

namespace qcf {

// chi(xi) = A + B1 xi + B2 xi* + C xi* xi
struct CharFn {
  Complex A{};
  Complex B1{};
  Complex B2{};
  Complex C{};

  [[nodiscard]] GrassmannElement to_element(const ContextPtr& ctx, PairId pair) const;
  static CharFn from_element(const GrassmannElement& f, PairId pair);

  [[nodiscard]] double max_abs_diff(const CharFn& o) const;
};

// Single-pair context ("xi") used when no larger algebra is involved.
const ContextPtr& charfn_context();

// chi(xi) = Tr[Theta D(xi)]
CharFn char_of(const QubitOperator& op);

// Theta = int d^2 xi chi(xi) E~(-xi)
QubitOperator invert(const CharFn& chi);

struct ValidityReport {
  bool hermitian = false;
  bool normalized = false;
  bool positive = false;
  // |int d^2xi chi xi|^2 + [int d^2xi chi]^2, which must not exceed 1/4.
  double positivity_lhs = 0.0;
  // Largest deviation of chi(xi) from [chi(-xi)]*.
  double hermiticity_defect = 0.0;
  // |int d^2 xi chi| imaginary part; Hermitian inputs make it real.
  double integral_imag = 0.0;
  double normalization_defect = 0.0;
  double tolerance = 0.0;

  [[nodiscard]] bool valid() const { return hermitian && normalized && positive; }
};

inline constexpr double kValidityTolerance = 1e-10;

ValidityReport density_checks(const CharFn& chi, double tol = kValidityTolerance);

}  // namespace qcf
