#pragma once

// Operators mixing 2x2 qubit matrices with Grassmann coefficients.
//
// Storage is left-normal form: sum over monomials g of g ⊗ M_g, meaning the
// Grassmann factor stands to the left of the matrix. Odd Grassmann content
// anticommutes with sigma_+/- and commutes with the diagonal projectors, so
// for a monomial h of parity p:  M h = h (sigma_z^p M sigma_z^p).

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "qcf/grassmann.hpp"

namespace qcf {

using QubitOperator = Eigen::Matrix2cd;

namespace pauli {
QubitOperator identity();
QubitOperator x();
QubitOperator y();
QubitOperator z();
QubitOperator raising();   // sigma_+ = |1><0|
QubitOperator lowering();  // sigma_- = |0><1|
}  // namespace pauli

struct HybridTerm {
  Monomial monomial;
  QubitOperator matrix;
};

class HybridOperator {
 public:
  explicit HybridOperator(ContextPtr ctx);
  HybridOperator(ContextPtr ctx, std::vector<HybridTerm> terms);

  // 1 ⊗ M
  static HybridOperator qubit(ContextPtr ctx, const QubitOperator& m);
  // g ⊗ 1
  static HybridOperator grassmann(const GrassmannElement& g);
  // g ⊗ M
  static HybridOperator product(const GrassmannElement& g, const QubitOperator& m);

  [[nodiscard]] const ContextPtr& context() const { return ctx_; }
  [[nodiscard]] std::span<const HybridTerm> terms() const { return terms_; }
  [[nodiscard]] QubitOperator matrix(Monomial m) const;

  // Grassmann-valued matrix entry <row| X |col>, reading the Grassmann part
  // as standing left of the bra.
  [[nodiscard]] GrassmannElement entry(int row, int col) const;

  [[nodiscard]] double max_abs_diff(const HybridOperator& other) const;
  [[nodiscard]] bool approx_equal(const HybridOperator& other, double tol = kCoefficientTolerance) const {
    return max_abs_diff(other) <= tol;
  }

  friend HybridOperator operator+(const HybridOperator& a, const HybridOperator& b);
  friend HybridOperator operator-(const HybridOperator& a, const HybridOperator& b);
  friend HybridOperator operator*(Complex s, const HybridOperator& a);
  friend HybridOperator operator*(const HybridOperator& a, const HybridOperator& b);

 private:
  void normalize();

  ContextPtr ctx_;
  std::vector<HybridTerm> terms_;
};

HybridOperator hmul(const HybridOperator& a, const HybridOperator& b);
HybridOperator hmul(std::initializer_list<HybridOperator> factors);

// Generalized adjoint: reverses factor order, conjugates both parts and
// re-normalizes. Involutive, anti-multiplicative.
HybridOperator hadjoint(const HybridOperator& a);

// Tr[g ⊗ M] = g · Tr[sigma_z^{parity(g)} M].
GrassmannElement htrace(const HybridOperator& a);

// Integrates every Grassmann coefficient over d^2 xi (the measure is even, so
// it commutes with the matrix part).
HybridOperator berezin_integrate(const HybridOperator& a, PairId pair);

// Plain matrix obtained when only the scalar monomial survives; throws
// ContextError if Grassmann content remains.
QubitOperator to_qubit(const HybridOperator& a, double tol = kCoefficientTolerance);

// D(xi) = 1 + sigma_+ xi - xi* sigma_- - sigma_z xi* xi / 2
HybridOperator displacement(const ContextPtr& ctx, PairId pair, double sign = 1.0);

// E~(xi) = sigma_z - xi* xi / 2 + sigma_+ xi - xi* sigma_-
HybridOperator etilde(const ContextPtr& ctx, PairId pair, double sign = 1.0);

// Amplitudes of the hybrid ket a0 |0> + a1 |1> (Grassmann parts on the left).
struct HybridKet {
  GrassmannElement amp0;
  GrassmannElement amp1;
};

// X |0>
HybridKet apply_to_vacuum(const HybridOperator& x);

// |xi> = D(xi)|0> = (1 - xi* xi/2)|0> - xi |1>
HybridKet coherent_state(const ContextPtr& ctx, PairId pair);

// <a|b> with the grading rule <1| g = (-1)^{parity g} g <1|.
GrassmannElement graded_inner(const HybridKet& a, const HybridKet& b);

}  // namespace qcf
