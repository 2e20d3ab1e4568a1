#pragma once

// Finite Grassmann (exterior) algebra over complex scalars.
//
// An algebra context owns an ordered list of conjugate generator pairs
// (xi_i, xi_i*). Generators are totally ordered by (pair index, conjugated
// last); bit 2*i holds xi_i and bit 2*i+1 holds xi_i* inside a Monomial mask.
// Every sign in the library is derived from sorting into this order.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcf {

using Complex = std::complex<double>;

class ContextError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kPruneThreshold = 1e-15;
inline constexpr double kCoefficientTolerance = 1e-12;
inline constexpr int kMaxPairs = 8;

using PairId = int;

struct GeneratorId {
  PairId pair = 0;
  bool conjugated = false;

  [[nodiscard]] constexpr int bit() const { return 2 * pair + (conjugated ? 1 : 0); }
  [[nodiscard]] constexpr GeneratorId conj() const { return {pair, !conjugated}; }
  friend constexpr bool operator==(GeneratorId, GeneratorId) = default;
};

// Set of generators in canonical ascending order, stored as a bit mask.
struct Monomial {
  std::uint32_t mask = 0;

  [[nodiscard]] int degree() const;
  [[nodiscard]] int parity() const { return degree() & 1; }
  [[nodiscard]] bool contains(GeneratorId g) const { return (mask >> g.bit()) & 1U; }
  [[nodiscard]] std::vector<GeneratorId> generators() const;

  static Monomial of(std::initializer_list<GeneratorId> gens);

  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr auto operator<=>(Monomial a, Monomial b) { return a.mask <=> b.mask; }
};

// (-1)^k for the reordering needed to bring the concatenation a·b into
// canonical order. Returns 0 when a and b share a generator.
int product_sign(Monomial a, Monomial b);

class AlgebraContext {
 public:
  explicit AlgebraContext(std::vector<std::string> pair_names);

  [[nodiscard]] int num_pairs() const { return static_cast<int>(names_.size()); }
  [[nodiscard]] int num_generators() const { return 2 * num_pairs(); }
  [[nodiscard]] const std::string& pair_name(PairId p) const;
  [[nodiscard]] PairId pair(const std::string& name) const;
  [[nodiscard]] const std::vector<std::string>& pair_names() const { return names_; }
  [[nodiscard]] std::string generator_name(GeneratorId g) const;
  [[nodiscard]] std::string monomial_name(Monomial m) const;

  [[nodiscard]] bool same_as(const AlgebraContext& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

ContextPtr make_context(std::vector<std::string> pair_names);

struct Term {
  Monomial monomial;
  Complex coefficient;
};

// Immutable-by-convention sparse element: terms sorted by monomial mask,
// no coefficient below kPruneThreshold in magnitude.
class GrassmannElement {
 public:
  explicit GrassmannElement(ContextPtr ctx);
  GrassmannElement(ContextPtr ctx, std::vector<Term> terms);

  static GrassmannElement scalar(ContextPtr ctx, Complex c);
  static GrassmannElement generator(ContextPtr ctx, GeneratorId g, Complex c = 1.0);
  static GrassmannElement monomial(ContextPtr ctx, Monomial m, Complex c = 1.0);

  [[nodiscard]] const ContextPtr& context() const { return ctx_; }
  [[nodiscard]] std::span<const Term> terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] Complex coefficient(Monomial m) const;
  [[nodiscard]] Complex scalar_part() const { return coefficient(Monomial{}); }

  // Largest coefficient difference over the union of supports.
  [[nodiscard]] double max_abs_diff(const GrassmannElement& other) const;
  [[nodiscard]] bool approx_equal(const GrassmannElement& other,
                                  double tol = kCoefficientTolerance) const {
    return max_abs_diff(other) <= tol;
  }

  [[nodiscard]] std::string to_string() const;

  friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator-(const GrassmannElement& a);
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(Complex s, const GrassmannElement& a);
  friend GrassmannElement operator*(const GrassmannElement& a, Complex s) { return s * a; }

 private:
  void normalize();

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

void require_same_context(const AlgebraContext& a, const AlgebraContext& b);

GrassmannElement mul(const GrassmannElement& a, const GrassmannElement& b);

// Complex conjugation: reverses factor order, swaps xi <-> xi*, conjugates
// scalars. Involutive and anti-multiplicative.
GrassmannElement conj(const GrassmannElement& a);

// Integral over d^2 xi = d xi* d xi, each differential acting from the left.
// With this convention the delta-sifting identity holds exactly.
GrassmannElement berezin_integrate(const GrassmannElement& a, PairId pair);

// Truncated exponential series. A nonzero scalar part is factored out as an
// ordinary complex exponential.
GrassmannElement graded_exp(const GrassmannElement& a);

// Grassmann delta (xi - s)(xi* - s*) for an odd, linear shift s.
GrassmannElement delta(PairId pair, const GrassmannElement& shift);

struct ParitySplit {
  GrassmannElement even;
  GrassmannElement odd;
};
ParitySplit parity_split(const GrassmannElement& a);

// f(xi) -> f(-xi, -xi*) for the given pair.
GrassmannElement reflect(const GrassmannElement& a, PairId pair);

// Sets xi = xi* = 0 for the given pair.
GrassmannElement substitute_zero(const GrassmannElement& a, PairId pair);

// Relabels pairs into another context. pair_map[i] is the target pair of
// source pair i, or -1 if the source pair must not occur (ContextError
// otherwise). Signs are recomputed from the target ordering.
GrassmannElement relabel(const GrassmannElement& a, const ContextPtr& target,
                         std::span<const PairId> pair_map);

}  // namespace qcf
