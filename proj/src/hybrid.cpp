#include "qcf/hybrid.hpp"

#include <algorithm>

namespace qcf {

namespace pauli {
QubitOperator identity() { return QubitOperator::Identity(); }
QubitOperator x() {
  QubitOperator m;
  m << 0, 1, 1, 0;
  return m;
}
QubitOperator y() {
  QubitOperator m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
QubitOperator z() {
  QubitOperator m;
  m << 1, 0, 0, -1;
  return m;
}
QubitOperator raising() {
  QubitOperator m;
  m << 0, 0, 1, 0;
  return m;
}
QubitOperator lowering() {
  QubitOperator m;
  m << 0, 1, 0, 0;
  return m;
}
}  // namespace pauli

namespace {

// sigma_z M sigma_z flips the off-diagonal entries.
QubitOperator zconj(const QubitOperator& m) {
  QubitOperator r = m;
  r(0, 1) = -r(0, 1);
  r(1, 0) = -r(1, 0);
  return r;
}

QubitOperator pass_through(const QubitOperator& m, int parity) { return parity ? zconj(m) : m; }

}  // namespace

HybridOperator::HybridOperator(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw ContextError("null algebra context");
}

HybridOperator::HybridOperator(ContextPtr ctx, std::vector<HybridTerm> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  if (!ctx_) throw ContextError("null algebra context");
  normalize();
}

HybridOperator HybridOperator::qubit(ContextPtr ctx, const QubitOperator& m) {
  return HybridOperator(std::move(ctx), {{Monomial{}, m}});
}

HybridOperator HybridOperator::grassmann(const GrassmannElement& g) {
  return product(g, QubitOperator::Identity());
}

HybridOperator HybridOperator::product(const GrassmannElement& g, const QubitOperator& m) {
  std::vector<HybridTerm> terms;
  for (const auto& t : g.terms()) terms.push_back({t.monomial, t.coefficient * m});
  return HybridOperator(g.context(), std::move(terms));
}

void HybridOperator::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const HybridTerm& a, const HybridTerm& b) { return a.monomial < b.monomial; });
  std::vector<HybridTerm> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().matrix += t.matrix;
    } else {
      merged.push_back(t);
    }
  }
  for (auto& t : merged) {
    for (int i = 0; i < 4; ++i) {
      if (std::abs(t.matrix(i / 2, i % 2)) < kPruneThreshold) t.matrix(i / 2, i % 2) = 0.0;
    }
  }
  std::erase_if(merged, [](const HybridTerm& t) { return t.matrix.isZero(0.0); });
  terms_ = std::move(merged);
}

QubitOperator HybridOperator::matrix(Monomial m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.matrix;
  }
  return QubitOperator::Zero();
}

GrassmannElement HybridOperator::entry(int row, int col) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) terms.push_back({t.monomial, t.matrix(row, col)});
  return GrassmannElement(ctx_, std::move(terms));
}

double HybridOperator::max_abs_diff(const HybridOperator& other) const {
  double worst = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) worst = std::max(worst, entry(r, c).max_abs_diff(other.entry(r, c)));
  }
  return worst;
}

HybridOperator operator+(const HybridOperator& a, const HybridOperator& b) {
  require_same_context(*a.ctx_, *b.ctx_);
  std::vector<HybridTerm> terms(a.terms_);
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return HybridOperator(a.ctx_, std::move(terms));
}

HybridOperator operator*(Complex s, const HybridOperator& a) {
  std::vector<HybridTerm> terms(a.terms_);
  for (auto& t : terms) t.matrix *= s;
  return HybridOperator(a.ctx_, std::move(terms));
}

HybridOperator operator-(const HybridOperator& a, const HybridOperator& b) { return a + Complex(-1.0) * b; }

HybridOperator operator*(const HybridOperator& a, const HybridOperator& b) {
  require_same_context(*a.ctx_, *b.ctx_);
  std::vector<HybridTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      const int s = product_sign(ta.monomial, tb.monomial);
      if (s == 0) continue;
      terms.push_back({Monomial{ta.monomial.mask | tb.monomial.mask},
                       static_cast<double>(s) * pass_through(ta.matrix, tb.monomial.parity()) * tb.matrix});
    }
  }
  return HybridOperator(a.ctx_, std::move(terms));
}

HybridOperator hmul(const HybridOperator& a, const HybridOperator& b) { return a * b; }

HybridOperator hmul(std::initializer_list<HybridOperator> factors) {
  if (factors.size() == 0) throw ContextError("hmul needs at least one factor");
  auto it = factors.begin();
  HybridOperator acc = *it;
  for (++it; it != factors.end(); ++it) acc = acc * *it;
  return acc;
}

HybridOperator hadjoint(const HybridOperator& a) {
  // (g M)^† = M^† g* = g* (sigma_z^p M^† sigma_z^p)
  HybridOperator out(a.context());
  for (const auto& t : a.terms()) {
    const auto gc = conj(GrassmannElement::monomial(a.context(), t.monomial));
    out = out + HybridOperator::product(gc, pass_through(t.matrix.adjoint(), t.monomial.parity()));
  }
  return out;
}

GrassmannElement htrace(const HybridOperator& a) {
  std::vector<Term> terms;
  for (const auto& t : a.terms()) {
#ifdef QCF_MUTATE_TRACE_PARITY
    const Complex tr = t.matrix.trace();
#else
    const Complex tr = t.monomial.parity() ? (pauli::z() * t.matrix).trace() : t.matrix.trace();
#endif
    terms.push_back({t.monomial, tr});
  }
  return GrassmannElement(a.context(), std::move(terms));
}

HybridOperator berezin_integrate(const HybridOperator& a, PairId pair) {
  HybridOperator out(a.context());
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      QubitOperator unit = QubitOperator::Zero();
      unit(r, c) = 1.0;
      out = out + HybridOperator::product(berezin_integrate(a.entry(r, c), pair), unit);
    }
  }
  return out;
}

QubitOperator to_qubit(const HybridOperator& a, double tol) {
  QubitOperator out = QubitOperator::Zero();
  for (const auto& t : a.terms()) {
    if (t.monomial.mask == 0) {
      out = t.matrix;
    } else if (t.matrix.cwiseAbs().maxCoeff() > tol) {
      throw ContextError("hybrid operator still carries Grassmann content");
    }
  }
  return out;
}

HybridOperator displacement(const ContextPtr& ctx, PairId pair, double sign) {
  const GeneratorId x{pair, false};
  const GeneratorId xc{pair, true};
  if (pair < 0 || pair >= ctx->num_pairs()) throw ContextError("unknown generator pair");
  // sigma_+ xi = -xi sigma_+ ; xi* xi = -xi xi*
  std::vector<HybridTerm> terms = {
      {Monomial{}, pauli::identity()},
      {Monomial::of({x}), -sign * pauli::raising()},
      {Monomial::of({xc}), -sign * pauli::lowering()},
      {Monomial::of({x, xc}), 0.5 * pauli::z()},
  };
  return HybridOperator(ctx, std::move(terms));
}

HybridOperator etilde(const ContextPtr& ctx, PairId pair, double sign) {
  const GeneratorId x{pair, false};
  const GeneratorId xc{pair, true};
  if (pair < 0 || pair >= ctx->num_pairs()) throw ContextError("unknown generator pair");
  std::vector<HybridTerm> terms = {
      {Monomial{}, pauli::z()},
      {Monomial::of({x}), -sign * pauli::raising()},
      {Monomial::of({xc}), -sign * pauli::lowering()},
      {Monomial::of({x, xc}), 0.5 * pauli::identity()},
  };
  return HybridOperator(ctx, std::move(terms));
}

HybridKet apply_to_vacuum(const HybridOperator& x) { return {x.entry(0, 0), x.entry(1, 0)}; }

HybridKet coherent_state(const ContextPtr& ctx, PairId pair) {
  return apply_to_vacuum(displacement(ctx, pair));
}

GrassmannElement graded_inner(const HybridKet& a, const HybridKet& b) {
  const auto zero = conj(a.amp0) * b.amp0;
  const auto g1 = conj(a.amp1) * b.amp1;
  auto [even, odd] = parity_split(g1);
  return zero + even - odd;
}

}  // namespace qcf
