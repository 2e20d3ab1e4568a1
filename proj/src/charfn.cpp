#include "qcf/charfn.hpp"

#include <algorithm>
#include <cmath>

namespace qcf {

GrassmannElement CharFn::to_element(const ContextPtr& ctx, PairId pair) const {
  const GeneratorId x{pair, false};
  const GeneratorId xc{pair, true};
  // C xi* xi = -C xi xi*
  return GrassmannElement(ctx, {{Monomial{}, A},
                                {Monomial::of({x}), B1},
                                {Monomial::of({xc}), B2},
                                {Monomial::of({x, xc}), -C}});
}

CharFn CharFn::from_element(const GrassmannElement& f, PairId pair) {
  const GeneratorId x{pair, false};
  const GeneratorId xc{pair, true};
  const std::uint32_t allowed = Monomial::of({x, xc}).mask;
  for (const auto& t : f.terms()) {
    if (t.monomial.mask & ~allowed) {
      throw ContextError("characteristic function depends on generators outside its pair");
    }
  }
  return {f.coefficient(Monomial{}), f.coefficient(Monomial::of({x})), f.coefficient(Monomial::of({xc})),
          -f.coefficient(Monomial::of({x, xc}))};
}

double CharFn::max_abs_diff(const CharFn& o) const {
  return std::max({std::abs(A - o.A), std::abs(B1 - o.B1), std::abs(B2 - o.B2), std::abs(C - o.C)});
}

const ContextPtr& charfn_context() {
  static const ContextPtr ctx = make_context({"xi"});
  return ctx;
}

CharFn char_of(const QubitOperator& op) {
  const auto& ctx = charfn_context();
  const auto chi = htrace(hmul(HybridOperator::qubit(ctx, op), displacement(ctx, 0)));
  return CharFn::from_element(chi, 0);
}

QubitOperator invert(const CharFn& chi) {
  const auto& ctx = charfn_context();
  const auto integrand = hmul(HybridOperator::grassmann(chi.to_element(ctx, 0)), etilde(ctx, 0, -1.0));
  return to_qubit(berezin_integrate(integrand, 0));
}

ValidityReport density_checks(const CharFn& chi, double tol) {
  const auto& ctx = charfn_context();
  const auto f = chi.to_element(ctx, 0);
  const auto xi = GrassmannElement::generator(ctx, {0, false});

  ValidityReport r;
  r.tolerance = tol;
  r.hermiticity_defect = f.max_abs_diff(conj(reflect(f, 0)));

  const Complex integral = berezin_integrate(f, 0).scalar_part();
  const Complex with_xi = berezin_integrate(f * xi, 0).scalar_part();
  r.integral_imag = std::abs(integral.imag());
  r.hermitian = r.hermiticity_defect <= tol && r.integral_imag <= tol;

  r.normalization_defect = std::abs(f.scalar_part() - 1.0);
  r.normalized = r.normalization_defect <= tol;

  r.positivity_lhs = std::norm(with_xi) + integral.real() * integral.real();
  r.positive = r.positivity_lhs <= 0.25 + tol;
  return r;
}

}  // namespace qcf
