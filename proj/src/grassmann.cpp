#include "qcf/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace qcf {

namespace {

// Parity of the permutation sorting `bits`; 0 if a bit repeats.
int sort_sign(std::vector<int> bits) {
  int inversions = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    for (std::size_t j = i + 1; j < bits.size(); ++j) {
      if (bits[i] == bits[j]) return 0;
      if (bits[i] > bits[j]) ++inversions;
    }
  }
  return (inversions & 1) ? -1 : 1;
}

std::uint32_t bits_to_mask(const std::vector<int>& bits) {
  std::uint32_t m = 0;
  for (int b : bits) m |= (1U << b);
  return m;
}

constexpr std::size_t kDenseLimit = 1024;

}  // namespace

int Monomial::degree() const { return std::popcount(mask); }

std::vector<GeneratorId> Monomial::generators() const {
  std::vector<GeneratorId> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    const int b = std::countr_zero(m);
    out.push_back({b / 2, (b & 1) != 0});
  }
  return out;
}

Monomial Monomial::of(std::initializer_list<GeneratorId> gens) {
  Monomial m;
  for (auto g : gens) m.mask |= (1U << g.bit());
  return m;
}

int product_sign(Monomial a, Monomial b) {
  if (a.mask & b.mask) return 0;
  int swaps = 0;
  for (std::uint32_t m = b.mask; m != 0; m &= m - 1) {
    const int j = std::countr_zero(m);
    swaps += std::popcount(a.mask >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

AlgebraContext::AlgebraContext(std::vector<std::string> pair_names) : names_(std::move(pair_names)) {
  if (names_.empty() || static_cast<int>(names_.size()) > kMaxPairs) {
    throw ContextError("algebra context needs between 1 and " + std::to_string(kMaxPairs) +
                       " generator pairs");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw ContextError("duplicate generator pair '" + names_[i] + "'");
    }
  }
}

const std::string& AlgebraContext::pair_name(PairId p) const {
  if (p < 0 || p >= num_pairs()) throw ContextError("pair index out of range");
  return names_[static_cast<std::size_t>(p)];
}

PairId AlgebraContext::pair(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw ContextError("unknown generator pair '" + name + "'");
  return static_cast<PairId>(it - names_.begin());
}

std::string AlgebraContext::generator_name(GeneratorId g) const {
  return pair_name(g.pair) + (g.conjugated ? "*" : "");
}

std::string AlgebraContext::monomial_name(Monomial m) const {
  if (m.mask == 0) return "1";
  std::string out;
  for (auto g : m.generators()) {
    if (!out.empty()) out += ' ';
    out += generator_name(g);
  }
  return out;
}

ContextPtr make_context(std::vector<std::string> pair_names) {
  return std::make_shared<const AlgebraContext>(std::move(pair_names));
}

void require_same_context(const AlgebraContext& a, const AlgebraContext& b) {
  if (&a != &b && !a.same_as(b)) throw ContextError("operands belong to different algebra contexts");
}

GrassmannElement::GrassmannElement(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw ContextError("null algebra context");
}

GrassmannElement::GrassmannElement(ContextPtr ctx, std::vector<Term> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  if (!ctx_) throw ContextError("null algebra context");
  const std::uint32_t limit = ctx_->num_generators() >= 32 ? ~0U : ((1U << ctx_->num_generators()) - 1);
  for (const auto& t : terms_) {
    if (t.monomial.mask & ~limit) throw ContextError("monomial uses generators outside the context");
  }
  normalize();
}

GrassmannElement GrassmannElement::scalar(ContextPtr ctx, Complex c) {
  return GrassmannElement(std::move(ctx), {{Monomial{}, c}});
}

GrassmannElement GrassmannElement::generator(ContextPtr ctx, GeneratorId g, Complex c) {
  if (g.pair < 0 || g.pair >= ctx->num_pairs()) throw ContextError("unknown generator pair");
  return GrassmannElement(std::move(ctx), {{Monomial::of({g}), c}});
}

GrassmannElement GrassmannElement::monomial(ContextPtr ctx, Monomial m, Complex c) {
  return GrassmannElement(std::move(ctx), {{m, c}});
}

void GrassmannElement::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return std::abs(t.coefficient) < kPruneThreshold; });
  terms_ = std::move(merged);
}

Complex GrassmannElement::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.monomial < key; });
  return (it != terms_.end() && it->monomial == m) ? it->coefficient : Complex{};
}

double GrassmannElement::max_abs_diff(const GrassmannElement& other) const {
  require_same_context(*ctx_, *other.ctx_);
  double worst = 0.0;
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->monomial < j->monomial)) {
      worst = std::max(worst, std::abs(i->coefficient));
      ++i;
    } else if (i == terms_.end() || j->monomial < i->monomial) {
      worst = std::max(worst, std::abs(j->coefficient));
      ++j;
    } else {
      worst = std::max(worst, std::abs(i->coefficient - j->coefficient));
      ++i;
      ++j;
    }
  }
  return worst;
}

std::string GrassmannElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << t.coefficient.real() << (t.coefficient.imag() < 0 ? "" : "+") << t.coefficient.imag()
       << "i)";
    if (t.monomial.mask != 0) os << ' ' << ctx_->monomial_name(t.monomial);
  }
  return os.str();
}

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
  require_same_context(*a.ctx_, *b.ctx_);
  std::vector<Term> terms(a.terms_);
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return GrassmannElement(a.ctx_, std::move(terms));
}

GrassmannElement operator-(const GrassmannElement& a) { return Complex(-1.0) * a; }

GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) { return a + (-b); }

GrassmannElement operator*(Complex s, const GrassmannElement& a) {
  std::vector<Term> terms(a.terms_);
  for (auto& t : terms) t.coefficient *= s;
  return GrassmannElement(a.ctx_, std::move(terms));
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  require_same_context(*a.ctx_, *b.ctx_);
  const std::size_t dim = std::size_t{1} << a.ctx_->num_generators();
  std::vector<Term> out;
  if (dim <= kDenseLimit) {
    std::vector<Complex> acc(dim);
    std::vector<bool> touched(dim, false);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        const int s = product_sign(ta.monomial, tb.monomial);
        if (s == 0) continue;
        const std::uint32_t m = ta.monomial.mask | tb.monomial.mask;
        acc[m] += static_cast<double>(s) * ta.coefficient * tb.coefficient;
        touched[m] = true;
      }
    }
    for (std::size_t m = 0; m < dim; ++m) {
      if (touched[m]) out.push_back({Monomial{static_cast<std::uint32_t>(m)}, acc[m]});
    }
  } else {
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        const int s = product_sign(ta.monomial, tb.monomial);
        if (s == 0) continue;
        out.push_back({Monomial{ta.monomial.mask | tb.monomial.mask},
                       static_cast<double>(s) * ta.coefficient * tb.coefficient});
      }
    }
  }
  return GrassmannElement(a.ctx_, std::move(out));
}

GrassmannElement mul(const GrassmannElement& a, const GrassmannElement& b) { return a * b; }

GrassmannElement conj(const GrassmannElement& a) {
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    auto gens = t.monomial.generators();
    std::vector<int> bits;
    bits.reserve(gens.size());
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) bits.push_back(it->conj().bit());
    const int s = sort_sign(bits);
    terms.push_back({Monomial{bits_to_mask(bits)}, static_cast<double>(s) * std::conj(t.coefficient)});
  }
  return GrassmannElement(a.context(), std::move(terms));
}

GrassmannElement berezin_integrate(const GrassmannElement& a, PairId pair) {
  if (pair < 0 || pair >= a.context()->num_pairs()) throw ContextError("unknown generator pair");
  const std::uint32_t both = (1U << (2 * pair)) | (1U << (2 * pair + 1));
  // xi and xi* are adjacent in canonical order, so the even block xi xi*
  // moves to the front of any monomial without a sign: int d^2xi xi xi* R = R.
#ifdef QCF_MUTATE_BEREZIN_SIGN
  constexpr double kSign = -1.0;
#else
  constexpr double kSign = 1.0;
#endif
  std::vector<Term> terms;
  for (const auto& t : a.terms()) {
    if ((t.monomial.mask & both) == both) {
      terms.push_back({Monomial{t.monomial.mask & ~both}, kSign * t.coefficient});
    }
  }
  return GrassmannElement(a.context(), std::move(terms));
}

GrassmannElement graded_exp(const GrassmannElement& a) {
  const Complex s = a.scalar_part();
  const auto nilpotent = a - GrassmannElement::scalar(a.context(), s);
  auto sum = GrassmannElement::scalar(a.context(), 1.0);
  auto power = sum;
  for (int k = 1; k <= a.context()->num_generators(); ++k) {
    power = (1.0 / k) * (power * nilpotent);
    if (power.empty()) break;
    sum = sum + power;
  }
  return std::exp(s) * sum;
}

GrassmannElement delta(PairId pair, const GrassmannElement& shift) {
  const auto& ctx = shift.context();
  if (pair < 0 || pair >= ctx->num_pairs()) throw ContextError("unknown generator pair");
  for (const auto& t : shift.terms()) {
    if (t.monomial.degree() != 1) {
      throw DomainError("delta shift must be odd and linear in the generators");
    }
  }
  const auto x = GrassmannElement::generator(ctx, {pair, false}) - shift;
  const auto xc = GrassmannElement::generator(ctx, {pair, true}) - conj(shift);
  return x * xc;
}

ParitySplit parity_split(const GrassmannElement& a) {
  std::vector<Term> even;
  std::vector<Term> odd;
  for (const auto& t : a.terms()) (t.monomial.parity() ? odd : even).push_back(t);
  return {GrassmannElement(a.context(), std::move(even)), GrassmannElement(a.context(), std::move(odd))};
}

GrassmannElement reflect(const GrassmannElement& a, PairId pair) {
  if (pair < 0 || pair >= a.context()->num_pairs()) throw ContextError("unknown generator pair");
  const std::uint32_t both = (1U << (2 * pair)) | (1U << (2 * pair + 1));
  std::vector<Term> terms(a.terms().begin(), a.terms().end());
  for (auto& t : terms) {
    if (std::popcount(t.monomial.mask & both) == 1) t.coefficient = -t.coefficient;
  }
  return GrassmannElement(a.context(), std::move(terms));
}

GrassmannElement substitute_zero(const GrassmannElement& a, PairId pair) {
  if (pair < 0 || pair >= a.context()->num_pairs()) throw ContextError("unknown generator pair");
  const std::uint32_t both = (1U << (2 * pair)) | (1U << (2 * pair + 1));
  std::vector<Term> terms;
  for (const auto& t : a.terms()) {
    if ((t.monomial.mask & both) == 0) terms.push_back(t);
  }
  return GrassmannElement(a.context(), std::move(terms));
}

GrassmannElement relabel(const GrassmannElement& a, const ContextPtr& target,
                         std::span<const PairId> pair_map) {
  if (static_cast<int>(pair_map.size()) != a.context()->num_pairs()) {
    throw ContextError("pair map size does not match the source context");
  }
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    std::vector<int> bits;
    for (auto g : t.monomial.generators()) {
      const PairId dst = pair_map[static_cast<std::size_t>(g.pair)];
      if (dst < 0 || dst >= target->num_pairs()) {
        throw ContextError("generator pair '" + a.context()->pair_name(g.pair) +
                           "' has no image in the target context");
      }
      bits.push_back(GeneratorId{dst, g.conjugated}.bit());
    }
    const int s = sort_sign(bits);
    if (s == 0) throw ContextError("pair map is not injective");
    terms.push_back({Monomial{bits_to_mask(bits)}, static_cast<double>(s) * t.coefficient});
  }
  return GrassmannElement(target, std::move(terms));
}

}  // namespace qcf
