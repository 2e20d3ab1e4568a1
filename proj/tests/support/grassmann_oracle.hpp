#pragma once

// Test-side helpers: random elements and a naive product that sorts
// generator words by adjacent transpositions, independent of the library's
// inversion counting.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "qcf/grassmann.hpp"
#include "qcf/hybrid.hpp"

namespace qcf::testing {

inline Complex draw_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  const double re = n(rng);
  return {re, n(rng)};
}

inline GrassmannElement random_element(std::mt19937_64& rng, const ContextPtr& ctx, int max_terms = 6,
                                       int only_parity = -1) {
  const std::uint32_t full = (1U << ctx->num_generators()) - 1U;
  std::uniform_int_distribution<std::uint32_t> mask(0, full);
  std::vector<Term> terms;
  for (int i = 0; i < max_terms; ++i) {
    Monomial m{mask(rng)};
    if (only_parity >= 0 && m.parity() != only_parity) continue;
    terms.push_back({m, draw_complex(rng)});
  }
  return GrassmannElement(ctx, std::move(terms));
}

// Random odd element linear in the generators.
inline GrassmannElement random_linear(std::mt19937_64& rng, const ContextPtr& ctx) {
  GrassmannElement out(ctx);
  for (int b = 0; b < ctx->num_generators(); ++b) {
    out = out + GrassmannElement::generator(ctx, {b / 2, (b % 2) == 1}, draw_complex(rng));
  }
  return out;
}

inline HybridOperator random_hybrid(std::mt19937_64& rng, const ContextPtr& ctx, int max_terms = 4) {
  const std::uint32_t full = (1U << ctx->num_generators()) - 1U;
  std::uniform_int_distribution<std::uint32_t> mask(0, full);
  std::vector<HybridTerm> terms;
  for (int i = 0; i < max_terms; ++i) {
    QubitOperator m;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) m(r, c) = draw_complex(rng);
    }
    terms.push_back({Monomial{mask(rng)}, m});
  }
  return HybridOperator(ctx, std::move(terms));
}

// Sign and canonical mask of the word w (generator bits in written order);
// sign 0 when a generator repeats.
inline std::pair<int, std::uint32_t> sort_word(std::vector<int> w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
      if (w[j] == w[j + 1]) return {0, 0};
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    if (w[j] == w[j + 1]) return {0, 0};
  }
  std::uint32_t mask = 0;
  for (int b : w) mask |= 1U << b;
  return {sign, mask};
}

inline std::vector<int> word_of(Monomial m) {
  std::vector<int> w;
  for (int b = 0; b < 32; ++b) {
    if ((m.mask >> b) & 1U) w.push_back(b);
  }
  return w;
}

inline GrassmannElement naive_mul(const GrassmannElement& a, const GrassmannElement& b) {
  std::map<std::uint32_t, Complex> acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      auto w = word_of(ta.monomial);
      const auto wb = word_of(tb.monomial);
      w.insert(w.end(), wb.begin(), wb.end());
      const auto [sign, mask] = sort_word(w);
      if (sign != 0) acc[mask] += static_cast<double>(sign) * ta.coefficient * tb.coefficient;
    }
  }
  std::vector<Term> terms;
  for (const auto& [m, c] : acc) terms.push_back({Monomial{m}, c});
  return GrassmannElement(a.context(), std::move(terms));
}

// Element built from explicit (word, coefficient) pairs written in any order.
inline GrassmannElement from_words(const ContextPtr& ctx,
                                   std::initializer_list<std::pair<std::vector<GeneratorId>, Complex>> words) {
  GrassmannElement out(ctx);
  for (const auto& [gens, c] : words) {
    std::vector<int> w;
    for (auto g : gens) w.push_back(g.bit());
    const auto [sign, mask] = sort_word(w);
    if (sign != 0) out = out + GrassmannElement::monomial(ctx, Monomial{mask}, static_cast<double>(sign) * c);
  }
  return out;
}

}  // namespace qcf::testing
