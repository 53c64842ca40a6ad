#ifndef REGPROD_TESTS_TEST_SUPPORT_HPP
#define REGPROD_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "regprod/regprod.hpp"

namespace regprod::testing {

inline Monomial mono(std::initializer_list<int> e) { return Monomial(std::vector<int>(e)); }

inline MonomialIdeal ideal(const char* text, std::size_t n = 0) { return parse_ideal(text, n); }

/// Random ideal with 1..max_gens generators over all n variables.
inline MonomialIdeal random_test_ideal(Rng& rng, std::size_t n, std::size_t max_gens,
                                       int max_exp) {
  GeneratorSpec spec{n, variable_range(n), 1 + draw_below(rng, max_gens), max_exp, 0};
  return random_ideal(spec, rng);
}

/// The complex with the same modules and maps but term bases reordered by
/// the permutations perm[i] (new position k holds old element perm[i][k]).
template <CoefficientField F>
ChainComplex<F> permute_bases(const ChainComplex<F>& c,
                              const std::vector<std::vector<std::size_t>>& perm) {
  std::vector<FreeModule> terms;
  std::vector<std::vector<std::size_t>> inverse;
  for (std::size_t i = 0; i <= c.length(); ++i) {
    std::vector<BasisElement> basis;
    inverse.emplace_back(perm[i].size());
    for (std::size_t k = 0; k < perm[i].size(); ++k) {
      basis.push_back(c.term(i)[perm[i][k]]);
      inverse[i][perm[i][k]] = k;
    }
    terms.emplace_back(c.ambient(), std::move(basis));
  }
  std::vector<MonomialMatrix<F>> diffs;
  for (std::size_t i = 1; i <= c.length(); ++i) {
    MonomialMatrix<F> m(c.field(), terms[i], terms[i - 1]);
    for (std::size_t col = 0; col < c.term(i).rank(); ++col)
      for (const auto& e : c.d(i).column(col))
        m.set(inverse[i - 1][e.row], inverse[i][col], e.coeff, e.mono);
    diffs.push_back(std::move(m));
  }
  return ChainComplex<F>(c.field(), c.ambient(), std::move(terms), std::move(diffs));
}

/// Reversal of every term basis.
template <CoefficientField F>
ChainComplex<F> reverse_bases(const ChainComplex<F>& c) {
  std::vector<std::vector<std::size_t>> perm;
  for (const auto& t : c.terms()) {
    std::vector<std::size_t> p(t.rank());
    for (std::size_t k = 0; k < p.size(); ++k)
      p[k] = p.size() - 1 - k;
    perm.push_back(std::move(p));
  }
  return permute_bases(c, perm);
}

} // namespace regprod::testing

#endif // REGPROD_TESTS_TEST_SUPPORT_HPP
