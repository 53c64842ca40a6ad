#ifndef REGPROD_TAYLOR_HPP
#define REGPROD_TAYLOR_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "regprod/betti.hpp"
#include "regprod/free_complex.hpp"
#include "regprod/ideal.hpp"

namespace regprod {

/// Whether a complex should resolve S/I or the ideal I itself.
enum class ResolutionKind { quotient, ideal };

inline constexpr std::size_t default_max_gens = 16;

inline const char* to_string(ResolutionKind k) {
  return k == ResolutionKind::quotient ? "quotient" : "ideal";
}

namespace detail {

inline std::string subset_label(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::uint32_t j = 0; mask >> j; ++j)
    if (mask >> j & 1) {
      s += (first ? "" : ",") + std::to_string(j + 1);
      first = false;
    }
  return s + "}";
}

} // namespace detail

/// The Taylor complex of I. Term i of the S/I version has one basis element
/// e_T per i-subset T of the generators (colex order), shifted by lcm(T), and
///   d(e_T) = sum_{j in T} (-1)^pos(j,T) * lcm(T)/lcm(T \ j) * e_{T \ j}.
/// The ideal version drops the rank-one term 0 and reindexes.
template <CoefficientField F>
ChainComplex<F> taylor_complex(const F& field, const MonomialIdeal& I, ResolutionKind kind,
                               std::size_t max_gens = default_max_gens) {
  const auto n = I.ambient();
  const auto m = I.size();
  if (m > max_gens || m >= 31)
    throw SizeError("Taylor complex on " + std::to_string(m) + " generators has 2^" +
                    std::to_string(m) + " basis elements; the cap is " +
                    std::to_string(max_gens) + " generators");

  const std::uint32_t full = (std::uint32_t{1} << m);
  std::vector<Monomial> shift_of(full, Monomial(n));
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    auto low = static_cast<std::size_t>(std::countr_zero(mask));
    shift_of[mask] = lcm(shift_of[mask & (mask - 1)], I.generators()[low]);
  }

  // Subsets grouped by size, each group ascending as integers (= colex).
  std::vector<std::vector<std::uint32_t>> by_size(m + 1);
  std::vector<std::size_t> index_of(full, 0);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    auto k = static_cast<std::size_t>(std::popcount(mask));
    index_of[mask] = by_size[k].size();
    by_size[k].push_back(mask);
  }

  const std::size_t first = kind == ResolutionKind::quotient ? 0 : 1;
  if (m < first)
    return ChainComplex<F>(field, n);

  std::vector<FreeModule> terms;
  for (std::size_t k = first; k <= m; ++k) {
    std::vector<BasisElement> basis;
    for (auto mask : by_size[k])
      basis.push_back({detail::subset_label(mask), shift_of[mask]});
    terms.emplace_back(n, std::move(basis));
  }

  std::vector<MonomialMatrix<F>> diffs;
  for (std::size_t t = 1; t < terms.size(); ++t) {
    const std::size_t k = t + first;
    MonomialMatrix<F> d(field, terms[t], terms[t - 1]);
    for (std::size_t col = 0; col < by_size[k].size(); ++col) {
      const auto mask = by_size[k][col];
      int pos = 0;
      for (std::uint32_t j = 0; j < m; ++j) {
        if (!(mask >> j & 1))
          continue;
        const auto face = mask & ~(std::uint32_t{1} << j);
        d.set(index_of[face], col, field.from_int(pos % 2 ? -1 : 1),
              shift_of[mask] / shift_of[face]);
        ++pos;
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex<F>(field, n, std::move(terms), std::move(diffs));
}

/// Minimal free resolution obtained by minimalizing the Taylor complex.
template <CoefficientField F>
ChainComplex<F> resolve(const F& field, const MonomialIdeal& I, ResolutionKind kind,
                        std::size_t max_gens = default_max_gens) {
  return minimalize(taylor_complex(field, I, kind, max_gens));
}

/// Multigraded Betti numbers of the module A/B (B contained in A, B may be
/// zero) from Koszul homology: in degree b the Koszul complex of A/B is the
/// relative simplicial chain complex on squarefree tau <= b with
/// x^(b - tau) in A, modulo those with x^(b - tau) in B, graded by |tau|.
/// Candidate degrees are the lcm lattice of the generators of A and B, which
/// contains every Betti degree of A/B.
///
/// This path shares no code with the complex constructions and serves as
/// their cross-check.
template <CoefficientField F>
BettiTable koszul_betti(const F& field, const MonomialIdeal& A, const MonomialIdeal& B) {
  if (A.ambient() != B.ambient())
    throw DimensionError("ideals live in different rings");
  for (const auto& g : B.generators())
    if (!A.contains(g))
      throw Error("koszul_betti needs B contained in A");
  const auto n = A.ambient();
  auto gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());

  BettiTable table(config_of(field));
  for (const auto& b : scan_degrees(n, gens)) {
    const auto supp = b.support();
    const auto s = supp.size();
    const std::uint32_t full = std::uint32_t{1} << s;
    // Faces present in the relative chain group, grouped by size.
    std::vector<std::vector<std::uint32_t>> faces(s + 1);
    std::vector<std::size_t> index_of(full, static_cast<std::size_t>(-1));
    std::vector<int> e(b.exponents().begin(), b.exponents().end());
    for (std::uint32_t tau = 0; tau < full; ++tau) {
      for (std::size_t k = 0; k < s; ++k)
        e[supp[k]] = b[supp[k]] - static_cast<int>(tau >> k & 1);
      Monomial c(e);
      if (A.contains(c) && !B.contains(c)) {
        auto size = static_cast<std::size_t>(std::popcount(tau));
        index_of[tau] = faces[size].size();
        faces[size].push_back(tau);
      }
    }
    std::vector<std::size_t> ranks(s + 2, 0); // ranks[k] = rank of boundary out of size k
    for (std::size_t k = 1; k <= s; ++k) {
      if (faces[k].empty() || faces[k - 1].empty())
        continue;
      auto mat = zero_matrix(field, faces[k - 1].size(), faces[k].size());
      for (std::size_t col = 0; col < faces[k].size(); ++col) {
        const auto tau = faces[k][col];
        int pos = 0;
        for (std::size_t j = 0; j < s; ++j) {
          if (!(tau >> j & 1))
            continue;
          auto row = index_of[tau & ~(std::uint32_t{1} << j)];
          if (row != static_cast<std::size_t>(-1))
            mat(row, col) = field.from_int(pos % 2 ? -1 : 1);
          ++pos;
        }
      }
      ranks[k] = rank(mat, field);
    }
    for (std::size_t k = 0; k <= s; ++k)
      table.add(static_cast<int>(k), b, faces[k].size() - ranks[k] - ranks[k + 1]);
  }
  return table;
}

/// Betti table of the ideal I itself via Koszul homology (upper Koszul
/// simplicial complexes).
template <CoefficientField F>
BettiTable upper_koszul_betti(const F& field, const MonomialIdeal& I) {
  return koszul_betti(field, I, MonomialIdeal::zero(I.ambient()));
}

} // namespace regprod

#endif // REGPROD_TAYLOR_HPP
