#ifndef REGPROD_STAR_PRODUCT_HPP
#define REGPROD_STAR_PRODUCT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "regprod/betti.hpp"
#include "regprod/free_complex.hpp"
#include "regprod/ideal.hpp"
#include "regprod/taylor.hpp"

namespace regprod {

/// F * G: basis f*g in (F-order, G-order) lexicographic order, shifted by
/// lcm(u_f, u_g).
inline FreeModule star_module(const FreeModule& f, const FreeModule& g) {
  if (f.ambient() != g.ambient())
    throw DimensionError("star product of modules over different rings");
  std::vector<BasisElement> basis;
  basis.reserve(f.rank() * g.rank());
  for (const auto& a : f.basis())
    for (const auto& b : g.basis())
      basis.push_back({a.label + "*" + b.label, lcm(a.shift, b.shift)});
  return FreeModule(f.ambient(), std::move(basis));
}

/// F (x) G with the product shifts u_f u_g, same basis order as star_module.
inline FreeModule tensor_module(const FreeModule& f, const FreeModule& g) {
  if (f.ambient() != g.ambient())
    throw DimensionError("tensor product of modules over different rings");
  std::vector<BasisElement> basis;
  basis.reserve(f.rank() * g.rank());
  for (const auto& a : f.basis())
    for (const auto& b : g.basis())
      basis.push_back({a.label + "(x)" + b.label, a.shift * b.shift});
  return FreeModule(f.ambient(), std::move(basis));
}

/// j : F (x) G -> F * G, f(x)g |-> gcd(u_f, u_g) f*g.
template <CoefficientField Fd>
MonomialMatrix<Fd> j_map(const Fd& field, const FreeModule& f, const FreeModule& g) {
  MonomialMatrix<Fd> j(field, tensor_module(f, g), star_module(f, g));
  for (std::size_t a = 0; a < f.rank(); ++a)
    for (std::size_t b = 0; b < g.rank(); ++b) {
      auto k = a * g.rank() + b;
      j.set(k, k, field.one(), gcd(f.shift(a), g.shift(b)));
    }
  return j;
}

/// phi * Id(H): F*H -> F'*H with entries a_fg * lcm(u_h,u_f)/lcm(u_h,u_g).
template <CoefficientField Fd>
MonomialMatrix<Fd> star_map_left(const MonomialMatrix<Fd>& phi, const FreeModule& h) {
  const auto& src = phi.source();
  const auto& tgt = phi.target();
  MonomialMatrix<Fd> out(phi.field(), star_module(src, h), star_module(tgt, h));
  for (std::size_t f = 0; f < src.rank(); ++f)
    for (const auto& e : phi.column(f))
      for (std::size_t k = 0; k < h.rank(); ++k)
        out.set(e.row * h.rank() + k, f * h.rank() + k, e.coeff,
                lcm(h.shift(k), src.shift(f)) / lcm(h.shift(k), tgt.shift(e.row)));
  return out;
}

/// Id(H) * psi: H*F -> H*F' with entries a_fg * lcm(u_h,u_f)/lcm(u_h,u_g).
template <CoefficientField Fd>
MonomialMatrix<Fd> star_map_right(const FreeModule& h, const MonomialMatrix<Fd>& psi) {
  const auto& src = psi.source();
  const auto& tgt = psi.target();
  MonomialMatrix<Fd> out(psi.field(), star_module(h, src), star_module(h, tgt));
  for (std::size_t k = 0; k < h.rank(); ++k)
    for (std::size_t f = 0; f < src.rank(); ++f)
      for (const auto& e : psi.column(f))
        out.set(k * tgt.rank() + e.row, k * src.rank() + f, e.coeff,
                lcm(h.shift(k), src.shift(f)) / lcm(h.shift(k), tgt.shift(e.row)));
  return out;
}

/// The complex F * G: term i is the sum of F_j * G_k over j + k = i in
/// ascending j, with differential phi_j * Id(G_k) + (-1)^j Id(F_j) * psi_k.
template <CoefficientField Fd>
ChainComplex<Fd> star_complex(const ChainComplex<Fd>& fc, const ChainComplex<Fd>& gc) {
  if (fc.ambient() != gc.ambient())
    throw DimensionError("star product of complexes over different rings");
  const auto& field = fc.field();
  const auto n = fc.ambient();
  const auto p = fc.length();
  const auto q = gc.length();

  // Block (j, k) of term j + k starts at offset[j][k].
  std::vector<std::vector<std::size_t>> offset(p + 1, std::vector<std::size_t>(q + 1, 0));
  std::vector<FreeModule> terms;
  for (std::size_t i = 0; i <= p + q; ++i) {
    std::vector<BasisElement> basis;
    for (std::size_t j = (i > q ? i - q : 0); j <= std::min(i, p); ++j) {
      const auto k = i - j;
      offset[j][k] = basis.size();
      const auto block = star_module(fc.term(j), gc.term(k));
      for (auto e : block.basis()) {
        e.label += "@" + std::to_string(j) + "," + std::to_string(k);
        basis.push_back(std::move(e));
      }
    }
    terms.emplace_back(n, std::move(basis));
  }

  std::vector<MonomialMatrix<Fd>> diffs;
  for (std::size_t i = 1; i <= p + q; ++i) {
    MonomialMatrix<Fd> d(field, terms[i], terms[i - 1]);
    for (std::size_t j = (i > q ? i - q : 0); j <= std::min(i, p); ++j) {
      const auto k = i - j;
      if (j >= 1) {
        auto block = star_map_left(fc.d(j), gc.term(k));
        for (std::size_t col = 0; col < block.source().rank(); ++col)
          for (const auto& e : block.column(col))
            d.set(offset[j - 1][k] + e.row, offset[j][k] + col, e.coeff, e.mono);
      }
      if (k >= 1) {
        auto block = star_map_right(fc.term(j), gc.d(k));
        for (std::size_t col = 0; col < block.source().rank(); ++col)
          for (const auto& e : block.column(col))
            d.set(offset[j][k - 1] + e.row, offset[j][k] + col,
                  j % 2 ? field.neg(e.coeff) : e.coeff, e.mono);
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex<Fd>(field, n, std::move(terms), std::move(diffs));
}

// ---------------------------------------------------------------------------
// Verification pipeline for products I*M with M = J or M = S/J.

/// The module M: either S/J (kind quotient) or the ideal J (kind ideal).
struct ModuleSpec {
  ResolutionKind kind = ResolutionKind::quotient;
  MonomialIdeal ideal;

  /// Degrees of a minimal generating set of M.
  std::vector<Monomial> generator_shifts() const {
    if (kind == ResolutionKind::quotient)
      return {Monomial(ideal.ambient())};
    return ideal.generators();
  }
};

inline std::string to_string(const ModuleSpec& m) {
  return std::string(to_string(m.kind)) + ":" + to_string(m.ideal);
}

/// Gens(I) intersected with Gens(M).
inline VariableSet gens_overlap(const MonomialIdeal& I, const ModuleSpec& m) {
  return intersect(gens_set(I), gens_set(m.generator_shifts()));
}

/// dim (M/IM)_b read off ideal membership.
inline std::size_t quotient_hilbert_at(const MonomialIdeal& I, const ModuleSpec& m,
                                       const Monomial& b) {
  if (m.kind == ResolutionKind::quotient)
    return ideal_sum(I, m.ideal).contains(b) ? 0 : 1;
  return m.ideal.contains(b) && !ideal_product(I, m.ideal).contains(b) ? 1 : 0;
}

struct VerificationReport {
  MonomialIdeal i_ideal;
  ModuleSpec module;
  FieldConfig field;
  VariableSet overlap;
  std::vector<std::size_t> ranks;

  bool valid = false;
  std::string validation_message;

  bool acyclic = false;
  std::optional<HomologyWitness> acyclicity_witness;
  std::size_t lattice_size = 0;

  bool h0_agrees = false;
  std::optional<Monomial> h0_witness;
  std::size_t h0_expected = 0;
  std::size_t h0_actual = 0;
  std::size_t h0_degrees_checked = 0;

  bool all_pass() const noexcept { return valid && acyclic && h0_agrees; }
};

template <CoefficientField Fd>
struct ProductResolution {
  ChainComplex<Fd> complex;
  VerificationReport report;
};

/// Builds F * G from minimal resolutions F of S/I and G of M and certifies
/// it: d^2 = 0 with homogeneous entries, acyclicity on the lcm lattice, and
/// agreement of dim H_0(F*G)_b with dim (M/IM)_b on the lcm lattice of the
/// complex shifts extended by the generators of I+J and IJ.
///
/// Refuses (HypothesisError) when Gens(I) and Gens(M) share a variable.
template <CoefficientField Fd>
ProductResolution<Fd> resolve_product(const Fd& field, const MonomialIdeal& I, const ModuleSpec& m,
                                      std::size_t max_gens = default_max_gens) {
  if (I.ambient() != m.ideal.ambient())
    throw DimensionError("I and M live in different rings");
  auto shared = gens_overlap(I, m);
  if (!shared.empty())
    throw HypothesisError("Gens(I) and Gens(M) share " + to_string(shared) +
                          "; the star product is only claimed to resolve M/IM when they are "
                          "disjoint");

  auto fres = resolve(field, I, ResolutionKind::quotient, max_gens);
  auto gres = resolve(field, m.ideal, m.kind, max_gens);
  auto c = star_complex(fres, gres);

  VerificationReport r;
  r.i_ideal = I;
  r.module = m;
  r.field = config_of(field);
  r.overlap = shared;
  r.ranks = c.ranks();

  auto v = validate(c);
  r.valid = v.ok();
  r.validation_message = v.message;
  if (!r.valid)
    return {std::move(c), std::move(r)};

  auto acyc = is_acyclic(c);
  r.acyclic = acyc.acyclic;
  r.acyclicity_witness = acyc.witness;
  r.lattice_size = acyc.degrees_checked;

  auto extra = ideal_sum(I, m.ideal).generators();
  auto prod = ideal_product(I, m.ideal).generators();
  extra.insert(extra.end(), prod.begin(), prod.end());
  r.h0_agrees = true;
  for (const auto& b : scan_degrees(c.ambient(), c.all_shifts(), extra)) {
    ++r.h0_degrees_checked;
    auto want = quotient_hilbert_at(I, m, b);
    auto got = h0_hilbert_at(c, b);
    if (want != got) {
      r.h0_agrees = false;
      r.h0_witness = b;
      r.h0_expected = want;
      r.h0_actual = got;
      break;
    }
  }
  return {std::move(c), std::move(r)};
}

struct BoundsReport {
  MonomialIdeal i_ideal;
  ModuleSpec module;
  FieldConfig field;
  VariableSet overlap; ///< Gens(I) with Gens(J), J the ideal defining M

  int pd_quotient = 0; ///< pd(M/IM)
  int pd_module = 0;
  int pd_ideal = 0;
  int reg_product = 0; ///< Reg(IM)
  int reg_ideal = 0;
  int reg_module = 0;

  bool pd_bound_holds = false;  ///< pd(M/IM) <= pd(M) + pd(I) + 1
  bool reg_bound_holds = false; ///< Reg(IM) <= Reg(I) + Reg(M)
  bool intersection_is_product = false; ///< I cap J == IJ

  BettiTable betti_ideal, betti_module, betti_product, betti_quotient;
};

/// Regularity and projective dimension bounds for I*M from minimal Betti
/// tables of I, M, IM and M/IM, each computed on its own by Koszul homology
/// (no star-product construction involved). Works for any pair; the Gens
/// overlap is recorded, not enforced.
template <CoefficientField Fd>
BoundsReport check_bounds(const Fd& field, const MonomialIdeal& I, const ModuleSpec& m) {
  if (I.ambient() != m.ideal.ambient())
    throw DimensionError("I and M live in different rings");
  const auto n = I.ambient();
  const auto& J = m.ideal;
  const auto zero = MonomialIdeal::zero(n);
  const auto unit = MonomialIdeal::unit(n);

  BoundsReport r;
  r.i_ideal = I;
  r.module = m;
  r.field = config_of(field);
  r.overlap = intersect(gens_set(I), gens_set(J));

  r.betti_ideal = koszul_betti(field, I, zero);
  if (m.kind == ResolutionKind::quotient) {
    auto sum = ideal_sum(I, J);
    r.betti_module = koszul_betti(field, unit, J);
    r.betti_product = koszul_betti(field, sum, J);
    r.betti_quotient = koszul_betti(field, unit, sum);
  } else {
    auto prod = ideal_product(I, J);
    r.betti_module = koszul_betti(field, J, zero);
    r.betti_product = koszul_betti(field, prod, zero);
    r.betti_quotient = koszul_betti(field, J, prod);
  }
  auto need = [](const BettiTable& t, const char* what) {
    if (t.empty())
      throw HypothesisError(std::string(what) + " is the zero module");
    return reg_pd(t);
  };
  auto ri = need(r.betti_ideal, "I");
  auto rm = need(r.betti_module, "M");
  auto rp = need(r.betti_product, "IM");
  auto rq = need(r.betti_quotient, "M/IM");

  r.pd_ideal = ri.pd;
  r.reg_ideal = ri.reg;
  r.pd_module = rm.pd;
  r.reg_module = rm.reg;
  r.reg_product = rp.reg;
  r.pd_quotient = rq.pd;
  r.pd_bound_holds = r.pd_quotient <= r.pd_module + r.pd_ideal + 1;
  r.reg_bound_holds = r.reg_product <= r.reg_ideal + r.reg_module;
  r.intersection_is_product = ideal_intersection(I, J) == ideal_product(I, J);
  return r;
}

} // namespace regprod

#endif // REGPROD_STAR_PRODUCT_HPP
