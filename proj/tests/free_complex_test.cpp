#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace regprod;
using namespace regprod::testing;

namespace {

using C = ChainComplex<PrimeField>;
using M = MonomialMatrix<PrimeField>;

// Koszul complex on x1, x2: S(-x1x2) -> S(-x1) + S(-x2) -> S.
C koszul2(const PrimeField& f) {
  FreeModule c0(2, {{"1", mono({0, 0})}});
  FreeModule c1(2, {{"e1", mono({1, 0})}, {"e2", mono({0, 1})}});
  FreeModule c2(2, {{"e12", mono({1, 1})}});
  M d1(f, c1, c0), d2(f, c2, c1);
  d1.set_homogeneous(0, 0, f.one());
  d1.set_homogeneous(0, 1, f.one());
  d2.set_homogeneous(0, 0, f.from_int(-1));
  d2.set_homogeneous(1, 0, f.one());
  return C(f, 2, {c0, c1, c2}, {d1, d2});
}

} // namespace

TEST(ChainComplex, RejectsMismatchedRanks) {
  PrimeField f;
  FreeModule c0(1, {{"a", mono({0})}});
  FreeModule c1(1, {{"b", mono({1})}, {"c", mono({1})}});
  M wrong(f, c0, c0);
  EXPECT_THROW(C(f, 1, {c0, c1}, {wrong}), InvalidComplexError);
  EXPECT_THROW(C(f, 1, {c0, c1}, {}), InvalidComplexError);
  EXPECT_THROW(FreeModule(1, {{"a", mono({0})}, {"a", mono({1})}}), Error);
}

TEST(Validate, AcceptsKoszulComplex) {
  PrimeField f;
  EXPECT_TRUE(validate(koszul2(f)).ok());
}

TEST(Validate, DetectsCompositionFailure) {
  PrimeField f;
  FreeModule c0(2, {{"1", mono({0, 0})}});
  FreeModule c1(2, {{"e1", mono({1, 0})}, {"e2", mono({0, 1})}});
  FreeModule c2(2, {{"e12", mono({1, 1})}});
  M d1(f, c1, c0), d2(f, c2, c1);
  d1.set_homogeneous(0, 0, f.one());
  d1.set_homogeneous(0, 1, f.one());
  d2.set_homogeneous(0, 0, f.one());
  d2.set_homogeneous(1, 0, f.one());
  auto r = validate(C(f, 2, {c0, c1, c2}, {d1, d2}));
  EXPECT_EQ(r.kind, ValidationReport::Kind::composition);
  EXPECT_EQ(r.index, 2u);
}

TEST(Validate, DetectsInhomogeneousEntry) {
  PrimeField f;
  FreeModule c0(2, {{"1", mono({0, 0})}});
  FreeModule c1(2, {{"e1", mono({1, 0})}});
  M d1(f, c1, c0);
  d1.set(0, 0, f.one(), mono({0, 1}));
  auto r = validate(C(f, 2, {c0, c1}, {d1}));
  EXPECT_EQ(r.kind, ValidationReport::Kind::homogeneity);
  EXPECT_EQ(r.index, 1u);
}

TEST(MonomialMatrix, ZeroCoefficientErases) {
  PrimeField f;
  FreeModule a(1, {{"a", mono({1})}}), b(1, {{"b", mono({0})}});
  M m(f, a, b);
  m.set_homogeneous(0, 0, f.from_int(3));
  EXPECT_EQ(m.nonzeros(), 1u);
  m.set_homogeneous(0, 0, f.zero());
  EXPECT_EQ(m.nonzeros(), 0u);
  EXPECT_THROW(m.set(1, 0, f.one(), mono({1})), Error);
}

TEST(Acyclicity, KoszulIsAcyclicWithExpectedH0) {
  PrimeField f;
  auto c = koszul2(f);
  EXPECT_TRUE(is_acyclic(c).acyclic);
  EXPECT_TRUE(is_acyclic_box(c).acyclic);
  EXPECT_EQ(h0_hilbert_at(c, mono({0, 0})), 1u);
  EXPECT_EQ(h0_hilbert_at(c, mono({1, 0})), 0u);
  EXPECT_EQ(h0_hilbert_at(c, mono({3, 5})), 0u);
  EXPECT_EQ(homology_at(c, 1, mono({1, 1})), 0u);
}

TEST(Acyclicity, ZeroMapReportsWitness) {
  PrimeField f;
  FreeModule c0(1, {{"a", mono({0})}}), c1(1, {{"b", mono({1})}});
  C c(f, 1, {c0, c1}, {M(f, c1, c0)});
  auto r = is_acyclic(c);
  ASSERT_FALSE(r.acyclic);
  EXPECT_EQ(r.witness->index, 1u);
  EXPECT_EQ(r.witness->degree, mono({1}));
  EXPECT_EQ(r.witness->dim, 1u);
  EXPECT_THROW(betti_numbers(c), InvalidComplexError);
}

TEST(Acyclicity, ZeroComplex) {
  PrimeField f;
  C c(f, 3);
  EXPECT_EQ(c.length(), 0u);
  EXPECT_TRUE(is_acyclic(c).acyclic);
  EXPECT_TRUE(betti_numbers(c).empty());
}

TEST(ScanDegrees, TaylorOfThreeQuadrics) {
  // Shifts 1, x1^2, x1x2, x2^2 and their joins x1^2x2, x1x2^2, x1^2x2^2.
  PrimeField f;
  auto c = taylor_complex(f, ideal("x1^2, x1*x2, x2^2", 2), ResolutionKind::quotient);
  auto s = scan_degrees(2, c.all_shifts());
  EXPECT_EQ(s.size(), 7u);
  EXPECT_EQ(box_volume(2, c.all_shifts()), 9u);
  EXPECT_EQ(box_degrees(2, c.all_shifts()).size(), 9u);
  EXPECT_EQ(scan_degrees(2, {}), std::vector<Monomial>{Monomial(2)});
}

TEST(Minimalize, CancelsTrivialSummand) {
  // S + S(-x1) <- S(-x1), with the unit map onto the second summand.
  PrimeField f;
  FreeModule c0(1, {{"a", mono({0})}, {"b", mono({1})}}), c1(1, {{"c", mono({1})}});
  M d1(f, c1, c0);
  d1.set_homogeneous(1, 0, f.one());
  auto m = minimalize(C(f, 1, {c0, c1}, {d1}));
  EXPECT_EQ(m.length(), 0u);
  EXPECT_EQ(m.ranks(), std::vector<std::size_t>{1});
  EXPECT_TRUE(is_minimal(m));
}

TEST(Minimalize, KeepsMinimalComplexUnchanged) {
  PrimeField f;
  auto c = koszul2(f);
  EXPECT_TRUE(is_minimal(c));
  auto m = minimalize(c);
  EXPECT_EQ(basis_table(m), basis_table(c));
  EXPECT_EQ(betti_numbers(c), basis_table(c));
}

TEST(Minimalize, TaylorOfThreeQuadrics) {
  // S/(x1^2, x1x2, x2^2): 1, 3 in degree 2, 2 in degree 3.
  PrimeField f;
  auto t = taylor_complex(f, ideal("x1^2, x1*x2, x2^2", 2), ResolutionKind::quotient);
  auto m = minimalize(t);
  EXPECT_TRUE(is_minimal(m));
  EXPECT_TRUE(validate(m).ok());
  EXPECT_TRUE(is_acyclic(m).acyclic);
  EXPECT_EQ(m.ranks(), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(graded_summary(basis_table(m)), "0: 1@0 | 1: 3@2 | 2: 2@3");
  EXPECT_EQ(betti_numbers(t), basis_table(m));
}

// Properties on Taylor complexes of seeded random ideals.

TEST(FreeComplexProperties, InvariantsUnderBasisReordering) {
  PrimeField f;
  Rng rng(77);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + draw_below(rng, 4);
    auto I = random_test_ideal(rng, n, 5, 3);
    auto c = taylor_complex(f, I, ResolutionKind::quotient);
    auto r = reverse_bases(c);
    ASSERT_TRUE(validate(c).ok());
    ASSERT_TRUE(validate(r).ok());
    EXPECT_TRUE(is_acyclic(r).acyclic);
    auto b = betti_numbers(c);
    EXPECT_EQ(betti_numbers(r), b);
    EXPECT_EQ(basis_table(minimalize(r)), b);
    EXPECT_EQ(basis_table(minimalize(c)), b);
    EXPECT_TRUE(validate(minimalize(c)).ok());
  }
}

TEST(FreeComplexProperties, LatticeScanMatchesBoxScan) {
  PrimeField f;
  Rng rng(78);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + draw_below(rng, 3);
    auto I = random_test_ideal(rng, n, 4, 3);
    auto c = taylor_complex(f, I, ResolutionKind::quotient);
    EXPECT_EQ(is_acyclic(c).acyclic, is_acyclic_box(c).acyclic);
    for (const auto& b : box_degrees(n, c.all_shifts()))
      EXPECT_EQ(h0_hilbert_at(c, b), I.contains(b) ? 0u : 1u);
  }
}
