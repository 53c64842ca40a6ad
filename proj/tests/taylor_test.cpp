#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace regprod;
using namespace regprod::testing;

namespace {

// Stanley-Reisner ideal of the six-vertex real projective plane: the ten
// triangles that are not facets.
MonomialIdeal rp2_ideal() {
  const int facets[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                             {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  std::vector<Monomial> gens;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) {
        bool facet = false;
        for (const auto& f : facets)
          facet = facet || (f[0] == a && f[1] == b && f[2] == c);
        if (facet)
          continue;
        std::vector<int> e(6, 0);
        e[a - 1] = e[b - 1] = e[c - 1] = 1;
        gens.emplace_back(e);
      }
  return MonomialIdeal(6, gens);
}

} // namespace

TEST(Taylor, TwoGeneratorDifferential) {
  // Generators sort as (x1*x2, x1^2); d2(e_12) = -x1 e_1 + x2 e_2.
  PrimeField f;
  auto c = taylor_complex(f, ideal("x1^2, x1*x2", 2), ResolutionKind::quotient);
  ASSERT_EQ(c.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(c.term(1)[0].shift, mono({1, 1}));
  EXPECT_EQ(c.term(1)[1].shift, mono({2, 0}));
  EXPECT_EQ(c.term(2)[0].label, "{1,2}");
  EXPECT_EQ(c.term(2)[0].shift, mono({2, 1}));
  const auto* a = c.d(2).find(0, 0);
  const auto* b = c.d(2).find(1, 0);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->coeff, f.from_int(-1));
  EXPECT_EQ(a->mono, mono({1, 0}));
  EXPECT_EQ(b->coeff, f.one());
  EXPECT_EQ(b->mono, mono({0, 1}));
  EXPECT_TRUE(validate(c).ok());
}

TEST(Taylor, RanksAreBinomial) {
  PrimeField f;
  auto c = taylor_complex(f, ideal("x1, x2, x3, x4", 4), ResolutionKind::quotient);
  EXPECT_EQ(c.ranks(), (std::vector<std::size_t>{1, 4, 6, 4, 1}));
  EXPECT_TRUE(is_minimal(c));
  auto id = taylor_complex(f, ideal("x1, x2, x3, x4", 4), ResolutionKind::ideal);
  EXPECT_EQ(id.ranks(), (std::vector<std::size_t>{4, 6, 4, 1}));
  EXPECT_EQ(id.term(0)[0].label, "{1}");
}

TEST(Taylor, ColexOrderWithinSize) {
  PrimeField f;
  auto c = taylor_complex(f, ideal("x1, x2, x3", 3), ResolutionKind::quotient);
  std::vector<std::string> labels;
  for (const auto& e : c.term(2).basis())
    labels.push_back(e.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"{1,2}", "{1,3}", "{2,3}"}));
}

TEST(Taylor, ZeroAndUnitIdeals) {
  PrimeField f;
  auto z = taylor_complex(f, MonomialIdeal::zero(2), ResolutionKind::quotient);
  EXPECT_EQ(z.ranks(), std::vector<std::size_t>{1});
  auto zi = taylor_complex(f, MonomialIdeal::zero(2), ResolutionKind::ideal);
  EXPECT_EQ(zi.ranks(), std::vector<std::size_t>{0});
  // S/S = 0: the unit map cancels everything.
  auto u = resolve(f, MonomialIdeal::unit(2), ResolutionKind::quotient);
  EXPECT_TRUE(basis_table(u).empty());
}

TEST(Taylor, SizeCap) {
  PrimeField f;
  auto I = ideal("x1, x2, x3, x4, x5", 5);
  try {
    taylor_complex(f, I, ResolutionKind::quotient, 4);
    FAIL() << "expected SizeError";
  } catch (const SizeError& e) {
    EXPECT_NE(std::string(e.what()).find("2^5"), std::string::npos);
  }
  EXPECT_NO_THROW(taylor_complex(f, I, ResolutionKind::quotient, 5));
}

TEST(Resolve, CounterexampleTables) {
  PrimeField f;
  auto bi = basis_table(resolve(f, counterexample_i(), ResolutionKind::ideal));
  auto bj = basis_table(resolve(f, counterexample_j(), ResolutionKind::ideal));
  auto bij = basis_table(
      resolve(f, ideal_product(counterexample_i(), counterexample_j()), ResolutionKind::ideal));
  EXPECT_EQ(graded_summary(bi), "0: 2@1 | 1: 1@2");
  EXPECT_EQ(graded_summary(bj), "0: 4@3 | 1: 3@4");
  EXPECT_EQ(graded_summary(bij), "0: 8@4 | 1: 10@5 1@6 | 2: 3@6 2@7 | 3: 1@8");
  EXPECT_EQ(reg_pd(bi), (RegPd{1, 1}));
  EXPECT_EQ(reg_pd(bj), (RegPd{3, 1}));
  EXPECT_EQ(reg_pd(bij), (RegPd{5, 3}));
}

TEST(Resolve, IdealAndQuotientDifferByOneStep) {
  PrimeField f;
  auto I = counterexample_j();
  auto q = basis_table(resolve(f, I, ResolutionKind::quotient));
  auto i = basis_table(resolve(f, I, ResolutionKind::ideal));
  EXPECT_EQ(q.shifted(1), i);
  EXPECT_EQ(reg_pd(q, 1), reg_pd(i));
  EXPECT_EQ(reg_pd(q).reg + 1, reg_pd(i).reg);
}

TEST(Koszul, CounterexampleMatchesResolution) {
  PrimeField f;
  auto IJ = ideal_product(counterexample_i(), counterexample_j());
  EXPECT_EQ(upper_koszul_betti(f, IJ), basis_table(resolve(f, IJ, ResolutionKind::ideal)));
  // The quotient IJ/0 versus the module (1)/IJ.
  EXPECT_EQ(koszul_betti(f, MonomialIdeal::unit(4), IJ).shifted(1), upper_koszul_betti(f, IJ));
}

TEST(Koszul, ThreeQuadrics) {
  PrimeField f;
  auto t = koszul_betti(f, MonomialIdeal::unit(2), ideal("x1^2, x1*x2, x2^2", 2));
  EXPECT_EQ(t.at(0, mono({0, 0})), 1u);
  EXPECT_EQ(t.at(1, mono({1, 1})), 1u);
  EXPECT_EQ(t.at(2, mono({2, 1})), 1u);
  EXPECT_EQ(t.at(2, mono({1, 2})), 1u);
  EXPECT_EQ(t.at(2, mono({2, 2})), 0u);
}

TEST(Koszul, CharacteristicDependence) {
  // Over GF(2) the real projective plane has homology in dimensions 1 and 2,
  // which shows up in degree x1...x6 at homological indices 4 and 3.
  const auto I = rp2_ideal();
  ASSERT_EQ(I.size(), 10u);
  const Monomial top({1, 1, 1, 1, 1, 1});
  const auto unit = MonomialIdeal::unit(6);
  auto gf2 = koszul_betti(PrimeField(2), unit, I);
  auto q = koszul_betti(RationalField(), unit, I);
  EXPECT_EQ(gf2.at(3, top), 1u);
  EXPECT_EQ(gf2.at(4, top), 1u);
  EXPECT_EQ(q.at(3, top), 0u);
  EXPECT_EQ(q.at(4, top), 0u);
  EXPECT_EQ(koszul_betti(PrimeField(), unit, I).graded(), q.graded());
}

TEST(Koszul, CounterexampleIsFieldIndependent) {
  auto gf = run_counterexample(PrimeField());
  auto gf2 = run_counterexample(PrimeField(2));
  auto q = run_counterexample(RationalField());
  for (const auto* r : {&gf, &gf2, &q}) {
    EXPECT_TRUE(r->ok());
    EXPECT_EQ(r->betti_ij.graded(), gf.betti_ij.graded());
    EXPECT_EQ(r->betti_j.graded(), gf.betti_j.graded());
  }
}

// Properties on seeded random ideals over three fields.

template <class F>
void check_betti_routes(const F& field, std::uint64_t seed, int trials) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const std::size_t n = 1 + draw_below(rng, 4);
    auto I = random_test_ideal(rng, n, 5, 3);
    auto taylor = taylor_complex(field, I, ResolutionKind::quotient);
    auto min = minimalize(taylor);
    auto b = betti_numbers(taylor);
    EXPECT_EQ(b, basis_table(min)) << to_string(I);
    EXPECT_EQ(b.shifted(1), upper_koszul_betti(field, I)) << to_string(I);
    EXPECT_EQ(b, koszul_betti(field, MonomialIdeal::unit(n), I)) << to_string(I);
    EXPECT_TRUE(is_minimal(min));
    EXPECT_TRUE(is_acyclic(min).acyclic);
    EXPECT_EQ(min.length() <= n, true) << "Hilbert syzygy bound for " << to_string(I);
  }
}

TEST(TaylorProperties, BettiRoutesAgreeModLargePrime) { check_betti_routes(PrimeField(), 5, 60); }
TEST(TaylorProperties, BettiRoutesAgreeModTwo) { check_betti_routes(PrimeField(2), 6, 60); }
TEST(TaylorProperties, BettiRoutesAgreeOverRationals) {
  check_betti_routes(RationalField(), 7, 40);
}

TEST(TaylorProperties, PolarizationPreservesGradedBetti) {
  PrimeField f;
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + draw_below(rng, 3);
    auto I = random_test_ideal(rng, n, 4, 3);
    auto p = polarize(I);
    EXPECT_EQ(upper_koszul_betti(f, I).graded(), upper_koszul_betti(f, p.ideal).graded())
        << to_string(I);
  }
}
