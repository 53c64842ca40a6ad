// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace regprod;
using namespace regprod::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& title, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << detail << "\n";
  failures += !pass;
}

using C = ChainComplex<PrimeField>;

// Same complex with d(top) replaced by zero; almost never acyclic.
C zero_top(const C& c) {
  if (c.length() == 0)
    return c;
  std::vector<MonomialMatrix<PrimeField>> diffs;
  for (std::size_t i = 1; i < c.length(); ++i)
    diffs.push_back(c.d(i));
  diffs.emplace_back(c.field(), c.term(c.length()), c.term(c.length() - 1));
  return C(c.field(), c.ambient(), c.terms(), std::move(diffs));
}

struct Structural {
  std::size_t complexes = 0, invalid = 0;
  std::size_t star_terms = 0, rank_mismatch = 0;
  std::size_t scanned = 0, scan_mismatch = 0, non_acyclic = 0;

  void complex(const C& c) {
    ++complexes;
    invalid += !validate(c).ok();
    if (box_volume(c.ambient(), c.all_shifts()) <= 10000) {
      ++scanned;
      const bool lattice = is_acyclic(c).acyclic;
      scan_mismatch += lattice != is_acyclic_box(c).acyclic;
      non_acyclic += !lattice;
    }
  }

  void star(const C& fc, const C& gc, const C& s) {
    for (std::size_t i = 0; i <= s.length(); ++i) {
      std::size_t want = 0;
      for (std::size_t j = 0; j <= std::min(i, fc.length()); ++j)
        if (i - j <= gc.length())
          want += fc.term(j).rank() * gc.term(i - j).rank();
      ++star_terms;
      rank_mismatch += s.term(i).rank() != want;
    }
  }
};

} // namespace

int main() {
  const PrimeField field;
  Structural st;

  // 1. Counterexample with the exact reference Betti data.
  {
    auto t0 = Clock::now();
    auto r = run_counterexample(field);
    double secs = seconds_since(t0);
    bool regs = r.i.reg == 1 && r.j.reg == 3 && r.ij.reg == 5;
    bool pass = regs && r.matches_published && secs < 5.0;
    std::ostringstream d;
    d << "Reg(I)=" << r.i.reg << " Reg(J)=" << r.j.reg << " Reg(IJ)=" << r.ij.reg
      << "; IJ computed " << graded_summary(r.betti_ij) << "; " << secs << " s";
    for (const auto& x : r.discrepancies)
      d << "; " << x;
    report(1, pass, "counterexample reproduction", d.str());
  }

  // 2-4. Disjoint pairs: 100 with M = S/J and 100 with M = J.
  {
    auto t0 = Clock::now();
    auto rep = run_scenario(field, Scenario::disjoint, 200, 1);
    double secs = seconds_since(t0);
    std::size_t quotient = 0;
    for (const auto& rec : rep.records)
      quotient += rec.module.kind == ResolutionKind::quotient;

    std::ostringstream d2;
    d2 << rep.verification_pass << "/" << rep.trials << " pass (" << quotient << " S/J, "
       << rep.trials - quotient << " J, " << rep.skipped << " skipped); " << secs << " s";
    report(2, rep.skipped == 0 && rep.verification_pass == rep.trials && rep.trials == 200 &&
                  secs < 60.0,
           "star product resolves M/IM", d2.str());

    std::ostringstream d3;
    d3 << "pd bound " << rep.pd_bound_true << "/" << rep.trials << ", reg bound "
       << rep.reg_bound_true << "/" << rep.trials;
    report(3, rep.skipped == 0 && rep.pd_bound_true == rep.trials &&
                  rep.reg_bound_true == rep.trials,
           "pd and reg bounds", d3.str());

    std::ostringstream d4;
    d4 << rep.intersection_true << "/" << rep.trials << " with I cap J = IJ";
    report(4, rep.skipped == 0 && rep.intersection_true == rep.trials, "intersection equals product",
           d4.str());

    // Rebuild the star complexes of the same trials for the structural checks.
    for (const auto& rec : rep.records) {
      auto fc = resolve(field, rec.i_ideal, ResolutionKind::quotient);
      auto gc = resolve(field, rec.module.ideal, rec.module.kind);
      auto s = star_complex(fc, gc);
      st.star(fc, gc, s);
      st.complex(fc);
      st.complex(gc);
      st.complex(s);
    }
  }

  // 5. Overlap one: bound holds. Overlap two: at least one violation.
  {
    auto o1 = run_scenario(field, Scenario::overlap1, 200, 1);
    auto o2 = run_scenario(field, Scenario::overlap2, 200, 1);
    std::ostringstream d;
    d << "overlap1 reg bound " << o1.reg_bound_true << "/" << o1.trials - o1.skipped << " ("
      << o1.skipped << " skipped); overlap2 violations " << o2.reg_bound_false;
    report(5, o1.skipped == 0 && o1.reg_bound_true == o1.trials && o2.reg_bound_false >= 1,
           "regularity of products with one shared variable", d.str());
  }

  // 6. Three Betti routes on random ideals.
  {
    Rng rng(6);
    std::size_t agree = 0, total = 100;
    std::string first_bad;
    for (std::size_t t = 0; t < total; ++t) {
      const std::size_t n = 1 + draw_below(rng, 4);
      auto I = random_test_ideal(rng, n, 5, 3);
      auto taylor = taylor_complex(field, I, ResolutionKind::quotient);
      auto b = betti_numbers(taylor);
      auto min = minimalize(taylor);
      bool ok = b.shifted(1) == upper_koszul_betti(field, I) && b == basis_table(min);
      agree += ok;
      if (!ok && first_bad.empty())
        first_bad = to_string(I);
      st.complex(taylor);
      st.complex(min);
      st.complex(zero_top(taylor));
    }
    std::ostringstream d;
    d << agree << "/" << total << " ideals agree";
    if (!first_bad.empty())
      d << "; first mismatch " << first_bad;
    report(6, agree == total, "Betti oracle equivalence", d.str());
  }

  // 7. Structural properties.
  {
    // Overlapping pairs: the star complex is still a complex, and gives
    // further scan instances. Zeroed top differentials add non-acyclic ones.
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 2 + draw_below(rng, 3);
      auto A = random_test_ideal(rng, n, 3, 2);
      auto B = random_test_ideal(rng, n, 3, 2);
      auto fc = resolve(field, A, ResolutionKind::quotient);
      auto gc = resolve(field, B, t % 2 ? ResolutionKind::ideal : ResolutionKind::quotient);
      auto s = star_complex(fc, gc);
      st.star(fc, gc, s);
      st.complex(s);
      st.complex(zero_top(s));
    }

    std::size_t polar_ok = 0, polar_total = 50;
    for (std::size_t t = 0; t < polar_total; ++t) {
      const std::size_t n = 1 + draw_below(rng, 4);
      auto I = random_test_ideal(rng, n, 4, 3);
      auto p = polarize(I);
      polar_ok += upper_koszul_betti(field, I).graded() ==
                  basis_table(resolve(field, p.ideal, ResolutionKind::ideal)).graded();
    }

    std::ostringstream d;
    d << "d^2=0 on " << st.complexes - st.invalid << "/" << st.complexes << " complexes; "
      << "star ranks " << st.star_terms - st.rank_mismatch << "/" << st.star_terms << "; "
      << "polarization " << polar_ok << "/" << polar_total << "; "
      << "lattice=box on " << st.scanned - st.scan_mismatch << "/" << st.scanned << " ("
      << st.non_acyclic << " non-acyclic)";
    report(7, st.invalid == 0 && st.rank_mismatch == 0 && polar_ok == polar_total &&
                  st.scan_mismatch == 0 && st.non_acyclic > 0,
           "structural properties", d.str());
  }

  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria pass")
            << "\n";
  return failures ? 1 : 0;
}
