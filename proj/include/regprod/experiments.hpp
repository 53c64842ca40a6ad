#ifndef REGPROD_EXPERIMENTS_HPP
#define REGPROD_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <random>
#include <string>
#include <vector>

#include "regprod/ideal.hpp"
#include "regprod/star_product.hpp"

namespace regprod {

/// Random streams are std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Ranges are reduced with `% k` rather than a
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
using Rng = std::mt19937_64;

inline std::uint64_t draw_below(Rng& rng, std::uint64_t k) { return rng() % k; }

/// SplitMix64 finalizer; decorrelates per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return mix_seed(seed ^ mix_seed(trial));
}

struct GeneratorSpec {
  std::size_t n = 0;
  VariableSet var_range;
  std::size_t num_gens = 1;
  int max_exp = 1;
  std::uint64_t seed = 0;
};

/// Draws num_gens non-unit monomials supported on var_range with exponents in
/// [0, max_exp], then minimalizes.
inline MonomialIdeal random_ideal(const GeneratorSpec& spec, Rng& rng) {
  if (spec.var_range.empty())
    throw ConfigError("random_ideal needs a nonempty variable range");
  if (spec.num_gens < 1 || spec.max_exp < 1)
    throw ConfigError("random_ideal needs num_gens >= 1 and max_exp >= 1");
  for (auto v : spec.var_range.members)
    if (v >= spec.n)
      throw ConfigError("variable range exceeds the ring");
  std::vector<Monomial> gens;
  while (gens.size() < spec.num_gens) {
    std::vector<int> e(spec.n, 0);
    for (auto v : spec.var_range.members)
      e[v] = static_cast<int>(draw_below(rng, spec.max_exp + 1));
    Monomial m(std::move(e));
    if (!m.is_unit())
      gens.push_back(std::move(m));
  }
  return MonomialIdeal(spec.n, std::move(gens));
}

inline MonomialIdeal random_ideal(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  return random_ideal(spec, rng);
}

inline VariableSet variable_range(std::size_t n) {
  VariableSet v;
  for (std::size_t i = 0; i < n; ++i)
    v.members.push_back(i);
  return v;
}

enum class Scenario { disjoint, overlap1, overlap2, counterexample };

inline const char* to_string(Scenario s) {
  switch (s) {
  case Scenario::disjoint: return "disjoint";
  case Scenario::overlap1: return "overlap1";
  case Scenario::overlap2: return "overlap2";
  case Scenario::counterexample: return "counterexample";
  }
  return "?";
}

inline std::optional<Scenario> parse_scenario(const std::string& s) {
  if (s == "disjoint") return Scenario::disjoint;
  if (s == "overlap1") return Scenario::overlap1;
  if (s == "overlap2") return Scenario::overlap2;
  if (s == "counterexample") return Scenario::counterexample;
  return std::nullopt;
}

/// The regularity counterexample pair in K[x1..x4].
inline MonomialIdeal counterexample_i() { return parse_ideal("x2, x3", 4); }
inline MonomialIdeal counterexample_j() {
  return parse_ideal("x1^2*x2, x1*x2*x3, x2*x3*x4, x3*x4^2", 4);
}

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  MonomialIdeal i_ideal;
  ModuleSpec module;
  bool skipped = false;
  std::string skip_reason;
  std::optional<VerificationReport> verification;
  std::optional<BoundsReport> bounds;

  /// Every verdict this trial is expected to certify.
  bool passed() const {
    if (skipped)
      return true;
    if (verification && !verification->all_pass())
      return false;
    return !bounds || (bounds->pd_bound_holds && bounds->reg_bound_holds &&
                       (!verification || bounds->intersection_is_product));
  }
};

struct ExperimentReport {
  std::string scenario;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  FieldConfig field;
  std::vector<TrialRecord> records;

  std::size_t skipped = 0;
  std::size_t verification_pass = 0;
  std::size_t pd_bound_true = 0;
  std::size_t reg_bound_true = 0;
  std::size_t reg_bound_false = 0;
  std::size_t intersection_true = 0;

  /// Exit status semantics: overlap2 exists to find violations, so it only
  /// fails on a hard error; every other scenario needs all verdicts TRUE.
  bool ok() const {
    if (scenario == "overlap2")
      return true;
    if (scenario == "counterexample") {
      for (const auto& r : records)
        if (!r.bounds || r.bounds->reg_ideal != 1 || r.bounds->reg_module != 3 ||
            r.bounds->reg_product != 5 || r.bounds->reg_bound_holds)
          return false;
      return !records.empty();
    }
    for (const auto& r : records)
      if (!r.passed())
        return false;
    return true;
  }
};

namespace detail {

/// Fisher-Yates shuffle of 0..n-1 with draw_below.
inline std::vector<std::size_t> shuffled_variables(std::size_t n, Rng& rng) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = i;
  for (std::size_t i = n; i > 1; --i)
    std::swap(v[i - 1], v[draw_below(rng, i)]);
  return v;
}

inline VariableSet make_set(std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  return VariableSet{std::move(members)};
}

template <CoefficientField Fd>
void run_disjoint_trial(const Fd& field, TrialRecord& rec, Rng& rng, std::size_t max_gens) {
  const std::size_t n = 2 + draw_below(rng, 5);
  auto vars = shuffled_variables(n, rng);
  const std::size_t cut = 1 + draw_below(rng, n - 1);
  auto a = make_set({vars.begin(), vars.begin() + cut});
  auto b = make_set({vars.begin() + cut, vars.end()});
  rec.i_ideal = random_ideal({n, a, 1 + draw_below(rng, 4), 3, 0}, rng);
  auto J = random_ideal({n, b, 1 + draw_below(rng, 4), 3, 0}, rng);
  rec.module = {rec.index % 2 == 0 ? ResolutionKind::quotient : ResolutionKind::ideal, J};
  rec.verification = resolve_product(field, rec.i_ideal, rec.module, max_gens).report;
  rec.bounds = check_bounds(field, rec.i_ideal, rec.module);
}

/// Draws I on A + shared and J on B + shared until both use every shared
/// variable; `shared` many variables end up in Gens(I) and Gens(J).
template <CoefficientField Fd>
void run_overlap_trial(const Fd& field, TrialRecord& rec, Rng& rng, std::size_t shared_count,
                       std::size_t min_n) {
  const std::size_t n = min_n + draw_below(rng, 6 - min_n + 1);
  auto vars = shuffled_variables(n, rng);
  const std::size_t rest = n - shared_count;
  const std::size_t cut = draw_below(rng, rest + 1);
  std::vector<std::size_t> shared(vars.begin(), vars.begin() + shared_count);
  std::vector<std::size_t> a(shared), b(shared);
  a.insert(a.end(), vars.begin() + shared_count, vars.begin() + shared_count + cut);
  b.insert(b.end(), vars.begin() + shared_count + cut, vars.end());
  auto sa = make_set(a), sb = make_set(b), ss = make_set(shared);
  for (int attempt = 0; attempt < 256; ++attempt) {
    auto I = random_ideal({n, sa, 1 + draw_below(rng, 4), 3, 0}, rng);
    auto J = random_ideal({n, sb, 1 + draw_below(rng, 4), 3, 0}, rng);
    if (intersect(gens_set(I), gens_set(J)) == ss) {
      rec.i_ideal = I;
      rec.module = {ResolutionKind::ideal, J};
      rec.bounds = check_bounds(field, I, rec.module);
      return;
    }
  }
  rec.skipped = true;
  rec.skip_reason = "could not draw a pair sharing exactly the chosen variables";
}

} // namespace detail

/// Runs a named scenario. Trial t draws from its own stream seeded by
/// trial_seed(seed, t), so trial indices stay aligned across runs.
template <CoefficientField Fd>
ExperimentReport run_scenario(const Fd& field, Scenario scenario, std::size_t trials,
                              std::uint64_t seed, std::size_t max_gens = default_max_gens) {
  ExperimentReport rep;
  rep.scenario = to_string(scenario);
  rep.seed = seed;
  rep.field = config_of(field);

  auto fixed_pair = [&](TrialRecord& rec) {
    rec.i_ideal = counterexample_i();
    rec.module = {ResolutionKind::ideal, counterexample_j()};
    rec.bounds = check_bounds(field, rec.i_ideal, rec.module);
  };

  if (scenario == Scenario::counterexample)
    trials = 1;
  for (std::size_t t = 0; t < trials; ++t) {
    TrialRecord rec;
    rec.index = t;
    rec.seed = trial_seed(seed, t);
    Rng rng(rec.seed);
    try {
      switch (scenario) {
      case Scenario::disjoint: detail::run_disjoint_trial(field, rec, rng, max_gens); break;
      case Scenario::overlap1: detail::run_overlap_trial(field, rec, rng, 1, 2); break;
      case Scenario::overlap2:
        if (t == 0)
          fixed_pair(rec);
        else
          detail::run_overlap_trial(field, rec, rng, 2, 3);
        break;
      case Scenario::counterexample: fixed_pair(rec); break;
      }
    } catch (const SizeError& e) {
      rec.skipped = true;
      rec.skip_reason = e.what();
      rec.verification.reset();
      rec.bounds.reset();
    }
    rep.records.push_back(std::move(rec));
  }

  rep.trials = rep.records.size();
  for (const auto& r : rep.records) {
    if (r.skipped) {
      ++rep.skipped;
      continue;
    }
    if (r.verification && r.verification->all_pass())
      ++rep.verification_pass;
    if (r.bounds) {
      rep.pd_bound_true += r.bounds->pd_bound_holds;
      rep.reg_bound_true += r.bounds->reg_bound_holds;
      rep.reg_bound_false += !r.bounds->reg_bound_holds;
      rep.intersection_true += r.bounds->intersection_is_product;
    }
  }
  return rep;
}

/// Golden data for the counterexample pair: singly graded Betti tables of
/// I, J and IJ from minimal resolutions, cross-checked by Koszul homology.
struct CounterexampleReport {
  FieldConfig field;
  BettiTable betti_i, betti_j, betti_ij; ///< ideal tables from minimal resolutions
  RegPd i, j, ij;
  bool koszul_agrees = false;
  bool reg_inequality_fails = false;
  VariableSet overlap;
  /// Comparison with the published resolutions; see counterexample_published().
  bool matches_published = false;
  std::vector<std::string> discrepancies;

  /// The regularity claim Reg(I)=1, Reg(J)=3, Reg(IJ)=5 > 1+3, with both
  /// Betti routes agreeing.
  bool ok() const {
    return koszul_agrees && reg_inequality_fails && i.reg == 1 && j.reg == 3 && ij.reg == 5;
  }
};

using GradedBetti = std::map<std::pair<int, int>, std::size_t>;

/// Published singly graded resolutions, (i, degree) -> count:
///   I:  0 -> R(-2) -> R^2(-1)
///   J:  0 -> R^3(-4) -> R^4(-3)
///   IJ: 0 -> R(-8) -> R^5(-6) + R^2(-7) -> R^10(-5) + R(-6) -> R^8(-4)
/// The IJ line is not a resolution of a rank-one module: its alternating rank
/// sum is 8 - 11 + 7 - 1 = 3. The computed tables carry R^3(-6) at i = 2.
inline GradedBetti counterexample_published(char which) {
  switch (which) {
  case 'I': return {{{0, 1}, 2}, {{1, 2}, 1}};
  case 'J': return {{{0, 3}, 4}, {{1, 4}, 3}};
  default:
    return {{{0, 4}, 8}, {{1, 5}, 10}, {{1, 6}, 1}, {{2, 6}, 5}, {{2, 7}, 2}, {{3, 8}, 1}};
  }
}

/// Human-readable differences between a computed and an expected table.
inline std::vector<std::string> graded_differences(const std::string& name,
                                                   const GradedBetti& computed,
                                                   const GradedBetti& expected) {
  std::vector<std::string> out;
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, v] : computed)
    keys.insert(k);
  for (const auto& [k, v] : expected)
    keys.insert(k);
  for (const auto& k : keys) {
    auto c = computed.contains(k) ? computed.at(k) : 0;
    auto e = expected.contains(k) ? expected.at(k) : 0;
    if (c != e)
      out.push_back(name + " beta_" + std::to_string(k.first) + " in degree " +
                    std::to_string(k.second) + ": computed " + std::to_string(c) +
                    ", published " + std::to_string(e));
  }
  return out;
}

template <CoefficientField Fd>
CounterexampleReport run_counterexample(const Fd& field, std::size_t max_gens = default_max_gens) {
  const auto I = counterexample_i();
  const auto J = counterexample_j();
  const auto IJ = ideal_product(I, J);
  CounterexampleReport r;
  r.field = config_of(field);
  r.betti_i = basis_table(resolve(field, I, ResolutionKind::ideal, max_gens));
  r.betti_j = basis_table(resolve(field, J, ResolutionKind::ideal, max_gens));
  r.betti_ij = basis_table(resolve(field, IJ, ResolutionKind::ideal, max_gens));
  r.i = reg_pd(r.betti_i);
  r.j = reg_pd(r.betti_j);
  r.ij = reg_pd(r.betti_ij);
  r.koszul_agrees = r.betti_i == upper_koszul_betti(field, I) &&
                    r.betti_j == upper_koszul_betti(field, J) &&
                    r.betti_ij == upper_koszul_betti(field, IJ);
  r.reg_inequality_fails = r.ij.reg > r.i.reg + r.j.reg;
  r.overlap = intersect(gens_set(I), gens_set(J));
  for (auto [name, table, key] : {std::tuple{"I", &r.betti_i, 'I'},
                                  std::tuple{"J", &r.betti_j, 'J'},
                                  std::tuple{"IJ", &r.betti_ij, 'X'}}) {
    auto d = graded_differences(name, table->graded(), counterexample_published(key));
    r.discrepancies.insert(r.discrepancies.end(), d.begin(), d.end());
  }
  r.matches_published = r.discrepancies.empty();
  return r;
}

} // namespace regprod

#endif // REGPROD_EXPERIMENTS_HPP
