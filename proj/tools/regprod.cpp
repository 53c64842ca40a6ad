// regprod: multigraded resolutions, Betti numbers and regularity of monomial
// ideals and their products.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regprod/regprod.hpp"
#include "regprod/report_json.hpp"

namespace {

using namespace regprod;

constexpr int exit_ok = 0;
constexpr int exit_verdict = 1;
constexpr int exit_usage = 2;

struct Globals {
  std::uint32_t characteristic = 32003;
  bool rational = false;
  std::size_t max_gens = default_max_gens;
  std::string format = "table";

  FieldConfig field() const {
    return rational ? FieldConfig::rationals() : FieldConfig::prime_field(characteristic);
  }
  bool json() const { return format == "json"; }
};

ResolutionKind parse_kind(const std::string& s) {
  if (s == "quotient")
    return ResolutionKind::quotient;
  if (s == "ideal")
    return ResolutionKind::ideal;
  throw ConfigError("expected 'quotient' or 'ideal', got '" + s + "'");
}

void print_betti(std::ostream& out, const BettiTable& t) {
  out << "  i  total  multidegree  dim\n";
  for (const auto& [k, d] : t.entries()) {
    std::ostringstream md;
    md << '(';
    for (std::size_t v = 0; v < k.degree.size(); ++v)
      md << (v ? "," : "") << k.degree[v];
    md << ')';
    out << "  " << k.index << "  " << k.total << "  " << md.str() << "  " << d << '\n';
  }
}

int cmd_resolution(const Globals& g, const std::string& text, const std::string& as, bool betti) {
  const auto I = parse_ideal(text);
  const auto kind = parse_kind(as);
  return visit_field(g.field(), [&](const auto& field) {
    auto res = resolve(field, I, kind, g.max_gens);
    auto table = basis_table(res);
    if (table.empty())
      throw HypothesisError("the module is zero; its regularity is undefined");
    auto rp = reg_pd(table);
    if (g.json()) {
      ordered_json j;
      j["ideal"] = to_string(I);
      j["as"] = to_string(kind);
      j["field"] = g.field().name();
      j["reg"] = rp.reg;
      j["pd"] = rp.pd;
      if (betti)
        j["betti"] = to_json(table);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "field: " << g.field().name() << '\n'
                << "module: " << (kind == ResolutionKind::quotient ? "S/(" : "(")
                << to_string(I) << ")\n"
                << "reg: " << rp.reg << '\n'
                << "pd: " << rp.pd << '\n'
                << "graded betti: " << graded_summary(table) << '\n';
      if (betti)
        print_betti(std::cout, table);
    }
    return exit_ok;
  });
}

int cmd_arith(const Globals& g, const std::string& op, const std::vector<std::string>& rest) {
  std::string joined;
  for (const auto& r : rest)
    joined += r + ' ';
  auto semi = joined.find(';');
  if (semi == std::string::npos)
    throw ConfigError("arith needs two ideals separated by ';'");
  auto ta = joined.substr(0, semi), tb = joined.substr(semi + 1);
  const auto n = std::max(max_variable_index(ta), max_variable_index(tb));
  const auto A = parse_ideal(ta, n), B = parse_ideal(tb, n);
  MonomialIdeal result;
  if (op == "sum")
    result = ideal_sum(A, B);
  else if (op == "product")
    result = ideal_product(A, B);
  else if (op == "intersect")
    result = ideal_intersection(A, B);
  else
    throw ConfigError("unknown arith operation '" + op + "'");
  if (g.json()) {
    ordered_json j{{"op", op}, {"a", to_string(A)}, {"b", to_string(B)},
                   {"result", to_string(result)}, {"generators", result.size()}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_string(result) << '\n';
  }
  return exit_ok;
}

int cmd_star(const Globals& g, const std::string& i_text, const std::string& m_text) {
  auto colon = m_text.find(':');
  if (colon == std::string::npos)
    throw ConfigError("--m expects <quotient|ideal>:<ideal>");
  const auto kind = parse_kind(m_text.substr(0, colon));
  const auto j_text = m_text.substr(colon + 1);
  const auto n = std::max(max_variable_index(i_text), max_variable_index(j_text));
  const auto I = parse_ideal(i_text, n);
  const ModuleSpec M{kind, parse_ideal(j_text, n)};
  return visit_field(g.field(), [&](const auto& field) {
    auto product = resolve_product(field, I, M, g.max_gens);
    auto bounds = check_bounds(field, I, M);
    const auto& v = product.report;
    bool ok = v.all_pass() && bounds.pd_bound_holds && bounds.reg_bound_holds;
    if (g.json()) {
      ordered_json j{{"verification", to_json(v)}, {"bounds", to_json(bounds)}, {"ok", ok}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "field: " << v.field.name() << '\n'
                << "I: " << to_string(I) << '\n'
                << "M: " << to_string(M) << '\n'
                << "star complex ranks:";
      for (auto r : v.ranks)
        std::cout << ' ' << r;
      std::cout << '\n'
                << "d^2 = 0 and homogeneous: " << (v.valid ? "yes" : "NO " + v.validation_message)
                << '\n'
                << "acyclic (" << v.lattice_size << " lattice degrees): "
                << (v.acyclic ? "yes" : "NO") << '\n';
      if (v.acyclicity_witness)
        std::cout << "  witness: H_" << v.acyclicity_witness->index << " in degree "
                  << to_string(v.acyclicity_witness->degree) << " has dim "
                  << v.acyclicity_witness->dim << '\n';
      std::cout << "H0 Hilbert agreement with M/IM (" << v.h0_degrees_checked
                << " degrees): " << (v.h0_agrees ? "yes" : "NO") << '\n'
                << "pd(M/IM) = " << bounds.pd_quotient << " <= pd(M) + pd(I) + 1 = "
                << bounds.pd_module << " + " << bounds.pd_ideal << " + 1: "
                << (bounds.pd_bound_holds ? "TRUE" : "FALSE") << '\n'
                << "Reg(IM) = " << bounds.reg_product << " <= Reg(I) + Reg(M) = "
                << bounds.reg_ideal << " + " << bounds.reg_module << ": "
                << (bounds.reg_bound_holds ? "TRUE" : "FALSE") << '\n';
    }
    return ok ? exit_ok : exit_verdict;
  });
}

int cmd_verify(const Globals& g, const std::string& name, std::size_t trials, std::uint64_t seed) {
  auto scenario = parse_scenario(name);
  if (!scenario || *scenario == Scenario::counterexample)
    throw ConfigError("unknown scenario '" + name + "' (disjoint, overlap1, overlap2)");
  return visit_field(g.field(), [&](const auto& field) {
    auto rep = run_scenario(field, *scenario, trials, seed, g.max_gens);
    if (g.json()) {
      std::cout << to_json(rep).dump(2) << '\n';
    } else {
      const auto counted = rep.trials - rep.skipped;
      std::cout << "scenario: " << rep.scenario << '\n'
                << "field: " << rep.field.name() << '\n'
                << "seed: " << rep.seed << '\n'
                << "trials: " << rep.trials << " (skipped " << rep.skipped << ")\n";
      if (*scenario == Scenario::disjoint)
        std::cout << "star complex certified: " << rep.verification_pass << "/" << counted << '\n'
                  << "pd bound TRUE: " << rep.pd_bound_true << "/" << counted << '\n'
                  << "IJ = I cap J: " << rep.intersection_true << "/" << counted << '\n';
      std::cout << "reg bound TRUE: " << rep.reg_bound_true << "/" << counted << '\n'
                << "reg bound FALSE: " << rep.reg_bound_false << '\n';
      for (const auto& r : rep.records) {
        bool show = *scenario == Scenario::overlap2 ? (r.bounds && !r.bounds->reg_bound_holds)
                                                    : !r.passed();
        if (!show)
          continue;
        std::cout << "  trial " << r.index << ": I = (" << to_string(r.i_ideal)
                  << "), M = " << to_string(r.module);
        if (r.bounds)
          std::cout << ", Reg(IM) = " << r.bounds->reg_product << ", Reg(I) + Reg(M) = "
                    << r.bounds->reg_ideal + r.bounds->reg_module;
        std::cout << '\n';
      }
      std::cout << "result: " << (rep.ok() ? "ok" : "FAILED") << '\n';
    }
    return rep.ok() ? exit_ok : exit_verdict;
  });
}

int cmd_counterexample(const Globals& g) {
  return visit_field(g.field(), [&](const auto& field) {
    auto r = run_counterexample(field, g.max_gens);
    if (g.json()) {
      std::cout << to_json(r).dump(2) << '\n';
    } else {
      std::cout << "field: " << r.field.name() << '\n'
                << "I = (" << to_string(counterexample_i()) << ")\n"
                << "J = (" << to_string(counterexample_j()) << ")\n"
                << "Gens(I) cap Gens(J) = " << to_string(r.overlap) << '\n'
                << "I:  " << graded_summary(r.betti_i) << "   Reg = " << r.i.reg << '\n'
                << "J:  " << graded_summary(r.betti_j) << "   Reg = " << r.j.reg << '\n'
                << "IJ: " << graded_summary(r.betti_ij) << "   Reg = " << r.ij.reg << '\n'
                << "Reg(IJ) > Reg(I) + Reg(J): " << (r.reg_inequality_fails ? "yes" : "no")
                << '\n'
                << "Koszul homology agrees: " << (r.koszul_agrees ? "yes" : "NO") << '\n';
      for (const auto& d : r.discrepancies)
        std::cout << "note: " << d << '\n';
      std::cout << "result: " << (r.ok() ? "ok" : "FAILED") << '\n';
    }
    return r.ok() ? exit_ok : exit_verdict;
  });
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multigraded resolutions, Betti numbers and regularity of monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--char", g.characteristic, "prime characteristic of the coefficient field")
      ->capture_default_str();
  std::string field_name;
  app.add_option("--field", field_name, "coefficient field: 'rational' or 'prime'")
      ->check(CLI::IsMember({"rational", "prime"}));
  app.add_option("--max-gens", g.max_gens, "Taylor complex generator cap")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::string ideal_text, as = "ideal";
  auto* reg = app.add_subcommand("reg", "regularity and projective dimension");
  reg->add_option("ideal", ideal_text, "monomial ideal, e.g. 'x1^2*x2, x3'")->required();
  reg->add_option("--as", as, "resolve S/I (quotient) or I (ideal)")->capture_default_str();

  auto* betti = app.add_subcommand("betti", "multigraded Betti table");
  betti->add_option("ideal", ideal_text, "monomial ideal")->required();
  betti->add_option("--as", as, "resolve S/I (quotient) or I (ideal)")->capture_default_str();

  std::string op;
  std::vector<std::string> operands;
  auto* arith = app.add_subcommand("arith", "sum, product or intersection of two ideals");
  arith->add_option("op", op, "sum | product | intersect")->required();
  arith->add_option("operands", operands, "<idealA> ; <idealB>")->required();

  std::string i_text, m_text;
  auto* star = app.add_subcommand("star", "build and certify the star-product resolution of M/IM");
  star->add_option("--i", i_text, "monomial ideal I")->required();
  star->add_option("--m", m_text, "M as quotient:<J> (S/J) or ideal:<J>")->required();

  std::string scenario;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "run a seeded experiment scenario");
  verify->add_option("scenario", scenario, "disjoint | overlap1 | overlap2")->required();
  verify->add_option("--trials", trials, "number of trials")->capture_default_str();
  verify->add_option("--seed", seed, "base seed")->capture_default_str();

  auto* counter = app.add_subcommand("counterexample", "reproduce the regularity counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }
  if (field_name == "rational")
    g.rational = true;

  try {
    if (reg->parsed())
      return cmd_resolution(g, ideal_text, as, false);
    if (betti->parsed())
      return cmd_resolution(g, ideal_text, as, true);
    if (arith->parsed())
      return cmd_arith(g, op, operands);
    if (star->parsed())
      return cmd_star(g, i_text, m_text);
    if (verify->parsed())
      return cmd_verify(g, scenario, trials, seed);
    if (counter->parsed())
      return cmd_counterexample(g);
  } catch (const regprod::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
