#ifndef REGPROD_REPORT_JSON_HPP
#define REGPROD_REPORT_JSON_HPP

#include <json.hpp>

#include "regprod/betti.hpp"
#include "regprod/experiments.hpp"
#include "regprod/star_product.hpp"

namespace regprod {

using nlohmann::ordered_json;

inline ordered_json to_json(const Monomial& m) {
  ordered_json a = ordered_json::array();
  for (auto e : m.exponents())
    a.push_back(e);
  return a;
}

/// {"field": ..., "entries": [{"i", "multidegree", "total", "dim"}]}, sorted
/// by (i, total, multidegree).
inline ordered_json to_json(const BettiTable& t) {
  ordered_json entries = ordered_json::array();
  for (const auto& [k, d] : t.entries())
    entries.push_back({{"i", k.index}, {"multidegree", to_json(k.degree)}, {"total", k.total},
                       {"dim", d}});
  return {{"field", t.field().name()}, {"entries", std::move(entries)}};
}

inline ordered_json to_json(const VariableSet& v) {
  ordered_json a = ordered_json::array();
  for (auto i : v.members)
    a.push_back("x" + std::to_string(i + 1));
  return a;
}

inline ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["i"] = to_string(r.i_ideal);
  j["m"] = to_string(r.module);
  j["field"] = r.field.name();
  j["gens_overlap"] = to_json(r.overlap);
  j["ranks"] = r.ranks;
  j["valid"] = r.valid;
  if (!r.validation_message.empty())
    j["validation_error"] = r.validation_message;
  j["acyclic"] = r.acyclic;
  j["lattice_size"] = r.lattice_size;
  if (r.acyclicity_witness)
    j["acyclicity_witness"] = {{"i", r.acyclicity_witness->index},
                               {"b", to_json(r.acyclicity_witness->degree)},
                               {"dim", r.acyclicity_witness->dim}};
  j["h0_hilbert_agrees"] = r.h0_agrees;
  j["h0_degrees_checked"] = r.h0_degrees_checked;
  if (r.h0_witness)
    j["h0_witness"] = {{"b", to_json(*r.h0_witness)},
                       {"expected", r.h0_expected},
                       {"actual", r.h0_actual}};
  j["all_pass"] = r.all_pass();
  return j;
}

inline ordered_json to_json(const BoundsReport& r) {
  ordered_json j;
  j["i"] = to_string(r.i_ideal);
  j["m"] = to_string(r.module);
  j["field"] = r.field.name();
  j["gens_overlap"] = to_json(r.overlap);
  j["pd_quotient"] = r.pd_quotient;
  j["pd_m"] = r.pd_module;
  j["pd_i"] = r.pd_ideal;
  j["reg_im"] = r.reg_product;
  j["reg_i"] = r.reg_ideal;
  j["reg_m"] = r.reg_module;
  j["pd_bound_holds"] = r.pd_bound_holds;
  j["reg_bound_holds"] = r.reg_bound_holds;
  j["intersection_is_product"] = r.intersection_is_product;
  return j;
}

inline ordered_json to_json(const TrialRecord& r) {
  ordered_json j;
  j["trial"] = r.index;
  j["seed"] = r.seed;
  if (r.skipped) {
    j["skipped"] = true;
    j["reason"] = r.skip_reason;
    return j;
  }
  j["i"] = to_string(r.i_ideal);
  j["m"] = to_string(r.module);
  if (r.verification)
    j["verification"] = to_json(*r.verification);
  if (r.bounds)
    j["bounds"] = to_json(*r.bounds);
  j["passed"] = r.passed();
  return j;
}

inline ordered_json to_json(const ExperimentReport& r) {
  ordered_json j;
  j["scenario"] = r.scenario;
  j["field"] = r.field.name();
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["skipped"] = r.skipped;
  j["verification_pass"] = r.verification_pass;
  j["pd_bound_true"] = r.pd_bound_true;
  j["reg_bound_true"] = r.reg_bound_true;
  j["reg_bound_false"] = r.reg_bound_false;
  j["intersection_is_product"] = r.intersection_true;
  j["ok"] = r.ok();
  ordered_json recs = ordered_json::array();
  for (const auto& t : r.records)
    recs.push_back(to_json(t));
  j["records"] = std::move(recs);
  return j;
}

inline ordered_json to_json(const CounterexampleReport& r) {
  ordered_json j;
  j["field"] = r.field.name();
  j["i"] = to_string(counterexample_i());
  j["j"] = to_string(counterexample_j());
  j["gens_overlap"] = to_json(r.overlap);
  j["reg_i"] = r.i.reg;
  j["reg_j"] = r.j.reg;
  j["reg_ij"] = r.ij.reg;
  j["pd_i"] = r.i.pd;
  j["pd_j"] = r.j.pd;
  j["pd_ij"] = r.ij.pd;
  j["betti_i"] = to_json(r.betti_i);
  j["betti_j"] = to_json(r.betti_j);
  j["betti_ij"] = to_json(r.betti_ij);
  j["matches_published"] = r.matches_published;
  j["discrepancies"] = r.discrepancies;
  j["koszul_agrees"] = r.koszul_agrees;
  j["reg_inequality_fails"] = r.reg_inequality_fails;
  j["ok"] = r.ok();
  return j;
}

} // namespace regprod

#endif // REGPROD_REPORT_JSON_HPP
