#pragma once

// JSON serialization of fields, witnesses, permutation reports, table rows
// and prooflab summaries. Keys are emitted in insertion order so that output
// bytes are stable.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nihopp/catalog.hpp"
#include "nihopp/exponents.hpp"
#include "nihopp/field.hpp"
#include "nihopp/permcheck.hpp"
#include "nihopp/prooflab.hpp"

namespace nihopp {

using Json = nlohmann::ordered_json;

inline Json to_json(const Field& F) {
  return Json{{"degree", F.degree()}, {"modulus_hex", to_hex(F.modulus())}, {"generator_hex", to_hex(F.generator())}};
}

inline Json to_json(const ConstructionWitness& w) {
  Json j;
  j["m"] = w.m;
  j["k"] = w.params ? Json(w.params->k) : Json(nullptr);
  j["class"] = w.params ? Json(w.params->residue()) : Json(nullptr);
  j["i"] = w.i;
  j["j"] = w.j;
  j["s"] = w.s;
  j["provenance"] = to_string(w.provenance);
  j["applicable"] = w.applicable;
  j["reason"] = w.reason;
  return j;
}

// `with_timing = false` writes ms = 0 so that reports are byte-identical across runs.
inline Json to_json(const PermutationReport& r, bool with_timing = true) {
  Json j;
  j["m"] = r.m;
  j["modulus_hex"] = to_hex(r.modulus);
  j["delta_hex"] = to_hex(r.delta);
  j["i"] = r.i ? Json(*r.i) : Json(nullptr);
  j["s"] = r.s;
  j["is_permutation"] = r.is_permutation;
  j["counterexample"] =
      r.counterexample ? Json::array({to_hex(r.counterexample->first), to_hex(r.counterexample->second)}) : Json(nullptr);
  j["evaluations"] = r.evaluations;
  j["ms"] = with_timing ? r.elapsed_ms : 0.0;
  return j;
}

inline Json summary_json(const VerificationSummary& s) {
  Json j;
  j["m"] = s.m;
  j["i"] = s.i;
  j["s"] = s.s;
  j["delta_policy"] = s.policy.label();
  j["deltas"] = s.reports.size();
  j["passed"] = s.passed();
  j["all_pass"] = s.all_pass();
  return j;
}

inline Json to_json(const TableRow& r) {
  Json j;
  j["m"] = r.m;
  j["family"] = r.family;
  j["condition"] = r.condition;
  j["k"] = r.k ? Json(*r.k) : Json(nullptr);
  j["source"] = r.source;
  j["delta_policy"] = r.delta_policy;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"class", e.residue ? Json(*e.residue) : Json(nullptr)},
                           {"i", e.i},
                           {"j", e.j},
                           {"s", e.s},
                           {"verified", e.verified}});
  }
  j["entries"] = entries;
  j["verified"] = r.verified();
  return j;
}

// One JSON object per line.
inline std::string emit_json_lines(const std::vector<TableRow>& rows) {
  std::string out;
  for (const auto& r : rows) out += to_json(r).dump() + "\n";
  return out;
}

inline Json to_json(const SuiteSummary& s) {
  Json j;
  j["suite"] = s.suite;
  j["m"] = s.m;
  j["k"] = s.k ? Json(*s.k) : Json(nullptr);
  j["cases"] = s.cases;
  j["violations"] = s.violations;
  j["first_violation"] = s.first_violation ? Json(*s.first_violation) : Json(nullptr);
  return j;
}

}  // namespace nihopp
