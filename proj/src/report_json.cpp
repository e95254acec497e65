#include "irbar/report_json.hpp"

namespace irbar {

Json to_json(const Interval& x) {
  return Json{{"u", x.u()}, {"v", x.v()}, {"text", format_interval(x)}};
}

Json to_json(const IMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.order(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.order(); ++j) row.push_back(format_interval(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const InverseResult& r) {
  Json j{{"scale", to_json(r.inverse.scale)},
         {"adjugate", to_json(r.inverse.body)},
         {"near_singular", r.near_singular},
         {"residual", r.residual}};
  if (r.residual_warning) j["residual_warning"] = *r.residual_warning;
  return j;
}

Json to_json(const EigenvalueRecord& r) {
  Json j{{"value", to_json(r.value)},
         {"case", sign_case_name(r.sign_case)},
         {"convention", convention_name(r.convention)},
         {"residual", r.residual},
         {"is_central", r.is_central}};
  j["matched_center"] = r.matched_center ? Json(*r.matched_center) : Json(nullptr);
  return j;
}

namespace {
Json vector_json(const std::vector<Interval>& v) {
  Json a = Json::array();
  for (const Interval& x : v) a.push_back(to_json(x));
  return a;
}
}  // namespace

Json to_json(const EigenvectorRecord& r) {
  Json combo = Json::array();
  for (const ComponentCase& c : r.case_combo) combo.push_back(component_case_name(c));
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(vector_json(g));
  return Json{{"components", vector_json(r.components)},
              {"case_combo", combo},
              {"residual", r.residual},
              {"free_parameters", r.free_parameters},
              {"generators", gens}};
}

Json to_json(const DiagonalizationRecord& r) {
  return Json{{"P", to_json(r.p)},
              {"D", to_json(r.d)},
              {"residual_AP_PD", r.residual_ap_pd},
              {"D_via_inverse", to_json(r.d_via_inverse)},
              {"inverse_path_deviation", r.inverse_path_deviation}};
}

Json to_json(const ExpReport& r) {
  Json j;
  j["diag_path"] = r.diag_path ? to_json(*r.diag_path) : Json(nullptr);
  if (!r.diag_error.empty()) j["diag_error"] = r.diag_error;
  j["series_path"] = to_json(r.series_path);
  j["terms_used"] = r.terms_used;
  j["deviation"] = r.deviation ? Json(*r.deviation) : Json(nullptr);
  return j;
}

Json to_json(const ProbeReport& r) {
  Json ces = Json::array();
  for (const Counterexample& c : r.counterexamples)
    ces.push_back(Json{{"index", c.index},
                       {"inputs", vector_json(c.inputs)},
                       {"lhs", to_json(c.lhs)},
                       {"rhs", to_json(c.rhs)},
                       {"deviation", c.deviation}});
  Json j{{"law", r.law},
         {"seed", r.seed},
         {"samples", r.samples},
         {"expectation", expectation_name(r.expectation)},
         {"law_holds", r.law_holds()},
         {"ok", r.ok()},
         {"violations", r.violations},
         {"max_deviation", r.max_deviation},
         {"mean_deviation", r.mean_deviation},
         {"counterexamples", ces}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const Finding& f) {
  return Json{{"id", f.id}, {"title", f.title}, {"confirmed", f.confirmed}, {"detail", f.detail}};
}

}  // namespace irbar
