#include "hecke/json_io.hpp"

namespace hecke {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [k, c] : p.coefficients()) j[std::to_string(k)] = c.to_string();
  return j;
}

Json to_json(const ExtendedWeylElement& w) {
  Json window = Json::array();
  for (auto v : w.w0().window()) window.push_back(v);
  return {{"k", w.k()}, {"window", window}};
}

ExtendedWeylElement weyl_element_from_json(const Json& j) {
  return {j.at("k").get<std::int64_t>(),
          AffinePermutation::from_window(j.at("window").get<std::vector<std::int64_t>>())};
}

Json to_json(const PlaceOperator& op) { return {{"perm", op.perm}, {"scale", to_json(op.scale)}}; }

Json to_json(const EigenReport& r) {
  return {{"operator", r.op},
          {"checked", r.checked},
          {"passed", r.passed},
          {"boundary_skipped", r.boundary_skipped},
          {"failures", r.failures}};
}

Json to_json(const PresentationReport& r) {
  Json rels = Json::array();
  for (const auto& rc : r.relations)
    rels.push_back({{"relation", rc.name},
                    {"identity", rc.description},
                    {"instances", rc.instances},
                    {"passed", rc.passed},
                    {"ok", rc.ok()},
                    {"failures", rc.failures}});
  return {{"e", r.e}, {"all_passed", r.all_passed()}, {"relations", rels}};
}

Json to_json(const GrowthSeries& g) {
  return {{"e", g.e},
          {"provenance", g.provenance == Provenance::BFS ? "BFS" : "ClosedForm"},
          {"counts", g.counts}};
}

Json to_json(const IntegralReport& r) {
  return {{"e", r.e},
          {"f", r.f},
          {"q0", to_json(r.q0)},
          {"chi_pi", to_json(r.chi_pi)},
          {"L", r.L},
          {"partial_sum", to_json(r.partial_sum)},
          {"closed_form", to_json(r.closed_form)},
          {"abs_error", to_json(r.abs_error)},
          {"tail_bound", to_json(r.tail_bound)},
          {"within_tail_bound", r.within_tail_bound()},
          {"terms", r.terms},
          {"per_term_ok", r.per_term_ok}};
}

Json to_json(const NonvanishingReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"x", to_json(s.x)}, {"value", to_json(s.value)}, {"positive", s.positive}});
  return {{"e", r.e}, {"all_positive", r.all_positive()}, {"samples", samples}};
}

Json to_json(const GelfandReport& r) {
  Json j = {{"group", r.group},
            {"representation", r.name},
            {"dim_fixed_V", r.dim_fixed_V},
            {"dim_fixed_Vdual", r.dim_fixed_Vdual},
            {"commutant_dim", r.commutant_dim},
            {"irreducible", r.irreducible},
            {"gelfand_multiplicity_ok", r.gelfand_multiplicity_ok}};
  j["pairing"] = r.pairing ? to_json(*r.pairing) : Json(nullptr);
  j["pairing_nonzero"] = r.pairing_nonzero();
  return j;
}

}  // namespace hecke
