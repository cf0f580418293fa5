#include "dp1/density/serialize.hpp"

#ifndef DP1_VERSION
#define DP1_VERSION "0.0.0"
#endif

namespace dp1::density {

using algebra::Rat;

json surface_json(const surface::Surface& s) { return {{"a", s.a.str()}, {"b", s.b.str()}, {"c", s.c.str()}}; }

surface::Surface surface_from_json(const json& j) {
  return {Rat::parse(j.at("a").get<std::string>()), Rat::parse(j.at("b").get<std::string>()),
          Rat::parse(j.at("c").get<std::string>())};
}

json monomials_json(const algebra::BiPoly<Rat>& p) {
  json out = json::array();
  for (const auto& [e, c] : p.sorted_terms()) out.push_back(json::array({c.str(), e.first, e.second}));
  return out;
}

namespace {

json rational_function_json(const jacobian::RationalFunction& f) {
  return {{"numerator", monomials_json(f.num)}, {"denominator", monomials_json(f.den)}};
}

}  // namespace

json multisection_json(const multisection::MultisectionCurve& m) {
  json j{{"base_point", m.r.str()},
         {"G", m.g.str()},
         {"H", monomials_json(m.h)},
         {"classification", multisection::kind_name(m.kind)},
         {"Q", m.q.str()}};
  if (m.section) {
    j["section"] = {{"p", m.section->section.p.str("T")}, {"q", m.section->section.q.str("T")},
                    {"residual", monomials_json(m.section->residual)}};
  }
  if (m.genus_zero) {
    j["genus_zero_check"] = {{"y0", m.genus_zero->y0.str()},
                             {"fixed_point_on_curve", m.genus_zero->fixed_point_on_curve},
                             {"fixed_point_singular", m.genus_zero->fixed_point_singular},
                             {"singular_at_infinity", m.genus_zero->singular_at_infinity}};
  }
  if (!m.degenerate_reason.empty()) j["degenerate_reason"] = m.degenerate_reason;
  return j;
}

json model_json(const jacobian::GenusOneModel& mdl) {
  const auto& v = mdl.validation;
  return {{"delta", mdl.delta.str()},
          {"omega", {{"xi", rational_function_json(mdl.xi)}, {"gamma", rational_function_json(mdl.gamma)}}},
          {"omega_inverse", {{"X", rational_function_json(mdl.inv_x)}, {"T", rational_function_json(mdl.inv_t)}}},
          {"D", mdl.d.str()},
          {"validation",
           {{"riemann_roch_dims", v.riemann_roch_dims},
            {"j_invariant_zero", v.j_invariant_zero},
            {"model_identity", v.model_identity},
            {"xi_valuation", v.xi_valuation},
            {"gamma_valuation", v.gamma_valuation},
            {"normalization_complete", v.normalization_complete},
            {"d_on_curve", v.d_on_curve},
            {"round_trips", v.round_trips}}}};
}

std::string toolchain() { return std::string("dp1 ") + DP1_VERSION; }

}  // namespace dp1::density
