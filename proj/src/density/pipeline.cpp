#include "dp1/density/pipeline.hpp"

#include "dp1/jacobian/q_polys.hpp"

namespace dp1::density {

using algebra::Rat;
using fiber::FiberPoint;
using multisection::Kind;

PipelineReport pipeline(const surface::Surface& s, const surface::WeightedPoint& seed, const PipelineOptions& opt) {
  if (!surface::validate(s).valid()) throw std::invalid_argument("pipeline: invalid surface");
  if (!surface::on_surface(s, seed)) throw std::invalid_argument("pipeline: seed is not on the surface");
  if (seed.w.is_zero() || seed.z.is_zero()) throw std::invalid_argument("pipeline: seed needs z*w != 0");
  const auto p = surface::normalize(seed);
  const auto fid = surface::fiber_param(p);
  const auto e = fiber::fiber_curve(s, fid);
  const FiberPoint fp = FiberPoint::affine(p.x, p.y);

  PipelineReport rep;
  FiberPoint r = FiberPoint::O();
  for (long m = 1; m <= opt.retry_cap; ++m) {
    r = fiber::add(r, fp);
    auto fail = [&](std::string why) { rep.failures.emplace_back(m, std::move(why)); };
    if (r.identity) {
      fail("multiple is the identity");
      continue;
    }
    if (r.y.is_zero()) {
      fail("y_R = 0");
      continue;
    }
    const surface::WeightedPoint base{r.x, r.y, fid.t, Rat(1)};
    if (!jacobian::degeneracy_check(s, base)) {
      fail("q(x_R) = 0");
      continue;
    }
    auto curve = multisection::classify(s, base);
    if (curve.kind == Kind::Degenerate) {
      fail("degenerate: " + curve.degenerate_reason);
      continue;
    }
    rep.multiple = m;
    rep.base = base;
    if (curve.kind == Kind::SectionOverK) {
      rep.case_number = 1;
      rep.section_points = surface::section_points(s, curve.section->section, opt.section_samples);
      rep.curve = std::move(curve);
      return rep;
    }
    if (curve.kind == Kind::GenusZero) {
      rep.case_number = 2;
      rep.curve = std::move(curve);
      return rep;
    }
    try {
      auto mdl = jacobian::weierstrass_model(curve);
      auto cert = jacobian::certify_D(mdl);
      if (!cert.nontorsion()) {
        fail("D is torsion");
        continue;
      }
      rep.generated = jacobian::generate_points(s, curve, mdl, opt.count);
      rep.case_number = 3;
      rep.curve = std::move(curve);
      rep.model = std::move(mdl);
      rep.d_certificate = std::move(cert);
      return rep;
    } catch (const jacobian::ModelFailure& ex) {
      fail(std::string("model failure: ") + ex.what());
    }
  }
  rep.multiple = 0;
  return rep;
}

json PipelineReport::to_json() const {
  json j;
  j["case"] = case_number;
  j["status"] = case_number == 1   ? "section over k"
                : case_number == 2 ? "genus 0 (point generation not implemented)"
                : case_number == 3 ? "genus 1 with non-torsion D"
                                   : "retry cap exhausted";
  json fails = json::array();
  for (const auto& [m, why] : failures) fails.push_back({{"m", m}, {"reason", why}});
  j["skipped_multiples"] = fails;
  if (!success()) return j;
  j["multiple"] = multiple;
  j["base_point"] = base.str();
  if (curve) j["curve"] = multisection_json(*curve);
  if (case_number == 1) {
    json pts = json::array();
    for (const auto& p : section_points) pts.push_back(p.str());
    j["section_points"] = pts;
  }
  if (model) j["model"] = model_json(*model);
  if (d_certificate) {
    j["D_order"] = d_certificate->nontorsion() ? "infinite" : std::to_string(d_certificate->evidence.order);
    j["D_lutz_nagell"] = d_certificate->evidence.lutz_nagell.verdict();
  }
  if (case_number == 3) {
    json pts = json::array();
    for (const auto& g : generated.points) pts.push_back({{"m", g.multiple}, {"point", g.point.str()}, {"t", g.fiber.str()}});
    j["generated"] = pts;
    j["distinct_fibers"] = generated.distinct_fibers;
    j["poles_skipped"] = generated.skipped;
  }
  return j;
}

}  // namespace dp1::density
