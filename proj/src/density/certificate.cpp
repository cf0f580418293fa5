#include "dp1/density/certificate.hpp"

#include "dp1/fiber/point_search.hpp"

#include <chrono>
#include <ctime>
#include <numeric>

namespace dp1::density {

using algebra::Rat;
using fiber::FiberPoint;
using surface::WeightedPoint;

namespace {

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json evidence_json(const fiber::TorsionEvidence& ev) {
  json mult = json::array();
  for (const auto& p : ev.multiples) mult.push_back(p.str());
  const auto& ln = ev.lutz_nagell;
  return {{"minimal_point", ln.minimal_point.str()},
          {"multiples", mult},
          {"lutz_nagell",
           {{"integral", ln.integral}, {"y_zero", ln.y_zero}, {"y2_divides_disc", ln.y2_divides_disc},
            {"verdict", ln.verdict()}}}};
}

json checks_json(const HypothesisChecks& c) {
  return {{"surface_valid", c.surface_valid},
          {"on_surface", c.on_surface},
          {"zw_nonzero", c.zw_nonzero},
          {"smooth_fiber", c.smooth_fiber},
          {"non_torsion", c.non_torsion}};
}

// Evaluates all hypotheses for a given point; fills reasons for each failure.
CertifyOutcome check_point(const surface::Surface& s, const WeightedPoint& p0, const CertifyOptions& opt) {
  CertifyOutcome out;
  DensityCertificate cert;
  cert.surface = s;
  cert.checks.surface_valid = surface::validate(s).valid();
  if (p0.is_zero()) {
    out.reasons.emplace_back("zero point");
    return out;
  }
  cert.checks.on_surface = surface::on_surface(s, p0);
  if (!cert.checks.on_surface) {
    out.reasons.emplace_back("point not on surface");
    return out;
  }
  if (p0.z.is_zero()) out.reasons.emplace_back("zero z-coordinate");
  if (p0.w.is_zero()) out.reasons.emplace_back("zero w-coordinate");
  cert.checks.zw_nonzero = !p0.z.is_zero() && !p0.w.is_zero();
  if (p0.z.is_zero() && p0.w.is_zero()) return out;  // base point: no fiber
  cert.witness = surface::normalize(p0);
  const auto t = surface::fiber_param(cert.witness);
  const Rat k = surface::fiber_constant(s, t);
  cert.checks.smooth_fiber = !k.is_zero();
  if (!cert.checks.smooth_fiber) {
    out.reasons.emplace_back("singular fiber");
    return out;
  }
  cert.fiber = fiber::fiber_curve(s, t);
  // affine coordinates on the fiber: chart w = 1, or z = 1 at infinity
  const FiberPoint fp = FiberPoint::affine(cert.witness.x, cert.witness.y);
  cert.evidence = fiber::is_nontorsion(cert.fiber, fp);
  cert.checks.non_torsion = cert.evidence.nontorsion;
  if (!cert.checks.non_torsion) out.reasons.push_back("torsion (order " + std::to_string(cert.evidence.order) + ")");
  if (!cert.checks.surface_valid) out.reasons.emplace_back("invalid surface");
  if (cert.checks.all()) {
    if (opt.timestamp) cert.created = now_iso8601();
    out.certificate = std::move(cert);
  }
  return out;
}

}  // namespace

json DensityCertificate::to_json() const {
  json j{{"schema", kSchema}, {"toolchain", toolchain()}};
  if (created) j["created"] = *created;
  j["surface"] = surface_json(surface);
  j["witness"] = witness.str();
  j["fiber"] = {{"t", fiber.t.str()},
                {"k", fiber.k.str()},
                {"minimal_k", fiber.minimal_k.get_str()},
                {"scale", fiber.scale.str()}};
  j["checks"] = checks_json(checks);
  j["evidence"] = evidence_json(evidence);
  j["verdict"] = kVerdict;
  if (!attachments.empty()) j["attachments"] = attachments;
  return j;
}

json CertifyOutcome::to_json() const {
  if (certificate) return certificate->to_json();
  return {{"schema", kSchema}, {"status", "no certificate"}, {"reasons", reasons}, {"fibers_searched", fibers_searched}};
}

std::vector<Rat> fiber_search_order(long height) {
  std::vector<Rat> out;
  for (long h = 1; h <= height; ++h) {
    // parameters u/v with max(|u|, v) == h
    for (long au = 1; au <= h; ++au) {
      for (long v = 1; v <= h; ++v) {
        if (std::max(au, v) != h || std::gcd(au, v) != 1) continue;
        out.emplace_back(algebra::Int(au), algebra::Int(v));
        out.emplace_back(algebra::Int(-au), algebra::Int(v));
      }
    }
  }
  return out;
}

CertifyOutcome certify(const surface::Surface& s, const std::optional<WeightedPoint>& p, const CertifyOptions& opt) {
  const auto valid = surface::validate(s);
  if (!valid.valid()) {
    CertifyOutcome out;
    out.reasons.emplace_back("invalid surface");
    for (const auto& v : valid.violations()) out.reasons.push_back(v);
    return out;
  }
  if (p) return check_point(s, *p, opt);
  CertifyOutcome out;
  for (const Rat& t : fiber_search_order(opt.fiber_height)) {
    ++out.fibers_searched;
    if (s.g_at(t).is_zero()) continue;
    const auto e = fiber::fiber_curve(s, surface::FiberId::at(t));
    for (const auto& q : fiber::search_points(e, opt.point_height)) {
      if (fiber::is_nontorsion(e, q).nontorsion) {
        auto found = check_point(s, WeightedPoint{q.x, q.y, t, Rat(1)}, opt);
        found.fibers_searched = out.fibers_searched;
        return found;
      }
    }
  }
  out.reasons.push_back("no witness found up to bound (fiber height " + std::to_string(opt.fiber_height) +
                        ", point height " + std::to_string(opt.point_height) + "); this does not prove non-density");
  return out;
}

VerifyReport verify_certificate(const json& cert) {
  VerifyReport rep;
  auto miss = [&](std::string m) { rep.mismatches.push_back(std::move(m)); };
  try {
    if (cert.value("schema", "") != kSchema) miss("schema mismatch");
    const auto s = surface_from_json(cert.at("surface"));
    const auto w = WeightedPoint::parse(cert.at("witness").get<std::string>());
    const auto again = check_point(s, w, {});
    if (!surface::on_surface(s, w)) {
      miss("membership mismatch");
    } else if (!again.certificate) {
      miss("hypothesis mismatch: " + (again.reasons.empty() ? std::string("unknown") : again.reasons.front()));
    } else {
      const json fresh = again.certificate->to_json();
      if (fresh.at("witness") != cert.at("witness")) miss("witness normalization mismatch");
      if (fresh.at("fiber") != cert.at("fiber")) miss("fiber mismatch");
      if (fresh.at("checks") != cert.at("checks")) miss("checks mismatch");
      const json& ev = cert.at("evidence");
      if (fresh["evidence"].at("minimal_point") != ev.at("minimal_point")) miss("minimal model mismatch");
      if (fresh["evidence"].at("multiples") != ev.at("multiples")) miss("group-law mismatch");
      if (fresh["evidence"].at("lutz_nagell") != ev.at("lutz_nagell")) miss("lutz-nagell mismatch");
      if (cert.at("verdict") != kVerdict) miss("verdict mismatch");
    }
  } catch (const std::exception& e) {
    miss(std::string("malformed certificate: ") + e.what());
  }
  rep.ok = rep.mismatches.empty();
  return rep;
}

}  // namespace dp1::density
