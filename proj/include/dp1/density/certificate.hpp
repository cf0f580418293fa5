#pragma once

#include "dp1/density/serialize.hpp"
#include "dp1/fiber/fiber_curve.hpp"
#include "dp1/surface/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dp1::density {

inline constexpr const char* kSchema = "dp1cert/1";
inline constexpr const char* kVerdict = "Zariski dense: non-torsion point with z*w != 0 on a smooth fiber";

struct HypothesisChecks {
  bool surface_valid = false;
  bool on_surface = false;
  bool zw_nonzero = false;
  bool smooth_fiber = false;
  bool non_torsion = false;
  bool all() const { return surface_valid && on_surface && zw_nonzero && smooth_fiber && non_torsion; }
};

struct DensityCertificate {
  surface::Surface surface;
  surface::WeightedPoint witness;  // normalized
  fiber::FiberCurve fiber;
  HypothesisChecks checks;
  fiber::TorsionEvidence evidence;
  std::optional<std::string> created;  // ISO-8601 timestamp, omitted for reproducible output
  json attachments = json::object();

  json to_json() const;
};

struct CertifyOptions {
  long fiber_height = 10;   // fibers t = u/v with |u|, v <= fiber_height
  long point_height = 100;  // search_points bound on each fiber
  bool timestamp = false;
};

struct CertifyOutcome {
  std::optional<DensityCertificate> certificate;
  std::vector<std::string> reasons;  // why no certificate was produced
  long fibers_searched = 0;
  json to_json() const;
};

/// Checks a given point, or searches fibers in order of height when none is given.
CertifyOutcome certify(const surface::Surface& s, const std::optional<surface::WeightedPoint>& p,
                       const CertifyOptions& opt = {});

/// Fiber parameters u/v, u != 0, v >= 1, gcd 1, ordered by max(|u|, v), then |u|, then v, positive first.
std::vector<algebra::Rat> fiber_search_order(long height);

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> mismatches;
};

VerifyReport verify_certificate(const json& cert);

}  // namespace dp1::density
