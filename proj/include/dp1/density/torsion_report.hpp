#pragma once

#include "dp1/density/serialize.hpp"
#include "dp1/fiber/division_poly.hpp"
#include "dp1/fiber/fiber_curve.hpp"

#include <vector>

namespace dp1::density {

struct TorsionPointRecord {
  fiber::FiberPoint point;
  int order = 0;
};

struct FiberTorsion {
  surface::FiberId fiber;
  algebra::Rat k;
  std::vector<TorsionPointRecord> points;  // nontrivial rational torsion, sorted by (order, x, y)
};

struct TorsionReport {
  std::vector<fiber::TorsionLocus> loci;  // m = 2..mmax
  std::vector<FiberTorsion> fibers;
  json to_json() const;
};

/// All rational points of order dividing some m <= mmax on one fiber.
std::vector<TorsionPointRecord> rational_torsion(const fiber::FiberCurve& e, int mmax);

/// Torsion multisections T_m for m <= mmax (<= 12) and the rational torsion on
/// the fiber t = 0 followed by the next fibers of the certify search order,
/// `sample` smooth fibers in total.
TorsionReport torsion_report(const surface::Surface& s, int mmax, int sample = 10);

}  // namespace dp1::density
