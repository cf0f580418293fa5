#pragma once

#include "dp1/fiber/group_law.hpp"
#include "dp1/surface/surface.hpp"

#include <random>
#include <utility>

namespace dp1::testing {

inline algebra::Rat random_rat(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return algebra::Rat(algebra::Int(num(rng)), algebra::Int(den(rng)));
}

/// Random surface through a random point (x : y : z : 1) with y z != 0: pick a, b
/// and solve for c. Rejects invalid surfaces and torsion R (x = 0 gives 3-torsion,
/// where the node at R degenerates to a cusp).
inline std::pair<surface::Surface, surface::WeightedPoint> random_instance(std::mt19937_64& rng) {
  using algebra::Rat;
  for (;;) {
    const surface::WeightedPoint r{random_rat(rng, 6), random_rat(rng, 6), random_rat(rng, 4), Rat(1)};
    if (r.y.is_zero() || r.z.is_zero()) continue;
    const Rat a = random_rat(rng, 9), b = random_rat(rng, 9);
    const surface::Surface s{a, b, r.y * r.y - r.x * r.x * r.x - a * pow(r.z, 6) - b * pow(r.z, 3)};
    if (!surface::validate(s).valid()) continue;
    if (fiber::mul(6, fiber::CurvePoint<Rat>::affine(r.x, r.y)).identity) continue;
    return {s, r};
  }
}

}  // namespace dp1::testing
