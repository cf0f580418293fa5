#pragma once

#include "dp1/fiber/fiber_curve.hpp"

#include <vector>

namespace dp1::fiber {

/// All affine points with x = u/v^2 on the minimal model, gcd(u, v) = 1,
/// |u| <= bound, 1 <= v <= bound, returned on the original curve ordered by
/// (v, u, y) of the minimal-model coordinates.
std::vector<FiberPoint> search_points(const FiberCurve& e, long bound);

}  // namespace dp1::fiber
