#pragma once

#include "dp1/algebra/poly.hpp"
#include "dp1/surface/surface.hpp"

namespace dp1::jacobian {

using algebra::Poly;
using algebra::Rat;

/// The four factors q1..q4 in x~ whose product must not vanish at x_R.
struct QPolys {
  Poly<Rat> q1, q2, q3, q4;
  Poly<Rat> product() const { return q1 * q2 * q3 * q4; }
};

/// Requires z0 != 0.
QPolys q_polys(const surface::Surface& s, const Rat& z0);

/// True iff q1 q2 q3 q4 does not vanish at x_R (R normalized, fiber z_R).
bool degeneracy_check(const surface::Surface& s, const surface::WeightedPoint& r);

}  // namespace dp1::jacobian
