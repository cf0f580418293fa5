#pragma once

#include "dp1/algebra/bipoly.hpp"
#include "dp1/algebra/poly.hpp"
#include "dp1/fiber/fiber_curve.hpp"
#include "dp1/surface/surface.hpp"

#include <string>

namespace dp1::fiber {

/// psi_m = 2y * f (m even) or f (m odd), with f in Q[x, k] after y^2 = x^3 + k.
/// Polynomials here are in (x, k); psi_3 = 3x^4 + 12kx.
algebra::BiPoly<Rat> division_cofactor_generic(int m);

struct DivisionPoly {
  int m = 0;
  bool y_factor = false;   // psi_m = 2y * f
  algebra::Poly<Rat> f;    // in x

  std::string str() const;
};

/// 1 <= m <= 12.
DivisionPoly division_poly(const FiberCurve& e, int m);

/// Torsion multisection T_m in the (x, t) plane.
struct TorsionLocus {
  int m = 0;
  bool y_factor = false;                    // even m: y = 0 is a separate component
  algebra::BiPoly<Rat> cofactor;            // f_m(x, g(t))
  algebra::BiPoly<Rat> two_torsion;         // x^3 + g(t), set only for even m
  /// x-coordinates of m-torsion: cofactor, times two_torsion for even m.
  algebra::BiPoly<Rat> locus() const;
};

/// 2 <= m <= 12.
TorsionLocus torsion_locus(const surface::Surface& s, int m);

}  // namespace dp1::fiber
