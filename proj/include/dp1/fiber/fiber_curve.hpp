#pragma once

#include "dp1/algebra/rat.hpp"
#include "dp1/fiber/group_law.hpp"
#include "dp1/surface/surface.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dp1::fiber {

using algebra::Int;
using algebra::Rat;
using FiberPoint = CurvePoint<Rat>;

class SingularFiber : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised if the 6P test and the Lutz-Nagell test disagree.
class TorsionInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// y^2 = x^3 + k together with its sixth-power-free integral model
/// Y^2 = X^3 + minimal_k, reached by (x, y) -> (scale^2 x, scale^3 y).
struct FiberCurve {
  surface::FiberId t;
  Rat k;
  Int minimal_k;
  Rat scale;

  bool contains(const FiberPoint& p) const { return on_curve(k, p); }
  FiberPoint to_minimal(const FiberPoint& p) const;
  FiberPoint from_minimal(const FiberPoint& p) const;
};

/// Curve for a given nonzero constant (used for fibers and Weierstrass models alike).
FiberCurve curve_for_constant(const Rat& k, surface::FiberId t = surface::FiberId::at(Rat(0)));

/// Throws SingularFiber when g(t) = 0.
FiberCurve fiber_curve(const surface::Surface& s, const surface::FiberId& t);

inline FiberPoint add(const FiberCurve&, const FiberPoint& p, const FiberPoint& q) { return add(p, q); }
inline FiberPoint mul(const FiberCurve&, long n, const FiberPoint& p) { return mul(n, p); }

struct LutzNagellData {
  FiberPoint minimal_point;
  bool integral = false;
  bool y_zero = false;
  bool y2_divides_disc = false;  // y^2 | 432 minimal_k^2
  /// false: non-integral or failing divisibility, so the point has infinite order.
  bool torsion_candidate() const { return integral && (y_zero || y2_divides_disc); }
  std::string verdict() const { return torsion_candidate() ? "torsion candidate" : "infinite order"; }
};

LutzNagellData lutz_nagell(const FiberCurve& e, const FiberPoint& p);

struct TorsionEvidence {
  bool nontorsion = false;
  int order = 0;                     // exact order when torsion, 0 otherwise
  std::vector<FiberPoint> multiples;  // m P for m = 1..6, on the minimal model
  LutzNagellData lutz_nagell;
};

/// 6P != O decides (torsion exponent divides 6 for these curves); the
/// Lutz-Nagell data is computed alongside and must agree, otherwise
/// TorsionInconsistency is thrown.
TorsionEvidence is_nontorsion(const FiberCurve& e, const FiberPoint& p);

}  // namespace dp1::fiber
