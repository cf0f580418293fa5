#include "dp1/fiber/fiber_curve.hpp"

namespace dp1::fiber {

FiberPoint FiberCurve::to_minimal(const FiberPoint& p) const {
  if (p.identity) return p;
  const Rat s2 = scale * scale;
  return FiberPoint::affine(s2 * p.x, s2 * scale * p.y);
}

FiberPoint FiberCurve::from_minimal(const FiberPoint& p) const {
  if (p.identity) return p;
  const Rat inv = scale.inverse();
  const Rat i2 = inv * inv;
  return FiberPoint::affine(i2 * p.x, i2 * inv * p.y);
}

FiberCurve curve_for_constant(const Rat& k, surface::FiberId t) {
  if (k.is_zero()) throw SingularFiber("singular fiber: k = 0");
  // n * d^5 = d^6 k is integral; strip its sixth-power part
  const Int raw = k.num() * algebra::int_pow(k.den(), 5);
  const auto split = algebra::power_free_part(raw, 6);
  // scale^6 k = minimal_k with scale = d / root
  return {std::move(t), k, split.free_part, Rat(k.den(), split.root)};
}

FiberCurve fiber_curve(const surface::Surface& s, const surface::FiberId& t) {
  const Rat k = surface::fiber_constant(s, t);
  if (k.is_zero()) throw SingularFiber("singular fiber at t = " + t.str());
  return curve_for_constant(k, t);
}

LutzNagellData lutz_nagell(const FiberCurve& e, const FiberPoint& p) {
  LutzNagellData d;
  d.minimal_point = e.to_minimal(p);
  if (p.identity) return d;
  const auto& q = d.minimal_point;
  d.integral = q.x.is_integer() && q.y.is_integer();
  if (!d.integral) return d;
  d.y_zero = q.y.is_zero();
  if (!d.y_zero) {
    const Int disc = Int(432) * e.minimal_k * e.minimal_k;
    const Int y2 = q.y.num() * q.y.num();
    d.y2_divides_disc = mpz_divisible_p(disc.get_mpz_t(), y2.get_mpz_t()) != 0;
  }
  return d;
}

TorsionEvidence is_nontorsion(const FiberCurve& e, const FiberPoint& p) {
  if (!e.contains(p)) throw std::invalid_argument("is_nontorsion: point not on curve");
  TorsionEvidence ev;
  const FiberPoint pm = e.to_minimal(p);
  FiberPoint acc = FiberPoint::O();
  for (int m = 1; m <= 6; ++m) {
    acc = add(acc, pm);
    ev.multiples.push_back(acc);
    if (acc.identity && ev.order == 0) ev.order = m;
  }
  ev.nontorsion = !ev.multiples.back().identity;
  if (ev.nontorsion) ev.order = 0;
  ev.lutz_nagell = lutz_nagell(e, p);
  if (!ev.nontorsion && !ev.lutz_nagell.torsion_candidate()) {
    throw TorsionInconsistency("torsion point " + p.str() + " fails the Lutz-Nagell conditions");
  }
  return ev;
}

}  // namespace dp1::fiber
