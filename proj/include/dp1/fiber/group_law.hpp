#pragma once

#include <string>

namespace dp1::fiber {

/// Point on y^2 = x^3 + k over a field F; `identity` marks the point at infinity.
template <class F>
struct CurvePoint {
  bool identity = true;
  F x{};
  F y{};

  static CurvePoint O() { return {}; }
  static CurvePoint affine(F x, F y) { return {false, std::move(x), std::move(y)}; }
  std::string str() const { return identity ? "O" : "(" + x.str() + "," + y.str() + ")"; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

template <class F>
bool on_curve(const F& k, const CurvePoint<F>& p) {
  return p.identity || p.y * p.y == p.x * p.x * p.x + k;
}

template <class F>
CurvePoint<F> negate(const CurvePoint<F>& p) {
  return p.identity ? p : CurvePoint<F>::affine(p.x, -p.y);
}

/// Chord-tangent addition; k does not enter the formulas for A = 0.
template <class F>
CurvePoint<F> add(const CurvePoint<F>& p, const CurvePoint<F>& q) {
  if (p.identity) return q;
  if (q.identity) return p;
  F lambda;
  if (p.x == q.x) {
    if (p.y == -q.y) return CurvePoint<F>::O();
    lambda = F(3) * p.x * p.x / (F(2) * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  F x3 = lambda * lambda - p.x - q.x;
  F y3 = lambda * (p.x - x3) - p.y;
  return CurvePoint<F>::affine(std::move(x3), std::move(y3));
}

template <class F>
CurvePoint<F> mul(long n, const CurvePoint<F>& p) {
  if (n < 0) return negate(mul(-n, p));
  CurvePoint<F> acc = CurvePoint<F>::O();
  CurvePoint<F> base = p;
  auto m = static_cast<unsigned long>(n);
  while (m != 0) {
    if (m & 1UL) acc = add(acc, base);
    m >>= 1UL;
    if (m != 0) base = add(base, base);
  }
  return acc;
}

}  // namespace dp1::fiber
