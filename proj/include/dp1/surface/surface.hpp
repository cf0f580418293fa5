#pragma once

#include "dp1/algebra/poly.hpp"
#include "dp1/algebra/rat.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dp1::surface {

using algebra::Int;
using algebra::Poly;
using algebra::Rat;

/// y^2 = x^3 + a z^6 + b z^3 w^3 + c w^6 in P(2,3,1,1).
struct Surface {
  Rat a;
  Rat b;
  Rat c;

  /// g(T) = a T^6 + b T^3 + c, the fiber constant in the chart w = 1.
  Poly<Rat> g() const;
  Rat g_at(const Rat& t) const;
  std::string str() const;  // "a,b,c"

  /// Parses "A,B,C" with rational components.
  static Surface parse(std::string_view text);
  friend bool operator==(const Surface&, const Surface&) = default;
};

struct SurfaceValidation {
  bool a_nonzero = false;
  bool c_nonzero = false;
  bool discriminant_nonzero = false;  // b^2 - 4ac != 0

  bool valid() const { return a_nonzero && c_nonzero && discriminant_nonzero; }
  std::vector<std::string> violations() const;
};

SurfaceValidation validate(const Surface& s);

/// Point of P(2,3,1,1); equality of classes is tested after normalize().
struct WeightedPoint {
  Rat x;
  Rat y;
  Rat z;
  Rat w;

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero() && w.is_zero(); }
  std::string str() const;  // "(x:y:z:w)"
  /// Accepts "(x:y:z:w)" or "x,y,z,w".
  static WeightedPoint parse(std::string_view text);
  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// (x, y, z, w) -> (l^2 x, l^3 y, l z, l w).
WeightedPoint rescale(const WeightedPoint& p, const Rat& l);

/// Canonical representative: w = 1 if w != 0, else z = 1 if z != 0. On the
/// line z = w = 0 the class is (s:s:0:0) with s = x^3/y^2 when x y != 0,
/// (0:y:0:0) with y a cube-free integer, or (x:0:0:0) with x a squarefree integer.
WeightedPoint normalize(const WeightedPoint& p);

bool on_surface(const Surface& s, const WeightedPoint& p);

/// Base point of the fibration (1:1:0:0).
inline WeightedPoint base_point() { return {Rat(1), Rat(1), Rat(0), Rat(0)}; }

/// A point (z:w) of P^1: t = z/w, or infinity for (1:0).
struct FiberId {
  bool infinite = false;
  Rat t;

  static FiberId at(Rat t) { return {false, std::move(t)}; }
  static FiberId infinity() { return {true, Rat(0)}; }
  std::string str() const;  // "1/5" or "inf"
  static FiberId parse(std::string_view text);
  friend bool operator==(const FiberId&, const FiberId&) = default;
};

/// Fiber through p; throws std::invalid_argument when z = w = 0.
FiberId fiber_param(const WeightedPoint& p);

/// Fiber constant k: g(t), or a at infinity.
Rat fiber_constant(const Surface& s, const FiberId& t);

/// Section x = p(T), y = q(T) in the chart w = 1 (deg p <= 2, deg q <= 3).
struct SurfaceSection {
  Poly<Rat> p;
  Poly<Rat> q;

  /// q^2 == p^3 + g as polynomials.
  bool satisfies(const Surface& s) const;
};

std::vector<WeightedPoint> section_points(const Surface& s, const SurfaceSection& sec, const std::vector<Rat>& ts);

}  // namespace dp1::surface
