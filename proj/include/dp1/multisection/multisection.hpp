#pragma once

#include "dp1/algebra/bipoly.hpp"
#include "dp1/algebra/eis.hpp"
#include "dp1/fiber/fiber_curve.hpp"
#include "dp1/surface/surface.hpp"

#include <array>
#include <optional>
#include <string>

namespace dp1::multisection {

using algebra::BiPoly;
using algebra::Eis;
using algebra::Int;
using algebra::Rat;
using fiber::FiberPoint;
using surface::Surface;
using surface::SurfaceSection;
using surface::WeightedPoint;

/// c_xz*x*z + c_y*y + c_z3*z^3 + c_w3*w^3, content-reduced with first nonzero coefficient positive.
struct WeightedForm {
  Int c_xz;
  Int c_y;
  Int c_z3;
  Int c_w3;

  Rat eval(const WeightedPoint& p) const;
  std::string str() const;  // "3xz - 26y + 323z^3 + 12w^3"
  friend bool operator==(const WeightedForm&, const WeightedForm&) = default;
};

/// Raw coefficients (3 x^2 z^2, -2 y z^3, -(x^3 - 2 a z^6 - b z^3), 2 c z^3 + b z^6) at R.
std::array<Rat, 4> cutting_form_coeffs(const Surface& s, const WeightedPoint& r);

/// Normalizes R to w = 1 and checks the hypotheses (R on S, w != 0, y != 0, z != 0).
WeightedPoint checked_base(const Surface& s, const WeightedPoint& r);

WeightedForm build_G(const Surface& s, const WeightedPoint& r);

/// Plane model H_R(X, T) of the curve cut out by G, in the chart w = 1.
BiPoly<Rat> build_H(const Surface& s, const WeightedPoint& r);

/// Y = numerator(X, T) / denominator on the curve (solving G = 0 for y).
struct SectionR {
  BiPoly<Rat> numerator;
  Rat denominator;
  template <class E>
  E eval(const E& x, const E& t) const { return numerator.eval(x, t) / E(denominator); }
};
SectionR section_r(const Surface& s, const WeightedPoint& r);

/// -(2 y z^3)^2 (Y^2 - X^3 - g(T)) with Y replaced by the section r.
BiPoly<Rat> eliminated_form(const Surface& s, const WeightedPoint& r);

struct NodeCheck {
  Eis x;
  Eis t;
  Eis h, hx, ht;
  Eis hxx, hxt, htt;
  Eis hessian;  // hxx*htt - hxt^2
  bool is_node() const { return h.is_zero() && hx.is_zero() && ht.is_zero() && !hessian.is_zero(); }
};

struct NodeReport {
  std::array<NodeCheck, 3> nodes;
  bool all_nodes() const { return nodes[0].is_node() && nodes[1].is_node() && nodes[2].is_node(); }
};

/// Point of intersection with R's fiber other than R (counted twice).
FiberPoint third_intersection(const Surface& s, const WeightedPoint& r);

struct SectionComponent {
  SurfaceSection section;
  BiPoly<Rat> residual;  // H / (X - p(T))
};

struct GenusZeroReport {
  Rat y0;                          // (2c + b z^3) / (2y)
  bool fixed_point_on_curve = false;
  bool fixed_point_singular = false;
  bool singular_at_infinity = false;
  bool genus_zero() const { return fixed_point_singular || singular_at_infinity; }
};

enum class Kind { SectionOverK, GenusZero, IntegralGenusOne, Degenerate };
std::string kind_name(Kind k);

struct MultisectionCurve {
  Surface s;
  WeightedPoint r;  // normalized, w = 1
  WeightedForm g;
  BiPoly<Rat> h;
  std::array<std::pair<Eis, Eis>, 3> nodes;  // (X, T) of R, sigma R, sigma^2 R
  FiberPoint q;
  Kind kind = Kind::Degenerate;
  std::optional<SectionComponent> section;
  std::optional<GenusZeroReport> genus_zero;
  std::string degenerate_reason;

  const Rat& x_r() const { return r.x; }
  const Rat& y_r() const { return r.y; }
  const Rat& z_r() const { return r.z; }
};

/// Builds G, H, the node orbit and Q without classifying.
MultisectionCurve build_curve(const Surface& s, const WeightedPoint& r);

NodeReport verify_nodes(const MultisectionCurve& m);
std::optional<SectionComponent> find_section_component(const MultisectionCurve& m);
GenusZeroReport genus_zero_check(const MultisectionCurve& m);

/// Runs node verification, section search and the genus-zero test in that order.
MultisectionCurve classify(const Surface& s, const WeightedPoint& r);

}  // namespace dp1::multisection
