#pragma once

#include "dp1/algebra/bipoly.hpp"
#include "dp1/algebra/eis.hpp"
#include "dp1/algebra/series.hpp"
#include "dp1/fiber/fiber_curve.hpp"
#include "dp1/multisection/multisection.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp1::jacobian {

using algebra::BiPoly;
using algebra::Eis;
using algebra::Rat;
using fiber::CurvePoint;
using fiber::FiberPoint;
using multisection::MultisectionCurve;

/// Construction or validation of the Weierstrass model failed for this base point.
class ModelFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// numerator / denominator with both parts polynomials.
struct RationalFunction {
  BiPoly<Rat> num;
  BiPoly<Rat> den;

  template <class E>
  std::optional<E> eval(const E& x, const E& y) const {
    const E d = den.eval(x, y);
    if (algebra::is_zero_value(d)) return std::nullopt;
    return num.eval(x, y) / d;
  }
};

struct ModelValidation {
  std::vector<int> riemann_roch_dims;  // dim L(nQ) for n = 1, 2, 3 (expect 1, 2, 3)
  bool relation_unique = false;
  bool j_invariant_zero = false;       // c4 = 0
  bool model_identity = false;         // gamma^2 - xi^3 - delta in (H)
  int xi_valuation = 0;
  int gamma_valuation = 0;
  bool normalization_complete = false;  // sixth-power-free reduction fully certified
  bool d_on_curve = false;
  int round_trips = 0;                 // points with omega^-1(omega(P)) = P or omega(omega^-1(W)) = W
  int round_trip_failures = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// gamma^2 = xi^3 + delta with omega: C_R -> model and its inverse.
struct GenusOneModel {
  Rat delta;
  RationalFunction xi;     // in (X, T)
  RationalFunction gamma;  // in (X, T)
  RationalFunction inv_x;  // X as a function of (xi, gamma)
  RationalFunction inv_t;  // T as a function of (xi, gamma)
  FiberPoint d;            // omega(sigma Q) + omega(sigma^2 Q)
  Rat scale;               // the u with (xi, gamma) = (u^2 xi_s, u^3 gamma_s) normalizing delta
  ModelValidation validation;

  BiPoly<Rat> curve;       // H_R
  Rat x_q;
  Rat z_r;
};

/// Computes, validates and returns the model; throws ModelFailure.
GenusOneModel weierstrass_model(const MultisectionCurve& m);

/// omega at a point of C_R away from the nodes (O at Q).
CurvePoint<Eis> omega_at(const GenusOneModel& mdl, const Eis& x, const Eis& t);
CurvePoint<Rat> omega_at(const GenusOneModel& mdl, const Rat& x, const Rat& t);

/// omega^-1; nullopt at poles or indeterminacy of the inverse map.
std::optional<std::pair<Eis, Eis>> omega_inverse(const GenusOneModel& mdl, const CurvePoint<Eis>& w);
std::optional<std::pair<Rat, Rat>> omega_inverse(const GenusOneModel& mdl, const FiberPoint& w);

/// omega(sigma Q) + omega(sigma^2 Q), recomputed; throws ModelFailure at poles.
FiberPoint point_D(const GenusOneModel& mdl, const MultisectionCurve& m);

struct DCertificate {
  fiber::FiberCurve curve;  // gamma^2 = xi^3 + delta
  fiber::TorsionEvidence evidence;
  bool nontorsion() const { return evidence.nontorsion; }
};

DCertificate certify_D(const GenusOneModel& mdl);

struct GeneratedPoint {
  long multiple = 0;
  surface::WeightedPoint point;
  surface::FiberId fiber;
};

struct Generation {
  std::vector<GeneratedPoint> points;
  std::vector<long> skipped;  // multiples landing on poles of omega^-1
  std::size_t distinct_fibers = 0;
};

/// Pushes m D (m = 1..count) back to surface points on C_R.
Generation generate_points(const surface::Surface& s, const MultisectionCurve& m, const GenusOneModel& mdl, long count);

}  // namespace dp1::jacobian
