#pragma once

#include "dp1/algebra/poly.hpp"
#include "dp1/algebra/rat.hpp"

#include <vector>

namespace dp1::algebra {

struct RationalRoot {
  Rat value;
  int multiplicity;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots with multiplicities, ascending by value.
/// Uses p-adic lifting of simple roots modulo a good prime, so the cost does
/// not depend on factoring the coefficients.
std::vector<RationalRoot> rational_roots(const Poly<Rat>& p);

/// Integer polynomial with gcd of coefficients 1 and positive leading
/// coefficient, proportional to p.
std::vector<Int> primitive_integer_coeffs(const Poly<Rat>& p);

}  // namespace dp1::algebra
