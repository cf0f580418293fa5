#include "dp1/fiber/division_poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dp1::fiber {

using algebra::BiPoly;
using algebra::Poly;
using algebra::Var;

namespace {

using XK = BiPoly<Rat>;

XK mono(long c, int i, int j) { return XK::monomial(Rat(c), i, j); }

// Recurrence on the cofactors f_n (psi_n = f_n for odd n, 2y f_n for even n):
//   f_{2m}   = f_m (f_{m+2} f_{m-1}^2 - f_{m-2} f_{m+1}^2)
//   f_{2m+1} = 16 y^4 f_{m+2} f_m^3 - f_{m-1} f_{m+1}^3    (m even)
//            = f_{m+2} f_m^3 - 16 y^4 f_{m-1} f_{m+1}^3    (m odd)
const XK& cofactor(int n) {
  static std::map<int, XK> cache;
  static std::recursive_mutex mu;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  XK f;
  if (n == 0) {
    f = XK();
  } else if (n == 1 || n == 2) {
    f = mono(1, 0, 0);
  } else if (n == 3) {
    f = mono(3, 4, 0) + mono(12, 1, 1);
  } else if (n == 4) {
    f = mono(2, 6, 0) + mono(40, 3, 1) - mono(16, 0, 2);
  } else {
    const int m = n / 2;
    if (n % 2 == 0) {
      const XK& a = cofactor(m + 2);
      const XK& b = cofactor(m - 1);
      const XK& c = cofactor(m - 2);
      const XK& d = cofactor(m + 1);
      f = cofactor(m) * (a * b * b - c * d * d);
    } else {
      const XK y2 = mono(1, 3, 0) + mono(1, 0, 1);
      const XK y4x16 = mono(16, 0, 0) * y2 * y2;
      const XK first = cofactor(m + 2) * cofactor(m) * cofactor(m) * cofactor(m);
      const XK second = cofactor(m - 1) * cofactor(m + 1) * cofactor(m + 1) * cofactor(m + 1);
      f = (m % 2 == 0) ? y4x16 * first - second : first - y4x16 * second;
    }
  }
  return cache.emplace(n, std::move(f)).first->second;
}

// substitute k := h(t) in a polynomial in (x, k)
BiPoly<Rat> substitute_k(const XK& p, const Poly<Rat>& h) {
  BiPoly<Rat> out;
  const auto rows = p.as_poly_in(Var::first);
  for (int i = 0; i <= rows.degree(); ++i) {
    const Poly<Rat> c = rows.coeff(i).compose(h);
    for (int j = 0; j <= c.degree(); ++j) out.add_term(i, j, c.coeff(j));
  }
  return out;
}

}  // namespace

BiPoly<Rat> division_cofactor_generic(int m) {
  if (m < 0) throw std::invalid_argument("division polynomial index must be >= 0");
  return cofactor(m);
}

std::string DivisionPoly::str() const {
  const std::string body = f.str("x");
  if (!y_factor) return body;
  if (f == Poly<Rat>(Rat(1))) return "2*y";
  return "2*y*(" + body + ")";
}

DivisionPoly division_poly(const FiberCurve& e, int m) {
  if (m < 1 || m > 12) throw std::invalid_argument("division_poly: need 1 <= m <= 12");
  const auto rows = cofactor(m).as_poly_in(Var::first);
  std::vector<Rat> coeffs;
  for (int i = 0; i <= rows.degree(); ++i) coeffs.push_back(rows.coeff(i).eval(e.k));
  return {m, m % 2 == 0, Poly<Rat>(std::move(coeffs))};
}

BiPoly<Rat> TorsionLocus::locus() const { return y_factor ? cofactor * two_torsion : cofactor; }

TorsionLocus torsion_locus(const surface::Surface& s, int m) {
  if (m < 2 || m > 12) throw std::invalid_argument("torsion_locus: need 2 <= m <= 12");
  TorsionLocus t;
  t.m = m;
  t.y_factor = m % 2 == 0;
  t.cofactor = substitute_k(cofactor(m), s.g());
  if (t.y_factor) t.two_torsion = BiPoly<Rat>::monomial(Rat(1), 3, 0) + BiPoly<Rat>::from_poly(s.g(), Var::second);
  return t;
}

}  // namespace dp1::fiber
