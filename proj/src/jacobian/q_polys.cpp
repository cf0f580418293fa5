#include "dp1/jacobian/q_polys.hpp"

#include <stdexcept>

namespace dp1::jacobian {

QPolys q_polys(const surface::Surface& s, const Rat& z0) {
  if (z0.is_zero()) throw std::invalid_argument("q_polys: z0 must be nonzero");
  const Rat& a = s.a;
  const Rat& b = s.b;
  const Rat& c = s.c;
  const Rat z3 = z0 * z0 * z0, z6 = z3 * z3, z9 = z6 * z3, z12 = z9 * z3, z15 = z12 * z3, z18 = z15 * z3;
  const Rat a2 = a * a, a3 = a2 * a, b2 = b * b, c2 = c * c;
  auto poly = [](std::initializer_list<std::pair<int, Rat>> terms) {
    Poly<Rat> p;
    for (const auto& [e, v] : terms) p += Poly<Rat>::monomial(v, e);
    return p;
  };
  QPolys q;
  q.q1 = Poly<Rat>::x();
  q.q2 = poly({{6, Rat(-1)}, {3, Rat(2) * z3 * (Rat(4) * a * z3 + b)}, {0, (Rat(4) * a * c - b2) * z6}});
  q.q3 = poly({{6, Rat(1)},
               {3, Rat(8) * (a * z6 - c)},
               {0, Rat(8) * (Rat(2) * a2 * z12 + Rat(3) * a * b * z9 + (Rat(2) * a * c + b2) * z6 + b * c * z3)}});
  q.q4 = poly({{12, Rat(29)},
               {9, Rat(40) * c + Rat(24) * a * z6},
               {6, Rat(8) * (Rat(12) * a2 * z12 + Rat(9) * a * b * z9 + (Rat(18) * a * c - Rat(5) * b2) * z6 -
                             Rat(5) * b * c * z3 - Rat(2) * c2)},
               {3, Rat(32) * (Rat(4) * a3 * z18 + Rat(9) * a2 * b * z15 + (Rat(5) * a * b2 + Rat(12) * a2 * c) * z12 +
                              Rat(14) * a * b * c * z9 + (b2 * c + Rat(8) * a * c2) * z6 + b * c2 * z3)},
               {0, Rat(16) * ((Rat(4) * a3 * c - a2 * b2) * z18 + (Rat(8) * a2 * b * c - Rat(2) * a * b2 * b) * z15 +
                              (Rat(8) * a2 * c2 + Rat(2) * a * b2 * c - b2 * b2) * z12 +
                              (Rat(8) * a * b * c2 - Rat(2) * b2 * b * c) * z9 + (Rat(4) * a * c2 * c - b2 * c2) * z6)}});
  return q;
}

bool degeneracy_check(const surface::Surface& s, const surface::WeightedPoint& r0) {
  const auto r = surface::normalize(r0);
  const QPolys q = q_polys(s, r.z);
  for (const auto* p : {&q.q1, &q.q2, &q.q3, &q.q4}) {
    if (p->eval(r.x).is_zero()) return false;
  }
  return true;
}

}  // namespace dp1::jacobian
