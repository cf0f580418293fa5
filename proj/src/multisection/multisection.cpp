#include "dp1/multisection/multisection.hpp"

#include "dp1/algebra/roots.hpp"

#include <stdexcept>

namespace dp1::multisection {

using algebra::Poly;
using algebra::Var;

Rat WeightedForm::eval(const WeightedPoint& p) const {
  return Rat(c_xz) * p.x * p.z + Rat(c_y) * p.y + Rat(c_z3) * p.z * p.z * p.z + Rat(c_w3) * p.w * p.w * p.w;
}

std::string WeightedForm::str() const {
  const std::array<std::pair<const Int*, const char*>, 4> terms{
      {{&c_xz, "xz"}, {&c_y, "y"}, {&c_z3, "z^3"}, {&c_w3, "w^3"}}};
  std::string out;
  for (const auto& [c, name] : terms) {
    if (*c == 0) continue;
    const Int mag = abs(*c);
    if (out.empty()) out += *c < 0 ? "-" : "";
    else out += *c < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str();
    out += name;
  }
  return out.empty() ? "0" : out;
}

std::array<Rat, 4> cutting_form_coeffs(const Surface& s, const WeightedPoint& r) {
  const Rat z3 = r.z * r.z * r.z;
  const Rat x2 = r.x * r.x;
  return {Rat(3) * x2 * r.z * r.z, Rat(-2) * r.y * z3, -(x2 * r.x - Rat(2) * s.a * z3 * z3 - s.b * z3),
          Rat(2) * s.c * z3 + s.b * z3 * z3};
}

WeightedPoint checked_base(const Surface& s, const WeightedPoint& r) {
  if (!surface::on_surface(s, r)) throw std::invalid_argument("base point " + r.str() + " is not on the surface");
  if (r.w.is_zero()) throw std::invalid_argument("base point must have w != 0");
  const WeightedPoint n = surface::normalize(r);
  if (n.y.is_zero()) throw std::invalid_argument("base point must have y != 0");
  if (n.z.is_zero()) throw std::invalid_argument("base point must have z != 0");
  return n;
}

WeightedForm build_G(const Surface& s, const WeightedPoint& r) {
  const auto c = cutting_form_coeffs(s, checked_base(s, r));
  Int l = 1;
  for (const auto& v : c) l = lcm(l, v.den());
  std::array<Int, 4> v;
  Int g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    v[i] = c[i].num() * (l / c[i].den());
    g = gcd(g, v[i]);
  }
  for (const auto& e : v) {
    if (e != 0) {
      if (e < 0) g = -g;
      break;
    }
  }
  return {v[0] / g, v[1] / g, v[2] / g, v[3] / g};
}

BiPoly<Rat> build_H(const Surface& s, const WeightedPoint& r0) {
  const WeightedPoint r = checked_base(s, r0);
  const Rat& a = s.a;
  const Rat& b = s.b;
  const Rat& c = s.c;
  const Rat& x = r.x;
  const Rat& y = r.y;
  const Rat z = r.z;
  const Rat x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
  const Rat z2 = z * z, z3 = z2 * z, z4 = z3 * z, z5 = z4 * z, z6 = z5 * z, z8 = z6 * z2, z9 = z8 * z,
            z12 = z9 * z3;
  BiPoly<Rat> h;
  h.add_term(3, 0, Rat(4) * y * y * z6);
  h.add_term(2, 2, Rat(-9) * x4 * z4);
  h.add_term(1, 4, Rat(6) * x5 * z2 - Rat(12) * a * x2 * z8 - Rat(6) * b * x2 * z5);
  h.add_term(1, 1, -(Rat(12) * c * x2 * z5 + Rat(6) * b * x2 * z8));
  h.add_term(0, 6, Rat(4) * a * c * z6 + Rat(8) * a * x3 * z6 - b * b * z6 + Rat(2) * b * x3 * z3 - x6);
  h.add_term(0, 3, Rat(-2) * (Rat(4) * a * c * z9 - Rat(2) * c * x3 * z3 - Rat(3) * b * x3 * z6 - b * b * z9));
  h.add_term(0, 0, Rat(4) * a * c * z12 + Rat(4) * c * x3 * z6 - b * b * z12);
  return h;
}

SectionR section_r(const Surface& s, const WeightedPoint& r0) {
  const WeightedPoint r = checked_base(s, r0);
  const auto c = cutting_form_coeffs(s, r);
  // c_xz X T + c_y Y + c_z3 T^3 + c_w3 = 0
  BiPoly<Rat> num;
  num.add_term(1, 1, -c[0]);
  num.add_term(0, 3, -c[2]);
  num.add_term(0, 0, -c[3]);
  return {num, c[1]};
}

BiPoly<Rat> eliminated_form(const Surface& s, const WeightedPoint& r) {
  const SectionR sr = section_r(s, r);
  const Rat d2 = sr.denominator * sr.denominator;
  BiPoly<Rat> cubic = BiPoly<Rat>::monomial(Rat(1), 3, 0) + BiPoly<Rat>::from_poly(s.g(), Var::second);
  return BiPoly<Rat>(d2) * cubic - sr.numerator * sr.numerator;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::SectionOverK: return "SectionOverK";
    case Kind::GenusZero: return "GenusZero";
    case Kind::IntegralGenusOne: return "IntegralGenusOne";
    case Kind::Degenerate: return "Degenerate";
  }
  return "?";
}

FiberPoint third_intersection(const Surface& s, const WeightedPoint& r0) {
  const WeightedPoint r = checked_base(s, r0);
  const Rat y2 = r.y * r.y;
  const Rat xq = (Rat(9) * pow(r.x, 4) - Rat(8) * r.x * y2) / (Rat(4) * y2);
  return FiberPoint::affine(xq, section_r(s, r).eval(xq, r.z));
}

MultisectionCurve build_curve(const Surface& s, const WeightedPoint& r0) {
  MultisectionCurve m;
  m.s = s;
  m.r = checked_base(s, r0);
  m.g = build_G(s, m.r);
  m.h = build_H(s, m.r);
  const Eis z = Eis::zeta();
  const Eis z2 = Eis::zeta2();
  m.nodes = {{{Eis(m.r.x), Eis(m.r.z)}, {z2 * m.r.x, z * m.r.z}, {z * m.r.x, z2 * m.r.z}}};
  m.q = third_intersection(s, m.r);
  return m;
}

NodeReport verify_nodes(const MultisectionCurve& m) {
  const auto hx = m.h.partial(Var::first);
  const auto ht = m.h.partial(Var::second);
  const auto hxx = hx.partial(Var::first);
  const auto hxt = hx.partial(Var::second);
  const auto htt = ht.partial(Var::second);
  NodeReport rep;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [x, t] = m.nodes[i];
    NodeCheck& n = rep.nodes[i];
    n.x = x;
    n.t = t;
    n.h = m.h.eval(x, t);
    n.hx = hx.eval(x, t);
    n.ht = ht.eval(x, t);
    n.hxx = hxx.eval(x, t);
    n.hxt = hxt.eval(x, t);
    n.htt = htt.eval(x, t);
    n.hessian = n.hxx * n.htt - n.hxt * n.hxt;
  }
  return rep;
}

namespace {

// quadratic through three points (t_i, v_i)
Poly<Rat> interpolate(const std::array<Rat, 3>& t, const std::array<Rat, 3>& v) {
  Poly<Rat> acc;
  for (std::size_t i = 0; i < 3; ++i) {
    Poly<Rat> basis(Rat(1));
    Rat den(1);
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == i) continue;
      basis = basis * Poly<Rat>(std::vector<Rat>{-t[j], Rat(1)});
      den *= t[i] - t[j];
    }
    acc += basis * Poly<Rat>(v[i] / den);
  }
  return acc;
}

}  // namespace

std::optional<SectionComponent> find_section_component(const MultisectionCurve& m) {
  std::array<Rat, 3> ts;
  std::array<std::vector<Rat>, 3> roots;
  std::size_t n = 0;
  for (long cand : {2L, 3L, 5L, 7L, 11L, 13L, 17L}) {
    if (n == 3) break;
    const Rat t(cand);
    if (t == m.z_r()) continue;
    const auto rr = algebra::rational_roots(m.h.specialize_second(t));
    if (rr.empty()) return std::nullopt;
    ts[n] = t;
    for (const auto& r : rr) roots[n].push_back(r.value);
    ++n;
  }
  const SectionR sr = section_r(m.s, m.r);
  const auto h_rows = m.h.as_poly_in(Var::first);
  for (const auto& r0 : roots[0]) {
    for (const auto& r1 : roots[1]) {
      for (const auto& r2 : roots[2]) {
        const Poly<Rat> p = interpolate(ts, {r0, r1, r2});
        if (!m.h.substitute_first(p).is_zero()) continue;
        // q(T) = Y_r(p(T), T), a polynomial because the denominator is constant
        Poly<Rat> q = sr.numerator.substitute_first(p);
        q = q * Poly<Rat>(sr.denominator.inverse());
        SurfaceSection sec{p, q};
        if (!sec.satisfies(m.s)) continue;
        // synthetic division of H by X - p(T)
        BiPoly<Rat> residual;
        Poly<Rat> carry;
        for (int i = h_rows.degree(); i >= 1; --i) {
          carry = h_rows.coeff(i) + carry * p;
          for (int j = 0; j <= carry.degree(); ++j) residual.add_term(i - 1, j, carry.coeff(j));
        }
        return SectionComponent{sec, residual};
      }
    }
  }
  return std::nullopt;
}

GenusZeroReport genus_zero_check(const MultisectionCurve& m) {
  GenusZeroReport rep;
  const Rat z3 = m.z_r() * m.z_r() * m.z_r();
  rep.y0 = (Rat(2) * m.s.c + m.s.b * z3) / (Rat(2) * m.y_r());
  rep.fixed_point_on_curve = rep.y0 * rep.y0 == m.s.c;
  if (rep.fixed_point_on_curve) {
    const Rat zero(0);
    rep.fixed_point_singular = m.h.eval(zero, zero).is_zero() && m.h.partial(Var::first).eval(zero, zero).is_zero() &&
                               m.h.partial(Var::second).eval(zero, zero).is_zero();
  }
  // Chart z = 1 near w = 0: H(X, T) = T^6 H'(X/T^2, 1/T). The derivative of H' in
  // the w-direction vanishes on w = 0 (no monomials of weight 5), so singular
  // points there are exactly the multiple roots of the weight-6 part.
  std::vector<Rat> c(4);
  for (int i = 0; i <= 3; ++i) c[static_cast<std::size_t>(i)] = m.h.coeff(i, 6 - 2 * i);
  const Poly<Rat> cubic(c);
  rep.singular_at_infinity = algebra::gcd(cubic, cubic.derivative()).degree() >= 1;
  return rep;
}

MultisectionCurve classify(const Surface& s, const WeightedPoint& r) {
  MultisectionCurve m = build_curve(s, r);
  const NodeReport nodes = verify_nodes(m);
  if (!nodes.all_nodes()) {
    m.kind = Kind::Degenerate;
    m.degenerate_reason = "non-node singularity at a node of the orbit";
    return m;
  }
  m.section = find_section_component(m);
  if (m.section) {
    m.kind = Kind::SectionOverK;
    return m;
  }
  m.genus_zero = genus_zero_check(m);
  m.kind = m.genus_zero->genus_zero() ? Kind::GenusZero : Kind::IntegralGenusOne;
  return m;
}

}  // namespace dp1::multisection
