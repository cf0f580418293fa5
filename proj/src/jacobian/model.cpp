#include "dp1/jacobian/model.hpp"

#include "dp1/algebra/linalg.hpp"
#include "dp1/algebra/local_expansion.hpp"

#include <set>

namespace dp1::jacobian {

using algebra::Laurent;
using algebra::LocalBranch;
using algebra::Matrix;
using algebra::Poly;
using algebra::Var;

namespace {

using Mono = std::pair<int, int>;

constexpr int kPoleBound = 3;      // numerators over (T^3 - z^3)^k with k = 3
constexpr int kPrecision = 24;     // series precision for the Riemann-Roch computation
constexpr int kInversePrecision = 72;
constexpr int kMaxInverseDegree = 16;

std::vector<Mono> numerator_monomials(int k) {
  std::vector<Mono> v;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 3 * k - 2 * i; ++j) v.emplace_back(i, j);
  return v;
}

BiPoly<Rat> denominator_power(const Rat& z, int k) {
  const BiPoly<Rat> d = BiPoly<Rat>::monomial(Rat(1), 0, 3) - BiPoly<Rat>(z * z * z);
  BiPoly<Rat> r(Rat(1));
  for (int i = 0; i < k; ++i) r *= d;
  return r;
}

BiPoly<Rat> combine(const std::vector<Mono>& monos, const std::vector<Rat>& v) {
  BiPoly<Rat> p;
  for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i].first, monos[i].second, v[i]);
  return p;
}

// Conditions for N/D^k to stay regular on both branches of the node (px, pt):
// the (k-1)-jet of N must lie in the span of the jets of u^a v^b H.
template <class E>
Matrix<E> node_conditions(const BiPoly<Rat>& h, const E& px, const E& pt, int k, const std::vector<Mono>& monos) {
  std::vector<Mono> jm;
  for (int s = 0; s < k; ++s)
    for (int a = 0; a <= s; ++a) jm.emplace_back(a, s - a);
  auto index = [&](int i, int j) {
    const int s = i + j;
    return static_cast<std::size_t>(s * (s + 1) / 2 + i);
  };
  const BiPoly<E> hs = h.template shifted<E>(px, pt, k - 1);
  Matrix<E> rows;
  for (int s = 0; s + 2 < k; ++s) {
    for (int a = 0; a <= s; ++a) {
      const int b = s - a;
      std::vector<E> row(jm.size());
      for (const auto& [e, c] : hs.terms()) {
        if (e.first + a + e.second + b < k) row[index(e.first + a, e.second + b)] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  const auto ech = algebra::rref(rows, jm.size());
  std::vector<bool> pivot(jm.size(), false);
  for (auto p : ech.pivots) pivot[p] = true;
  Matrix<E> conds;
  for (std::size_t c = 0; c < jm.size(); ++c) {
    if (!pivot[c]) conds.emplace_back(monos.size());
  }
  for (std::size_t mi = 0; mi < monos.size(); ++mi) {
    std::vector<E> jet(jm.size());
    const auto ms = BiPoly<Rat>::monomial(Rat(1), monos[mi].first, monos[mi].second).template shifted<E>(px, pt, k - 1);
    for (const auto& [e, c] : ms.terms()) jet[index(e.first, e.second)] += c;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      const E f = jet[ech.pivots[r]];
      if (algebra::is_zero_value(f)) continue;
      for (std::size_t j = 0; j < jm.size(); ++j) jet[j] -= f * ech.rows[r][j];
    }
    std::size_t ci = 0;
    for (std::size_t c = 0; c < jm.size(); ++c) {
      if (!pivot[c]) conds[ci++][mi] = jet[c];
    }
  }
  return conds;
}

// series of every numerator monomial along a branch
template <class E>
std::vector<Laurent<E>> monomial_series(const LocalBranch<E>& br, const std::vector<Mono>& monos) {
  std::vector<Laurent<E>> out;
  out.reserve(monos.size());
  for (const auto& [i, j] : monos) out.push_back(algebra::expand_on(BiPoly<Rat>::monomial(Rat(1), i, j), br));
  return out;
}

template <class E>
Matrix<E> vanishing_conditions(const std::vector<Laurent<E>>& series, int count) {
  Matrix<E> rows;
  for (int o = 0; o < count; ++o) {
    std::vector<E> row;
    for (const auto& s : series) row.push_back(s.coeff(o));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<Rat> split_rows(const Matrix<Eis>& m) {
  Matrix<Rat> out;
  for (const auto& row : m) {
    std::vector<Rat> re, im;
    for (const auto& v : row) {
      re.push_back(v.re());
      im.push_back(v.im());
    }
    out.push_back(std::move(re));
    out.push_back(std::move(im));
  }
  return out;
}

template <class E>
Laurent<E> combine_series(const std::vector<Laurent<E>>& series, const std::vector<Rat>& v) {
  Laurent<E> acc = Laurent<E>(0, std::vector<E>(static_cast<std::size_t>(series.front().hi())));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) acc = acc + E(v[i]) * series[i];
  }
  return acc;
}

BiPoly<Rat> reduce_mod(const BiPoly<Rat>& p, const BiPoly<Rat>& h) {
  const auto hr = h.as_poly_in(Var::first);
  const int dh = hr.degree();
  if (hr.coeff(dh).degree() != 0) throw std::logic_error("reduce_mod: leading coefficient must be constant");
  const Rat inv = hr.coeff(dh).coeff(0).inverse();
  const auto pr = p.as_poly_in(Var::first);
  std::vector<Poly<Rat>> c(pr.coeffs());
  for (int i = static_cast<int>(c.size()) - 1; i >= dh; --i) {
    const Poly<Rat> f = c[static_cast<std::size_t>(i)] * Poly<Rat>(inv);
    if (f.is_zero()) continue;
    for (int j = 0; j <= dh; ++j) c[static_cast<std::size_t>(i - dh + j)] -= f * hr.coeff(j);
  }
  BiPoly<Rat> out;
  for (std::size_t i = 0; i < c.size() && static_cast<int>(i) < dh; ++i)
    for (int j = 0; j <= c[i].degree(); ++j) out.add_term(static_cast<int>(i), j, c[i].coeff(j));
  return out;
}

int valuation_or_fail(const Laurent<Rat>& s, const char* what) {
  const auto v = s.valuation();
  if (!v) throw ModelFailure(std::string("no nonzero coefficient in expansion of ") + what);
  return *v;
}

template <class E>
CurvePoint<E> omega_impl(const GenusOneModel& mdl, const E& x, const E& t) {
  if (x == E(mdl.x_q) && t == E(mdl.z_r)) return CurvePoint<E>::O();
  const E d = mdl.xi.den.eval(x, t);
  if (!algebra::is_zero_value(d)) return CurvePoint<E>::affine(mdl.xi.num.eval(x, t) / d, mdl.gamma.num.eval(x, t) / d);
  const auto br = algebra::local_branch(mdl.curve, x, t, 16);
  const Laurent<E> ds = algebra::expand_on(mdl.xi.den, br);
  const Laurent<E> sx = algebra::expand_on(mdl.xi.num, br) / ds;
  const Laurent<E> sg = algebra::expand_on(mdl.gamma.num, br) / ds;
  const auto vx = sx.valuation();
  if (vx && *vx < 0) return CurvePoint<E>::O();
  return CurvePoint<E>::affine(sx.coeff(0), sg.coeff(0));
}

template <class E>
std::optional<std::pair<E, E>> inverse_impl(const GenusOneModel& mdl, const CurvePoint<E>& w) {
  if (w.identity) return std::make_pair(E(mdl.x_q), E(mdl.z_r));
  const auto x = mdl.inv_x.eval(w.x, w.y);
  const auto t = mdl.inv_t.eval(w.x, w.y);
  if (!x || !t) return std::nullopt;
  return std::make_pair(*x, *t);
}

struct InverseMap {
  RationalFunction f;
  int degree = 0;
};

// f = A/B with A, B in L(dQ) = span{xi^i gamma^e : 2i + 3e <= d}: the Laurent
// coefficients of A - f B at Q vanish through exponent pole_bound.
InverseMap solve_inverse(const Laurent<Rat>& f, const Laurent<Rat>& lx, const Laurent<Rat>& lg, int pole_bound) {
  for (int d = pole_bound + 1; d <= kMaxInverseDegree; ++d) {
    std::vector<Mono> basis;
    for (int e = 0; e <= 1; ++e)
      for (int i = 0; 2 * i + 3 * e <= d; ++i) basis.emplace_back(i, e);
    std::vector<Laurent<Rat>> funcs;
    for (const auto& [i, e] : basis) {
      Laurent<Rat> s = Laurent<Rat>::constant(Rat(1), kInversePrecision);
      for (int k = 0; k < i; ++k) s = s * lx;
      if (e == 1) s = s * lg;
      funcs.push_back(std::move(s));
    }
    const std::size_t nb = basis.size();
    std::vector<Laurent<Rat>> scaled;
    for (const auto& s : funcs) scaled.push_back(f * s);
    Matrix<Rat> rows;
    for (int ex = -d; ex <= pole_bound; ++ex) {
      std::vector<Rat> row;
      for (const auto& s : funcs) row.push_back(s.coeff(ex));
      for (const auto& s : scaled) row.push_back(-s.coeff(ex));
      rows.push_back(std::move(row));
    }
    const auto ns = algebra::nullspace(rows, 2 * nb);
    for (const auto& v : ns) {
      BiPoly<Rat> a, b;
      for (std::size_t i = 0; i < nb; ++i) {
        a.add_term(basis[i].first, basis[i].second, v[i]);
        b.add_term(basis[i].first, basis[i].second, v[nb + i]);
      }
      if (!b.is_zero()) return {{a, b}, d};
    }
  }
  throw ModelFailure("inverse map not found within degree bound");
}

}  // namespace

GenusOneModel weierstrass_model(const MultisectionCurve& m) {
  if (m.kind != multisection::Kind::IntegralGenusOne) throw ModelFailure("curve is not integral of genus one");
  const BiPoly<Rat>& h = m.h;
  const Rat& z = m.z_r();
  const Rat& xq = m.q.x;
  if (xq == m.x_r()) throw ModelFailure("third intersection coincides with the base point");
  const int k = kPoleBound;
  const auto monos = numerator_monomials(k);
  const BiPoly<Rat> dk = denominator_power(z, k);
  const Eis zeta = Eis::zeta();
  const Eis zeta2 = Eis::zeta2();

  GenusOneModel mdl;
  mdl.curve = h;
  mdl.x_q = xq;
  mdl.z_r = z;
  ModelValidation& val = mdl.validation;

  LocalBranch<Rat> br_q;
  LocalBranch<Eis> br_sq;
  try {
    br_q = algebra::local_branch(h, xq, z, kPrecision);
    br_sq = algebra::local_branch(h, zeta2 * xq, zeta * z, kPrecision);
  } catch (const algebra::NonSmoothCenter&) {
    throw ModelFailure("third intersection is a singular point of the plane model");
  }
  const auto ser_q = monomial_series(br_q, monos);
  const auto ser_sq = monomial_series(br_sq, monos);
  const Laurent<Rat> dk_q = algebra::expand_on(dk, br_q);
  const int v_q = valuation_or_fail(dk_q, "the denominator at Q");
  const auto v_sq = algebra::expand_on(dk, br_sq).valuation();
  if (!v_sq) throw ModelFailure("denominator vanishes along the conjugate branch");

  Matrix<Rat> base = node_conditions(h, m.x_r(), z, k, monos);
  for (auto& row : split_rows(node_conditions(h, zeta2 * m.x_r(), zeta * z, k, monos))) base.push_back(std::move(row));
  for (auto& row : split_rows(vanishing_conditions(ser_sq, *v_sq))) base.push_back(std::move(row));

  std::array<Matrix<Rat>, 4> spaces;
  for (int n = 1; n <= 3; ++n) {
    Matrix<Rat> rows = base;
    for (auto& row : vanishing_conditions(ser_q, v_q - n)) rows.push_back(std::move(row));
    spaces[static_cast<std::size_t>(n)] = algebra::nullspace(rows, monos.size());
    val.riemann_roch_dims.push_back(static_cast<int>(spaces[static_cast<std::size_t>(n)].size()));
  }
  if (val.riemann_roch_dims != std::vector<int>{1, 2, 3}) throw ModelFailure("unexpected Riemann-Roch dimensions");

  const Laurent<Rat> dk_inv = dk_q.inverse();
  auto laurent_of = [&](const std::vector<Rat>& v) { return combine_series(ser_q, v) * dk_inv; };
  auto pick = [&](const Matrix<Rat>& space, int want) -> std::pair<std::vector<Rat>, Laurent<Rat>> {
    for (const auto& v : space) {
      Laurent<Rat> s = laurent_of(v);
      if (s.valuation() == want) return {v, s};
    }
    throw ModelFailure("no function with pole of order " + std::to_string(-want) + " at Q");
  };
  const auto [xi_vec, lxi] = pick(spaces[2], -2);
  const auto [g_vec, lg] = pick(spaces[3], -3);

  // relation among 1, xi, gamma, xi^2, xi gamma, gamma^2, xi^3
  const Laurent<Rat> one = Laurent<Rat>::constant(Rat(1), kPrecision);
  const std::vector<Laurent<Rat>> funcs{one, lxi, lg, lxi * lxi, lxi * lg, lg * lg, lxi * lxi * lxi};
  Matrix<Rat> rel_rows;
  for (int e = -6; e <= 0; ++e) {
    std::vector<Rat> row;
    for (const auto& f : funcs) row.push_back(f.coeff(e));
    rel_rows.push_back(std::move(row));
  }
  const auto rel = algebra::nullspace(rel_rows, funcs.size());
  val.relation_unique = rel.size() == 1;
  if (!val.relation_unique) throw ModelFailure("Weierstrass relation is not unique");
  const auto& c = rel[0];
  const Rat &c0 = c[0], &cx = c[1], &cg = c[2], &cxx = c[3], &cxg = c[4], &cgg = c[5], &cxxx = c[6];
  if (cgg.is_zero() || cxxx.is_zero()) throw ModelFailure("degenerate Weierstrass relation");
  // xi = lambda xi', gamma = mu gamma' makes the relation monic in gamma'^2 and xi'^3
  const Rat lambda = -cgg * cxxx;
  const Rat mu = cgg * cxxx * cxxx;
  const Rat sc = cgg * mu * mu;
  const Rat a1 = cxg * lambda * mu / sc;
  const Rat a3 = cg * mu / sc;
  const Rat a2 = -cxx * lambda * lambda / sc;
  const Rat a4 = -cx * lambda / sc;
  const Rat a6 = -c0 / sc;
  const Rat b2 = a1 * a1 + Rat(4) * a2;
  const Rat b4 = Rat(2) * a4 + a1 * a3;
  const Rat b6 = a3 * a3 + Rat(4) * a6;
  const Rat c4 = b2 * b2 - Rat(24) * b4;
  const Rat c6 = -b2 * b2 * b2 + Rat(36) * b2 * b4 - Rat(216) * b6;
  val.j_invariant_zero = c4.is_zero();
  if (!val.j_invariant_zero) throw ModelFailure("model does not have j-invariant 0");
  const Rat delta_s = Rat(-54) * c6;
  if (delta_s.is_zero()) throw ModelFailure("singular Weierstrass model");

  // u^6 delta_s = sixth-power-free integer
  const auto split = algebra::power_free_part(delta_s.num() * algebra::int_pow(delta_s.den(), 5), 6);
  val.normalization_complete = split.complete;
  mdl.delta = Rat(split.free_part);
  mdl.scale = Rat(delta_s.den(), split.root);

  // xi_s = 36 xi' + 3 b2, gamma_s = 108 (2 gamma' + a1 xi' + a3), then (u^2, u^3)
  const BiPoly<Rat> n_xi = combine(monos, xi_vec);
  const BiPoly<Rat> n_g = combine(monos, g_vec);
  const Rat u = mdl.scale;
  const Rat u2 = u * u;
  const Rat u3 = u2 * u;
  const BiPoly<Rat> num_xi = BiPoly<Rat>(u2 * Rat(36) / lambda) * n_xi + BiPoly<Rat>(u2 * Rat(3) * b2) * dk;
  const BiPoly<Rat> num_g = BiPoly<Rat>(u3 * Rat(216) / mu) * n_g + BiPoly<Rat>(u3 * Rat(108) * a1 / lambda) * n_xi +
                            BiPoly<Rat>(u3 * Rat(108) * a3) * dk;
  mdl.xi = {num_xi, dk};
  mdl.gamma = {num_g, dk};

  // gamma^2 - xi^3 - delta vanishes on the curve: N_g^2 D - N_x^3 - delta D^3 in (H)
  const BiPoly<Rat> identity = num_g * num_g * dk - num_xi * num_xi * num_xi - BiPoly<Rat>(mdl.delta) * dk * dk * dk;
  val.model_identity = reduce_mod(identity, h).is_zero();
  if (!val.model_identity) val.failures.emplace_back("model identity fails modulo H");

  // pole orders and the inverse map from a longer expansion at Q
  const auto br_long = algebra::local_branch(h, xq, z, kInversePrecision);
  const Laurent<Rat> dk_long = algebra::expand_on(dk, br_long).inverse();
  const Laurent<Rat> lx = algebra::expand_on(num_xi, br_long) * dk_long;
  const Laurent<Rat> lgam = algebra::expand_on(num_g, br_long) * dk_long;
  val.xi_valuation = valuation_or_fail(lx, "xi");
  val.gamma_valuation = valuation_or_fail(lgam, "gamma");
  if (val.xi_valuation != -2 || val.gamma_valuation != -3) val.failures.emplace_back("wrong pole orders at Q");
  if (!val.failures.empty()) throw ModelFailure(val.failures.front());

  const Laurent<Rat> lt = br_long.t;
  const Laurent<Rat> lxx = br_long.x;
  // T has simple poles at the three points over w = 0, X double poles there
  mdl.inv_t = solve_inverse(lt, lx, lgam, 3).f;
  mdl.inv_x = solve_inverse(lxx, lx, lgam, 6).f;

  mdl.d = point_D(mdl, m);
  val.d_on_curve = fiber::on_curve(mdl.delta, mdl.d);
  if (!val.d_on_curve) val.failures.emplace_back("D is not on the Weierstrass curve");

  // round trips through multiples of D and their sigma-conjugates
  const Eis sq_x = zeta2 * xq;
  const Eis sq_t = zeta * z;
  const CurvePoint<Eis> w_sq = omega_at(mdl, sq_x, sq_t);
  const auto back = omega_inverse(mdl, w_sq);
  if (back && back->first == sq_x && back->second == sq_t) ++val.round_trips; else ++val.round_trip_failures;
  FiberPoint w = FiberPoint::O();
  for (int i = 1; i <= 5 && !mdl.d.identity; ++i) {
    w = fiber::add(w, mdl.d);
    const auto p = omega_inverse(mdl, w);
    if (!p) continue;
    if (!h.eval(p->first, p->second).is_zero() || !(omega_at(mdl, p->first, p->second) == w)) {
      ++val.round_trip_failures;
      continue;
    }
    ++val.round_trips;
    const Eis sx = zeta2 * p->first;
    const Eis st = zeta * p->second;
    const auto ws = omega_at(mdl, sx, st);
    const auto ps = omega_inverse(mdl, ws);
    if (ps && ps->first == sx && ps->second == st) ++val.round_trips; else ++val.round_trip_failures;
  }
  if (val.round_trip_failures > 0) val.failures.emplace_back("omega round trip failed");
  if (!val.failures.empty()) throw ModelFailure(val.failures.front());
  return mdl;
}

CurvePoint<Eis> omega_at(const GenusOneModel& mdl, const Eis& x, const Eis& t) { return omega_impl(mdl, x, t); }
CurvePoint<Rat> omega_at(const GenusOneModel& mdl, const Rat& x, const Rat& t) { return omega_impl(mdl, x, t); }

std::optional<std::pair<Eis, Eis>> omega_inverse(const GenusOneModel& mdl, const CurvePoint<Eis>& w) {
  return inverse_impl(mdl, w);
}
std::optional<std::pair<Rat, Rat>> omega_inverse(const GenusOneModel& mdl, const FiberPoint& w) {
  return inverse_impl(mdl, w);
}

FiberPoint point_D(const GenusOneModel& mdl, const MultisectionCurve& m) {
  const Eis zeta = Eis::zeta();
  const Eis zeta2 = Eis::zeta2();
  const Eis xq(m.q.x);
  const Eis z(m.z_r());
  const CurvePoint<Eis> p1 = omega_at(mdl, zeta2 * xq, zeta * z);
  const CurvePoint<Eis> p2 = omega_at(mdl, zeta * xq, zeta2 * z);
  if (p1.identity || p2.identity) throw ModelFailure("conjugate point maps to the origin");
  try {
    algebra::eis_conjugate_sum(p1.x, p2.x);
    algebra::eis_conjugate_sum(p1.y, p2.y);
  } catch (const std::invalid_argument&) {
    throw ModelFailure("images of the conjugate points are not conjugate");
  }
  const CurvePoint<Eis> s = fiber::add(p1, p2);
  if (s.identity) return FiberPoint::O();
  if (!s.x.is_rational() || !s.y.is_rational()) throw ModelFailure("D is not rational");
  return FiberPoint::affine(s.x.re(), s.y.re());
}

DCertificate certify_D(const GenusOneModel& mdl) {
  if (mdl.d.identity) {
    DCertificate c{fiber::curve_for_constant(mdl.delta), {}};
    c.evidence.order = 1;
    return c;
  }
  fiber::FiberCurve curve = fiber::curve_for_constant(mdl.delta);
  return {curve, fiber::is_nontorsion(curve, mdl.d)};
}

Generation generate_points(const surface::Surface& s, const MultisectionCurve& m, const GenusOneModel& mdl, long count) {
  Generation gen;
  const auto yr = multisection::section_r(s, m.r);
  std::set<Rat> fibers;
  FiberPoint w = FiberPoint::O();
  for (long i = 1; i <= count; ++i) {
    w = fiber::add(w, mdl.d);
    const auto p = omega_inverse(mdl, w);
    if (!p) {
      gen.skipped.push_back(i);
      continue;
    }
    const auto& [x, t] = *p;
    surface::WeightedPoint pt{x, yr.eval(x, t), t, Rat(1)};
    if (!surface::on_surface(s, pt) || !m.g.eval(pt).is_zero()) {
      throw ModelFailure("generated point " + pt.str() + " is not on C_R");
    }
    gen.points.push_back({i, pt, surface::FiberId::at(t)});
    fibers.insert(t);
  }
  gen.distinct_fibers = fibers.size();
  return gen;
}

}  // namespace dp1::jacobian
