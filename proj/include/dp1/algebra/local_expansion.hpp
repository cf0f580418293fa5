#pragma once

#include "dp1/algebra/bipoly.hpp"
#include "dp1/algebra/rat.hpp"
#include "dp1/algebra/series.hpp"

#include <stdexcept>
#include <vector>

namespace dp1::algebra {

class NonSmoothCenter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleAlongCurve : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parametrization (X(u), T(u)) of a plane curve near one of its smooth points.
/// The parameter is T - t0 when dH/dX != 0 at the center, else X - x0.
template <class E>
struct LocalBranch {
  E x0;
  E t0;
  bool param_is_t = true;
  Laurent<E> x;
  Laurent<E> t;
  int precision = 0;
};

template <class E>
LocalBranch<E> local_branch(const BiPoly<Rat>& curve, const E& x0, const E& t0, int precision) {
  if (!is_zero_value(curve.eval(x0, t0))) throw std::invalid_argument("local_branch: center is not on the curve");
  const E hx = curve.partial(Var::first).eval(x0, t0);
  const E ht = curve.partial(Var::second).eval(x0, t0);
  if (is_zero_value(hx) && is_zero_value(ht)) throw NonSmoothCenter("local_branch: singular center");
  LocalBranch<E> br{x0, t0, !is_zero_value(hx), {}, {}, precision};
  const Var solved = br.param_is_t ? Var::first : Var::second;
  const E known0 = br.param_is_t ? t0 : x0;
  const E solved0 = br.param_is_t ? x0 : t0;
  const E deriv = br.param_is_t ? hx : ht;

  // curve as a polynomial in the solved variable with coefficients that are
  // power series in u (the known variable is known0 + u)
  const auto rows = curve.as_poly_in(solved);
  std::vector<std::vector<E>> cser;
  for (int k = 0; k <= rows.degree(); ++k) {
    const Poly<E> shifted =
        rows.coeff(k).template map<E>([](const Rat& r) { return E(r); }).compose(Poly<E>(std::vector<E>{known0, E(1)}));
    std::vector<E> v(static_cast<std::size_t>(precision));
    for (int i = 0; i < precision; ++i) v[static_cast<std::size_t>(i)] = shifted.coeff(i);
    cser.push_back(std::move(v));
  }
  auto mul_trunc = [precision](const std::vector<E>& a, const std::vector<E>& b) {
    std::vector<E> r(static_cast<std::size_t>(precision));
    for (int i = 0; i < precision; ++i) {
      if (is_zero_value(a[static_cast<std::size_t>(i)])) continue;
      for (int j = 0; i + j < precision; ++j) r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return r;
  };
  std::vector<E> s(static_cast<std::size_t>(precision));
  if (precision > 0) s[0] = solved0;
  for (int n = 1; n < precision; ++n) {
    // with s known mod u^n, the u^n coefficient of curve(s) is linear in s_n
    std::vector<E> acc(static_cast<std::size_t>(precision));
    for (int k = rows.degree(); k >= 0; --k) {
      acc = mul_trunc(acc, s);
      for (int i = 0; i < precision; ++i) acc[static_cast<std::size_t>(i)] += cser[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }
    s[static_cast<std::size_t>(n)] = -acc[static_cast<std::size_t>(n)] / deriv;
  }
  std::vector<E> lin(static_cast<std::size_t>(precision));
  if (precision > 0) lin[0] = known0;
  if (precision > 1) lin[1] = E(1);
  if (br.param_is_t) {
    br.x = Laurent<E>(0, std::move(s));
    br.t = Laurent<E>(0, std::move(lin));
  } else {
    br.x = Laurent<E>(0, std::move(lin));
    br.t = Laurent<E>(0, std::move(s));
  }
  return br;
}

/// Power series of a polynomial restricted to the branch.
template <class E, class F>
Laurent<E> expand_on(const BiPoly<F>& f, const LocalBranch<E>& br) {
  const int dx = std::max(f.degree(Var::first), 0);
  const int dt = std::max(f.degree(Var::second), 0);
  std::vector<Laurent<E>> xp{Laurent<E>::constant(E(1), br.precision)};
  std::vector<Laurent<E>> tp{Laurent<E>::constant(E(1), br.precision)};
  for (int i = 1; i <= dx; ++i) xp.push_back(xp.back() * br.x);
  for (int j = 1; j <= dt; ++j) tp.push_back(tp.back() * br.t);
  std::vector<E> acc(static_cast<std::size_t>(br.precision));
  for (const auto& [e, c] : f.terms()) {
    const Laurent<E> m = xp[static_cast<std::size_t>(e.first)] * tp[static_cast<std::size_t>(e.second)];
    for (int i = std::max(m.lo(), 0); i < std::min(m.hi(), br.precision); ++i) acc[static_cast<std::size_t>(i)] += E(c) * m.coeff(i);
  }
  return Laurent<E>(0, std::move(acc));
}

/// Laurent expansion of num/den along the curve at a smooth center, with all
/// coefficients of exponent <= order exact.
template <class E, class F>
Laurent<E> local_expansion(const BiPoly<F>& num, const BiPoly<F>& den, const BiPoly<Rat>& curve, const E& x0,
                           const E& t0, int order, int max_precision = 96) {
  if (den.is_zero()) throw PoleAlongCurve("local_expansion: zero denominator");
  int precision = std::max(order + 2, 4);
  while (true) {
    const auto br = local_branch(curve, x0, t0, precision);
    const Laurent<E> d = expand_on(den, br);
    const auto vd = d.valuation();
    if (vd && precision - *vd > order + 1) {
      const Laurent<E> n = expand_on(num, br);
      const Laurent<E> q = n / d;
      if (q.hi() > order) return q.truncated(order + 1);
    }
    if (precision >= max_precision) throw PoleAlongCurve("local_expansion: denominator vanishes identically on the curve branch");
    precision = std::min(precision * 2, max_precision);
  }
}

}  // namespace dp1::algebra
