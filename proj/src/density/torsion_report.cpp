#include "dp1/density/torsion_report.hpp"

#include "dp1/algebra/roots.hpp"
#include "dp1/density/certificate.hpp"
#include "dp1/fiber/division_poly.hpp"

#include <algorithm>

namespace dp1::density {

using algebra::Rat;
using fiber::FiberPoint;

std::vector<TorsionPointRecord> rational_torsion(const fiber::FiberCurve& e, int mmax) {
  std::vector<Rat> xs;
  auto collect = [&](const algebra::Poly<Rat>& p) {
    if (p.degree() < 1) return;
    for (const auto& r : algebra::rational_roots(p)) xs.push_back(r.value);
  };
  for (int m = 2; m <= mmax; ++m) {
    const auto dp = fiber::division_poly(e, m);
    collect(dp.f);
  }
  if (mmax >= 2) collect(algebra::Poly<Rat>(std::vector<Rat>{e.k, 0, 0, 1}));  // y = 0
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<TorsionPointRecord> out;
  for (const auto& x : xs) {
    const Rat y2 = x * x * x + e.k;
    Rat y;
    if (!algebra::exact_root(y2, 2, y)) continue;
    for (const Rat& sy : y.is_zero() ? std::vector<Rat>{y} : std::vector<Rat>{-y, y}) {
      const FiberPoint p = FiberPoint::affine(x, sy);
      for (int m = 1; m <= mmax; ++m) {
        if (fiber::mul(m, p).identity) {
          out.push_back({p, m});
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.order != r.order) return l.order < r.order;
    if (l.point.x != r.point.x) return l.point.x < r.point.x;
    return l.point.y < r.point.y;
  });
  return out;
}

TorsionReport torsion_report(const surface::Surface& s, int mmax, int sample) {
  if (!surface::validate(s).valid()) throw std::invalid_argument("torsion_report: invalid surface");
  if (mmax < 2 || mmax > 12) throw std::invalid_argument("torsion_report: need 2 <= mmax <= 12");
  TorsionReport rep;
  for (int m = 2; m <= mmax; ++m) rep.loci.push_back(fiber::torsion_locus(s, m));
  std::vector<Rat> ts{Rat(0)};
  for (long h = 2; static_cast<int>(ts.size()) < 2 * sample + 2; h *= 2) {
    ts = {Rat(0)};
    const auto more = fiber_search_order(h);
    ts.insert(ts.end(), more.begin(), more.end());
  }
  for (const Rat& t : ts) {
    if (static_cast<int>(rep.fibers.size()) == sample) break;
    if (s.g_at(t).is_zero()) continue;
    const auto e = fiber::fiber_curve(s, surface::FiberId::at(t));
    rep.fibers.push_back({e.t, e.k, rational_torsion(e, mmax)});
  }
  return rep;
}

json TorsionReport::to_json() const {
  json loci_j = json::array();
  for (const auto& l : loci) {
    json item{{"m", l.m}, {"cofactor", monomials_json(l.cofactor)}, {"y_factor", l.y_factor}};
    if (l.y_factor) item["two_torsion"] = monomials_json(l.two_torsion);
    loci_j.push_back(item);
  }
  json fib = json::array();
  for (const auto& f : fibers) {
    json pts = json::array();
    for (const auto& p : f.points) pts.push_back({{"point", p.point.str()}, {"order", p.order}});
    fib.push_back({{"t", f.fiber.str()}, {"k", f.k.str()}, {"torsion", pts}});
  }
  return {{"loci", loci_j}, {"fibers", fib}};
}

}  // namespace dp1::density
