#include "dp1/fiber/division_poly.hpp"
#include "dp1/fiber/fiber_curve.hpp"
#include "dp1/fiber/point_search.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace dp1;
using algebra::Int;
using algebra::Rat;
using fiber::FiberPoint;
using surface::FiberId;
using surface::Surface;

namespace {

FiberPoint pt(long x, long y) { return FiberPoint::affine(Rat(x), Rat(y)); }

Rat psi_at(const fiber::DivisionPoly& d, const FiberPoint& p) {
  const Rat f = d.f.eval(p.x);
  return d.y_factor ? Rat(2) * p.y * f : f;
}

// Smallest n <= 12 with n P = O, or 0.
int brute_order(const FiberPoint& p) {
  for (int n = 1; n <= 12; ++n)
    if (fiber::mul(n, p).identity) return n;
  return 0;
}

}  // namespace

TEST_CASE("group law on y^2 = x^3 + 168") {
  const auto e = fiber::curve_for_constant(Rat(168));
  const FiberPoint p = pt(1, 13);
  REQUIRE(e.contains(p));
  const FiberPoint two = fiber::mul(2, p);
  CHECK(two.x == Rat(Int(-1343), Int(676)));
  CHECK(two.y == Rat(Int(-222431), Int(17576)));
  CHECK(fiber::add(p, fiber::negate(p)).identity);
  CHECK(fiber::add(p, FiberPoint::O()) == p);
  CHECK(fiber::mul(-3, p) == fiber::negate(fiber::mul(3, p)));
  CHECK(fiber::mul(0, p).identity);
}

TEST_CASE("small torsion") {
  CHECK(fiber::mul(3, pt(0, 4)).identity);
  CHECK_FALSE(fiber::mul(1, pt(0, 4)).identity);
  CHECK(brute_order(pt(2, 3)) == 6);  // y^2 = x^3 + 1
  CHECK(brute_order(pt(-1, 0)) == 2);
  CHECK(brute_order(pt(0, 1)) == 3);
  CHECK(brute_order(pt(12, 36)) == 3);  // y^2 = x^3 - 432

  const auto e16 = fiber::curve_for_constant(Rat(16));
  const auto ev = fiber::is_nontorsion(e16, pt(0, 4));
  CHECK_FALSE(ev.nontorsion);
  CHECK(ev.order == 3);
  CHECK(ev.lutz_nagell.torsion_candidate());
  REQUIRE(ev.multiples.size() == 6);
  CHECK(ev.multiples[2].identity);

  const auto e1 = fiber::curve_for_constant(Rat(1));
  CHECK(fiber::is_nontorsion(e1, pt(2, 3)).order == 6);
}

TEST_CASE("Lutz-Nagell data") {
  const auto e = fiber::curve_for_constant(Rat(168));
  const auto ln = fiber::lutz_nagell(e, pt(1, 13));
  CHECK(ln.integral);
  CHECK_FALSE(ln.y2_divides_disc);  // 169 does not divide 432 * 168^2
  CHECK(ln.verdict() == "infinite order");
  const auto ln2 = fiber::lutz_nagell(e, fiber::mul(2, pt(1, 13)));
  CHECK_FALSE(ln2.integral);
  CHECK(fiber::is_nontorsion(e, pt(1, 13)).nontorsion);
}

TEST_CASE("sixth-power-free minimal model") {
  const auto e = fiber::curve_for_constant(Rat(Int(250243), Int(15625)));
  // 250243 / 5^6 scaled by 5^6: minimal constant 250243
  CHECK(e.minimal_k == Int(250243));
  CHECK(e.scale == Rat(5));
  const FiberPoint p = FiberPoint::affine(Rat(Int(-63), Int(25)), Rat(Int(-14), Int(125)));
  REQUIRE(e.contains(p));
  CHECK(e.to_minimal(p) == pt(-63, -14));
  CHECK(e.from_minimal(pt(-63, -14)) == p);
  const auto e2 = fiber::curve_for_constant(Rat(64 * 3));
  CHECK(e2.minimal_k == Int(3));
  CHECK_THROWS_AS(fiber::fiber_curve({Rat(1), Rat(0), Rat(-1)}, FiberId::at(Rat(1))), fiber::SingularFiber);
}

TEST_CASE("division polynomials") {
  const Rat k(168);
  const auto e = fiber::curve_for_constant(k);
  const auto d3 = fiber::division_poly(e, 3);
  CHECK_FALSE(d3.y_factor);
  CHECK(d3.f == algebra::Poly<Rat>({Rat(0), Rat(12) * k, Rat(0), Rat(0), Rat(3)}));
  CHECK(fiber::division_poly(e, 2).y_factor);
  CHECK(fiber::division_poly(e, 2).f == algebra::Poly<Rat>(Rat(1)));
  CHECK(fiber::division_poly(e, 1).f == algebra::Poly<Rat>(Rat(1)));

  // x(mP) = x - psi_{m-1} psi_{m+1} / psi_m^2 on random non-torsion points
  for (const FiberPoint& p : {pt(1, 13), pt(22, 104), fiber::mul(2, pt(1, 13))}) {
    REQUIRE(e.contains(p));
    for (int m = 2; m <= 11; ++m) {
      const Rat pm = psi_at(fiber::division_poly(e, m), p);
      const Rat pl = psi_at(fiber::division_poly(e, m - 1), p);
      const Rat pr = psi_at(fiber::division_poly(e, m + 1), p);
      CHECK(fiber::mul(m, p).x == p.x - pl * pr / (pm * pm));
    }
  }

  // roots of psi_m at points of order m
  const auto e1 = fiber::curve_for_constant(Rat(1));
  CHECK(psi_at(fiber::division_poly(e1, 2), pt(-1, 0)).is_zero());
  CHECK(psi_at(fiber::division_poly(e1, 3), pt(0, 1)).is_zero());
  CHECK(psi_at(fiber::division_poly(e1, 6), pt(2, 3)).is_zero());
  CHECK_FALSE(psi_at(fiber::division_poly(e1, 3), pt(2, 3)).is_zero());
  CHECK(psi_at(fiber::division_poly(fiber::curve_for_constant(Rat(16)), 3), pt(0, 4)).is_zero());
  CHECK(fiber::division_poly(e, 3).str().find("x^4") != std::string::npos);
}

TEST_CASE("torsion loci in the (x, t) plane") {
  const Surface s{Rat(243), Rat(0), Rat(16)};
  const auto t2 = fiber::torsion_locus(s, 2);
  CHECK(t2.y_factor);
  CHECK(t2.cofactor.total_degree() == 0);
  const auto t3 = fiber::torsion_locus(s, 3);
  CHECK_FALSE(t3.y_factor);
  // x = 0 is a branch of T_3: f_3(0, t) = 0 identically
  CHECK(t3.cofactor.substitute_first(algebra::Poly<Rat>(Rat(0))).is_zero());
  CHECK(t3.locus().eval(Rat(0), Rat(0)).is_zero());
  const auto t6 = fiber::torsion_locus(s, 6);
  CHECK(t6.locus().eval(Rat(2), Rat(0)) != Rat(0));
}

TEST_CASE("search_points finds the known points") {
  const auto e = fiber::curve_for_constant(Rat(168));
  const auto pts = fiber::search_points(e, 30);
  CHECK(std::find(pts.begin(), pts.end(), pt(1, 13)) != pts.end());
  CHECK(std::find(pts.begin(), pts.end(), pt(22, 104)) != pts.end());
  for (const auto& p : pts) CHECK(e.contains(p));
  const auto e5 = fiber::curve_for_constant(Rat(Int(250243), Int(15625)));
  const auto pts5 = fiber::search_points(e5, 100);
  const FiberPoint w = FiberPoint::affine(Rat(Int(-63), Int(25)), Rat(Int(-14), Int(125)));
  CHECK(std::find(pts5.begin(), pts5.end(), w) != pts5.end());
}

TEST_CASE("group law and torsion tests on harvested points") {
  // fibers t = 0 of y^2 = x^3 + z^6 + k w^6; these k have at least 10 points below height 300
  const std::vector<long> ks{-207, -147, -39, 8, 9, 15, 17, 24, 36, 37, 57, 63, 65, 73, 80, 89, 100, 108, 113, 141};
  std::vector<std::pair<fiber::FiberCurve, std::vector<FiberPoint>>> fibers;
  std::size_t total = 0;
  for (long k : ks) {
    const auto e = fiber::fiber_curve({Rat(1), Rat(0), Rat(k)}, FiberId::at(Rat(0)));
    auto pts = fiber::search_points(e, 300);
    REQUIRE(pts.size() >= 10);
    pts.resize(10);
    total += pts.size();
    fibers.emplace_back(e, pts);
  }
  REQUIRE(fibers.size() == 20);
  REQUIRE(total == 200);
  std::set<int> orders;
  std::mt19937_64 rng(5);
  for (const auto& [e, pts] : fibers) {
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int i = 0; i < 10; ++i) {
      const auto &a = pts[pick(rng)], &b = pts[pick(rng)], &c = pts[pick(rng)];
      CHECK(fiber::add(fiber::add(a, b), c) == fiber::add(a, fiber::add(b, c)));
      CHECK(fiber::add(a, b) == fiber::add(b, a));
      CHECK(e.contains(fiber::add(a, b)));
    }
    for (const auto& p : pts) {
      const auto ev = fiber::is_nontorsion(e, p);  // throws if 6P and Lutz-Nagell disagree
      const int ord = brute_order(p);
      CHECK(ev.nontorsion == (ord == 0));
      if (!ev.nontorsion) {
        CHECK(ev.order == ord);
        CHECK(ev.lutz_nagell.torsion_candidate());
        orders.insert(ord);
      }
    }
  }
  for (int o : orders) CHECK((o == 1 || o == 2 || o == 3 || o == 6));
  CHECK(orders.count(2) == 1);
  CHECK(orders.count(3) == 1);
}
