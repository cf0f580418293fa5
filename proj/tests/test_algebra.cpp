#include "dp1/algebra/bipoly.hpp"
#include "dp1/algebra/eis.hpp"
#include "dp1/algebra/linalg.hpp"
#include "dp1/algebra/local_expansion.hpp"
#include "dp1/algebra/rat.hpp"
#include "dp1/algebra/resultant.hpp"
#include "dp1/algebra/roots.hpp"

#include <doctest.h>

#include <random>

using namespace dp1::algebra;

namespace {

Rat random_rat(std::mt19937_64& rng, long range = 20) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return Rat(Int(num(rng)), Int(den(rng)));
}

Eis random_eis(std::mt19937_64& rng) { return Eis(random_rat(rng), random_rat(rng)); }

Poly<Rat> random_poly(std::mt19937_64& rng, int deg) {
  std::vector<Rat> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_rat(rng));
  return Poly<Rat>(c);
}

BiPoly<Rat> random_bipoly(std::mt19937_64& rng, int deg) {
  BiPoly<Rat> p;
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) p.add_term(i, j, random_rat(rng, 5));
  return p;
}

template <class T>
void check_ring_axioms(const T& a, const T& b, const T& c) {
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK(a - a == T());
}

// H for S=(162,0,6), R=(1:13:1:1), expanded by hand from the plane-model formula
BiPoly<Rat> h_p1() {
  BiPoly<Rat> h;
  h.add_term(3, 0, 676);
  h.add_term(2, 2, -9);
  h.add_term(1, 4, -1938);
  h.add_term(1, 1, -72);
  h.add_term(0, 6, 5183);
  h.add_term(0, 3, -7752);
  h.add_term(0, 0, 3912);
  return h;
}

}  // namespace

TEST_CASE("Rat is canonical and exact") {
  CHECK(Rat(Int(4), Int(-6)).str() == "-2/3");
  CHECK(Rat(Int(0), Int(-7)).den() == 1);
  CHECK(Rat::parse("-1343/676") == Rat(Int(-1343), Int(676)));
  CHECK(Rat::parse("5").str() == "5");
  CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK(pow(Rat(Int(2), Int(3)), 3) == Rat(Int(8), Int(27)));
}

TEST_CASE("power_free_part splits off sixth powers") {
  auto s = power_free_part(Int(-114892348050) * int_pow(Int(10), 6), 6);
  CHECK(s.free_part == Int(-114892348050));
  CHECK(s.root == 10);
  CHECK(s.complete);
  auto t = power_free_part(int_pow(Int(1000003), 6) * 7, 6);
  CHECK(t.free_part == 7);
  CHECK(t.root == 1000003);
  Int r;
  CHECK(exact_root(Int(-125), 3, r));
  CHECK(r == -5);
  CHECK_FALSE(exact_root(Int(-4), 2, r));
}

TEST_CASE("Eisenstein integers") {
  const Eis z = Eis::zeta();
  CHECK(pow(z, 3) == Eis(1));
  CHECK(Eis(1) + z + z * z == Eis(0));
  CHECK(z * z == Eis::zeta2());
  CHECK(z.conj() == z * z);
  CHECK(Eis(Rat(1), Rat(2)).str() == "1+2*zeta3");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Eis e = random_eis(rng);
    CHECK(e * e.conj() == Eis(e.norm()));
    CHECK(e.norm() >= Rat(0));
    CHECK((e.norm() == Rat(0)) == e.is_zero());
    if (!e.is_zero()) CHECK(e * e.inverse() == Eis(1));
  }
}

TEST_CASE("eis_conjugate_sum") {
  const Eis z = Eis::zeta();
  auto s = eis_conjugate_sum(Eis(1) + z, Eis(1) + z * z);
  CHECK(s.sum == Rat(1));
  CHECK(s.product == Rat(1));
  CHECK(eis_conjugate_sum(z, z * z).sum == Rat(-1));
  CHECK_THROWS_AS(eis_conjugate_sum(z, z), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    check_ring_axioms(random_rat(rng), random_rat(rng), random_rat(rng));
    check_ring_axioms(random_eis(rng), random_eis(rng), random_eis(rng));
    check_ring_axioms(random_poly(rng, 3), random_poly(rng, 4), random_poly(rng, 2));
    check_ring_axioms(random_bipoly(rng, 3), random_bipoly(rng, 2), random_bipoly(rng, 3));
  }
  CHECK(Poly<Rat>().degree() == -1);
  CHECK((random_poly(rng, 3) * Poly<Rat>()).is_zero());
}

TEST_CASE("polynomial division and gcd") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_poly(rng, 5), b = random_poly(rng, 2);
    const auto d = divmod(a, b);
    CHECK(d.quotient * b + d.remainder == a);
    CHECK(d.remainder.degree() < b.degree());
    const auto g = random_poly(rng, 2);
    CHECK(gcd(a * g, b * g).degree() >= 2);
  }
}

TEST_CASE("resultant") {
  const auto x = BiPoly<Rat>::var(Var::first);
  const auto y = BiPoly<Rat>::var(Var::second);
  const auto r = resultant(y * y - x, y - x, Var::second);
  CHECK(r == Poly<Rat>(std::vector<Rat>{0, -1, 1}));
  CHECK(resultant(y * y - x, y * y - x, Var::second).is_zero());
  CHECK_THROWS_AS(resultant(x + BiPoly<Rat>(Rat(1)), x * x, Var::second), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_bipoly(rng, 2) + y;
    const auto p = f * (random_bipoly(rng, 1) + y);
    const auto q = f * (random_bipoly(rng, 1) + x * y);
    CHECK(resultant(p, q, Var::second).is_zero());
    const auto p2 = y * y + random_bipoly(rng, 1);
    const auto q2 = y + x * x + Rat(i + 1);
    // p2(x, -x^2 - i - 1) is a nonzero polynomial of degree 4 in x
    CHECK(resultant(p2, q2, Var::second).degree() == 4);
  }
}

TEST_CASE("resultant eliminating Y reproduces the plane model up to a constant") {
  // polynomials in (X, Y) with coefficients in Q[T]
  using PT = Poly<Rat>;
  const PT t = PT::x();
  const PT g = PT::monomial(Rat(162), 6) + PT(Rat(6));
  BiPoly<PT> f;  // Y^2 - X^3 - g(T)
  f.add_term(0, 2, PT(Rat(1)));
  f.add_term(3, 0, PT(Rat(-1)));
  f.add_term(0, 0, -g);
  BiPoly<PT> cut;  // 3XT - 26Y + 323T^3 + 12
  cut.add_term(1, 0, PT(Rat(3)) * t);
  cut.add_term(0, 1, PT(Rat(-26)));
  cut.add_term(0, 0, PT::monomial(Rat(323), 3) + PT(Rat(12)));
  const Poly<PT> res = resultant(f, cut, Var::second);
  BiPoly<Rat> as_bi;
  for (int i = 0; i <= res.degree(); ++i)
    for (int j = 0; j <= res.coeff(i).degree(); ++j) as_bi.add_term(i, j, res.coeff(i).coeff(j));
  const BiPoly<Rat> h = h_p1();
  const Rat scale = as_bi.coeff(3, 0) / h.coeff(3, 0);
  CHECK(as_bi == h.map<Rat>([&](const Rat& c) { return scale * c; }));
}

TEST_CASE("rational_roots") {
  const Poly<Rat> cubic(std::vector<Rat>{1343, -2010, -9, 676});
  const auto roots = rational_roots(cubic);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == RationalRoot{Rat(Int(-1343), Int(676)), 1});
  CHECK(roots[1] == RationalRoot{Rat(1), 2});
  CHECK(rational_roots(Poly<Rat>(std::vector<Rat>{1, 0, 1})).empty());
  const auto one = rational_roots(Poly<Rat>(std::vector<Rat>{Rat(Int(-3), Int(7)), 1}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].value == Rat(Int(3), Int(7)));

  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rat> want;
    Poly<Rat> p(std::vector<Rat>{random_rat(rng, 1000) + Rat(1) + Rat(1000), 0, 1});  // x^2 + positive: no real roots
    for (int k = 0; k < 3; ++k) {
      const Rat r = random_rat(rng, 1000);
      want.push_back(r);
      p = p * Poly<Rat>(std::vector<Rat>{-r, 1});
    }
    p = p * Poly<Rat>(std::vector<Rat>{-want[0], 1});
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    const auto got = rational_roots(p);
    REQUIRE(got.size() == want.size());
    int total = 0;
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k].value == want[k]);
      total += got[k].multiplicity;
    }
    CHECK(total == 4);
  }
}

TEST_CASE("linear algebra kernel") {
  Matrix<Rat> m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) CHECK(row[0] * ns[0][0] + row[1] * ns[0][1] + row[2] * ns[0][2] == Rat(0));
}

TEST_CASE("local_expansion") {
  const BiPoly<Rat> h = h_p1();
  // Q = (-1343/676, 1) is a smooth point of H = 0
  const Rat xq(Int(-1343), Int(676));
  const BiPoly<Rat> t_minus = BiPoly<Rat>::var(Var::second) - BiPoly<Rat>(Rat(1));
  const auto one = BiPoly<Rat>(Rat(1));
  const auto s1 = local_expansion(t_minus, one, h, xq, Rat(1), 5);
  CHECK(s1.valuation() == 1);
  CHECK(s1.coeff(1) == Rat(1));
  const auto s2 = local_expansion(one, t_minus, h, xq, Rat(1), 5);
  CHECK(s2.valuation() == -1);
  CHECK_THROWS_AS(local_expansion(one, one, h, Rat(1), Rat(1), 3), NonSmoothCenter);
  CHECK_THROWS_AS(local_expansion(one, h, h, xq, Rat(1), 3), PoleAlongCurve);

  // expansion of a product equals the product of expansions
  const auto f = BiPoly<Rat>::var(Var::first) * BiPoly<Rat>::var(Var::first) + t_minus;
  const auto g = BiPoly<Rat>::var(Var::first) - BiPoly<Rat>(xq);
  const auto ef = local_expansion(f, t_minus, h, xq, Rat(1), 6);
  const auto eg = local_expansion(g, one, h, xq, Rat(1), 6);
  const auto efg = local_expansion(f * g, t_minus, h, xq, Rat(1), 6);
  const auto prod = ef * eg;
  for (int e = -1; e < std::min(prod.hi(), 7); ++e) CHECK(prod.coeff(e) == efg.coeff(e));

  // the same over Q(zeta) at the conjugate point (zeta^2 xq, zeta)
  const Eis z = Eis::zeta();
  const auto s3 = local_expansion(one, t_minus, h, Eis(xq) * z * z, z, 4);
  CHECK(s3.valuation() == 0);
}
