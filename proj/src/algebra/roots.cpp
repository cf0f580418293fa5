#include "dp1/algebra/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp1::algebra {

std::vector<Int> primitive_integer_coeffs(const Poly<Rat>& p) {
  if (p.is_zero()) throw std::invalid_argument("primitive_integer_coeffs of zero");
  Int l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  std::vector<Int> v;
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    v.push_back(c.num() * (l / c.den()));
    g = gcd(g, v.back());
  }
  if (v.back() < 0) g = -g;
  for (auto& c : v) c /= g;
  return v;
}

namespace {

using ModPoly = std::vector<long>;  // coefficients mod p, low degree first

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod_pow(long b, long e, long p) {
  long r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, long p) {
  const long inv = mod_pow(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const long f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - f * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool squarefree_mod(const ModPoly& f, long p) {
  ModPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(static_cast<long>(i % static_cast<std::size_t>(p)) * f[i] % p);
  trim(d);
  if (d.empty()) return false;
  ModPoly a = f, b = d;
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

Int eval_mod(const std::vector<Int>& c, const Int& x, const Int& m) {
  Int acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) if (n % d == 0) return false;
  return true;
}

// roots of a squarefree primitive integer polynomial of degree >= 1
std::vector<Rat> squarefree_roots(const std::vector<Int>& f) {
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return {Rat(-f[0], f[1])};
  // every nonzero root r satisfies |r| < 1 + max |f_i / f_deg|
  Int bound = 0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, Int(abs(f[i])));
  const Int lc = f[deg];
  bound = bound / abs(lc) + 2;
  const Int target = 2 * abs(lc) * bound + 1;

  std::vector<Int> df;
  for (std::size_t i = 1; i <= deg; ++i) df.push_back(f[i] * static_cast<unsigned long>(i));

  long p = static_cast<long>(deg) + 2;
  ModPoly fm;
  for (;; ++p) {
    if (!is_prime(p) || mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p)) != 0) continue;
    fm.clear();
    for (const auto& c : f) {
      Int r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
      fm.push_back(r.get_si());
    }
    if (squarefree_mod(fm, p)) break;
  }

  std::vector<Rat> out;
  for (long r0 = 0; r0 < p; ++r0) {
    long acc = 0;
    for (auto it = fm.rbegin(); it != fm.rend(); ++it) acc = (acc * r0 + *it) % p;
    if (acc != 0) continue;
    // Newton lifting, modulus squared each step
    Int r = r0;
    Int m = p;
    while (m <= target) {
      m = m * m;
      const Int fv = eval_mod(f, r, m);
      Int dv = eval_mod(df, r, m);
      Int inv;
      if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t()) == 0) break;
      r = r - fv * inv;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    }
    // a rational root a/b has b | lc, so lc * root is an integer of absolute value < target / 2
    Int n = lc * r;
    mpz_mod(n.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    if (2 * n > m) n -= m;
    const Rat cand(n, lc);
    // exact check: sum f_i a^i b^(deg-i) == 0
    Int acc2 = 0;
    Int ap = 1;
    Int bpow = 1;
    std::vector<Int> bpows(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      bpows[i] = bpow;
      bpow *= cand.den();
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      acc2 += f[i] * ap * bpows[deg - i];
      ap *= cand.num();
    }
    if (acc2 == 0) out.push_back(cand);
  }
  return out;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Poly<Rat>& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  if (p.degree() == 0) return {};
  const Poly<Rat> sqf = divmod(p, gcd(p, p.derivative())).quotient;
  std::vector<Int> f = primitive_integer_coeffs(sqf);
  std::vector<Rat> roots;
  // strip the root at zero so the constant term is nonzero
  if (f[0] == 0) {
    roots.emplace_back(0);
    f.erase(f.begin());
  }
  if (f.size() > 1) {
    auto rest = squarefree_roots(f);
    roots.insert(roots.end(), rest.begin(), rest.end());
  }
  std::sort(roots.begin(), roots.end());
  std::vector<RationalRoot> out;
  for (const auto& r : roots) {
    int mult = 0;
    Poly<Rat> q = p;
    const Poly<Rat> lin(std::vector<Rat>{-r, Rat(1)});
    while (true) {
      auto d = divmod(q, lin);
      if (!d.remainder.is_zero()) break;
      q = std::move(d.quotient);
      ++mult;
    }
    out.push_back({r, mult});
  }
  return out;
}

}  // namespace dp1::algebra
