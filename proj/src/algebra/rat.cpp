#include "dp1/algebra/rat.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace dp1::algebra {

Rat::Rat(const Int& num, const Int& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1 / q_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rat::str() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(Rat base, unsigned exp) {
  Rat acc(1);
  while (exp != 0) {
    if (exp & 1U) acc *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return acc;
}

Int int_pow(const Int& base, unsigned exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || s == "-") throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = (s.front() == '-') ? 1 : 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return Int(s, 10);
}

namespace {

constexpr unsigned kTrialBound = 200000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = static_cast<unsigned long>(i) * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace

PowerFreeSplit power_free_part(const Int& v, unsigned n) {
  if (v == 0) throw std::domain_error("power_free_part of zero");
  Int m = ::abs(v);
  Int free_part = 1;
  Int root = 1;
  for (unsigned p : small_primes()) {
    if (m == 1) break;
    // once p^n exceeds the cofactor, no larger prime can occur to the n-th power
    if (int_pow(Int(p), n) > m) {
      free_part *= m;
      m = 1;
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e == 0) continue;
    root *= int_pow(Int(p), e / n);
    free_part *= int_pow(Int(p), e % n);
  }
  bool complete = true;
  if (m != 1) {
    // all prime factors of m exceed the trial bound
    Int r;
    if (exact_root(m, n, r)) {
      root *= r;
    } else {
      free_part *= m;
      complete = int_pow(Int(kTrialBound), n) > m;
    }
  }
  if (v < 0) free_part = -free_part;
  return {free_part, root, complete};
}

bool exact_root(const Int& v, unsigned n, Int& root) {
  if (v < 0 && n % 2 == 0) return false;
  Int a = ::abs(v);
  const int exact = mpz_root(root.get_mpz_t(), a.get_mpz_t(), n);
  if (exact == 0) return false;
  if (v < 0) root = -root;
  return true;
}

bool exact_root(const Rat& v, unsigned n, Rat& root) {
  Int rn, rd;
  if (!exact_root(v.num(), n, rn) || !exact_root(v.den(), n, rd)) return false;
  root = Rat(rn, rd);
  return true;
}

}  // namespace dp1::algebra
