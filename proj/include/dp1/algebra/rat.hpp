#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace dp1::algebra {

using Int = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Thin value wrapper over mpq_class so that generic code
/// never sees gmpxx expression templates.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rat(const Int& v) : q_(v) {}  // NOLINT
  Rat(const Int& num, const Int& den);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "n", "-n", "n/d" (decimal). Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat inverse() const;
  Rat abs() const { return Rat(::abs(q_)); }

  std::string str() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat pow(Rat base, unsigned exp);

/// Integer helpers used across modules.
Int int_pow(const Int& base, unsigned exp);
Int parse_int(std::string_view text);

/// Splits v = free_part * root^n by trial division plus a perfect-power test
/// on the leftover cofactor. `complete` is false when that cofactor is large
/// enough to still hide an n-th power of a big prime.
struct PowerFreeSplit {
  Int free_part;   // v / root^n, keeps the sign of v
  Int root;        // root >= 1
  bool complete;   // no unfactored cofactor could contain an n-th power
};
PowerFreeSplit power_free_part(const Int& v, unsigned n);

/// Exact n-th root if `v` is a perfect n-th power (sign allowed for odd n).
bool exact_root(const Int& v, unsigned n, Int& root);
bool exact_root(const Rat& v, unsigned n, Rat& root);

}  // namespace dp1::algebra
