#pragma once

#include "dp1/algebra/rat.hpp"

#include <iosfwd>
#include <string>

namespace dp1::algebra {

/// Element re + im*zeta of Q(zeta), zeta a primitive cube root of unity,
/// zeta^2 = -1 - zeta.
class Eis {
 public:
  Eis() = default;
  Eis(Rat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Eis(long re) : re_(re) {}            // NOLINT
  Eis(int re) : re_(re) {}             // NOLINT
  Eis(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static Eis zeta() { return Eis(Rat(0), Rat(1)); }
  static Eis zeta2() { return Eis(Rat(-1), Rat(-1)); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_rational() const { return im_.is_zero(); }

  /// Galois conjugation zeta -> zeta^2.
  Eis conj() const { return Eis(re_ - im_, -im_); }
  Rat norm() const { return re_ * re_ - re_ * im_ + im_ * im_; }
  Rat trace() const { return Rat(2) * re_ - im_; }
  Eis inverse() const;

  std::string str() const;

  Eis& operator+=(const Eis& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Eis& operator-=(const Eis& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Eis& operator*=(const Eis& o);
  Eis& operator/=(const Eis& o) { return *this *= o.inverse(); }

  friend Eis operator+(Eis a, const Eis& b) { return a += b; }
  friend Eis operator-(Eis a, const Eis& b) { return a -= b; }
  friend Eis operator*(Eis a, const Eis& b) { return a *= b; }
  friend Eis operator/(Eis a, const Eis& b) { return a /= b; }
  friend Eis operator-(const Eis& a) { return Eis(-a.re_, -a.im_); }
  friend bool operator==(const Eis& a, const Eis& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Rat re_;
  Rat im_;
};

std::ostream& operator<<(std::ostream& os, const Eis& e);

Eis pow(Eis base, unsigned exp);

/// Symmetric functions of a pair of Galois-conjugate values.
struct ConjugateSum {
  Rat sum;
  Rat product;
};

/// Throws std::invalid_argument unless v == conj(u).
ConjugateSum eis_conjugate_sum(const Eis& u, const Eis& v);

/// Rational value of an element known to lie in Q; throws otherwise.
Rat to_rational(const Eis& e);

}  // namespace dp1::algebra
