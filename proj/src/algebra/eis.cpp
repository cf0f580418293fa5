#include "dp1/algebra/eis.hpp"

#include <ostream>
#include <stdexcept>

namespace dp1::algebra {

Eis& Eis::operator*=(const Eis& o) {
  // (a + b z)(c + d z) = ac - bd + (ad + bc - bd) z
  const Rat bd = im_ * o.im_;
  Rat re = re_ * o.re_ - bd;
  Rat im = re_ * o.im_ + im_ * o.re_ - bd;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Eis Eis::inverse() const {
  if (is_zero()) throw std::domain_error("Eis: inverse of zero");
  const Rat n = norm();
  const Eis c = conj();
  return Eis(c.re_ / n, c.im_ / n);
}

std::string Eis::str() const {
  if (im_.is_zero()) return re_.str();
  std::string s = re_.str();
  if (im_.sign() > 0) s += "+";
  return s + im_.str() + "*zeta3";
}

std::ostream& operator<<(std::ostream& os, const Eis& e) { return os << e.str(); }

Eis pow(Eis base, unsigned exp) {
  Eis acc(1);
  while (exp != 0) {
    if (exp & 1U) acc *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return acc;
}

ConjugateSum eis_conjugate_sum(const Eis& u, const Eis& v) {
  if (!(v == u.conj())) throw std::invalid_argument("eis_conjugate_sum: values are not conjugate");
  return {u.trace(), u.norm()};
}

Rat to_rational(const Eis& e) {
  if (!e.is_rational()) throw std::domain_error("value " + e.str() + " is not rational");
  return e.re();
}

}  // namespace dp1::algebra
