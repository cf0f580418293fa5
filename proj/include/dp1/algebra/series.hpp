#pragma once

#include "dp1/algebra/poly.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp1::algebra {

/// Truncated Laurent series sum_{e >= lo} c[e - lo] u^e + O(u^hi), hi = lo + c.size().
template <class F>
class Laurent {
 public:
  Laurent() = default;
  Laurent(int lo, std::vector<F> coeffs) : lo_(lo), c_(std::move(coeffs)) {}

  /// Power series from the first n coefficients of a polynomial in u.
  static Laurent from_poly(const Poly<F>& p, int precision) {
    std::vector<F> v(static_cast<std::size_t>(precision));
    for (int i = 0; i < precision; ++i) v[static_cast<std::size_t>(i)] = p.coeff(i);
    return Laurent(0, std::move(v));
  }
  static Laurent constant(const F& c, int precision) {
    std::vector<F> v(static_cast<std::size_t>(precision));
    if (precision > 0) v[0] = c;
    return Laurent(0, std::move(v));
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()); }
  F coeff(int e) const {
    if (e >= hi()) throw std::out_of_range("Laurent coefficient beyond known precision");
    return e < lo_ ? F() : c_[static_cast<std::size_t>(e - lo_)];
  }

  /// Exact valuation if some known coefficient is nonzero.
  std::optional<int> valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!is_zero_value(c_[i])) return lo_ + static_cast<int>(i);
    }
    return std::nullopt;
  }

  Laurent truncated(int new_hi) const {
    if (new_hi >= hi()) return *this;
    std::vector<F> v(c_.begin(), c_.begin() + std::max(0, new_hi - lo_));
    return Laurent(lo_, std::move(v));
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    const int lo = std::min(a.lo_, b.lo_);
    const int hi = std::min(a.hi(), b.hi());
    std::vector<F> v(static_cast<std::size_t>(std::max(0, hi - lo)));
    for (int e = lo; e < hi; ++e) v[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    return Laurent(lo, std::move(v));
  }
  friend Laurent operator-(const Laurent& a) {
    Laurent r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    const int va = a.valuation().value_or(a.hi());
    const int vb = b.valuation().value_or(b.hi());
    const int lo = va + vb;
    const int hi = std::min(a.hi() + vb, b.hi() + va);
    std::vector<F> v(static_cast<std::size_t>(std::max(0, hi - lo)));
    for (int i = va; i < a.hi(); ++i) {
      const F& ca = a.c_[static_cast<std::size_t>(i - a.lo_)];
      if (is_zero_value(ca)) continue;
      for (int j = vb; i + j < hi; ++j) {
        v[static_cast<std::size_t>(i + j - lo)] += ca * b.c_[static_cast<std::size_t>(j - b.lo_)];
      }
    }
    return Laurent(lo, std::move(v));
  }
  friend Laurent operator*(const F& s, const Laurent& a) {
    Laurent r = a;
    for (auto& c : r.c_) c = s * c;
    return r;
  }

  /// Multiplicative inverse; relative precision is preserved.
  Laurent inverse() const {
    const auto v = valuation();
    if (!v) throw std::domain_error("Laurent inverse: no nonzero coefficient within precision");
    const int n = hi() - *v;
    std::vector<F> a(c_.begin() + (*v - lo_), c_.end());
    std::vector<F> r(static_cast<std::size_t>(n));
    const F inv0 = F(1) / a[0];
    r[0] = inv0;
    for (int k = 1; k < n; ++k) {
      F s{};
      for (int i = 1; i <= k; ++i) s += a[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
      r[static_cast<std::size_t>(k)] = -s * inv0;
    }
    return Laurent(-*v, std::move(r));
  }
  friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.inverse(); }

  std::string str(const std::string& var = "u") const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (is_zero_value(c_[i])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].str() + ")*" + var + "^" + std::to_string(lo_ + static_cast<int>(i));
    }
    if (out.empty()) out = "0";
    return out + " + O(" + var + "^" + std::to_string(hi()) + ")";
  }

 private:
  int lo_ = 0;
  std::vector<F> c_;
};

}  // namespace dp1::algebra
