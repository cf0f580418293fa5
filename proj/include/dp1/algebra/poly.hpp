#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dp1::algebra {

template <class F>
bool is_zero_value(const F& v) {
  return v == F();
}

/// Dense univariate polynomial; trailing zeros are never stored, so the
/// zero polynomial has an empty coefficient vector and degree -1.
template <class F>
class Poly {
 public:
  Poly() = default;
  Poly(F c) { if (!is_zero_value(c)) c_.push_back(std::move(c)); }  // NOLINT(google-explicit-constructor)
  explicit Poly(long v) : Poly(F(v)) {}
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(F c, int n) {
    if (is_zero_value(c)) return {};
    std::vector<F> v(static_cast<std::size_t>(n) + 1);
    v[static_cast<std::size_t>(n)] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const {
    return (i < 0 || i > degree()) ? F() : c_[static_cast<std::size_t>(i)];
  }
  const F& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class E>
  E eval(const E& x) const {
    E acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + E(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = F(static_cast<long>(i)) * c_[i];
    return Poly(std::move(v));
  }

  /// p(q(x)) by Horner.
  Poly compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it);
    return acc;
  }

  template <class G, class Fn>
  Poly<G> map(Fn fn) const {
    std::vector<G> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(fn(c));
    return Poly<G>(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_value(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Coefficients rendered highest degree first, e.g. "3*X^2 - X + 1/2".
  std::string str(const std::string& var = "X") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const F& c = c_[static_cast<std::size_t>(i)];
      if (is_zero_value(c)) continue;
      std::string cs = to_str(c);
      bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
      if (neg) cs.erase(0, 1);
      if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (i == 0) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  template <class C>
  static std::string to_str(const C& c) {
    if constexpr (requires { c.str(); }) {
      return c.str();
    } else {
      return std::to_string(c);
    }
  }
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
struct PolyDivision {
  Poly<F> quotient;
  Poly<F> remainder;
};

/// Euclidean division over a field.
template <class F>
PolyDivision<F> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<F> r = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly<F>(), a};
  std::vector<F> q(static_cast<std::size_t>(da - db) + 1);
  const F inv_lead = F(1) / b.lead();
  for (int i = da - db; i >= 0; --i) {
    const F f = r[static_cast<std::size_t>(i + db)] * inv_lead;
    if (is_zero_value(f)) continue;
    q[static_cast<std::size_t>(i)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i + j)] -= f * b.coeff(j);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  const F inv = F(1) / p.lead();
  return p.template map<F>([&](const F& c) { return c * inv; });
}

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

}  // namespace dp1::algebra
