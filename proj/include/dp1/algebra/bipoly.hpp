#pragma once

#include "dp1/algebra/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dp1::algebra {

/// Variable selector for BiPoly. Most of the code base uses the pair (X, T),
/// but the type itself is agnostic about names.
enum class Var { first, second };

/// Sparse bivariate polynomial, exponent pair -> coefficient, no stored zeros.
template <class F>
class BiPoly {
 public:
  using Exp = std::pair<int, int>;
  using Terms = std::map<Exp, F>;

  BiPoly() = default;
  BiPoly(F c) { add_term(0, 0, std::move(c)); }  // NOLINT(google-explicit-constructor)

  static BiPoly var(Var v) {
    BiPoly p;
    if (v == Var::first) p.add_term(1, 0, F(1)); else p.add_term(0, 1, F(1));
    return p;
  }
  static BiPoly monomial(F c, int i, int j) {
    BiPoly p;
    p.add_term(i, j, std::move(c));
    return p;
  }
  /// Embeds a univariate polynomial as a polynomial in the chosen variable.
  static BiPoly from_poly(const Poly<F>& p, Var v) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k) {
      if (v == Var::first) r.add_term(k, 0, p.coeff(k)); else r.add_term(0, k, p.coeff(k));
    }
    return r;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  F coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? F() : it->second;
  }

  void add_term(int i, int j, const F& c) {
    if (is_zero_value(c)) return;
    auto [it, inserted] = t_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_value(it->second)) t_.erase(it);
    }
  }

  int degree(Var v) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, v == Var::first ? e.first : e.second);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
    return d;
  }

  template <class E>
  E eval(const E& x, const E& y) const {
    const int dx = degree(Var::first);
    const int dy = degree(Var::second);
    if (dx < 0) return E{};
    std::vector<E> xp(static_cast<std::size_t>(dx) + 1), yp(static_cast<std::size_t>(dy) + 1);
    xp[0] = E(1);
    yp[0] = E(1);
    for (int i = 1; i <= dx; ++i) xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
    for (int j = 1; j <= dy; ++j) yp[static_cast<std::size_t>(j)] = yp[static_cast<std::size_t>(j - 1)] * y;
    E acc{};
    for (const auto& [e, c] : t_) {
      acc += E(c) * xp[static_cast<std::size_t>(e.first)] * yp[static_cast<std::size_t>(e.second)];
    }
    return acc;
  }

  BiPoly partial(Var v) const {
    BiPoly r;
    for (const auto& [e, c] : t_) {
      const int k = v == Var::first ? e.first : e.second;
      if (k == 0) continue;
      if (v == Var::first) r.add_term(e.first - 1, e.second, F(static_cast<long>(k)) * c);
      else r.add_term(e.first, e.second - 1, F(static_cast<long>(k)) * c);
    }
    return r;
  }

  /// Coefficients with respect to `v`, each a univariate polynomial in the other variable.
  Poly<Poly<F>> as_poly_in(Var v) const {
    const int d = degree(v);
    if (d < 0) return {};
    std::vector<std::vector<F>> rows(static_cast<std::size_t>(d) + 1);
    for (const auto& [e, c] : t_) {
      const int k = v == Var::first ? e.first : e.second;
      const int o = v == Var::first ? e.second : e.first;
      auto& row = rows[static_cast<std::size_t>(k)];
      if (static_cast<int>(row.size()) <= o) row.resize(static_cast<std::size_t>(o) + 1);
      row[static_cast<std::size_t>(o)] = c;
    }
    std::vector<Poly<F>> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return Poly<Poly<F>>(std::move(out));
  }

  /// Substitutes first := p(second), giving a polynomial in the second variable.
  Poly<F> substitute_first(const Poly<F>& p) const {
    Poly<F> acc;
    const auto coeffs = as_poly_in(Var::first);
    for (int k = coeffs.degree(); k >= 0; --k) acc = acc * p + coeffs.coeff(k);
    return acc;
  }
  /// Fixes second := s, giving a polynomial in the first variable.
  Poly<F> specialize_second(const F& s) const {
    std::vector<F> v(static_cast<std::size_t>(std::max(degree(Var::first), -1) + 1));
    const int dy = degree(Var::second);
    std::vector<F> sp(static_cast<std::size_t>(std::max(dy, 0)) + 1);
    sp[0] = F(1);
    for (int j = 1; j <= dy; ++j) sp[static_cast<std::size_t>(j)] = sp[static_cast<std::size_t>(j - 1)] * s;
    for (const auto& [e, c] : t_) v[static_cast<std::size_t>(e.first)] += c * sp[static_cast<std::size_t>(e.second)];
    return Poly<F>(std::move(v));
  }

  template <class G, class Fn>
  BiPoly<G> map(Fn fn) const {
    BiPoly<G> r;
    for (const auto& [e, c] : t_) r.add_term(e.first, e.second, fn(c));
    return r;
  }

  /// Taylor coefficients at (x0, y0): returns P(x0 + u, y0 + v) truncated to
  /// total degree <= max_total (all terms when max_total < 0).
  template <class E>
  BiPoly<E> shifted(const E& x0, const E& y0, int max_total = -1) const {
    const int dx = std::max(degree(Var::first), 0);
    const int dy = std::max(degree(Var::second), 0);
    const int dm = std::max(dx, dy);
    std::vector<std::vector<long>> binom(static_cast<std::size_t>(dm) + 1);
    for (int n = 0; n <= dm; ++n) {
      binom[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) {
        binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
            binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
      }
    }
    std::vector<E> xp(static_cast<std::size_t>(dx) + 1), yp(static_cast<std::size_t>(dy) + 1);
    xp[0] = E(1);
    yp[0] = E(1);
    for (int i = 1; i <= dx; ++i) xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x0;
    for (int j = 1; j <= dy; ++j) yp[static_cast<std::size_t>(j)] = yp[static_cast<std::size_t>(j - 1)] * y0;
    BiPoly<E> out;
    for (const auto& [e, c] : t_) {
      const auto [i, j] = e;
      for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= j; ++b) {
          if (max_total >= 0 && a + b > max_total) continue;
          const long m = binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                         binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];
          out.add_term(a, b, E(c) * E(m) * xp[static_cast<std::size_t>(i - a)] * yp[static_cast<std::size_t>(j - b)]);
        }
      }
    }
    return out;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, -c);
    return *this;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a) {
    BiPoly r;
    for (const auto& [e, c] : a.t_) r.t_.emplace(e, -c);
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.t_) {
      for (const auto& [eb, cb] : b.t_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  /// Sorted monomial list: descending total degree, then descending first exponent.
  std::vector<std::pair<Exp, F>> sorted_terms() const {
    std::vector<std::pair<Exp, F>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
      const int dl = l.first.first + l.first.second;
      const int dr = r.first.first + r.first.second;
      if (dl != dr) return dl > dr;
      return l.first.first > r.first.first;
    });
    return v;
  }

  std::string str(const std::string& xname = "X", const std::string& yname = "T") const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : sorted_terms()) {
      std::string cs = c.str();
      const bool neg = cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
      if (neg) cs.erase(0, 1);
      if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono;
      auto power = [&](const std::string& n, int k) {
        if (k == 0) return;
        if (!mono.empty()) mono += "*";
        mono += n;
        if (k > 1) mono += "^" + std::to_string(k);
      };
      power(xname, e.first);
      power(yname, e.second);
      if (mono.empty()) out += cs;
      else out += (cs == "1" ? "" : cs + "*") + mono;
    }
    return out;
  }

 private:
  Terms t_;
};

}  // namespace dp1::algebra
