#include "dp1/surface/surface.hpp"

#include <stdexcept>

namespace dp1::surface {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Poly<Rat> Surface::g() const { return Poly<Rat>(std::vector<Rat>{c, 0, 0, b, 0, 0, a}); }

Rat Surface::g_at(const Rat& t) const {
  const Rat t3 = t * t * t;
  return (a * t3 + b) * t3 + c;
}

std::string Surface::str() const { return a.str() + "," + b.str() + "," + c.str(); }

Surface Surface::parse(std::string_view text) {
  const auto parts = split(strip(text), ',');
  if (parts.size() != 3) throw std::invalid_argument("surface must be given as A,B,C");
  return {Rat::parse(strip(parts[0])), Rat::parse(strip(parts[1])), Rat::parse(strip(parts[2]))};
}

std::vector<std::string> SurfaceValidation::violations() const {
  std::vector<std::string> v;
  if (!a_nonzero) v.emplace_back("a=0");
  if (!c_nonzero) v.emplace_back("c=0");
  if (!discriminant_nonzero) v.emplace_back("b^2-4ac=0");
  return v;
}

SurfaceValidation validate(const Surface& s) {
  return {!s.a.is_zero(), !s.c.is_zero(), !(s.b * s.b - Rat(4) * s.a * s.c).is_zero()};
}

std::string WeightedPoint::str() const {
  return "(" + x.str() + ":" + y.str() + ":" + z.str() + ":" + w.str() + ")";
}

WeightedPoint WeightedPoint::parse(std::string_view text) {
  text = strip(text);
  char sep = ',';
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("unbalanced parenthesis in point");
    text = text.substr(1, text.size() - 2);
    sep = ':';
  }
  const auto parts = split(text, sep);
  if (parts.size() != 4) throw std::invalid_argument("point must have four coordinates");
  return {Rat::parse(strip(parts[0])), Rat::parse(strip(parts[1])), Rat::parse(strip(parts[2])),
          Rat::parse(strip(parts[3]))};
}

WeightedPoint rescale(const WeightedPoint& p, const Rat& l) {
  const Rat l2 = l * l;
  return {l2 * p.x, l2 * l * p.y, l * p.z, l * p.w};
}

WeightedPoint normalize(const WeightedPoint& p) {
  if (p.is_zero()) throw std::invalid_argument("normalize: all coordinates are zero");
  if (!p.w.is_zero()) return rescale(p, p.w.inverse());
  if (!p.z.is_zero()) return rescale(p, p.z.inverse());
  if (!p.x.is_zero() && !p.y.is_zero()) {
    const Rat s = p.x * p.x * p.x / (p.y * p.y);
    return {s, s, Rat(0), Rat(0)};
  }
  if (!p.y.is_zero()) {
    // y ~ l^3 y: the cube-free integer in the class of num * den^2
    const auto split = algebra::power_free_part(p.y.num() * p.y.den() * p.y.den(), 3);
    return {Rat(0), Rat(split.free_part), Rat(0), Rat(0)};
  }
  const auto split = algebra::power_free_part(p.x.num() * p.x.den(), 2);
  return {Rat(split.free_part), Rat(0), Rat(0), Rat(0)};
}

bool on_surface(const Surface& s, const WeightedPoint& p) {
  if (p.is_zero()) throw std::invalid_argument("on_surface: all coordinates are zero");
  const Rat z3 = p.z * p.z * p.z;
  const Rat w3 = p.w * p.w * p.w;
  return p.y * p.y == p.x * p.x * p.x + s.a * z3 * z3 + s.b * z3 * w3 + s.c * w3 * w3;
}

std::string FiberId::str() const { return infinite ? "inf" : t.str(); }

FiberId FiberId::parse(std::string_view text) {
  text = strip(text);
  if (text == "inf") return infinity();
  return at(Rat::parse(text));
}

FiberId fiber_param(const WeightedPoint& p) {
  if (p.z.is_zero() && p.w.is_zero()) throw std::invalid_argument("fiber_param: the base point lies on no fiber");
  if (p.w.is_zero()) return FiberId::infinity();
  return FiberId::at(p.z / p.w);
}

Rat fiber_constant(const Surface& s, const FiberId& t) { return t.infinite ? s.a : s.g_at(t.t); }

bool SurfaceSection::satisfies(const Surface& s) const {
  return q * q == p * p * p + s.g();
}

std::vector<WeightedPoint> section_points(const Surface& s, const SurfaceSection& sec, const std::vector<Rat>& ts) {
  if (!sec.satisfies(s)) throw std::invalid_argument("section_points: section does not lie on the surface");
  std::vector<WeightedPoint> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back({sec.p.eval(t), sec.q.eval(t), t, Rat(1)});
  return out;
}

}  // namespace dp1::surface
