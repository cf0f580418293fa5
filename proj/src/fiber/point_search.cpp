#include "dp1/fiber/point_search.hpp"

#include <numeric>
#include <stdexcept>

namespace dp1::fiber {

namespace {

// quadratic residues mod 64, 63, 65 and 11 reject most non-squares cheaply
struct SquareFilter {
  bool r64[64]{}, r63[63]{}, r65[65]{}, r11[11]{};
  SquareFilter() {
    for (int i = 0; i < 64; ++i) r64[i * i % 64] = true;
    for (int i = 0; i < 63; ++i) r63[i * i % 63] = true;
    for (int i = 0; i < 65; ++i) r65[i * i % 65] = true;
    for (int i = 0; i < 11; ++i) r11[i * i % 11] = true;
  }
  bool maybe_square(const Int& n) const {
    if (n < 0) return false;
    if (!r64[mpz_fdiv_ui(n.get_mpz_t(), 64)]) return false;
    const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 63UL * 65 * 11);
    return r63[r % 63] && r65[r % 65] && r11[r % 11];
  }
};

}  // namespace

std::vector<FiberPoint> search_points(const FiberCurve& e, long bound) {
  if (bound < 1) throw std::invalid_argument("search_points: bound must be >= 1");
  static const SquareFilter filter;
  std::vector<FiberPoint> out;
  const Int& k = e.minimal_k;
  for (long v = 1; v <= bound; ++v) {
    const Int v2 = Int(v) * v;
    const Int kv6 = k * v2 * v2 * v2;
    for (long u = -bound; u <= bound; ++u) {
      if (std::gcd(u, v) != 1) continue;
      const Int uu = u;
      const Int w2 = uu * uu * uu + kv6;
      if (!filter.maybe_square(w2)) continue;
      if (mpz_perfect_square_p(w2.get_mpz_t()) == 0) continue;
      Int w;
      mpz_sqrt(w.get_mpz_t(), w2.get_mpz_t());
      const Rat x(uu, v2);
      const Int v3 = v2 * v;
      if (w == 0) {
        out.push_back(e.from_minimal(FiberPoint::affine(x, Rat(0))));
        continue;
      }
      out.push_back(e.from_minimal(FiberPoint::affine(x, Rat(Int(-w), v3))));
      out.push_back(e.from_minimal(FiberPoint::affine(x, Rat(w, v3))));
    }
  }
  return out;
}

}  // namespace dp1::fiber
