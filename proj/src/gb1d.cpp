#include "gtc/gb1d.hpp"

#include "gtc/errors.hpp"

namespace gtc {

namespace {

Gf2Poly substitute_x(const LaurentPoly& p, std::int64_t gamma, std::int64_t l) {
  Gf2Poly out;
  for (const auto& e : p.support()) {
    // x == y^-gamma on the width-one torus; reduce mod the cycle length.
    std::int64_t d = (e.j - e.i * gamma) % l;
    if (d < 0) d += l;
    out.flip(d);
  }
  return out;
}

}  // namespace

GbCode1D reduce_to_1d(const LaurentPoly& f, const LaurentPoly& g, const TwistedTorus& torus) {
  if (torus.beta != 1) throw DomainError("reduce_to_1d: torus must have beta = 1");
  GbCode1D code;
  code.l = torus.alpha;
  code.f = substitute_x(f, torus.gamma, torus.alpha);
  code.g = substitute_x(g, torus.gamma, torus.alpha);
  if (code.f.is_zero() || code.g.is_zero())
    throw DomainError("reduce_to_1d: polynomial collapses to zero (degenerate code)");
  return code;
}

std::int64_t k_1d(const GbCode1D& code) {
  Gf2Poly cycle = Gf2Poly::monomial(code.l) + Gf2Poly::one();
  return 2 * gcd_univariate(gcd_univariate(code.f, code.g), cycle).degree();
}

Gf2Poly gcd_univariate(const Gf2Poly& p, const Gf2Poly& q) { return gcd(p, q); }

}  // namespace gtc
