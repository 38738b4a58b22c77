#pragma once

#include <cstdint>

#include "gtc/errors.hpp"
#include "gtc/laurent.hpp"

namespace gtc {

// Twisted torus defined by lattice vectors a1 = (0, alpha), a2 = (beta, gamma).
// gamma is normalized into [0, alpha); negative inputs are accepted since
// x^beta y^gamma - 1 generates the same relation modulo y^alpha - 1.
struct TwistedTorus {
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  std::int64_t gamma = 0;

  TwistedTorus() = default;
  TwistedTorus(std::int64_t a, std::int64_t b, std::int64_t g) : alpha(a), beta(b) {
    if (a <= 0 || b <= 0) throw DomainError("TwistedTorus: alpha and beta must be positive");
    gamma = ((g % a) + a) % a;
  }

  std::int64_t cells() const { return alpha * beta; }
  std::int64_t qubits() const { return 2 * alpha * beta; }

  friend bool operator==(const TwistedTorus&, const TwistedTorus&) = default;
};

// Canonical coset representative: subtract multiples of a2 until 0 <= i < beta,
// then reduce j modulo alpha.
inline Exponent reduce_point(const TwistedTorus& t, Exponent p) {
  std::int64_t q = p.i >= 0 ? p.i / t.beta : -((-p.i + t.beta - 1) / t.beta);
  std::int64_t i = p.i - q * t.beta;
  std::int64_t j = p.j - q * t.gamma;
  j %= t.alpha;
  if (j < 0) j += t.alpha;
  return {i, j};
}

// Relations y^alpha - 1 and x^beta y^gamma - 1 as GF(2) polynomials.
inline LaurentPoly torus_relation_y(const TwistedTorus& t) {
  return add(LaurentPoly::one(), LaurentPoly::monomial(0, t.alpha));
}
inline LaurentPoly torus_relation_xy(const TwistedTorus& t) {
  return add(LaurentPoly::one(), LaurentPoly::monomial(t.beta, t.gamma));
}

}  // namespace gtc
