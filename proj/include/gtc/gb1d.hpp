#pragma once

#include <cstdint>

#include "gtc/gf2poly.hpp"
#include "gtc/laurent.hpp"
#include "gtc/torus.hpp"

namespace gtc {

// One-dimensional generalized bicycle code on a cycle of length l, two qubits
// per site. Exponents reduced mod l; f and g nonzero.
struct GbCode1D {
  Gf2Poly f;
  Gf2Poly g;
  std::int64_t l = 1;

  std::int64_t n() const { return 2 * l; }
};

// Width-one twisted torus reduction: beta = 1 makes x equivalent to y^-gamma;
// substitution collapses the code to one dimension. Throws DomainError when
// beta != 1 or when a polynomial collapses to zero (degenerate code).
GbCode1D reduce_to_1d(const LaurentPoly& f, const LaurentPoly& g, const TwistedTorus& torus);

// Logical dimension 2 * deg gcd(f, g, y^l - 1).
std::int64_t k_1d(const GbCode1D& code);

// Euclidean gcd over GF(2); gcd(p, 0) = p, gcd(0, 0) is an error.
Gf2Poly gcd_univariate(const Gf2Poly& p, const Gf2Poly& q);

}  // namespace gtc
