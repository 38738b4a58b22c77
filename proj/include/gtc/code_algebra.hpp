#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gtc/gf2poly.hpp"
#include "gtc/groebner.hpp"
#include "gtc/laurent.hpp"
#include "gtc/torus.hpp"

namespace gtc {

// Monomials of the quotient ring not divisible by any leading term of the
// defining basis; their count is the quotient dimension.
struct StandardMonomialBasis {
  std::vector<Exponent> monomials;  // ascending under the basis order
  std::int64_t count() const { return static_cast<std::int64_t>(monomials.size()); }
};

// Thrown by standard_monomials when the staircase is infinite, i.e. the ideal
// is not zero-dimensional (topological-order failure or degenerate input).
class NotZeroDimensional : public DomainError {
 public:
  using DomainError::DomainError;
};

// Topological-order condition: <f> ∩ <g> = <f·g>, i.e. f and g coprime.
bool check_to_condition(const LaurentPoly& f, const LaurentPoly& g);

// Equivalent zero-dimensionality test on <f, g>; cheaper than the
// intersection route and used on the search hot path.
bool to_condition_via_dimension(const LaurentPoly& f, const LaurentPoly& g);

StandardMonomialBasis standard_monomials(const GroebnerBasis& gb);

// Maximal logical dimension: twice the quotient dimension of <f, g>.
std::int64_t k_max(const LaurentPoly& f, const LaurentPoly& g);

// Logical dimension on a twisted torus: twice the quotient dimension of
// <f, g, y^alpha - 1, x^beta y^gamma - 1>.
std::int64_t k_on_torus(const LaurentPoly& f, const LaurentPoly& g, const TwistedTorus& torus);

// The univariate member of the lex basis eliminating the other variable.
LaurentPoly univariate_generator(const LaurentPoly& f, const LaurentPoly& g, Var var);

struct UnivariateFactorization {
  std::vector<Gf2Factor> factors;
  Gf2Poly reassemble() const;
};

UnivariateFactorization factor_univariate(const Gf2Poly& h);

// Smallest L with h | y^L - 1; requires h(0) = 1.
std::uint64_t minimal_period(const Gf2Poly& h);

// Minimal untwisted torus achieving k = k_max: (L_x, L_y).
std::pair<std::uint64_t, std::uint64_t> minimal_untwisted_torus(const LaurentPoly& f,
                                                                const LaurentPoly& g);

// True iff both torus relations lie in <f, g> (equivalently k_on_torus = k_max).
bool achieves_full_k(const LaurentPoly& f, const LaurentPoly& g, const TwistedTorus& torus);

// Converts a Laurent polynomial that only uses variable `var` (and has
// nonnegative exponents after shifting) into a dense univariate polynomial.
Gf2Poly to_univariate(const LaurentPoly& p, Var var);
LaurentPoly from_univariate(const Gf2Poly& p, Var var);

// Searches for a full-k twisted torus with alpha = L_y and beta < L_x:
// scans beta over divisors of L_x in ascending order and returns the first
// (beta, gamma) with x^beta y^gamma - 1 in <f, g, y^L_y - 1>, if any.
std::optional<std::pair<std::int64_t, std::int64_t>> minimal_full_k_twist(
    const LaurentPoly& f, const LaurentPoly& g, std::uint64_t ly, std::uint64_t lx);

}  // namespace gtc
