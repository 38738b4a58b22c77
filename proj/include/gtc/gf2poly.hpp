#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gtc {

// Dense univariate polynomial over GF(2); bit i of the word array is the
// coefficient of y^i. The word vector carries no trailing zero words, so the
// zero polynomial is the empty vector.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly zero() { return {}; }
  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly monomial(std::int64_t degree);
  static Gf2Poly from_exponents(const std::vector<std::int64_t>& exps);

  bool is_zero() const { return w_.empty(); }
  std::int64_t degree() const;  // -1 for the zero polynomial
  bool coeff(std::int64_t i) const;
  void flip(std::int64_t i);
  int weight() const;
  std::vector<std::int64_t> exponents() const;

  Gf2Poly operator+(const Gf2Poly& o) const;
  Gf2Poly operator*(const Gf2Poly& o) const;
  Gf2Poly shifted(std::int64_t k) const;  // multiply by y^k

  // Quotient and remainder by a nonzero divisor.
  std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& d) const;
  Gf2Poly operator%(const Gf2Poly& d) const { return divmod(d).second; }
  Gf2Poly operator/(const Gf2Poly& d) const { return divmod(d).first; }

  Gf2Poly derivative() const;
  // Square root of a polynomial in y^2 (Frobenius); pre: only even exponents.
  Gf2Poly sqrt() const;

  std::string to_string(char var = 'y') const;

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  void trim();
  std::vector<std::uint64_t> w_;
};

// Euclidean gcd; gcd(0, 0) is an error.
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

struct Gf2Factor {
  Gf2Poly factor;
  int multiplicity;
};

// Complete factorization into irreducibles with multiplicities, sorted by
// (degree, coefficient bits). Distinct-degree plus deterministic equal-degree
// splitting; trial division for degree <= 12.
std::vector<Gf2Factor> factor_gf2(const Gf2Poly& p);

// Multiplicative order of y modulo an irreducible p with p(0) = 1.
std::uint64_t multiplicative_order(const Gf2Poly& p);

// Smallest L with h | y^L - 1; requires h(0) = 1.
std::uint64_t minimal_period_poly(const Gf2Poly& h);

// Prime factorization of a 64-bit integer (trial division then Pollard rho).
std::vector<std::pair<std::uint64_t, int>> factor_uint64(std::uint64_t n);

}  // namespace gtc
