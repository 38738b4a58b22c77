#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gtc {

// Lattice exponent of a monomial x^i y^j.
struct Exponent {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Canonical term order used everywhere a LaurentPoly is stored or rendered:
// (j, i) ascending, so the constant term comes first.
inline bool term_less(const Exponent& a, const Exponent& b) {
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

// Bivariate Laurent polynomial over GF(2), represented by its support set.
// The support is kept sorted under term_less with duplicates cancelled, so
// equality of polynomials is equality of the underlying vectors.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<Exponent> terms);

  static LaurentPoly zero() { return LaurentPoly{}; }
  static LaurentPoly one() { return monomial(0, 0); }
  static LaurentPoly monomial(std::int64_t i, std::int64_t j);

  bool is_zero() const { return support_.empty(); }
  std::size_t term_count() const { return support_.size(); }
  const std::vector<Exponent>& support() const { return support_; }

  bool contains(const Exponent& e) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Exponent> support_;
};

// GF(2) sum: symmetric difference of supports.
LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);

// GF(2) product: convolution of exponents with parity cancellation.
// Throws DomainError on exponent overflow.
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// (i, j) -> (-i, -j) on every term; an involutive ring homomorphism.
LaurentPoly antipode(const LaurentPoly& p);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }

// Multiplies p by the minimal monomial m that makes every exponent
// nonnegative with a zero minimum in each coordinate. Returns (m*p, m).
// Throws DomainError if p is zero.
std::pair<LaurentPoly, Exponent> shift_to_nonneg(const LaurentPoly& p);

// Text grammar (ASCII, whitespace-insensitive):
//   poly := term ('+' term)* | '0'
//   term := '1' | factor ('*'? factor)*
//   factor := ('x'|'y') ('^' signed_int)?
//   signed_int := '-'? [0-9]+
LaurentPoly parse_poly(std::string_view text);

// Canonical form: terms sorted by (j, i) ascending, "1" for the unit term,
// "0" for zero, explicit '*' between factors, '^' only for exponents != 1.
// parse_poly(render_poly(p)) == p.
std::string render_poly(const LaurentPoly& p);

}  // namespace gtc
