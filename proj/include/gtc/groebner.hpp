#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gtc/laurent.hpp"

namespace gtc {

// Variables available to the engine. The first two are the lattice variables;
// xbar/ybar are formal inverses used for Laurent localization, t is the
// auxiliary variable for principal-ideal intersection.
enum class Var : std::uint8_t { x = 0, y = 1, xbar = 2, ybar = 3, t = 4 };

inline constexpr int kMaxVars = 5;

const char* var_name(Var v);

// Monomial with nonnegative exponents over the full variable slot array.
// Unused variables simply carry exponent zero.
struct Monomial {
  std::array<std::int64_t, kMaxVars> e{};

  static Monomial unit() { return Monomial{}; }
  bool is_unit() const;
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // Componentwise difference; requires m.divides(*this).
  Monomial operator/(const Monomial& m) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  std::int64_t total_degree() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Structural (order-independent) compare used to keep term vectors canonical.
bool mono_struct_less(const Monomial& a, const Monomial& b);

// Total monomial order: lex or graded-lex over an explicit variable priority
// list (first entry most significant). Variables outside the list must not
// appear in compared monomials.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { lex, grlex };

  static MonomialOrder lex(std::vector<Var> priority);
  static MonomialOrder grlex(std::vector<Var> priority);

  // Returns <0, 0, >0 like strcmp.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  Kind kind() const { return kind_; }
  const std::vector<Var>& priority() const { return prio_; }
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::vector<Var> p) : kind_(k), prio_(std::move(p)) {}
  Kind kind_;
  std::vector<Var> prio_;
};

// Multivariate polynomial over GF(2): a set of monomials, stored sorted under
// mono_struct_less. Leading terms are computed against an explicit order.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<Monomial> terms);

  static MultiPoly zero() { return MultiPoly{}; }
  static MultiPoly one();

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Monomial>& terms() const { return terms_; }

  const Monomial& leading(const MonomialOrder& order) const;  // pre: nonzero

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::vector<Monomial> terms_;
};

// Iteration/size limits for basis computations. `used` accumulates across the
// calls that share the budget object.
struct Budget {
  std::uint64_t max_pair_reductions = 1'000'000;
  std::size_t max_support = 100'000;
  std::uint64_t used = 0;

  void charge(const char* where);
  void check_support(std::size_t n, const char* where) const;
};

MultiPoly mp_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mp_mul_mono(const MultiPoly& p, const Monomial& m);
MultiPoly mp_mul(const MultiPoly& p, const MultiPoly& q);

// lcm(LT p, LT q)/LT(p) * p + lcm/LT(q) * q. Throws DomainError on zero input.
MultiPoly s_polynomial(const MultiPoly& p, const MultiPoly& q, const MonomialOrder& order);

// Full multivariate division remainder: no term of the result is divisible by
// any basis leading term, and p - result lies in the ideal of the basis.
MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> basis,
                      const MonomialOrder& order, Budget* budget = nullptr);

struct GroebnerBasis {
  MonomialOrder order;
  // Sorted ascending by leading term; reduced unless produced by the Laurent
  // presentation path (see laurent_ideal_basis).
  std::vector<MultiPoly> gens;

  bool is_unit_ideal() const;
  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

// Buchberger with the Gebauer-Moller pair criteria and normal (smallest-lcm)
// selection; result is the unique reduced basis of the input ideal.
GroebnerBasis buchberger(std::vector<MultiPoly> gens, const MonomialOrder& order,
                         Budget& budget);

// --- Laurent bridge -------------------------------------------------------

// Shifted Laurent polynomial -> MultiPoly over {x, y}. Pre: exponents >= 0.
MultiPoly to_multipoly(const LaurentPoly& p);
LaurentPoly to_laurent(const MultiPoly& p);

// Gröbner basis presenting the Laurent ideal <f, g, extras...> in
// Z2[x,y,x^-1,y^-1]. Denominators are cleared by per-generator monomial
// shifts; after reduction every generator is divided by its monomial content
// (a unit in the Laurent ring). The returned basis provably generates the
// full contraction of the Laurent ideal to Z2[x,y].
GroebnerBasis laurent_ideal_basis(const LaurentPoly& f, const LaurentPoly& g,
                                  const std::vector<LaurentPoly>& extras,
                                  const MonomialOrder& order, Budget& budget);
GroebnerBasis laurent_ideal_basis(const std::vector<LaurentPoly>& gens,
                                  const MonomialOrder& order, Budget& budget);

// Membership of p in the Laurent ideal presented by gb.
bool ideal_member(const LaurentPoly& p, const GroebnerBasis& gb, Budget& budget);

// Laurent ideal equality. Throws DomainError if the orders differ.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b, Budget& budget);

// Basis of <f> ∩ <g> via elimination of t from <t·f, (1+t)·g>.
GroebnerBasis intersect_principal(const LaurentPoly& f, const LaurentPoly& g,
                                  Budget& budget);

// Convenience orders for the two lattice variables.
MonomialOrder lex_xy();  // x eliminated first; univariate member is in y
MonomialOrder lex_yx();  // y eliminated first; univariate member is in x

}  // namespace gtc
