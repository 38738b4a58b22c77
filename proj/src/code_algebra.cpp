#include "gtc/code_algebra.hpp"

#include <algorithm>

#include "gtc/errors.hpp"

namespace gtc {

namespace {

bool univariate_in(const MultiPoly& p, Var v) {
  const int self = static_cast<int>(v);
  for (const auto& m : p.terms())
    for (int k = 0; k < kMaxVars; ++k)
      if (k != self && m.e[k] != 0) return false;
  return true;
}

}  // namespace

bool check_to_condition(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("check_to_condition: zero polynomial");
  Budget budget;
  GroebnerBasis lhs = intersect_principal(f, g, budget);
  GroebnerBasis rhs = laurent_ideal_basis({mul(f, g)}, lex_xy(), budget);
  return ideal_equal(lhs, rhs, budget);
}

bool to_condition_via_dimension(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("to_condition_via_dimension: zero polynomial");
  Budget budget;
  GroebnerBasis gb = laurent_ideal_basis(f, g, {}, lex_xy(), budget);
  if (gb.is_unit_ideal()) return true;
  bool pure_x = false, pure_y = false;
  for (const auto& gen : gb.gens) {
    const Monomial lt = gen.leading(gb.order);
    if (lt.e[0] > 0 && lt.e[1] == 0) pure_x = true;
    if (lt.e[0] == 0 && lt.e[1] > 0) pure_y = true;
  }
  return pure_x && pure_y;
}

StandardMonomialBasis standard_monomials(const GroebnerBasis& gb) {
  StandardMonomialBasis out;
  if (gb.is_unit_ideal()) return out;

  std::vector<Monomial> lts;
  std::int64_t bound_x = -1, bound_y = -1;
  for (const auto& gen : gb.gens) {
    const Monomial lt = gen.leading(gb.order);
    if (lt.e[2] || lt.e[3] || lt.e[4])
      throw DomainError("standard_monomials: basis uses auxiliary variables");
    lts.push_back(lt);
    if (lt.e[1] == 0 && (bound_x < 0 || lt.e[0] < bound_x)) bound_x = lt.e[0];
    if (lt.e[0] == 0 && (bound_y < 0 || lt.e[1] < bound_y)) bound_y = lt.e[1];
  }
  if (bound_x < 0 || bound_y < 0)
    throw NotZeroDimensional("standard_monomials: staircase is infinite");

  for (std::int64_t a = 0; a < bound_x; ++a)
    for (std::int64_t b = 0; b < bound_y; ++b) {
      Monomial m;
      m.e[0] = a;
      m.e[1] = b;
      bool divisible = false;
      for (const auto& lt : lts)
        if (lt.divides(m)) {
          divisible = true;
          break;
        }
      if (!divisible) out.monomials.push_back({a, b});
    }
  std::sort(out.monomials.begin(), out.monomials.end(), [&](const Exponent& a, const Exponent& b) {
    Monomial ma, mb;
    ma.e[0] = a.i;
    ma.e[1] = a.j;
    mb.e[0] = b.i;
    mb.e[1] = b.j;
    return gb.order.less(ma, mb);
  });
  return out;
}

std::int64_t k_max(const LaurentPoly& f, const LaurentPoly& g) {
  Budget budget;
  return 2 * standard_monomials(laurent_ideal_basis(f, g, {}, lex_xy(), budget)).count();
}

std::int64_t k_on_torus(const LaurentPoly& f, const LaurentPoly& g, const TwistedTorus& torus) {
  Budget budget;
  GroebnerBasis gb = laurent_ideal_basis(
      f, g, {torus_relation_y(torus), torus_relation_xy(torus)}, lex_xy(), budget);
  return 2 * standard_monomials(gb).count();
}

LaurentPoly univariate_generator(const LaurentPoly& f, const LaurentPoly& g, Var var) {
  if (var != Var::x && var != Var::y) throw DomainError("univariate_generator: var must be x or y");
  Budget budget;
  const MonomialOrder order = var == Var::y ? lex_xy() : lex_yx();
  GroebnerBasis gb = laurent_ideal_basis(f, g, {}, order, budget);
  const MultiPoly* best = nullptr;
  for (const auto& gen : gb.gens) {
    if (!univariate_in(gen, var)) continue;
    if (!best || order.less(gen.leading(order), best->leading(order))) best = &gen;
  }
  if (!best)
    throw DomainError("univariate_generator: no univariate element (TO condition fails)");
  return to_laurent(*best);
}

Gf2Poly UnivariateFactorization::reassemble() const {
  Gf2Poly p = Gf2Poly::one();
  for (const auto& [factor, mult] : factors)
    for (int i = 0; i < mult; ++i) p = p * factor;
  return p;
}

UnivariateFactorization factor_univariate(const Gf2Poly& h) {
  if (h.is_zero()) throw DomainError("factor_univariate: zero polynomial");
  if (!h.coeff(0)) throw DomainError("factor_univariate: constant term must be 1");
  return UnivariateFactorization{factor_gf2(h)};
}

std::uint64_t minimal_period(const Gf2Poly& h) { return minimal_period_poly(h); }

std::pair<std::uint64_t, std::uint64_t> minimal_untwisted_torus(const LaurentPoly& f,
                                                                const LaurentPoly& g) {
  Gf2Poly hx = to_univariate(univariate_generator(f, g, Var::x), Var::x);
  Gf2Poly hy = to_univariate(univariate_generator(f, g, Var::y), Var::y);
  return {minimal_period(hx), minimal_period(hy)};
}

bool achieves_full_k(const LaurentPoly& f, const LaurentPoly& g, const TwistedTorus& torus) {
  Budget budget;
  GroebnerBasis gb = laurent_ideal_basis(f, g, {}, lex_xy(), budget);
  return ideal_member(torus_relation_y(torus), gb, budget) &&
         ideal_member(torus_relation_xy(torus), gb, budget);
}

Gf2Poly to_univariate(const LaurentPoly& p, Var var) {
  if (p.is_zero()) return Gf2Poly::zero();
  LaurentPoly shifted = shift_to_nonneg(p).first;
  Gf2Poly out;
  for (const auto& e : shifted.support()) {
    std::int64_t self = var == Var::x ? e.i : e.j;
    std::int64_t other = var == Var::x ? e.j : e.i;
    if (other != 0) throw DomainError("to_univariate: polynomial is not univariate");
    out.flip(self);
  }
  return out;
}

LaurentPoly from_univariate(const Gf2Poly& p, Var var) {
  std::vector<Exponent> terms;
  for (auto e : p.exponents()) {
    if (var == Var::x)
      terms.push_back({e, 0});
    else
      terms.push_back({0, e});
  }
  return LaurentPoly(std::move(terms));
}

std::optional<std::pair<std::int64_t, std::int64_t>> minimal_full_k_twist(
    const LaurentPoly& f, const LaurentPoly& g, std::uint64_t ly, std::uint64_t lx) {
  Budget budget;
  budget.max_pair_reductions = std::max<std::uint64_t>(budget.max_pair_reductions, 256 * ly);
  std::vector<LaurentPoly> extra{
      add(LaurentPoly::one(), LaurentPoly::monomial(0, static_cast<std::int64_t>(ly)))};
  GroebnerBasis gb = laurent_ideal_basis(f, g, extra, lex_xy(), budget);

  Monomial ym, xm;
  ym.e[1] = 1;
  xm.e[0] = 1;
  auto nf = [&](const MultiPoly& p) { return normal_form(p, gb.gens, gb.order, &budget); };
  auto pow_x = [&](std::uint64_t e) {
    MultiPoly result = nf(MultiPoly::one());
    MultiPoly base = nf(MultiPoly({xm}));
    while (e) {
      if (e & 1) result = nf(mp_mul(result, base));
      base = nf(mp_mul(base, base));
      e >>= 1;
    }
    return result;
  };

  std::vector<std::uint64_t> divisors;
  for (std::uint64_t b = 1; b * b <= lx; ++b)
    if (lx % b == 0) {
      divisors.push_back(b);
      if (b != lx / b) divisors.push_back(lx / b);
    }
  std::sort(divisors.begin(), divisors.end());

  const MultiPoly one = nf(MultiPoly::one());
  for (std::uint64_t beta : divisors) {
    if (beta >= lx) break;  // the untwisted solution is not an improvement
    MultiPoly cur = pow_x(beta);
    for (std::uint64_t m = 0; m < ly; ++m) {
      if (cur == one)
        return std::pair<std::int64_t, std::int64_t>{static_cast<std::int64_t>(beta),
                                                     static_cast<std::int64_t>(m)};
      cur = nf(mp_mul_mono(cur, ym));
    }
  }
  return std::nullopt;
}

}  // namespace gtc
