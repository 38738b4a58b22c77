#include <doctest.h>

#include <random>

#include "gtc/errors.hpp"
#include "gtc/groebner.hpp"

using namespace gtc;

namespace {

MultiPoly mp(const char* text) { return to_multipoly(parse_poly(text)); }

LaurentPoly random_nonneg(std::mt19937_64& rng, int max_terms = 4, int span = 6) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<std::int64_t> exp(0, span);
  std::vector<Exponent> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) terms.push_back({exp(rng), exp(rng)});
  return LaurentPoly(std::move(terms));
}

std::vector<LaurentPoly> basis_polys(const GroebnerBasis& gb) {
  std::vector<LaurentPoly> out;
  for (const auto& g : gb.gens) out.push_back(to_laurent(g));
  return out;
}

bool basis_equals(const GroebnerBasis& gb, const std::vector<const char*>& expect) {
  std::vector<LaurentPoly> want;
  for (auto* s : expect) want.push_back(parse_poly(s));
  std::vector<LaurentPoly> got = basis_polys(gb);
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    bool found = false;
    for (const auto& g : got)
      if (g == w) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("s_polynomial") {
  MonomialOrder order = lex_xy();
  CHECK(s_polynomial(mp("x^2"), mp("x*y"), order) == MultiPoly::zero());
  MultiPoly p = mp("x + x^2 + y^3");
  CHECK(s_polynomial(p, p, order) == MultiPoly::zero());
  CHECK(s_polynomial(mp("1+x"), mp("1+y"), order) == mp("x+y"));
  CHECK_THROWS_AS(s_polynomial(MultiPoly::zero(), p, order), DomainError);
}

TEST_CASE("normal_form") {
  MonomialOrder order = lex_xy();
  std::vector<MultiPoly> basis{mp("1+x"), mp("1+y")};
  CHECK(normal_form(mp("x^2"), basis, order) == mp("1"));
  CHECK(normal_form(MultiPoly::zero(), basis, order) == MultiPoly::zero());
  // Reduction by the univariate member of the worked 6-term basis.
  std::vector<MultiPoly> eq12{mp("1 + y + y^3 + y^5 + y^6"),
                              mp("x + x*y + x*y^2 + y^3 + y^6"), mp("x + x^2 + y^3")};
  CHECK(normal_form(mp("y^6"), eq12, order) == mp("1 + y + y^3 + y^5"));
}

TEST_CASE("buchberger: gross-code ideal") {
  Budget budget;
  GroebnerBasis gb =
      buchberger({mp("x + x^2 + y^3"), mp("y + y^2 + x^3")}, lex_xy(), budget);
  // Reduced basis of the shifted ideal; the univariate member carries a factor y.
  CHECK(basis_equals(gb, {"y + y^2 + y^4 + y^6 + y^7", "x + x*y + x*y^2 + y^3 + y^6",
                          "x + x^2 + y^3"}));
}

TEST_CASE("buchberger: unit ideal and trivial cases") {
  Budget budget;
  CHECK(buchberger({mp("1")}, lex_xy(), budget).is_unit_ideal());
  CHECK_THROWS_AS(buchberger({MultiPoly::zero()}, lex_xy(), budget), DomainError);
}

TEST_CASE("laurent_ideal_basis reproduces the worked reduced bases") {
  Budget budget;
  // (3,3)-type pair
  GroebnerBasis gb33 = laurent_ideal_basis(parse_poly("1 + x + x^-1*y^3"),
                                           parse_poly("1 + y + x^3*y^-1"), {}, lex_xy(), budget);
  CHECK(basis_equals(gb33, {"1 + y + y^3 + y^5 + y^6", "x + x*y + x*y^2 + y^3 + y^6",
                            "x + x^2 + y^3"}));
  // (3,-3)-type pair
  GroebnerBasis gb3m3 =
      laurent_ideal_basis(parse_poly("1 + x + x^-1*y^-3"), parse_poly("1 + y + x^3*y^-1"), {},
                          lex_xy(), budget);
  CHECK(basis_equals(gb3m3,
                     {"1 + y + y^3 + y^4 + y^6 + y^10 + y^11",
                      "x + y + x*y + y^2 + x*y^2 + y^5 + y^10",
                      "x + x^2 + y^4 + y^5 + y^7 + y^10"}));
  // already a basis
  GroebnerBasis triv = laurent_ideal_basis(parse_poly("1+x"), parse_poly("1+y"), {}, lex_xy(), budget);
  CHECK(basis_equals(triv, {"1+x", "1+y"}));
}

TEST_CASE("laurent_ideal_basis: extra relations already in the ideal change nothing") {
  Budget budget;
  LaurentPoly f = parse_poly("1 + x + x^-1*y^-3");
  LaurentPoly g = parse_poly("1 + y + x^3*y^-1");
  GroebnerBasis plain = laurent_ideal_basis(f, g, {}, lex_xy(), budget);
  GroebnerBasis extended = laurent_ideal_basis(
      f, g, {parse_poly("y^762 + 1"), parse_poly("x^6*y^360 + 1")}, lex_xy(), budget);
  CHECK(ideal_equal(plain, extended, budget));
}

TEST_CASE("ideal_member") {
  Budget budget;
  LaurentPoly f = parse_poly("1 + x + x^-1*y^3");
  LaurentPoly g = parse_poly("1 + y + x^3*y^-1");
  GroebnerBasis gb = laurent_ideal_basis(f, g, {}, lex_xy(), budget);
  CHECK(ideal_member(parse_poly("y^12 + 1"), gb, budget));
  CHECK_FALSE(ideal_member(parse_poly("y^11 + 1"), gb, budget));
  CHECK(ideal_member(LaurentPoly::zero(), gb, budget));
}

TEST_CASE("ideal_equal") {
  Budget budget;
  GroebnerBasis a = laurent_ideal_basis({parse_poly("1+x")}, lex_xy(), budget);
  GroebnerBasis b = laurent_ideal_basis({parse_poly("1+x^2")}, lex_xy(), budget);
  CHECK_FALSE(ideal_equal(a, b, budget));
  // monomial multiples generate the same Laurent ideal
  GroebnerBasis c = laurent_ideal_basis({parse_poly("x^2*y^-1 + x^3*y^-1")}, lex_xy(), budget);
  CHECK(ideal_equal(a, c, budget));
  GroebnerBasis d = laurent_ideal_basis({parse_poly("1+x")}, lex_yx(), budget);
  CHECK_THROWS_AS(ideal_equal(a, d, budget), DomainError);
}

TEST_CASE("intersect_principal") {
  Budget budget;
  LaurentPoly fx = parse_poly("1+x"), fy = parse_poly("1+y");
  GroebnerBasis inter = intersect_principal(fx, fy, budget);
  GroebnerBasis prod = laurent_ideal_basis({mul(fx, fy)}, lex_xy(), budget);
  CHECK(ideal_equal(inter, prod, budget));

  GroebnerBasis self = intersect_principal(fx, fx, budget);
  GroebnerBasis fxonly = laurent_ideal_basis({fx}, lex_xy(), budget);
  CHECK(ideal_equal(self, fxonly, budget));

  // g in <f>: intersection is <g>
  LaurentPoly g = mul(fx, fy);
  GroebnerBasis nested = intersect_principal(fx, g, budget);
  CHECK(ideal_equal(nested, prod, budget));
}

TEST_CASE("randomized basis properties") {
  std::mt19937_64 rng(1234);
  Budget budget;
  budget.max_pair_reductions = 200'000'000;
  int done = 0;
  for (int iter = 0; done < 200 && iter < 400; ++iter) {
    LaurentPoly fp = random_nonneg(rng), gp = random_nonneg(rng);
    if (fp.is_zero() || gp.is_zero()) continue;
    MonomialOrder order = (iter % 2) ? lex_xy() : lex_yx();
    GroebnerBasis gb{order, {}};
    try {
      gb = buchberger({to_multipoly(fp), to_multipoly(gp)}, order, budget);
    } catch (const BudgetExceeded&) {
      continue;
    }
    ++done;
    // every S-polynomial reduces to zero
    for (std::size_t i = 0; i < gb.gens.size(); ++i)
      for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
        MultiPoly s = s_polynomial(gb.gens[i], gb.gens[j], order);
        CHECK(normal_form(s, gb.gens, order).is_zero());
      }
    // normal form is idempotent, and p + NF(p) is in the ideal
    LaurentPoly probe = random_nonneg(rng);
    MultiPoly nf = normal_form(to_multipoly(probe), gb.gens, order);
    CHECK(normal_form(nf, gb.gens, order) == nf);
    MultiPoly diff = mp_add(to_multipoly(probe), nf);
    CHECK(normal_form(diff, gb.gens, order).is_zero());
    // recomputation is deterministic
    GroebnerBasis again = buchberger({to_multipoly(gp), to_multipoly(fp)}, order, budget);
    CHECK(gb.gens == again.gens);
  }
  CHECK(done >= 200);
}

TEST_CASE("laurent invariance under monomial units") {
  std::mt19937_64 rng(99);
  Budget budget;
  budget.max_pair_reductions = 200'000'000;
  std::uniform_int_distribution<std::int64_t> shift(-4, 4);
  int done = 0;
  for (int iter = 0; done < 100 && iter < 300; ++iter) {
    LaurentPoly f = random_nonneg(rng), g = random_nonneg(rng);
    if (f.is_zero() || g.is_zero()) continue;
    LaurentPoly m = LaurentPoly::monomial(shift(rng), shift(rng));
    try {
      GroebnerBasis a = laurent_ideal_basis(f, g, {}, lex_xy(), budget);
      GroebnerBasis b = laurent_ideal_basis(mul(m, f), g, {}, lex_xy(), budget);
      CHECK(a.gens == b.gens);
      ++done;
    } catch (const BudgetExceeded&) {
      continue;
    }
  }
  CHECK(done >= 100);
}
