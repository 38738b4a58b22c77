#include <doctest.h>

#include <random>

#include "gtc/errors.hpp"
#include "gtc/laurent.hpp"

using namespace gtc;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 6, int span = 50) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::int64_t> exp(-span, span);
  std::vector<Exponent> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) terms.push_back({exp(rng), exp(rng)});
  return LaurentPoly(std::move(terms));
}

}  // namespace

TEST_CASE("parse: worked examples") {
  CHECK(parse_poly("1 + x + x^-1*y^3") ==
        LaurentPoly({{0, 0}, {1, 0}, {-1, 3}}));
  CHECK(parse_poly("x + x") == LaurentPoly::zero());
  CHECK(parse_poly("y^6 + y^3 + x*y^2 + x*y + x") ==
        LaurentPoly({{0, 6}, {0, 3}, {1, 2}, {1, 1}, {1, 0}}));
  CHECK(parse_poly("0") == LaurentPoly::zero());
  CHECK(parse_poly("  1+x ") == LaurentPoly({{0, 0}, {1, 0}}));
  CHECK(parse_poly("x^2y") == LaurentPoly({{2, 1}}));  // implicit product
}

TEST_CASE("parse: errors carry byte offsets") {
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("1 + z"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^"), ParseError);
  CHECK_THROWS_AS(parse_poly("x +"), ParseError);
  CHECK_THROWS_AS(parse_poly("0 + x"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^+3"), ParseError);
  try {
    parse_poly("1 + q");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("render: canonical form") {
  CHECK(render_poly(LaurentPoly::zero()) == "0");
  CHECK(render_poly(LaurentPoly::one()) == "1");
  CHECK(render_poly(LaurentPoly({{0, 0}, {1, 0}, {1, 1}})) == "1 + x + x*y");
  CHECK(render_poly(LaurentPoly({{-1, 3}, {1, 0}, {0, 0}})) == "1 + x + x^-1*y^3");
  CHECK(render_poly(LaurentPoly({{0, -2}})) == "y^-2");
}

TEST_CASE("add: symmetric difference") {
  CHECK(add(LaurentPoly::one(), LaurentPoly::one()) == LaurentPoly::zero());
  CHECK(add(LaurentPoly({{0, 0}, {1, 0}}), LaurentPoly({{0, 1}})) ==
        LaurentPoly({{0, 0}, {1, 0}, {0, 1}}));
  // (1+x) + (1+y) = x + y
  CHECK(add(parse_poly("1+x"), parse_poly("1+y")) == parse_poly("x+y"));
}

TEST_CASE("mul: GF(2) convolution") {
  CHECK(mul(parse_poly("1+x"), parse_poly("1+x")) == parse_poly("1+x^2"));
  CHECK(mul(parse_poly("1+x+y"), LaurentPoly::zero()) == LaurentPoly::zero());
  CHECK(mul(parse_poly("1+x"), parse_poly("1+y")) == parse_poly("1+x+y+x*y"));
}

TEST_CASE("antipode") {
  CHECK(antipode(parse_poly("1 + x + x^-1*y^3")) == parse_poly("1 + x^-1 + x*y^-3"));
  CHECK(antipode(LaurentPoly::zero()) == LaurentPoly::zero());
  LaurentPoly p = parse_poly("1 + x + x*y");
  CHECK(antipode(antipode(p)) == p);
}

TEST_CASE("shift_to_nonneg") {
  auto [p1, m1] = shift_to_nonneg(parse_poly("1 + x + x^-1*y^3"));
  CHECK(p1 == parse_poly("x + x^2 + y^3"));
  CHECK(m1 == Exponent{1, 0});
  auto [p2, m2] = shift_to_nonneg(parse_poly("1 + y + x^3*y^-1"));
  CHECK(p2 == parse_poly("y + y^2 + x^3"));
  CHECK(m2 == Exponent{0, 1});
  auto [p3, m3] = shift_to_nonneg(parse_poly("1+x"));
  CHECK(p3 == parse_poly("1+x"));
  CHECK(m3 == Exponent{0, 0});
  CHECK_THROWS_AS(shift_to_nonneg(LaurentPoly::zero()), DomainError);
}

TEST_CASE("ring axioms and round trips on random polynomials") {
  std::mt19937_64 rng(0xC0DE);
  for (int iter = 0; iter < 1000; ++iter) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(add(p, q) == add(q, p));
    CHECK(add(add(p, q), r) == add(p, add(q, r)));
    CHECK(add(p, p) == LaurentPoly::zero());
    CHECK(mul(p, q) == mul(q, p));
    CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
    CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
    CHECK(antipode(mul(p, q)) == mul(antipode(p), antipode(q)));
    CHECK(parse_poly(render_poly(p)) == p);

    // degree bound: |exponents| of p*q bounded by the sums of maxima
    auto max_abs = [](const LaurentPoly& a) {
      std::int64_t m = 0;
      for (const auto& e : a.support()) m = std::max<std::int64_t>({m, std::llabs(e.i), std::llabs(e.j)});
      return m;
    };
    CHECK(max_abs(mul(p, q)) <= max_abs(p) + max_abs(q));
  }
}
