#include "gtc/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "gtc/errors.hpp"

namespace gtc {

namespace {

// Sorts and cancels pairs in place (char-2 addition of repeated terms).
void canonicalize(std::vector<Exponent>& terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Exponent> out;
  out.reserve(terms.size());
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t run = 1;
    while (i + run < terms.size() && terms[i + run] == terms[i]) ++run;
    if (run % 2 == 1) out.push_back(terms[i]);
    i += run;
  }
  terms = std::move(out);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("exponent overflow in multiplication");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<Exponent> terms) : support_(std::move(terms)) {
  canonicalize(support_);
}

LaurentPoly LaurentPoly::monomial(std::int64_t i, std::int64_t j) {
  LaurentPoly p;
  p.support_.push_back({i, j});
  return p;
}

bool LaurentPoly::contains(const Exponent& e) const {
  return std::binary_search(support_.begin(), support_.end(), e, term_less);
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
  std::vector<Exponent> out;
  out.reserve(p.support().size() + q.support().size());
  std::set_symmetric_difference(p.support().begin(), p.support().end(),
                                q.support().begin(), q.support().end(),
                                std::back_inserter(out), term_less);
  return LaurentPoly(std::move(out));
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  std::vector<Exponent> out;
  out.reserve(p.support().size() * q.support().size());
  for (const auto& a : p.support())
    for (const auto& b : q.support())
      out.push_back({checked_add(a.i, b.i), checked_add(a.j, b.j)});
  return LaurentPoly(std::move(out));
}

LaurentPoly antipode(const LaurentPoly& p) {
  std::vector<Exponent> out;
  out.reserve(p.support().size());
  for (const auto& e : p.support()) out.push_back({-e.i, -e.j});
  return LaurentPoly(std::move(out));
}

std::pair<LaurentPoly, Exponent> shift_to_nonneg(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("shift_to_nonneg: zero polynomial");
  std::int64_t mi = p.support().front().i;
  std::int64_t mj = p.support().front().j;
  for (const auto& e : p.support()) {
    mi = std::min(mi, e.i);
    mj = std::min(mj, e.j);
  }
  Exponent m{-mi, -mj};
  return {mul(p, LaurentPoly::monomial(m.i, m.j)), m};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly run() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
    std::vector<Exponent> terms;
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (pos_ != s_.size()) throw ParseError("'0' must stand alone", pos_);
      return LaurentPoly{};
    }
    parse_term(terms);
    skip_ws();
    while (pos_ < s_.size()) {
      if (peek() != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
      skip_ws();
      parse_term(terms);
      skip_ws();
    }
    return LaurentPoly(std::move(terms));
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void parse_term(std::vector<Exponent>& terms) {
    if (pos_ >= s_.size()) throw ParseError("expected term", pos_);
    if (peek() == '1') {
      ++pos_;
      terms.push_back({0, 0});
      return;
    }
    Exponent e{0, 0};
    bool any = false;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = peek();
      if (c == 'x' || c == 'y') {
        ++pos_;
        std::int64_t ex = 1;
        skip_ws();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          ex = parse_int();
        }
        if (c == 'x')
          e.i += ex;
        else
          e.j += ex;
        any = true;
        skip_ws();
        if (pos_ < s_.size() && peek() == '*') {
          ++pos_;
          skip_ws();
          if (pos_ >= s_.size() || (peek() != 'x' && peek() != 'y'))
            throw ParseError("expected variable after '*'", pos_);
        }
        continue;
      }
      if (c == '+') break;
      if (std::isalpha(static_cast<unsigned char>(c)))
        throw ParseError(std::string("unknown variable '") + c + "'", pos_);
      throw ParseError("unexpected character", pos_);
    }
    if (!any) throw ParseError("expected term", pos_);
    terms.push_back(e);
  }

  std::int64_t parse_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected integer", pos_);
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (std::int64_t{1} << 62)) throw ParseError("exponent too large", pos_);
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void render_var(std::string& out, char name, std::int64_t e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += name;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return Parser(text).run(); }

std::string render_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& e : p.support()) {
    if (!first) out += " + ";
    first = false;
    if (e.i == 0 && e.j == 0) {
      out += '1';
      continue;
    }
    std::string term;
    render_var(term, 'x', e.i);
    render_var(term, 'y', e.j);
    out += term;
  }
  return out;
}

}  // namespace gtc
