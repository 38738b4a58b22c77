#include "gtc/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

#include "gtc/errors.hpp"

namespace gtc {

namespace {
constexpr std::int64_t kWordBits = 64;
}

void Gf2Poly::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Gf2Poly Gf2Poly::monomial(std::int64_t degree) {
  if (degree < 0) throw DomainError("Gf2Poly::monomial: negative degree");
  Gf2Poly p;
  p.w_.assign(static_cast<std::size_t>(degree / kWordBits) + 1, 0);
  p.w_.back() = std::uint64_t{1} << (degree % kWordBits);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<std::int64_t>& exps) {
  Gf2Poly p;
  for (auto e : exps) p.flip(e);
  return p;
}

std::int64_t Gf2Poly::degree() const {
  if (w_.empty()) return -1;
  return static_cast<std::int64_t>(w_.size() - 1) * kWordBits + (63 - std::countl_zero(w_.back()));
}

bool Gf2Poly::coeff(std::int64_t i) const {
  if (i < 0) return false;
  auto word = static_cast<std::size_t>(i / kWordBits);
  if (word >= w_.size()) return false;
  return (w_[word] >> (i % kWordBits)) & 1;
}

void Gf2Poly::flip(std::int64_t i) {
  if (i < 0) throw DomainError("Gf2Poly::flip: negative exponent");
  auto word = static_cast<std::size_t>(i / kWordBits);
  if (word >= w_.size()) w_.resize(word + 1, 0);
  w_[word] ^= std::uint64_t{1} << (i % kWordBits);
  trim();
}

int Gf2Poly::weight() const {
  int w = 0;
  for (auto x : w_) w += std::popcount(x);
  return w;
}

std::vector<std::int64_t> Gf2Poly::exponents() const {
  std::vector<std::int64_t> out;
  for (std::size_t wi = 0; wi < w_.size(); ++wi) {
    std::uint64_t x = w_[wi];
    while (x) {
      int b = std::countr_zero(x);
      out.push_back(static_cast<std::int64_t>(wi) * kWordBits + b);
      x &= x - 1;
    }
  }
  return out;
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
  Gf2Poly r;
  r.w_.resize(std::max(w_.size(), o.w_.size()), 0);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] ^= w_[i];
  for (std::size_t i = 0; i < o.w_.size(); ++i) r.w_[i] ^= o.w_[i];
  r.trim();
  return r;
}

Gf2Poly Gf2Poly::shifted(std::int64_t k) const {
  if (is_zero()) return {};
  if (k < 0) throw DomainError("Gf2Poly::shifted: negative shift");
  Gf2Poly r;
  auto words = static_cast<std::size_t>(k / kWordBits);
  int bits = static_cast<int>(k % kWordBits);
  r.w_.assign(w_.size() + words + 1, 0);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    r.w_[i + words] ^= w_[i] << bits;
    if (bits) r.w_[i + words + 1] ^= w_[i] >> (kWordBits - bits);
  }
  r.trim();
  return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  Gf2Poly r;
  r.w_.assign(w_.size() + o.w_.size(), 0);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t x = w_[i];
    while (x) {
      int b = std::countr_zero(x);
      x &= x - 1;
      std::int64_t shift = static_cast<std::int64_t>(i) * kWordBits + b;
      auto words = static_cast<std::size_t>(shift / kWordBits);
      int bits = static_cast<int>(shift % kWordBits);
      for (std::size_t j = 0; j < o.w_.size(); ++j) {
        r.w_[j + words] ^= o.w_[j] << bits;
        if (bits && j + words + 1 < r.w_.size()) r.w_[j + words + 1] ^= o.w_[j] >> (kWordBits - bits);
      }
    }
  }
  r.trim();
  return r;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& d) const {
  if (d.is_zero()) throw DomainError("Gf2Poly: division by zero");
  Gf2Poly q, r = *this;
  const std::int64_t dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    std::int64_t shift = r.degree() - dd;
    q.flip(shift);
    r = r + d.shifted(shift);
  }
  return {q, r};
}

Gf2Poly Gf2Poly::derivative() const {
  // Char 2: only odd-degree terms survive, dropping one degree.
  Gf2Poly r;
  for (auto e : exponents())
    if (e % 2 == 1) r.flip(e - 1);
  return r;
}

Gf2Poly Gf2Poly::sqrt() const {
  Gf2Poly r;
  for (auto e : exponents()) {
    if (e % 2 != 0) throw DomainError("Gf2Poly::sqrt: odd exponent present");
    r.flip(e / 2);
  }
  return r;
}

std::string Gf2Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (auto e : exponents()) {
    if (!out.empty()) out += " + ";
    if (e == 0)
      out += '1';
    else if (e == 1)
      out += var;
    else {
      out += var;
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0)");
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

namespace {

Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) { return (a * b) % m; }

Gf2Poly powmod_y(std::uint64_t e, const Gf2Poly& m) {
  Gf2Poly result = Gf2Poly::one() % m;
  Gf2Poly base = Gf2Poly::monomial(1) % m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Substitute candidates for equal-degree splitting, enumerated by integer
// code so runs are reproducible.
Gf2Poly nth_poly(std::uint64_t code) {
  Gf2Poly p;
  std::int64_t i = 0;
  while (code) {
    if (code & 1) p.flip(i);
    code >>= 1;
    ++i;
  }
  return p;
}

void factor_equal_degree(const Gf2Poly& f, int d, std::vector<Gf2Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  for (std::uint64_t code = 2;; ++code) {
    Gf2Poly r = nth_poly(code) % f;
    // Trace map of r into GF(2): splits the product of degree-d irreducibles.
    Gf2Poly tr = r;
    Gf2Poly cur = r;
    for (int i = 1; i < d; ++i) {
      cur = mulmod(cur, cur, f);
      tr = tr + cur;
    }
    Gf2Poly g = gcd(f, tr.is_zero() ? f : tr);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      factor_equal_degree(g, d, out);
      factor_equal_degree(f / g, d, out);
      return;
    }
  }
}

void factor_squarefree_part(const Gf2Poly& f, int mult, std::vector<Gf2Factor>& out);

// Classical char-2 squarefree decomposition; `mult` scales all multiplicities
// (used by the square-root recursion).
void squarefree_decompose(const Gf2Poly& f, int mult, std::vector<Gf2Factor>& out) {
  Gf2Poly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_decompose(f.sqrt(), mult * 2, out);
    return;
  }
  Gf2Poly c = gcd(f, fp);
  Gf2Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Gf2Poly y = gcd(w, c);
    Gf2Poly piece = w / y;
    if (piece.degree() > 0) factor_squarefree_part(piece, mult * i, out);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) squarefree_decompose(c.sqrt(), mult * 2, out);
}

// Distinct-degree split of a squarefree polynomial, then equal-degree split.
void factor_squarefree_part(const Gf2Poly& f, int mult, std::vector<Gf2Factor>& out) {
  Gf2Poly rest = f;
  Gf2Poly frob = Gf2Poly::monomial(1) % rest;  // y^(2^d) mod rest, updated per level
  for (int d = 1; rest.degree() > 0; ++d) {
    if (2 * d > rest.degree()) {
      out.push_back({rest, mult});
      break;
    }
    frob = mulmod(frob, frob, rest);
    Gf2Poly g = gcd(rest, frob + (Gf2Poly::monomial(1) % rest));
    if (g.degree() > 0) {
      std::vector<Gf2Poly> pieces;
      factor_equal_degree(g, d, pieces);
      for (auto& p : pieces) out.push_back({p, mult});
      rest = rest / g;
      frob = frob % rest;
    }
  }
}

bool factor_less(const Gf2Factor& a, const Gf2Factor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  return a.factor.exponents() < b.factor.exponents();
}

// Exhaustive trial division by irreducibles of increasing degree; independent
// slow path for small inputs.
std::vector<Gf2Factor> factor_trial(Gf2Poly f) {
  std::vector<Gf2Factor> out;
  for (std::int64_t deg = 1; f.degree() > 0 && deg <= f.degree(); ++deg) {
    if (2 * deg > f.degree()) break;
    for (std::uint64_t code = std::uint64_t{1} << deg;
         code < (std::uint64_t{1} << (deg + 1)) && f.degree() >= deg; ++code) {
      Gf2Poly cand = nth_poly(code);
      int m = 0;
      while ((f % cand).is_zero()) {
        f = f / cand;
        ++m;
      }
      if (m) out.push_back({cand, m});
    }
  }
  if (f.degree() > 0) out.push_back({f, 1});
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

}  // namespace

std::vector<Gf2Factor> factor_gf2(const Gf2Poly& p) {
  if (p.is_zero()) throw DomainError("factor_gf2: zero polynomial");
  Gf2Poly f = p;
  std::vector<Gf2Factor> out;
  // Pull out any power of y first so the core routines see f(0) = 1.
  if (!f.coeff(0)) {
    auto exps = f.exponents();
    std::int64_t v = exps.front();
    Gf2Poly shifted_down;
    for (auto e : exps) shifted_down.flip(e - v);
    out.push_back({Gf2Poly::monomial(1), static_cast<int>(v)});
    f = shifted_down;
  }
  if (f.degree() <= 0) {
    std::sort(out.begin(), out.end(), factor_less);
    return out;
  }
  if (f.degree() <= 12) {
    auto rest = factor_trial(f);
    out.insert(out.end(), rest.begin(), rest.end());
  } else {
    squarefree_decompose(f, 1, out);
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::uint64_t multiplicative_order(const Gf2Poly& p) {
  if (p.degree() < 1 || !p.coeff(0)) throw DomainError("multiplicative_order: need p(0) = 1");
  const int d = static_cast<int>(p.degree());
  if (d > 62) throw DomainError("multiplicative_order: degree too large");
  std::uint64_t order = (std::uint64_t{1} << d) - 1;
  for (auto [q, m] : factor_uint64(order)) {
    (void)m;
    while (order % q == 0 && powmod_y(order / q, p) == Gf2Poly::one()) order /= q;
  }
  return order;
}

std::uint64_t minimal_period_poly(const Gf2Poly& h) {
  if (h.is_zero() || !h.coeff(0)) throw DomainError("minimal_period: need h(0) = 1");
  if (h.degree() == 0) return 1;
  std::uint64_t period = 1;
  for (const auto& [factor, mult] : factor_gf2(h)) {
    std::uint64_t ord = multiplicative_order(factor);
    std::uint64_t lift = 1;
    while (lift < static_cast<std::uint64_t>(mult)) lift *= 2;
    std::uint64_t part = ord * lift;
    period = std::lcm(period, part);
  }
  return period;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      std::uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_rec(d, primes);
  factor_rec(n / d, primes);
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factor_uint64(std::uint64_t n) {
  if (n == 0) throw DomainError("factor_uint64(0)");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= 1'000'000 && p * p <= n; p == 2 ? p = 3 : p += 2) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, int>> out;
  for (auto p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

}  // namespace gtc
