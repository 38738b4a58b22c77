#include "gtc/groebner.hpp"

#include <algorithm>
#include <utility>

#include "gtc/errors.hpp"

namespace gtc {

const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::xbar: return "xb";
    case Var::ybar: return "yb";
    case Var::t: return "t";
  }
  return "?";
}

bool Monomial::is_unit() const {
  for (auto v : e)
    if (v != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& m) const {
  for (int k = 0; k < kMaxVars; ++k)
    if (e[k] > m.e[k]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) r.e[k] = e[k] + m.e[k];
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) r.e[k] = e[k] - m.e[k];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) r.e[k] = std::max(a.e[k], b.e[k]);
  return r;
}

std::int64_t Monomial::total_degree() const {
  std::int64_t d = 0;
  for (auto v : e) d += v;
  return d;
}

bool mono_struct_less(const Monomial& a, const Monomial& b) { return a.e < b.e; }

MonomialOrder MonomialOrder::lex(std::vector<Var> priority) {
  return MonomialOrder(Kind::lex, std::move(priority));
}

MonomialOrder MonomialOrder::grlex(std::vector<Var> priority) {
  return MonomialOrder(Kind::grlex, std::move(priority));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::grlex) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
  }
  for (Var v : prio_) {
    auto k = static_cast<int>(v);
    if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? -1 : 1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  std::string s = kind_ == Kind::lex ? "lex" : "grlex";
  s += '(';
  for (std::size_t i = 0; i < prio_.size(); ++i) {
    if (i) s += ',';
    s += var_name(prio_[i]);
  }
  s += ')';
  return s;
}

MonomialOrder lex_xy() { return MonomialOrder::lex({Var::x, Var::y}); }
MonomialOrder lex_yx() { return MonomialOrder::lex({Var::y, Var::x}); }

namespace {

void canonicalize(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), mono_struct_less);
  std::vector<Monomial> out;
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

}  // namespace

MultiPoly::MultiPoly(std::vector<Monomial> terms) : terms_(std::move(terms)) {
  canonicalize(terms_);
}

MultiPoly MultiPoly::one() { return MultiPoly({Monomial::unit()}); }

const Monomial& MultiPoly::leading(const MonomialOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  const Monomial* best = &terms_[0];
  for (const auto& m : terms_)
    if (order.less(*best, m)) best = &m;
  return *best;
}

void Budget::charge(const char* where) {
  if (++used > max_pair_reductions)
    throw BudgetExceeded(std::string("reduction budget exceeded in ") + where);
}

void Budget::check_support(std::size_t n, const char* where) const {
  if (n > max_support)
    throw BudgetExceeded(std::string("support size budget exceeded in ") + where);
}

MultiPoly mp_add(const MultiPoly& p, const MultiPoly& q) {
  std::vector<Monomial> out;
  out.reserve(p.terms().size() + q.terms().size());
  std::set_symmetric_difference(p.terms().begin(), p.terms().end(), q.terms().begin(),
                                q.terms().end(), std::back_inserter(out), mono_struct_less);
  return MultiPoly(std::move(out));
}

MultiPoly mp_mul_mono(const MultiPoly& p, const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) out.push_back(t * m);
  return MultiPoly(std::move(out));
}

MultiPoly mp_mul(const MultiPoly& p, const MultiPoly& q) {
  std::vector<Monomial> out;
  out.reserve(p.terms().size() * q.terms().size());
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) out.push_back(a * b);
  return MultiPoly(std::move(out));
}

MultiPoly s_polynomial(const MultiPoly& p, const MultiPoly& q, const MonomialOrder& order) {
  if (p.is_zero() || q.is_zero()) throw DomainError("s_polynomial of zero polynomial");
  const Monomial lp = p.leading(order);
  const Monomial lq = q.leading(order);
  const Monomial l = Monomial::lcm(lp, lq);
  return mp_add(mp_mul_mono(p, l / lp), mp_mul_mono(q, l / lq));
}

MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> basis,
                      const MonomialOrder& order, Budget* budget) {
  std::vector<Monomial> result;
  MultiPoly work = p;
  while (!work.is_zero()) {
    if (budget) {
      budget->check_support(work.term_count(), "normal_form");
      budget->charge("normal_form");
    }
    const Monomial lt = work.leading(order);
    bool reduced = false;
    for (const auto& b : basis) {
      if (b.is_zero()) continue;
      const Monomial& lb = b.leading(order);
      if (lb.divides(lt)) {
        work = mp_add(work, mp_mul_mono(b, lt / lb));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      result.push_back(lt);
      work = mp_add(work, MultiPoly({lt}));
    }
  }
  return MultiPoly(std::move(result));
}

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& g : gens)
    if (g == MultiPoly::one()) return true;
  return false;
}

namespace {

struct Pair {
  std::size_t a, b;
  Monomial lcm;
};

bool coprime(const Monomial& a, const Monomial& b) {
  for (int k = 0; k < kMaxVars; ++k)
    if (a.e[k] > 0 && b.e[k] > 0) return false;
  return true;
}

// Gebauer-Moller pair update: prunes the existing queue against the new
// generator and filters the new pairs through the M/F/B criteria.
void update_pairs(std::vector<MultiPoly>& basis, std::vector<Pair>& pairs,
                  const MultiPoly& h, const MonomialOrder& order) {
  const std::size_t t = basis.size();
  const Monomial lh = h.leading(order);

  std::vector<Pair> fresh;
  fresh.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    fresh.push_back({i, t, Monomial::lcm(basis[i].leading(order), lh)});

  // Criterion M: drop a new pair whose lcm is a proper multiple of another
  // new pair's lcm; among equal lcms keep the first.
  std::vector<char> keep(fresh.size(), 1);
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    if (!keep[i]) continue;
    if (coprime(basis[fresh[i].a].leading(order), lh)) continue;  // handled below
    for (std::size_t j = 0; j < fresh.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (fresh[j].lcm.divides(fresh[i].lcm) &&
          (fresh[j].lcm != fresh[i].lcm || j < i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  // Criterion F/B (Buchberger 1): coprime leading terms reduce to zero.
  std::vector<Pair> kept;
  for (std::size_t i = 0; i < fresh.size(); ++i)
    if (keep[i] && !coprime(basis[fresh[i].a].leading(order), lh)) kept.push_back(fresh[i]);

  // Prune old pairs whose lcm is strictly absorbed by the new generator.
  std::vector<Pair> surviving;
  surviving.reserve(pairs.size());
  for (const auto& pr : pairs) {
    const Monomial la = basis[pr.a].leading(order);
    const Monomial lb = basis[pr.b].leading(order);
    if (lh.divides(pr.lcm) && Monomial::lcm(la, lh) != pr.lcm &&
        Monomial::lcm(lb, lh) != pr.lcm)
      continue;
    surviving.push_back(pr);
  }
  surviving.insert(surviving.end(), kept.begin(), kept.end());
  pairs = std::move(surviving);
  basis.push_back(h);
}

void sort_by_leading(std::vector<MultiPoly>& gens, const MonomialOrder& order) {
  std::sort(gens.begin(), gens.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    int c = order.compare(a.leading(order), b.leading(order));
    if (c != 0) return c < 0;
    return a.terms() < b.terms();  // total tie-break for determinism
  });
}

std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> gens, const MonomialOrder& order,
                                    Budget& budget) {
  // Minimalize: drop generators whose leading term another one divides.
  std::vector<MultiPoly> minimal;
  sort_by_leading(gens, order);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Monomial li = gens[i].leading(order);
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      const Monomial lj = gens[j].leading(order);
      if (lj.divides(li) && (lj != li || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  // Tail-reduce every generator against the others until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MultiPoly> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MultiPoly r = normal_form(minimal[i], others, order, &budget);
      if (r != minimal[i]) {
        minimal[i] = r;
        changed = true;
      }
    }
    std::erase_if(minimal, [](const MultiPoly& p) { return p.is_zero(); });
  }
  sort_by_leading(minimal, order);
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(std::vector<MultiPoly> gens, const MonomialOrder& order,
                         Budget& budget) {
  std::erase_if(gens, [](const MultiPoly& p) { return p.is_zero(); });
  if (gens.empty()) throw DomainError("buchberger: no nonzero generators");

  std::vector<MultiPoly> basis;
  std::vector<Pair> pairs;
  for (const auto& g : gens) {
    MultiPoly h = normal_form(g, basis, order, &budget);
    if (!h.is_zero()) update_pairs(basis, pairs, h, order);
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first.
    std::size_t best = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      int c = order.compare(pairs[i].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && std::pair(pairs[i].a, pairs[i].b) <
                                  std::pair(pairs[best].a, pairs[best].b)))
        best = i;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    budget.charge("buchberger");
    MultiPoly s = s_polynomial(basis[pr.a], basis[pr.b], order);
    MultiPoly h = normal_form(s, basis, order, &budget);
    if (!h.is_zero()) {
      budget.check_support(h.term_count(), "buchberger");
      update_pairs(basis, pairs, h, order);
    }
  }

  return GroebnerBasis{order, reduce_basis(std::move(basis), order, budget)};
}

// --- Laurent bridge -------------------------------------------------------

MultiPoly to_multipoly(const LaurentPoly& p) {
  std::vector<Monomial> terms;
  terms.reserve(p.support().size());
  for (const auto& e : p.support()) {
    if (e.i < 0 || e.j < 0) throw DomainError("to_multipoly: negative exponent");
    Monomial m;
    m.e[static_cast<int>(Var::x)] = e.i;
    m.e[static_cast<int>(Var::y)] = e.j;
    terms.push_back(m);
  }
  return MultiPoly(std::move(terms));
}

LaurentPoly to_laurent(const MultiPoly& p) {
  std::vector<Exponent> terms;
  terms.reserve(p.terms().size());
  for (const auto& m : p.terms()) {
    if (m.e[2] || m.e[3] || m.e[4])
      throw DomainError("to_laurent: polynomial uses auxiliary variables");
    terms.push_back({m.e[0], m.e[1]});
  }
  return LaurentPoly(std::move(terms));
}

namespace {

MultiPoly shifted_content_free(const LaurentPoly& p) {
  return to_multipoly(shift_to_nonneg(p).first);
}

MultiPoly strip_content(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Monomial content = p.terms().front();
  for (const auto& m : p.terms())
    for (int k = 0; k < kMaxVars; ++k) content.e[k] = std::min(content.e[k], m.e[k]);
  if (content.is_unit()) return p;
  std::vector<Monomial> out;
  out.reserve(p.terms().size());
  for (const auto& m : p.terms()) out.push_back(m / content);
  return MultiPoly(std::move(out));
}

bool spolys_reduce_to_zero(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                           Budget& budget) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (coprime(gens[i].leading(order), gens[j].leading(order))) continue;
      budget.charge("spoly_check");
      MultiPoly s = s_polynomial(gens[i], gens[j], order);
      if (!normal_form(s, gens, order, &budget).is_zero()) return false;
    }
  return true;
}

// True when the basis contains a univariate member in v with a constant term:
// the variety then avoids the {v = 0} axis entirely.
bool has_univariate_with_constant(const std::vector<MultiPoly>& gens, Var v) {
  const int self = static_cast<int>(v);
  for (const auto& g : gens) {
    bool univ = true, constant = false;
    for (const auto& m : g.terms()) {
      for (int k = 0; k < kMaxVars; ++k)
        if (k != self && m.e[k] != 0) univ = false;
      if (m.is_unit()) constant = true;
    }
    if (univ && constant) return true;
  }
  return false;
}

// xy is a unit modulo the ideal iff adjoining it yields the unit ideal; this
// certifies that the basis generates the full Laurent contraction.
bool xy_is_unit_mod(const GroebnerBasis& gb, Budget& budget) {
  if (has_univariate_with_constant(gb.gens, Var::x) &&
      has_univariate_with_constant(gb.gens, Var::y))
    return true;
  Monomial xy;
  xy.e[0] = 1;
  xy.e[1] = 1;
  std::vector<MultiPoly> gens = gb.gens;
  gens.push_back(MultiPoly({xy}));
  return buchberger(std::move(gens), gb.order, budget).is_unit_ideal();
}

GroebnerBasis saturate_via_inverses(const std::vector<MultiPoly>& shifted,
                                    const MonomialOrder& order, Budget& budget) {
  std::vector<MultiPoly> gens;
  gens.reserve(shifted.size() + 2);
  for (const auto& g : shifted) gens.push_back(g);
  Monomial xxb, yyb;
  xxb.e[static_cast<int>(Var::x)] = 1;
  xxb.e[static_cast<int>(Var::xbar)] = 1;
  yyb.e[static_cast<int>(Var::y)] = 1;
  yyb.e[static_cast<int>(Var::ybar)] = 1;
  gens.push_back(MultiPoly({xxb, Monomial::unit()}));
  gens.push_back(MultiPoly({yyb, Monomial::unit()}));

  GroebnerBasis full = buchberger(
      std::move(gens), MonomialOrder::lex({Var::xbar, Var::ybar, Var::x, Var::y}), budget);
  std::vector<MultiPoly> contracted;
  for (const auto& g : full.gens) {
    bool aux = false;
    for (const auto& m : g.terms())
      if (m.e[static_cast<int>(Var::xbar)] || m.e[static_cast<int>(Var::ybar)]) aux = true;
    if (!aux) contracted.push_back(g);
  }
  if (contracted.empty()) throw DomainError("laurent saturation produced no generators");
  return buchberger(std::move(contracted), order, budget);
}

// Applies the monomial-content strip to a reduced basis, re-running Buchberger
// whenever the stripped set stops being a Gröbner basis. Terminates because
// each effective strip strictly enlarges the ideal.
GroebnerBasis strip_presentation(GroebnerBasis gb, const std::vector<MultiPoly>& shifted,
                                 Budget& budget) {
  for (;;) {
    std::vector<MultiPoly> stripped;
    stripped.reserve(gb.gens.size());
    for (const auto& g : gb.gens) stripped.push_back(strip_content(g));
    if (stripped == gb.gens) break;
    if (spolys_reduce_to_zero(stripped, gb.order, budget)) {
      sort_by_leading(stripped, gb.order);
      gb.gens = std::move(stripped);
      break;
    }
    gb = buchberger(std::move(stripped), gb.order, budget);
  }
  if (!gb.is_unit_ideal() && !xy_is_unit_mod(gb, budget))
    return saturate_via_inverses(shifted, gb.order, budget);
  return gb;
}

}  // namespace

GroebnerBasis laurent_ideal_basis(const std::vector<LaurentPoly>& gens,
                                  const MonomialOrder& order, Budget& budget) {
  std::vector<MultiPoly> shifted;
  for (const auto& g : gens)
    if (!g.is_zero()) shifted.push_back(shifted_content_free(g));
  if (shifted.empty()) throw DomainError("laurent_ideal_basis: no nonzero generators");
  GroebnerBasis gb = buchberger(shifted, order, budget);
  return strip_presentation(std::move(gb), shifted, budget);
}

GroebnerBasis laurent_ideal_basis(const LaurentPoly& f, const LaurentPoly& g,
                                  const std::vector<LaurentPoly>& extras,
                                  const MonomialOrder& order, Budget& budget) {
  if (f.is_zero() || g.is_zero()) throw DomainError("laurent_ideal_basis: zero generator");
  std::vector<LaurentPoly> gens{f, g};
  gens.insert(gens.end(), extras.begin(), extras.end());
  return laurent_ideal_basis(gens, order, budget);
}

bool ideal_member(const LaurentPoly& p, const GroebnerBasis& gb, Budget& budget) {
  if (p.is_zero()) return true;
  MultiPoly shifted = shifted_content_free(p);
  return normal_form(shifted, gb.gens, gb.order, &budget).is_zero();
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b, Budget& budget) {
  if (a.order != b.order) throw DomainError("ideal_equal: monomial order mismatch");
  if (a.gens == b.gens) return true;
  for (const auto& g : a.gens)
    if (!normal_form(g, b.gens, b.order, &budget).is_zero()) return false;
  for (const auto& g : b.gens)
    if (!normal_form(g, a.gens, a.order, &budget).is_zero()) return false;
  return true;
}

GroebnerBasis intersect_principal(const LaurentPoly& f, const LaurentPoly& g, Budget& budget) {
  if (f.is_zero() || g.is_zero()) throw DomainError("intersect_principal: zero input");
  MultiPoly fp = shifted_content_free(f);
  MultiPoly gp = shifted_content_free(g);
  Monomial t;
  t.e[static_cast<int>(Var::t)] = 1;
  MultiPoly tf = mp_mul_mono(fp, t);
  MultiPoly tg1 = mp_add(mp_mul_mono(gp, t), gp);  // (1 + t) g
  GroebnerBasis full =
      buchberger({tf, tg1}, MonomialOrder::lex({Var::t, Var::x, Var::y}), budget);

  std::vector<MultiPoly> eliminated;
  for (const auto& gen : full.gens) {
    bool has_t = false;
    for (const auto& m : gen.terms())
      if (m.e[static_cast<int>(Var::t)]) has_t = true;
    if (!has_t) eliminated.push_back(gen);
  }
  if (eliminated.empty()) throw DomainError("intersect_principal: empty elimination ideal");
  GroebnerBasis gb = buchberger(eliminated, lex_xy(), budget);
  return strip_presentation(std::move(gb), eliminated, budget);
}

}  // namespace gtc
