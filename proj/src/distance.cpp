#include "gtc/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>

#include "gtc/errors.hpp"

namespace gtc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int effective_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

struct Candidate {
  std::int64_t weight = -1;  // -1 = empty
  Gf2Vec vec;

  bool better_than(const Candidate& o) const {
    if (weight < 0) return false;
    if (o.weight < 0) return true;
    if (weight != o.weight) return weight < o.weight;
    return vec.words() < o.vec.words();
  }
};

// One side of the CSS pair: the ambient code is ker(H_other); logical
// operators are its cosets modulo row(H_same).
struct SideProblem {
  Side side = Side::x;
  std::size_t n = 0;
  std::vector<Gf2Vec> stab_rows;  // independent rows spanning row(H_same)
  Gf2RowSpace stab_space{0};
  std::vector<Gf2Vec> logicals;  // k coset representatives
  std::vector<Gf2Vec> kernel;    // basis of ker(H_other), dim = rank(H_same) + k
};

std::vector<Gf2Vec> independent_rows(const Gf2Matrix& m) {
  Gf2RowSpace space(m.cols());
  std::vector<Gf2Vec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Gf2Vec v = m.row_vec(r);
    if (space.add(v)) rows.push_back(std::move(v));
  }
  return rows;
}

std::vector<Gf2Vec> cosets_one_side(const Gf2Matrix& h_other, const Gf2Matrix& h_same) {
  Gf2RowSpace space(h_same.cols());
  for (std::size_t r = 0; r < h_same.rows(); ++r) space.add(h_same.row_vec(r));
  std::vector<Gf2Vec> reps;
  for (auto& v : kernel_basis(h_other)) {
    Gf2Vec w = space.reduce(v);
    if (!w.is_zero() && space.add(w)) reps.push_back(std::move(w));
  }
  return reps;
}

SideProblem make_side(Side side, const Gf2Matrix& h_other, const Gf2Matrix& h_same) {
  SideProblem p;
  p.side = side;
  p.n = h_other.cols();
  p.stab_rows = independent_rows(h_same);
  p.stab_space = Gf2RowSpace(p.n);
  for (const auto& r : p.stab_rows) p.stab_space.add(r);
  p.logicals = cosets_one_side(h_other, h_same);
  p.kernel = kernel_basis(h_other);
  return p;
}

// --- RIS --------------------------------------------------------------------

Candidate ris_trial(const SideProblem& p, std::uint64_t seed, std::uint64_t trial) {
  const std::size_t n = p.n;
  const std::size_t ns = p.stab_rows.size();
  const std::size_t nl = p.logicals.size();

  std::uint64_t state = seed ^ (trial * 0x9e3779b97f4a7c15ull + 0x1234567891011ull);
  splitmix64(state);

  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(splitmix64(state) % i);
    std::swap(perm[i - 1], perm[j]);
  }

  std::vector<Gf2Vec> stab = p.stab_rows;
  std::vector<Gf2Vec> logi = p.logicals;

  // Stabilizer block is eliminated first so the logical rows come out
  // coset-reduced within the information set.
  std::vector<char> used(ns, 0);
  std::vector<std::pair<std::uint32_t, std::size_t>> pivots;
  for (std::size_t ci = 0; ci < n && pivots.size() < ns; ++ci) {
    std::uint32_t c = perm[ci];
    std::size_t pr = ns;
    for (std::size_t r = 0; r < ns; ++r)
      if (!used[r] && stab[r].get(c)) {
        pr = r;
        break;
      }
    if (pr == ns) continue;
    used[pr] = 1;
    for (std::size_t r = 0; r < ns; ++r)
      if (r != pr && stab[r].get(c)) stab[r].xor_with(stab[pr]);
    pivots.emplace_back(c, pr);
  }
  for (auto& v : logi)
    for (auto [c, r] : pivots)
      if (v.get(c)) v.xor_with(stab[r]);
  std::vector<char> lused(nl, 0);
  std::size_t placed = 0;
  for (std::size_t ci = 0; ci < n && placed < nl; ++ci) {
    std::uint32_t c = perm[ci];
    std::size_t pr = nl;
    for (std::size_t r = 0; r < nl; ++r)
      if (!lused[r] && logi[r].get(c)) {
        pr = r;
        break;
      }
    if (pr == nl) continue;
    lused[pr] = 1;
    ++placed;
    for (std::size_t r = 0; r < nl; ++r)
      if (r != pr && logi[r].get(c)) logi[r].xor_with(logi[pr]);
  }

  Candidate best;
  auto consider = [&](const Gf2Vec& v) {
    int w = v.weight();
    if (w == 0) return;
    if (best.weight < 0 || w < best.weight ||
        (w == best.weight && v.words() < best.vec.words()))
      best = Candidate{w, v};
  };
  for (const auto& v : logi) consider(v);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = i + 1; j < nl; ++j) {
      Gf2Vec s = logi[i];
      s.xor_with(logi[j]);
      consider(s);
    }
  return best;
}

Candidate ris_side(const SideProblem& p, std::uint64_t trials, std::uint64_t seed, int workers) {
  const auto nw = static_cast<std::uint64_t>(effective_workers(workers));
  const std::size_t pool_size = static_cast<std::size_t>(std::min<std::uint64_t>(nw, trials));
  std::vector<Candidate> best(std::max<std::size_t>(pool_size, 1));
  std::atomic<std::uint64_t> next{0};
  auto run = [&](std::size_t w) {
    for (;;) {
      std::uint64_t t = next.fetch_add(64);
      if (t >= trials) return;
      std::uint64_t hi = std::min(trials, t + 64);
      for (std::uint64_t i = t; i < hi; ++i) {
        Candidate c = ris_trial(p, seed, i);
        if (c.better_than(best[w])) best[w] = std::move(c);
      }
    }
  };
  if (pool_size <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (std::size_t w = 0; w < pool_size; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  Candidate overall;
  for (auto& c : best)
    if (c.better_than(overall)) overall = std::move(c);
  return overall;
}

// --- Exact (information-set enumeration, Brouwer-Zimmermann bound) ----------

struct InfoSetMatrix {
  std::vector<Gf2Vec> rows;
  std::int64_t deficiency;  // K minus the pivots gained on fresh columns
};

std::vector<InfoSetMatrix> build_info_sets(const std::vector<Gf2Vec>& gen, std::size_t n) {
  const std::size_t K = gen.size();
  std::vector<char> used(n, 0);
  std::vector<InfoSetMatrix> mats;
  for (;;) {
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t c = 0; c < n; ++c)
      if (!used[c]) order.push_back(c);
    if (order.empty()) break;
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) order.push_back(c);

    std::vector<Gf2Vec> m = gen;
    std::vector<char> placed(K, 0);
    std::size_t fresh = 0, pivots = 0;
    for (std::size_t ci = 0; ci < n && pivots < K; ++ci) {
      std::size_t c = order[ci];
      std::size_t pr = K;
      for (std::size_t r = 0; r < K; ++r)
        if (!placed[r] && m[r].get(c)) {
          pr = r;
          break;
        }
      if (pr == K) continue;
      placed[pr] = 1;
      ++pivots;
      if (!used[c]) {
        used[c] = 1;
        ++fresh;
      }
      for (std::size_t r = 0; r < K; ++r)
        if (r != pr && m[r].get(c)) m[r].xor_with(m[pr]);
    }
    if (fresh == 0) break;
    mats.push_back({std::move(m), static_cast<std::int64_t>(K - fresh)});
  }
  return mats;
}

// Enumerates XOR combinations of exactly `w` rows. Candidates are pruned only
// when strictly worse than a surviving one, so the merged minimum (and its
// lexicographic witness tie-break) is schedule-independent.
void enumerate_level(const InfoSetMatrix& mat, int w, const SideProblem& prob, Candidate& best,
                     int workers) {
  const std::size_t K = mat.rows.size();
  const auto uw = static_cast<std::size_t>(w);
  if (uw > K) return;
  const std::size_t words = mat.rows[0].words().size();

  auto scan_from = [&](std::size_t first, Candidate& local) {
    auto leaf = [&](const std::uint64_t* acc, const std::uint64_t* rw) {
      std::int64_t weight = 0;
      for (std::size_t t = 0; t < words; ++t) weight += std::popcount(acc[t] ^ rw[t]);
      if (weight == 0 || (local.weight >= 0 && weight > local.weight)) return;
      Gf2Vec v(prob.n);
      for (std::size_t t = 0; t < words; ++t) v.words()[t] = acc[t] ^ rw[t];
      if (prob.stab_space.contains(v)) return;
      Candidate c{weight, std::move(v)};
      if (c.better_than(local)) local = std::move(c);
    };
    std::vector<std::vector<std::uint64_t>> acc(uw + 1, std::vector<std::uint64_t>(words, 0));
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
      const auto& prev = acc[depth];
      for (std::size_t i = start; i < K; ++i) {
        const auto& rw = mat.rows[i].words();
        if (depth + 1 == uw) {
          leaf(prev.data(), rw.data());
        } else {
          auto& cur = acc[depth + 1];
          for (std::size_t t = 0; t < words; ++t) cur[t] = prev[t] ^ rw[t];
          self(self, depth + 1, i + 1);
        }
      }
    };
    if (uw == 1) {
      leaf(acc[0].data(), mat.rows[first].words().data());
      return;
    }
    auto& a1 = acc[1];
    const auto& rw = mat.rows[first].words();
    for (std::size_t t = 0; t < words; ++t) a1[t] = rw[t];
    rec(rec, 1, first + 1);
  };

  const std::size_t nw =
      std::min<std::size_t>(static_cast<std::size_t>(effective_workers(workers)), K);
  std::vector<Candidate> locals(std::max<std::size_t>(nw, 1), best);
  if (nw <= 1) {
    for (std::size_t first = 0; first + uw <= K; ++first) scan_from(first, locals[0]);
  } else {
    std::atomic<std::size_t> next{0};
    auto run = [&](std::size_t id) {
      for (;;) {
        std::size_t first = next.fetch_add(1);
        if (first + uw > K) return;
        scan_from(first, locals[id]);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t id = 0; id < nw; ++id) pool.emplace_back(run, id);
    for (auto& th : pool) th.join();
  }
  for (auto& c : locals)
    if (c.better_than(best)) best = std::move(c);
}

struct ExactOutcome {
  Candidate best;
  bool exact = false;  // when false, the side's distance is certified > cap
};

ExactOutcome exact_side(const SideProblem& prob, std::int64_t cap, int workers) {
  auto mats = build_info_sets(prob.kernel, prob.n);

  Candidate best;
  for (const auto& v : prob.logicals) {
    Candidate c{v.weight(), v};
    if (c.better_than(best)) best = std::move(c);
  }

  const std::size_t K = prob.kernel.size();
  for (int w = 1; static_cast<std::size_t>(w) <= K; ++w) {
    std::int64_t lb = 0;
    for (const auto& m : mats) {
      enumerate_level(m, w, prob, best, workers);
      lb += std::max<std::int64_t>(0, w + 1 - m.deficiency);
    }
    if (best.weight >= 0 && lb >= best.weight) return {std::move(best), true};
    if (lb > cap && best.weight > cap) return {std::move(best), false};
  }
  return {std::move(best), true};  // exhausted the whole code
}

}  // namespace

std::pair<std::vector<Gf2Vec>, std::vector<Gf2Vec>> logical_cosets(const Gf2Matrix& hx,
                                                                   const Gf2Matrix& hz) {
  if (hx.cols() != hz.cols()) throw DomainError("logical_cosets: column count mismatch");
  return {cosets_one_side(hz, hx), cosets_one_side(hx, hz)};
}

namespace {

DistanceResult merge_sides(const Candidate& cx, bool exact_x, const Candidate& cz, bool exact_z,
                           std::int64_t cap, bool exact_mode) {
  DistanceResult r;
  const Candidate* win = &cx;
  const Candidate* lose = &cz;
  bool win_exact = exact_x, lose_exact = exact_z;
  Side win_side = Side::x;
  if (cz.better_than(cx)) {
    win = &cz;
    lose = &cx;
    std::swap(win_exact, lose_exact);
    win_side = Side::z;
  }
  r.d = win->weight;
  r.witness = win->vec;
  r.side = (cx.weight == cz.weight) ? Side::both : win_side;
  if (exact_mode) {
    // An inexact side certifies its distance exceeds the cap.
    bool loser_at_least_d = lose_exact ? lose->weight >= win->weight : cap + 1 >= win->weight;
    r.exact = win_exact && loser_at_least_d;
  } else {
    r.exact = false;
  }
  return r;
}

}  // namespace

DistanceResult distance_upper_ris(const CssCode& code, std::uint64_t trials, std::uint64_t seed,
                                  int workers) {
  if (trials < 1) throw DomainError("distance_upper_ris: trials must be >= 1");
  auto [hx, hz] = build_parity_checks(code);
  SideProblem px = make_side(Side::x, hz, hx);
  SideProblem pz = make_side(Side::z, hx, hz);
  if (px.logicals.empty()) throw DomainError("distance_upper_ris: no logical space (k = 0)");

  Candidate cx = ris_side(px, trials, seed, workers);
  Candidate cz = ris_side(pz, trials, seed + 0x5eed, workers);
  DistanceResult r = merge_sides(cx, false, cz, false, 0, false);
  r.trials = trials;
  r.seed = seed;
  return r;
}

DistanceResult distance_exact(const CssCode& code, std::int64_t cap, int workers) {
  if (cap < 1) throw DomainError("distance_exact: cap must be >= 1");
  auto [hx, hz] = build_parity_checks(code);
  SideProblem px = make_side(Side::x, hz, hx);
  SideProblem pz = make_side(Side::z, hx, hz);
  if (px.logicals.empty()) throw DomainError("distance_exact: no logical space (k = 0)");

  ExactOutcome ox = exact_side(px, cap, workers);
  ExactOutcome oz = exact_side(pz, cap, workers);
  return merge_sides(ox.best, ox.exact, oz.best, oz.exact, cap, true);
}

DistanceResult css_distance(const CssCode& code, const DistancePolicy& policy, std::uint64_t seed,
                            int workers) {
  if (policy.kind == DistancePolicy::Kind::exact_below_cap)
    return distance_exact(code, policy.cap, workers);
  return distance_upper_ris(code, policy.trials, seed, workers);
}

}  // namespace gtc
