#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtc/distance.hpp"
#include "gtc/laurent.hpp"
#include "gtc/torus.hpp"

namespace gtc {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::string str() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct CodeRecord {
  std::string f;  // rendered with exponents recentered nearest the origin
  std::string g;
  std::int64_t alpha = 1, beta = 1, gamma = 0;
  std::int64_t n = 0, k = 0, d = 0;
  bool d_exact = false;
  Rational merit;
  std::int64_t locality = 0;
};

struct SearchSpace {
  std::vector<std::int64_t> n_values;
  DistancePolicy policy = DistancePolicy::exact(14);
  std::uint64_t seed = 0xC0DE;
  bool dedup_symmetry = true;
  std::uint64_t filter_trials = 1'000;  // cheap RIS pass before escalation
};

// All tori with 2*alpha*beta = n: alpha = m, beta = l over every factorization
// n = 2*l*m, gamma in [0, m).
std::vector<TwistedTorus> enumerate_tori(std::int64_t n);

// A candidate of the weight-6 family: f = 1 + x + x^a y^b, g = 1 + y + x^c y^d
// with (a, b) and (c, d) stored as canonical torus residues.
struct SearchCandidate {
  TwistedTorus torus;
  Exponent f_term;
  Exponent g_term;

  LaurentPoly f() const;
  LaurentPoly g() const;
  friend bool operator==(const SearchCandidate&, const SearchCandidate&) = default;
};

std::vector<SearchCandidate> enumerate_candidates(const TwistedTorus& torus);
std::vector<std::pair<LaurentPoly, LaurentPoly>> enumerate_codes(const TwistedTorus& torus);

// Symmetry orbit under exponent inversion and the x<->y/f<->g swap; dedup
// keeps exactly the lexicographically smallest member of each orbit.
std::vector<SearchCandidate> candidate_orbit(const SearchCandidate& c);
bool is_orbit_representative(const SearchCandidate& c);

// Chebyshev radius of the stabilizer supports after recentering each exponent
// on its lattice translate nearest the origin.
std::int64_t locality_score(const SearchCandidate& c);
Exponent recenter(const TwistedTorus& torus, Exponent e);

enum class SkipReason : std::uint8_t { none, degenerate, to_failed, zero_k, budget };

struct EvalOutcome {
  std::optional<CodeRecord> record;
  SkipReason reason = SkipReason::none;
};

EvalOutcome evaluate(const LaurentPoly& f, const LaurentPoly& g, const TwistedTorus& torus,
                     const DistancePolicy& policy, std::uint64_t seed, int workers = 1);

// Winner under the (d, then k, then locality) order with a lexicographic
// final tie-break; empty input gives an empty result.
std::vector<CodeRecord> select_optimal(const std::vector<CodeRecord>& records, std::int64_t n);

struct SearchSink {
  std::function<void(const CodeRecord&)> on_record;   // every viable record
  std::function<void(const CodeRecord&)> on_optimum;  // per-n winner
};

struct SearchSummary {
  std::int64_t candidates = 0;
  std::int64_t records = 0;
  std::int64_t skipped_zero_k = 0;
  std::int64_t skipped_to = 0;
  std::int64_t skipped_budget = 0;
  std::vector<CodeRecord> optima;
};

// Deterministic for fixed (space, seed): worker count changes wall time only.
SearchSummary run_search(const SearchSpace& space, int workers, const SearchSink& sink);

// JSON-lines schema:
// {"n":..,"k":..,"d":..,"d_exact":..,"f":..,"g":..,"a1":[0,alpha],
//  "a2":[beta,gamma],"merit":"k*d^2/n","locality":..}
std::string record_to_json(const CodeRecord& record);
CodeRecord record_from_json(const std::string& line);

std::string records_csv_header();
std::string record_to_csv(const CodeRecord& record);

}  // namespace gtc
