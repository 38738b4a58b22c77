#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gtc/css_lattice.hpp"
#include "gtc/gf2matrix.hpp"

namespace gtc {

enum class Side : std::uint8_t { x, z, both };

struct DistanceResult {
  std::int64_t d = 0;
  bool exact = false;
  Side side = Side::both;
  Gf2Vec witness;  // a minimum-weight logical representative
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Coset representatives of ker(H_Z)/row(H_X) and ker(H_X)/row(H_Z):
// k independent X-type and k Z-type logical generators.
std::pair<std::vector<Gf2Vec>, std::vector<Gf2Vec>> logical_cosets(const Gf2Matrix& hx,
                                                                   const Gf2Matrix& hz);

// Random-information-set upper bound. Each trial draws its own PRNG stream
// from (seed, trial index), so results are reproducible for any worker count
// and monotone in the trial count.
DistanceResult distance_upper_ris(const CssCode& code, std::uint64_t trials, std::uint64_t seed,
                                  int workers = 0);

// Exact minimum logical weight by information-set enumeration with the
// Brouwer-Zimmermann lower bound, excluding the stabilizer subspace.
// Returns exact=false (with the incumbent upper bound) once the certified
// bound passes `cap`.
DistanceResult distance_exact(const CssCode& code, std::int64_t cap, int workers = 0);

struct DistancePolicy {
  enum class Kind : std::uint8_t { exact_below_cap, probabilistic };
  Kind kind = Kind::exact_below_cap;
  std::int64_t cap = 14;
  std::uint64_t trials = 100'000;

  static DistancePolicy exact(std::int64_t cap = 14) {
    return {Kind::exact_below_cap, cap, 0};
  }
  static DistancePolicy ris(std::uint64_t trials) {
    return {Kind::probabilistic, 0, trials};
  }
};

DistanceResult css_distance(const CssCode& code, const DistancePolicy& policy,
                            std::uint64_t seed, int workers = 0);

}  // namespace gtc
