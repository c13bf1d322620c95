#ifndef SEMIGAPS_SAMPLING_HPP
#define SEMIGAPS_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "semigaps/relations.hpp"
#include "semigaps/semigroup.hpp"

namespace semigaps {

// Deterministic tuple generator for property tests, selftest and bench.
// Same seed, same sequence of draws. Rejection sampling throughout; a
// draw that cannot be satisfied within the attempt budget is a bug in
// the caller's bounds and fails loudly.
class TupleSampler {
 public:
  explicit TupleSampler(std::uint64_t seed);

  // Coprime pair, both entries in [2, bound].
  GeneratorTuple coprime_pair(std::uint64_t bound);

  // Minimal triple, entries in [2, bound].
  GeneratorTuple minimal_triple(std::uint64_t bound);

  // Minimal triple whose relation matrix has no vanishing column.
  GeneratorTuple nonsymmetric_triple(std::uint64_t bound);

  // Minimal triple with a vanishing column, built from {c*a, c*b, s}
  // families (gcd(a,b) = 1, s a combination of a and b, gcd(c,s) = 1)
  // and then confirmed by the column criterion.
  GeneratorTuple symmetric_triple(std::uint64_t bound);

 private:
  std::uint64_t draw(std::uint64_t lo, std::uint64_t hi);

  std::mt19937_64 rng_;
};

}  // namespace semigaps

#endif  // SEMIGAPS_SAMPLING_HPP
