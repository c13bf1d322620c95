#ifndef SEMIGAPS_SEMIGROUP_HPP
#define SEMIGAPS_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

#include "semigaps/numbers.hpp"
#include "semigaps/polynomial.hpp"

namespace semigaps {

// Validated generator tuple: strictly increasing, every entry >= 2,
// gcd 1, two or three entries. `minimal` is true when no generator is
// representable by the others.
struct GeneratorTuple {
  std::vector<std::uint64_t> gens;
  bool minimal = false;

  std::size_t count() const { return gens.size(); }
  std::uint64_t d(std::size_t i) const { return gens[i]; }  // 0-based
};

// Sorts, deduplicates and checks a raw generator list.
// Throws invalid_input on gcd != 1, any d <= 1, or arity outside {2,3}.
GeneratorTuple validate(const std::vector<std::uint64_t>& raw);

// Membership of x in the semigroup generated by {a, b} (a,b >= 1),
// solved by a congruence instead of enumeration; O(log) per query.
bool pair_member(std::uint64_t x, std::uint64_t a, std::uint64_t b);

// Least semigroup element in every residue class mod gens[0], found by
// shortest-path relaxation with the remaining generators as edge
// weights. Encodes the whole gap set without materializing it.
struct AperyProfile {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> minima;  // minima[0] == 0

  Int genus() const;
  bool has_gaps() const;
  std::uint64_t frobenius() const;  // requires has_gaps()
};

AperyProfile apery_profile(const GeneratorTuple& g);

// The finite set of unrepresentable positive integers, ascending.
struct GapSet {
  std::vector<std::uint64_t> gaps;

  std::size_t genus() const { return gaps.size(); }
  bool empty() const { return gaps.empty(); }
  std::uint64_t frobenius() const;  // requires a nonempty gap set
};

GapSet gap_set(const GeneratorTuple& g);

// Second-opinion oracle: naive representability sieve up to d1*dmax.
// Only for small inputs; used to cross-check the Apery route.
GapSet gap_set_sieve(const GeneratorTuple& g);

// table[x] == true iff x is representable; size bound+1.
std::vector<bool> representability_table(const GeneratorTuple& g, std::uint64_t bound);

// sum of s^n over all gaps s, streamed from the Apery profile in exact
// integer arithmetic, term by term.
Int oracle_power_sum(const GeneratorTuple& g, unsigned n);
Int oracle_power_sum(const AperyProfile& profile, unsigned n);

// Hilbert-series numerator extracted by finite polynomial arithmetic:
// Q = (1/(1-z) - Phi(z)) * prod_j (1 - z^{d_j}), where the 1/(1-z)
// factor cancels against (1 - z^{d_1}) into a finite geometric block.
NumeratorPolynomial numerator_from_oracle(const GeneratorTuple& g);

}  // namespace semigaps

#endif  // SEMIGAPS_SEMIGROUP_HPP
