#ifndef SEMIGAPS_NUMBERS_HPP
#define SEMIGAPS_NUMBERS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace semigaps {

// Exact arithmetic carriers. Every formula path runs on these; there is
// no floating point anywhere in the library. mpq_class keeps rationals
// canonical (lowest terms, positive denominator, zero as 0/1).
using Int = mpz_class;
using Rat = mpq_class;

// An exact identity failed inside a formula path: non-integer result,
// parity violation, impossible discriminant. The message names the
// formula that failed. These indicate a bug, not bad input.
struct computation_error : std::runtime_error {
  explicit computation_error(const std::string& what) : std::runtime_error(what) {}
};

// A closed-form value disagrees with the enumeration oracle.
struct verification_error : std::runtime_error {
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input: bad generators, unsupported arity, inputs
// outside the enumeration oracle's scale limits.
struct invalid_input : std::invalid_argument {
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// C(n,k), with the convention C(n,k) = 0 for k < 0 or k > n.
Int binomial(unsigned long n, long k);

Int pow_int(const Int& base, unsigned long exp);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Extracts the integer from a rational that must be integral; throws
// computation_error naming `context` otherwise.
Int require_integer(const Rat& q, const char* context);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

std::uint64_t to_u64(const Int& v, const char* context);

}  // namespace semigaps

#endif  // SEMIGAPS_NUMBERS_HPP
