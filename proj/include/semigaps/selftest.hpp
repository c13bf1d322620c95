#ifndef SEMIGAPS_SELFTEST_HPP
#define SEMIGAPS_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>

namespace semigaps {

// Runs every library invariant on deterministic random samples drawn
// from `seed`, one result line per check on `log`. Returns true iff
// all checks passed.
bool run_selftest(std::uint64_t seed, std::ostream& log);

}  // namespace semigaps

#endif  // SEMIGAPS_SELFTEST_HPP
