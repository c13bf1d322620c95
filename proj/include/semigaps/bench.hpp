#ifndef SEMIGAPS_BENCH_HPP
#define SEMIGAPS_BENCH_HPP

#include <cstdint>
#include <string>

namespace semigaps {

struct BenchConfig {
  std::uint64_t d_max = 200;
  unsigned trials = 5;
  unsigned n_max = 6;
  std::uint64_t seed = 12345;
};

// Times the closed-form pipeline against the enumeration oracle on
// random tuples of both sizes and returns a CSV report
// (kind,m,d1,d2,d3,n_max,closed_us,oracle_us; kind is sample or
// median). Values are cross-checked while timing; a mismatch aborts.
std::string run_bench(const BenchConfig& config);

}  // namespace semigaps

#endif  // SEMIGAPS_BENCH_HPP
