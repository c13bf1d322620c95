#include "semigaps/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <vector>

#include "semigaps/power_sums.hpp"
#include "semigaps/relations.hpp"
#include "semigaps/sampling.hpp"
#include "semigaps/semigroup.hpp"

namespace semigaps {

namespace {

struct Sample {
  std::vector<std::uint64_t> gens;
  std::int64_t closed_us = 0;
  std::int64_t oracle_us = 0;
};

template <class F>
std::int64_t time_us(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
}

std::int64_t median(std::vector<std::int64_t> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

}  // namespace

std::string run_bench(const BenchConfig& config) {
  TupleSampler sampler(config.seed);
  std::ostringstream os;
  os << "kind,m,d1,d2,d3,n_max,closed_us,oracle_us\n";

  for (std::size_t m : {std::size_t{2}, std::size_t{3}}) {
    std::vector<Sample> samples;
    for (unsigned t = 0; t < config.trials; ++t) {
      const GeneratorTuple g =
          m == 2 ? sampler.coprime_pair(config.d_max) : sampler.minimal_triple(config.d_max);
      BernoulliCache cache;
      std::vector<Int> closed_values;
      std::vector<Int> oracle_values;

      const std::int64_t closed_us = time_us([&] {
        if (m == 2) {
          for (unsigned n = 0; n <= config.n_max; ++n) {
            closed_values.push_back(g_m2_double_sum(g, n, cache).value);
          }
        } else {
          const RelationMatrix rel = minimal_relations(g);
          const SemigroupClass cls = classify(g, rel);
          for (unsigned n = 0; n <= config.n_max; ++n) {
            closed_values.push_back(cls.symmetric()
                                        ? g_m3_sym(g, cls, rel, n, cache, false).value
                                        : g_m3_nonsym(g, cls, rel, n, cache, false).value);
          }
        }
      });

      const std::int64_t oracle_us = time_us([&] {
        const AperyProfile profile = apery_profile(g);
        for (unsigned n = 0; n <= config.n_max; ++n) {
          oracle_values.push_back(oracle_power_sum(profile, n));
        }
      });

      if (closed_values != oracle_values) {
        std::ostringstream what;
        what << "bench cross-check failed for";
        for (std::uint64_t d : g.gens) what << ' ' << d;
        throw verification_error(what.str());
      }
      samples.push_back({g.gens, closed_us, oracle_us});
    }

    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return a.gens < b.gens; });

    std::vector<std::int64_t> closed_all, oracle_all;
    for (const Sample& s : samples) {
      os << "sample," << m << ',' << s.gens[0] << ',' << s.gens[1] << ',';
      if (m == 3) os << s.gens[2];
      os << ',' << config.n_max << ',' << s.closed_us << ',' << s.oracle_us << '\n';
      closed_all.push_back(s.closed_us);
      oracle_all.push_back(s.oracle_us);
    }
    os << "median," << m << ",,,," << config.n_max << ',' << median(closed_all) << ','
       << median(oracle_all) << '\n';
  }
  return os.str();
}

}  // namespace semigaps
