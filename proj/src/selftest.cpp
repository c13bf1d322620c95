#include "semigaps/selftest.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "semigaps/bernoulli.hpp"
#include "semigaps/bernoulli_higher.hpp"
#include "semigaps/power_sums.hpp"
#include "semigaps/relations.hpp"
#include "semigaps/report.hpp"
#include "semigaps/sampling.hpp"
#include "semigaps/semigroup.hpp"

namespace semigaps {

namespace {

struct Failure : std::runtime_error {
  explicit Failure(const std::string& what) : std::runtime_error(what) {}
};

void expect(bool cond, const std::string& detail) {
  if (!cond) throw Failure(detail);
}

struct Runner {
  std::ostream& log;
  int failed = 0;

  void run(const char* name, const std::function<void()>& body) {
    try {
      body();
      log << "ok - " << name << '\n';
    } catch (const std::exception& e) {
      ++failed;
      log << "FAIL - " << name << ": " << e.what() << '\n';
    }
  }
};

std::string sum_name(const GeneratorTuple& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.count(); ++i) {
    if (i) os << ',';
    os << g.d(i);
  }
  os << ')';
  return os.str();
}

}  // namespace

bool run_selftest(std::uint64_t seed, std::ostream& log) {
  Runner r{log};
  BernoulliCache cache;

  r.run("binomial conventions", [&] {
    expect(binomial(5, 2) == 10, "C(5,2) != 10");
    expect(binomial(0, 0) == 1, "C(0,0) != 1");
    expect(binomial(4, 7) == 0, "C(4,7) != 0");
    expect(binomial(4, -1) == 0, "C(4,-1) != 0");
    for (unsigned long n = 1; n <= 30; ++n) {
      for (long k = 1; k <= static_cast<long>(n); ++k) {
        expect(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k),
               "Pascal rule broken");
        expect(binomial(n, k) == binomial(n, static_cast<long>(n) - k), "symmetry broken");
      }
    }
  });

  r.run("bernoulli reference values", [&] {
    expect(cache.at(0) == 1, "B_0 != 1");
    expect(cache.at(1) == Rat(-1, 2), "B_1 != -1/2");
    expect(cache.at(2) == Rat(1, 6), "B_2 != 1/6");
    expect(cache.at(12) == Rat(-691, 2730), "B_12 != -691/2730");
  });

  r.run("bernoulli defining identity", [&] {
    for (std::size_t k = 1; k <= 50; ++k) {
      Rat sum = 0;
      for (std::size_t j = 0; j <= k; ++j) {
        Rat term = cache.at(j);
        term *= binomial(k + 1, static_cast<long>(j));
        sum += term;
      }
      expect(sum == 0, "sum_j C(k+1,j) B_j != 0 at k=" + std::to_string(k));
    }
  });

  r.run("bernoulli odd indices vanish", [&] {
    for (std::size_t k = 3; k <= 51; k += 2) {
      expect(cache.at(k) == 0, "B_" + std::to_string(k) + " != 0");
    }
  });

  r.run("higher-order evaluation paths agree", [&] {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 60; ++trial) {
      HigherOrderQuery q;
      q.order = 2 + static_cast<unsigned>(rng() % 2);
      q.n = static_cast<unsigned>(rng() % 13);
      for (unsigned i = 0; i < q.order; ++i) {
        q.weights.emplace_back(1 + static_cast<unsigned long>(rng() % 20));
      }
      q.x = static_cast<long>(rng() % 61) - 30;
      if (trial % 5 == 0) q.x = 0;
      const Rat a = eval_expansion(q, cache);
      const Rat b = eval_recursive(q, cache);
      expect(a == b, "expansion and recursion differ at n=" + std::to_string(q.n));
    }
  });

  r.run("apery profile matches representability sieve", [&] {
    TupleSampler sampler(seed + 1);
    for (int i = 0; i < 12; ++i) {
      const GeneratorTuple g = i % 2 ? sampler.coprime_pair(30) : sampler.minimal_triple(25);
      const GapSet fast = gap_set(g);
      const GapSet slow = gap_set_sieve(g);
      expect(fast.gaps == slow.gaps, "gap sets differ for " + sum_name(g));
      const AperyProfile profile = apery_profile(g);
      expect(profile.genus() == Int(static_cast<unsigned long>(fast.genus())),
             "genus mismatch for " + sum_name(g));
      if (!fast.empty()) {
        expect(profile.frobenius() == fast.frobenius(), "frobenius mismatch for " + sum_name(g));
      }
    }
  });

  r.run("hilbert numerator closed form matches oracle", [&] {
    TupleSampler sampler(seed + 2);
    for (int i = 0; i < 8; ++i) {
      const GeneratorTuple pair = sampler.coprime_pair(30);
      expect(numerator_m2(pair) == numerator_from_oracle(pair),
             "pair numerator mismatch for " + sum_name(pair));
      const GeneratorTuple triple = sampler.minimal_triple(25);
      const RelationMatrix rel = minimal_relations(triple);
      const SemigroupClass cls = classify(triple, rel);
      expect(numerator_closed_form(triple, cls, rel) == numerator_from_oracle(triple),
             "triple numerator mismatch for " + sum_name(triple));
    }
  });

  r.run("relation rows balance and diagonals are minimal", [&] {
    TupleSampler sampler(seed + 3);
    for (int i = 0; i < 10; ++i) {
      const GeneratorTuple g = sampler.minimal_triple(40);
      const RelationMatrix rel = minimal_relations(g);
      for (std::size_t row = 0; row < 3; ++row) {
        Int lhs = Int(static_cast<unsigned long>(rel.a[row][row]));
        lhs *= static_cast<unsigned long>(g.d(row));
        Int rhs = 0;
        for (std::size_t col = 0; col < 3; ++col) {
          if (col == row) continue;
          Int term = Int(static_cast<unsigned long>(rel.a[row][col]));
          term *= static_cast<unsigned long>(g.d(col));
          rhs += term;
        }
        expect(lhs == rhs, "row identity broken for " + sum_name(g));
        expect(rel.a[row][row] >= 2, "diagonal below 2 for " + sum_name(g));
        const std::size_t j = row == 0 ? 1 : 0;
        const std::size_t k = row == 2 ? 1 : 2;
        for (std::uint64_t v = 2; v < rel.a[row][row]; ++v) {
          expect(!pair_member(v * g.d(row), g.d(j), g.d(k)),
                 "diagonal not minimal for " + sum_name(g));
        }
      }
    }
  });

  r.run("symmetric classification matches frobenius criterion", [&] {
    TupleSampler sampler(seed + 4);
    for (int i = 0; i < 12; ++i) {
      const GeneratorTuple g = i % 3 ? sampler.minimal_triple(35) : sampler.symmetric_triple(35);
      const RelationMatrix rel = minimal_relations(g);
      const SemigroupClass cls = classify(g, rel);
      const AperyProfile profile = apery_profile(g);
      Int mirror = profile.genus();
      mirror *= 2;
      mirror -= 1;
      const bool frob_symmetric = mirror == Int(static_cast<unsigned long>(profile.frobenius()));
      expect(cls.symmetric() == frob_symmetric,
             "column criterion disagrees with frobenius mirror for " + sum_name(g));
    }
  });

  r.run("pair power sums agree across paths", [&] {
    TupleSampler sampler(seed + 5);
    for (int i = 0; i < 10; ++i) {
      const GeneratorTuple g = sampler.coprime_pair(40);
      const AperyProfile profile = apery_profile(g);
      for (unsigned n = 0; n <= 6; ++n) {
        const Int direct = g_m2_double_sum(g, n, cache).value;
        const Int compact = g_m2_compact(g, n, cache, true).value;
        const Int enumerated = oracle_power_sum(profile, n);
        expect(direct == compact, "double sum vs compact at " + sum_name(g));
        expect(direct == enumerated, "closed form vs oracle at " + sum_name(g));
        if (n <= 2) {
          expect(g_m2_low_order(g, n).value == direct, "low order mismatch at " + sum_name(g));
        }
      }
    }
  });

  r.run("triple power sums agree across paths", [&] {
    TupleSampler sampler(seed + 6);
    for (int i = 0; i < 8; ++i) {
      const GeneratorTuple g = i % 2 ? sampler.minimal_triple(30) : sampler.symmetric_triple(30);
      const RelationMatrix rel = minimal_relations(g);
      const SemigroupClass cls = classify(g, rel);
      const AperyProfile profile = apery_profile(g);
      for (unsigned n = 0; n <= 5; ++n) {
        const Int closed = cls.symmetric() ? g_m3_sym(g, cls, rel, n, cache, true).value
                                           : g_m3_nonsym(g, cls, rel, n, cache, true).value;
        expect(closed == oracle_power_sum(profile, n), "closed form vs oracle at " + sum_name(g));
        if (n <= 2) {
          expect(g_m3_low_order(g, cls, rel, n).value == closed,
                 "low order mismatch at " + sum_name(g));
        }
      }
    }
  });

  r.run("power sums grow and dominate the genus", [&] {
    TupleSampler sampler(seed + 7);
    for (int i = 0; i < 6; ++i) {
      const GeneratorTuple g = i % 2 ? sampler.coprime_pair(30) : sampler.minimal_triple(25);
      const AperyProfile profile = apery_profile(g);
      Int previous = -1;
      for (unsigned n = 0; n <= 5; ++n) {
        const Int value = oracle_power_sum(profile, n);
        expect(value >= previous, "sum decreased at " + sum_name(g));
        if (n >= 1) {
          expect(value >= profile.genus(), "sum below genus at " + sum_name(g));
        }
        previous = value;
      }
    }
  });

  r.run("dispatcher reduces and verifies", [&] {
    const PowerSumReport reduced = power_sums_auto({2, 3, 5}, 2, Mode::verify);
    expect(reduced.cls == PipelineClass::reduced_m2, "[2,3,5] did not reduce");
    expect(reduced.effective.gens == std::vector<std::uint64_t>({2, 3}), "wrong reduction");
    for (const PowerSumResult& res : reduced.results) {
      expect(res.value == 1, "power sums of <2,3> must all be 1");
      expect(res.agreement.has_value() && *res.agreement, "verification not recorded");
    }
    const PowerSumReport unit = power_sums_auto({1, 4, 9}, 3, Mode::fast);
    for (const PowerSumResult& res : unit.results) {
      expect(res.value == 0, "unit semigroup has no gaps");
    }
  });

  r.run("json output round-trips byte for byte", [&] {
    const PowerSumReport report = power_sums_auto({3, 4, 5}, 3, Mode::verify);
    const std::string emitted = render_power_sums(report, OutputFormat::json);
    const nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(emitted);
    expect(parsed.dump(2) + "\n" == emitted, "round trip changed the document");
    const std::string csv = render_power_sums(report, OutputFormat::csv);
    expect(csv.rfind("n,value,method,verified\n", 0) == 0, "csv header drifted");
  });

  return r.failed == 0;
}

}  // namespace semigaps
