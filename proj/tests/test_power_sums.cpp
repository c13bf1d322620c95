#include <cstdint>
#include <vector>

#include <doctest.h>

#include "semigaps/power_sums.hpp"
#include "semigaps/sampling.hpp"

using namespace semigaps;

namespace {

struct TriplePaths {
  GeneratorTuple g;
  RelationMatrix rel;
  SemigroupClass cls;
};

TriplePaths prepare(std::initializer_list<std::uint64_t> gens) {
  TriplePaths t{validate(gens), {}, {}};
  t.rel = minimal_relations(t.g);
  t.cls = classify(t.g, t.rel);
  return t;
}

// A tempting cubic-sum shortcut for two generators that is simply
// wrong; kept here to document why the library never ships it. It
// fails on (3,5) and is not even integral on (2,3).
Rat bogus_pair_g3(std::uint64_t a, std::uint64_t b) {
  const Int d1(static_cast<unsigned long>(a));
  const Int d2(static_cast<unsigned long>(b));
  const Rat g0 = Rat((d1 - 1) * (d2 - 1)) / 2;
  Int bracket = (1 + d1) * (1 + d2);
  bracket *= 1 + d1 * d1 + d2 * d2 + 6 * d1 * d1 * d2 * d2;
  bracket -= 15 * d1 * d2 * (d1 + d2);
  Rat out = g0 * bracket;
  out /= 60;
  return out;
}

}  // namespace

TEST_SUITE("power_sums") {
  TEST_CASE("method names are stable identifiers") {
    CHECK(std::string(method_name(Method::m2_double_sum)) == "closed_form_m2_double_sum");
    CHECK(std::string(method_name(Method::m2_compact)) == "closed_form_m2_compact");
    CHECK(std::string(method_name(Method::m3_nonsym)) == "closed_form_m3_nonsym");
    CHECK(std::string(method_name(Method::m3_sym)) == "closed_form_m3_sym");
    CHECK(std::string(method_name(Method::low_order)) == "specialized_low_order");
    CHECK(std::string(method_name(Method::oracle)) == "oracle");
    CHECK(std::string(pipeline_class_name(PipelineClass::symmetric)) == "symmetric");
    CHECK(std::string(pipeline_class_name(PipelineClass::nonsymmetric)) == "nonsymmetric");
    CHECK(std::string(pipeline_class_name(PipelineClass::reduced_m2)) == "reduced-m2");
  }

  TEST_CASE("pair (3,5) through every path") {
    const GeneratorTuple g = validate({3, 5});
    BernoulliCache cache;
    const std::vector<long> expect = {4, 14, 70, 416};
    for (unsigned n = 0; n < expect.size(); ++n) {
      CHECK(g_m2_double_sum(g, n, cache).value == expect[n]);
      CHECK(g_m2_compact(g, n, cache, true).value == expect[n]);
      if (n <= 2) CHECK(g_m2_low_order(g, n).value == expect[n]);
      CHECK(oracle_power_sum(g, n) == expect[n]);
    }
    CHECK(g_m2_double_sum(g, 4, cache).value == 2674);
  }

  TEST_CASE("pair (2,3) has a single gap") {
    const GeneratorTuple g = validate({2, 3});
    BernoulliCache cache;
    for (unsigned n = 0; n <= 7; ++n) {
      CHECK(g_m2_double_sum(g, n, cache).value == 1);
      CHECK(g_m2_compact(g, n, cache, true).value == 1);
    }
  }

  TEST_CASE("pair (5,7) specializations") {
    const GeneratorTuple g = validate({5, 7});
    BernoulliCache cache;
    CHECK(g_m2_low_order(g, 0).value == 12);
    CHECK(g_m2_low_order(g, 1).value == 114);
    CHECK(g_m2_low_order(g, 2).value == g_m2_double_sum(g, 2, cache).value);
    CHECK(g_m2_low_order(g, 2).value == oracle_power_sum(g, 2));
  }

  TEST_CASE("non-symmetric triple (3,4,5)") {
    const TriplePaths t = prepare({3, 4, 5});
    REQUIRE_FALSE(t.cls.symmetric());
    BernoulliCache cache;
    const std::vector<long> expect = {2, 3, 5, 9, 17, 33, 65};
    for (unsigned n = 0; n < expect.size(); ++n) {
      CHECK(g_m3_nonsym(t.g, t.cls, t.rel, n, cache, true).value == expect[n]);
      if (n <= 2) CHECK(g_m3_low_order(t.g, t.cls, t.rel, n).value == expect[n]);
      CHECK(oracle_power_sum(t.g, n) == expect[n]);
    }
  }

  TEST_CASE("symmetric triple (4,6,9)") {
    const TriplePaths t = prepare({4, 6, 9});
    REQUIRE(t.cls.symmetric());
    BernoulliCache cache;
    const std::vector<long> expect = {6, 29, 209};
    for (unsigned n = 0; n < expect.size(); ++n) {
      CHECK(g_m3_sym(t.g, t.cls, t.rel, n, cache, true).value == expect[n]);
      CHECK(g_m3_low_order(t.g, t.cls, t.rel, n).value == expect[n]);
    }
    for (unsigned n = 3; n <= 5; ++n) {
      CHECK(g_m3_sym(t.g, t.cls, t.rel, n, cache).value == oracle_power_sum(t.g, n));
    }
  }

  TEST_CASE("path dispatch guards") {
    const TriplePaths sym = prepare({4, 6, 9});
    const TriplePaths non = prepare({3, 4, 5});
    BernoulliCache cache;
    CHECK_THROWS_AS(g_m3_sym(non.g, non.cls, non.rel, 1, cache), invalid_input);
    CHECK_THROWS_AS(g_m3_nonsym(sym.g, sym.cls, sym.rel, 1, cache), invalid_input);
    CHECK_THROWS_AS(g_m3_low_order(non.g, non.cls, non.rel, 3), invalid_input);
    CHECK_THROWS_AS(g_m2_low_order(validate({3, 5}), 3), invalid_input);
    CHECK_THROWS_AS(g_m2_double_sum(non.g, 1, cache), invalid_input);
  }

  TEST_CASE("random pairs agree across paths and with the oracle") {
    TupleSampler sampler(2024);
    BernoulliCache cache;
    for (int trial = 0; trial < 10; ++trial) {
      const GeneratorTuple g = sampler.coprime_pair(45);
      for (unsigned n = 0; n <= 5; ++n) {
        const Int reference = oracle_power_sum(g, n);
        CHECK(g_m2_double_sum(g, n, cache).value == reference);
        CHECK(g_m2_compact(g, n, cache).value == reference);
        if (n <= 2) CHECK(g_m2_low_order(g, n).value == reference);
      }
    }
  }

  TEST_CASE("random triples agree with the oracle") {
    TupleSampler sampler(31337);
    BernoulliCache cache;
    for (int trial = 0; trial < 6; ++trial) {
      const GeneratorTuple g =
          (trial % 2 == 0) ? sampler.minimal_triple(30) : sampler.symmetric_triple(30);
      const RelationMatrix rel = minimal_relations(g);
      const SemigroupClass cls = classify(g, rel);
      for (unsigned n = 0; n <= 4; ++n) {
        const Int reference = oracle_power_sum(g, n);
        const PowerSumResult r = cls.symmetric() ? g_m3_sym(g, cls, rel, n, cache)
                                                 : g_m3_nonsym(g, cls, rel, n, cache);
        CHECK(r.value == reference);
        if (n <= 2) CHECK(g_m3_low_order(g, cls, rel, n).value == reference);
      }
    }
  }

  TEST_CASE("the tempting pair cubic shortcut is wrong") {
    // correct value for (3,5) at n = 3 is 416, the shortcut gives 2096
    CHECK(oracle_power_sum(validate({3, 5}), 3) == 416);
    CHECK(bogus_pair_g3(3, 5) == 2096);
    // for (2,3) it is not even an integer: 77/2 against the true 1
    const Rat r23 = bogus_pair_g3(2, 3);
    CHECK_FALSE(is_integer(r23));
    CHECK(r23 == Rat(77, 2));
    CHECK(oracle_power_sum(validate({2, 3}), 3) == 1);
  }

  TEST_CASE("dispatcher reduces non-minimal triples") {
    const PowerSumReport rep = power_sums_auto({2, 3, 5}, 3, Mode::verify);
    CHECK(rep.input == std::vector<std::uint64_t>({2, 3, 5}));
    CHECK_FALSE(rep.minimal);
    CHECK(rep.effective.gens == std::vector<std::uint64_t>({2, 3}));
    CHECK(rep.cls == PipelineClass::reduced_m2);
    REQUIRE(rep.results.size() == 4);
    for (const PowerSumResult& r : rep.results) {
      CHECK(r.value == 1);
      REQUIRE(r.agreement.has_value());
      CHECK(*r.agreement);
    }

    const PowerSumReport mid = power_sums_auto({9, 4, 8}, 0, Mode::fast);
    CHECK(mid.effective.gens == std::vector<std::uint64_t>({4, 9}));
    CHECK(mid.results.at(0).value == 12);
  }

  TEST_CASE("dispatcher handles the unit generator") {
    const PowerSumReport rep = power_sums_auto({1, 4, 9}, 4, Mode::verify);
    CHECK(rep.input == std::vector<std::uint64_t>({1, 4, 9}));
    CHECK(rep.cls == PipelineClass::reduced_m2);
    CHECK(rep.effective.gens.empty());
    REQUIRE(rep.results.size() == 5);
    for (const PowerSumResult& r : rep.results) {
      CHECK(r.value == 0);
      CHECK(r.method == Method::oracle);
      CHECK_FALSE(r.agreement.has_value());
    }
  }

  TEST_CASE("dispatcher verify mode on a triple") {
    const PowerSumReport rep = power_sums_auto({3, 4, 5}, 6, Mode::verify);
    CHECK(rep.cls == PipelineClass::nonsymmetric);
    REQUIRE(rep.relations.has_value());
    REQUIRE(rep.classification.has_value());
    CHECK(rep.classification->j_invariant == 1);
    const std::vector<long> expect = {2, 3, 5, 9, 17, 33, 65};
    REQUIRE(rep.results.size() == expect.size());
    for (unsigned n = 0; n < expect.size(); ++n) {
      CHECK(rep.results[n].n == n);
      CHECK(rep.results[n].value == expect[n]);
      CHECK(rep.results[n].method == Method::m3_nonsym);
      CHECK(rep.results[n].agreement == std::optional<bool>(true));
    }
  }

  TEST_CASE("dispatcher fast mode picks the cheap path for small n") {
    const PowerSumReport rep = power_sums_auto({3, 4, 5}, 4, Mode::fast);
    REQUIRE(rep.results.size() == 5);
    for (unsigned n = 0; n <= 2; ++n) CHECK(rep.results[n].method == Method::low_order);
    for (unsigned n = 3; n <= 4; ++n) CHECK(rep.results[n].method == Method::m3_nonsym);
    for (const PowerSumResult& r : rep.results) CHECK_FALSE(r.agreement.has_value());

    const PowerSumReport pair = power_sums_auto({5, 3}, 4, Mode::fast);
    for (unsigned n = 0; n <= 2; ++n) CHECK(pair.results[n].method == Method::low_order);
    for (unsigned n = 3; n <= 4; ++n) CHECK(pair.results[n].method == Method::m2_double_sum);
    CHECK(pair.results[3].value == 416);
    CHECK(pair.results[4].value == 2674);

    const PowerSumReport sym = power_sums_auto({4, 6, 9}, 3, Mode::fast);
    CHECK(sym.cls == PipelineClass::symmetric);
    CHECK(sym.results[3].method == Method::m3_sym);
  }

  TEST_CASE("dispatcher rejects malformed input") {
    CHECK_THROWS_AS(power_sums_auto({2, 4}, 2, Mode::fast), invalid_input);
    CHECK_THROWS_AS(power_sums_auto({7}, 2, Mode::fast), invalid_input);
    CHECK_THROWS_AS(power_sums_auto({0, 3}, 2, Mode::fast), invalid_input);
    CHECK_THROWS_AS(power_sums_auto({2, 3, 5, 7}, 2, Mode::fast), invalid_input);
    CHECK_THROWS_AS(power_sums_auto({6, 6}, 2, Mode::fast), invalid_input);
  }

  TEST_CASE("sums grow with the exponent and dominate the genus") {
    TupleSampler sampler(808);
    for (int trial = 0; trial < 6; ++trial) {
      const GeneratorTuple g =
          (trial % 2 == 0) ? sampler.coprime_pair(30) : sampler.minimal_triple(24);
      const PowerSumReport rep = power_sums_auto(g.gens, 6, Mode::verify);
      const Int genus = rep.results.at(0).value;
      Int prev = genus;
      for (unsigned n = 1; n < rep.results.size(); ++n) {
        CHECK(rep.results[n].value >= prev);
        CHECK(rep.results[n].value >= genus);
        prev = rep.results[n].value;
      }
    }
  }
}
