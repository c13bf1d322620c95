#include <string>

#include <doctest.h>
#include <json.hpp>

#include "semigaps/report.hpp"

using namespace semigaps;
using nlohmann::ordered_json;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("format parsing") {
    CHECK(parse_format("table") == OutputFormat::table);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK_THROWS_AS(parse_format("yaml"), invalid_input);
    CHECK_THROWS_AS(parse_format("JSON"), invalid_input);
  }

  TEST_CASE("power sum json: schema, values and round trip") {
    const PowerSumReport rep = power_sums_auto({3, 4, 5}, 2, Mode::verify);
    const std::string text = render_power_sums(rep, OutputFormat::json);

    const ordered_json j = ordered_json::parse(text);
    CHECK(j["generators"] == ordered_json::array({"3", "4", "5"}));
    CHECK(j["minimal"] == true);
    CHECK(j["class"] == "nonsymmetric");
    REQUIRE(j["results"].size() == 3);
    CHECK(j["results"][0]["n"] == 0);
    CHECK(j["results"][0]["value"] == "2");
    CHECK(j["results"][0]["method"] == "closed_form_m3_nonsym");
    CHECK(j["results"][0]["verified"] == true);
    CHECK(j["results"][2]["value"] == "5");

    // fixed key order makes parse + re-dump the identity
    CHECK(j.dump(2) + "\n" == text);
  }

  TEST_CASE("power sum json: fast mode leaves verified null") {
    const PowerSumReport rep = power_sums_auto({3, 5}, 1, Mode::fast);
    const ordered_json j = ordered_json::parse(render_power_sums(rep, OutputFormat::json));
    CHECK(j["class"] == "reduced-m2");
    CHECK(j["results"][0]["verified"].is_null());
    CHECK(j["results"][0]["method"] == "specialized_low_order");
    CHECK(j["results"][0]["value"] == "4");
  }

  TEST_CASE("power sum csv") {
    const PowerSumReport verified = power_sums_auto({3, 5}, 1, Mode::verify);
    CHECK(render_power_sums(verified, OutputFormat::csv) ==
          "n,value,method,verified\n"
          "0,4,closed_form_m2_double_sum,true\n"
          "1,14,closed_form_m2_double_sum,true\n");

    const PowerSumReport fast = power_sums_auto({3, 5}, 1, Mode::fast);
    CHECK(render_power_sums(fast, OutputFormat::csv) ==
          "n,value,method,verified\n"
          "0,4,specialized_low_order,\n"
          "1,14,specialized_low_order,\n");
  }

  TEST_CASE("power sum table mentions reduction") {
    const PowerSumReport rep = power_sums_auto({2, 3, 5}, 1, Mode::fast);
    const std::string text = render_power_sums(rep, OutputFormat::table);
    CHECK(contains(text, "generators: 2 3 5"));
    CHECK(contains(text, "reduced to: 2 3"));
    CHECK(contains(text, "class: reduced-m2"));
    CHECK(contains(text, "verified"));

    const PowerSumReport min = power_sums_auto({3, 5}, 1, Mode::verify);
    const std::string min_text = render_power_sums(min, OutputFormat::table);
    CHECK(contains(min_text, "(minimal)"));
    CHECK(contains(min_text, "yes"));
    CHECK_FALSE(contains(min_text, "reduced to"));
  }

  TEST_CASE("gaps renderers") {
    const GeneratorTuple g = validate({3, 5});
    const GapSet gaps = gap_set(g);

    const std::string text = render_gaps(g.gens, gaps, OutputFormat::json);
    const ordered_json j = ordered_json::parse(text);
    CHECK(j["generators"] == ordered_json::array({"3", "5"}));
    CHECK(j["gaps"] == ordered_json::array({"1", "2", "4", "7"}));
    CHECK(j["genus"] == "4");
    CHECK(j["frobenius"] == "7");
    CHECK(j.dump(2) + "\n" == text);

    CHECK(render_gaps(g.gens, gaps, OutputFormat::csv) == "gap\n1\n2\n4\n7\n");

    const std::string table = render_gaps(g.gens, gaps, OutputFormat::table);
    CHECK(contains(table, "gaps: 1 2 4 7"));
    CHECK(contains(table, "genus: 4"));
    CHECK(contains(table, "frobenius: 7"));
  }

  TEST_CASE("relations renderers") {
    const GeneratorTuple g = validate({3, 4, 5});
    const RelationMatrix rel = minimal_relations(g);
    const SemigroupClass cls = classify(g, rel);
    const NumeratorPolynomial q = numerator_closed_form(g, cls, rel);

    const std::string text = render_relations(g, rel, cls, q, OutputFormat::json);
    const ordered_json j = ordered_json::parse(text);
    CHECK(j["matrix"][0] == ordered_json::array({"3", "1", "1"}));
    CHECK(j["matrix"][2] == ordered_json::array({"2", "1", "2"}));
    CHECK(j["weighted_diagonal"] == ordered_json::array({"9", "8", "10"}));
    CHECK(j["class"] == "nonsymmetric");
    CHECK(j["trace"] == "27");
    CHECK(j["j_invariant"] == "1");
    CHECK(j["reduced_trace"].is_null());
    CHECK(j["numerator"] == "1 - z^8 - z^9 - z^10 + z^13 + z^14");
    CHECK(j.dump(2) + "\n" == text);

    const std::string csv = render_relations(g, rel, cls, q, OutputFormat::csv);
    CHECK(contains(csv, "d1,d2,d3,class,a11"));
    CHECK(contains(csv, "3,4,5,nonsymmetric,3,1,1,1,2,1,2,1,2,27,1,\n"));

    const std::string table = render_relations(g, rel, cls, q, OutputFormat::table);
    CHECK(contains(table, "a[1][*]: 3 1 1   (3*3 = 9)"));
    CHECK(contains(table, "J: 1"));

    // symmetric triple flips the null column
    const GeneratorTuple s = validate({4, 6, 9});
    const RelationMatrix srel = minimal_relations(s);
    const SemigroupClass scls = classify(s, srel);
    const ordered_json sj = ordered_json::parse(
        render_relations(s, srel, scls, numerator_closed_form(s, scls, srel),
                         OutputFormat::json));
    CHECK(sj["class"] == "symmetric");
    CHECK(sj["j_invariant"].is_null());
    CHECK(sj["reduced_trace"] == "30");
  }

  TEST_CASE("hilbert renderers") {
    const GeneratorTuple g = validate({4, 6, 9});
    const RelationMatrix rel = minimal_relations(g);
    const SemigroupClass cls = classify(g, rel);
    const NumeratorPolynomial closed = numerator_closed_form(g, cls, rel);
    const NumeratorPolynomial oracle = numerator_from_oracle(g);

    const std::string text = render_hilbert(g.gens, closed, oracle, OutputFormat::json);
    const ordered_json j = ordered_json::parse(text);
    CHECK(j["closed_form"] == "1 - z^12 - z^18 + z^30");
    CHECK(j["oracle"] == "1 - z^12 - z^18 + z^30");
    CHECK(j["equal"] == true);
    CHECK(j.dump(2) + "\n" == text);

    const std::string csv = render_hilbert(g.gens, closed, oracle, OutputFormat::csv);
    CHECK(contains(csv, "exponent,closed_coeff,oracle_coeff\n"));
    CHECK(contains(csv, "0,1,1\n"));
    CHECK(contains(csv, "12,-1,-1\n"));
    CHECK(contains(csv, "30,1,1\n"));

    const std::string table = render_hilbert(g.gens, closed, oracle, OutputFormat::table);
    CHECK(contains(table, "equal: yes"));
  }
}
