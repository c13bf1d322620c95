#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semigaps/bench.hpp"
#include "semigaps/power_sums.hpp"
#include "semigaps/relations.hpp"
#include "semigaps/report.hpp"
#include "semigaps/selftest.hpp"
#include "semigaps/semigroup.hpp"

namespace {

// Hard cap on --n-max so a typo cannot trigger a gigantic Bernoulli
// table; SEMIGAPS_NMAX_CAP raises or lowers it.
unsigned nmax_cap() {
  const char* env = std::getenv("SEMIGAPS_NMAX_CAP");
  if (env == nullptr || *env == '\0') return 64;
  char* end = nullptr;
  const unsigned long parsed = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0') {
    throw semigaps::invalid_input("SEMIGAPS_NMAX_CAP must be a nonnegative integer");
  }
  return static_cast<unsigned>(std::min(parsed, 100000ul));
}

semigaps::Mode pick_mode(const std::string& flag, const std::vector<std::uint64_t>& gens) {
  if (flag == "verify") return semigaps::Mode::verify;
  if (flag == "fast") return semigaps::Mode::fast;
  // auto: verify while the enumeration oracle stays cheap; its cost
  // grows with the generators, the closed form's does not
  const std::uint64_t dmax = gens.empty() ? 0 : *std::max_element(gens.begin(), gens.end());
  if (dmax <= 10000) return semigaps::Mode::verify;
  std::cerr << "note: generators exceed 10000, skipping oracle verification"
               " (pass --mode verify to force it)\n";
  return semigaps::Mode::fast;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gap power sums of numerical semigroups with two or three generators"};
  app.require_subcommand(1);

  std::vector<std::uint64_t> gens;
  std::string format = "table";
  std::string mode = "auto";
  unsigned n_max = 6;
  std::uint64_t seed = 12345;
  semigaps::BenchConfig bench_config;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
  };
  const auto add_generators = [&](CLI::App* cmd, int low, int high) {
    cmd->add_option("generators", gens, "semigroup generators")
        ->required()
        ->expected(low, high);
  };

  CLI::App* gaps_cmd = app.add_subcommand("gaps", "gap set, genus and Frobenius number");
  add_generators(gaps_cmd, 2, 3);
  add_format(gaps_cmd);

  CLI::App* power_cmd = app.add_subcommand("powersum", "power sums of the gaps");
  add_generators(power_cmd, 2, 3);
  add_format(power_cmd);
  power_cmd->add_option("--n-max", n_max, "largest exponent")->capture_default_str();
  power_cmd->add_option("--mode", mode, "verification mode")
      ->check(CLI::IsMember({"auto", "verify", "fast"}))
      ->capture_default_str();

  CLI::App* rel_cmd = app.add_subcommand("relations", "minimal relations and classification");
  add_generators(rel_cmd, 3, 3);
  add_format(rel_cmd);

  CLI::App* hil_cmd =
      app.add_subcommand("hilbert", "numerator polynomial, closed form vs enumeration");
  add_generators(hil_cmd, 2, 3);
  add_format(hil_cmd);

  CLI::App* bench_cmd = app.add_subcommand("bench", "closed form vs oracle timings, CSV");
  bench_cmd->add_option("--d-max", bench_config.d_max, "generator bound")->capture_default_str();
  bench_cmd->add_option("--trials", bench_config.trials, "tuples per size")
      ->capture_default_str();
  bench_cmd->add_option("--n-max", bench_config.n_max, "largest exponent")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_config.seed, "sampler seed")->capture_default_str();

  CLI::App* self_cmd = app.add_subcommand("selftest", "run the full invariant suite");
  self_cmd->add_option("--seed", seed, "sampler seed")->capture_default_str();

  try {
    app.parse(argc, argv);

    if (gaps_cmd->parsed()) {
      const semigaps::GeneratorTuple g = semigaps::validate(gens);
      const semigaps::GapSet gaps = semigaps::gap_set(g);
      std::cout << semigaps::render_gaps(g.gens, gaps, semigaps::parse_format(format));
      return 0;
    }

    if (power_cmd->parsed()) {
      const unsigned cap = nmax_cap();
      if (n_max > cap) {
        throw semigaps::invalid_input("--n-max " + std::to_string(n_max) +
                                      " exceeds the cap of " + std::to_string(cap) +
                                      " (set SEMIGAPS_NMAX_CAP to raise it)");
      }
      const semigaps::PowerSumReport report =
          semigaps::power_sums_auto(gens, n_max, pick_mode(mode, gens));
      std::cout << semigaps::render_power_sums(report, semigaps::parse_format(format));
      return 0;
    }

    if (rel_cmd->parsed()) {
      const semigaps::GeneratorTuple g = semigaps::validate(gens);
      const semigaps::RelationMatrix rel = semigaps::minimal_relations(g);
      const semigaps::SemigroupClass cls = semigaps::classify(g, rel);
      const semigaps::NumeratorPolynomial numerator =
          semigaps::numerator_closed_form(g, cls, rel);
      std::cout << semigaps::render_relations(g, rel, cls, numerator,
                                              semigaps::parse_format(format));
      return 0;
    }

    if (hil_cmd->parsed()) {
      const semigaps::GeneratorTuple g = semigaps::validate(gens);
      semigaps::NumeratorPolynomial closed;
      if (g.count() == 2) {
        closed = semigaps::numerator_m2(g);
      } else {
        if (!g.minimal) {
          throw semigaps::invalid_input("hilbert expects a minimal triple");
        }
        const semigaps::RelationMatrix rel = semigaps::minimal_relations(g);
        const semigaps::SemigroupClass cls = semigaps::classify(g, rel);
        closed = semigaps::numerator_closed_form(g, cls, rel);
      }
      const semigaps::NumeratorPolynomial oracle = semigaps::numerator_from_oracle(g);
      std::cout << semigaps::render_hilbert(g.gens, closed, oracle,
                                            semigaps::parse_format(format));
      if (!(closed == oracle)) {
        throw semigaps::verification_error("numerator mismatch between closed form and oracle");
      }
      return 0;
    }

    if (bench_cmd->parsed()) {
      std::cout << semigaps::run_bench(bench_config);
      return 0;
    }

    if (self_cmd->parsed()) {
      return semigaps::run_selftest(seed, std::cout) ? 0 : 1;
    }

    return 2;  // unreachable with require_subcommand(1)
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const semigaps::invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const semigaps::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const semigaps::computation_error& e) {
    std::cerr << "internal failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
