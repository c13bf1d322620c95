#ifndef SEMIGAPS_REPORT_HPP
#define SEMIGAPS_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "semigaps/polynomial.hpp"
#include "semigaps/power_sums.hpp"
#include "semigaps/relations.hpp"
#include "semigaps/semigroup.hpp"

namespace semigaps {

enum class OutputFormat { table, json, csv };

// "table", "json" or "csv"; throws invalid_input otherwise.
OutputFormat parse_format(const std::string& name);

// Every JSON renderer emits integers as decimal strings (values outgrow
// 64-bit consumers fast) with a fixed key order, so parse + re-dump is
// byte-identical. CSV schemas are flat, one header row each; the
// powersum one is n,value,method,verified.

std::string render_power_sums(const PowerSumReport& report, OutputFormat format);

std::string render_gaps(const std::vector<std::uint64_t>& gens, const GapSet& gaps,
                        OutputFormat format);

std::string render_relations(const GeneratorTuple& g, const RelationMatrix& rel,
                             const SemigroupClass& cls, const NumeratorPolynomial& numerator,
                             OutputFormat format);

std::string render_hilbert(const std::vector<std::uint64_t>& gens,
                           const NumeratorPolynomial& closed,
                           const NumeratorPolynomial& oracle, OutputFormat format);

}  // namespace semigaps

#endif  // SEMIGAPS_REPORT_HPP
