#ifndef SEMIGAPS_POWER_SUMS_HPP
#define SEMIGAPS_POWER_SUMS_HPP

#include <optional>
#include <vector>

#include "semigaps/bernoulli.hpp"
#include "semigaps/numbers.hpp"
#include "semigaps/relations.hpp"
#include "semigaps/semigroup.hpp"

namespace semigaps {

enum class Method {
  m2_double_sum,
  m2_compact,
  m3_nonsym,
  m3_sym,
  low_order,
  oracle,
};

const char* method_name(Method m);  // "closed_form_m2_double_sum", ...

struct PowerSumResult {
  unsigned n = 0;
  Int value;
  Method method = Method::oracle;
  std::optional<bool> agreement;  // set in verify mode
};

enum class Mode { fast, verify };

// Two-generator gap power sum as the explicit Bernoulli-number double
// sum minus B_{n+1}/(n+1). Exact; the result must land on an integer.
PowerSumResult g_m2_double_sum(const GeneratorTuple& g, unsigned n, BernoulliCache& cache);

// Same quantity through order-2 Bernoulli polynomials at 0 and d1*d2.
PowerSumResult g_m2_compact(const GeneratorTuple& g, unsigned n, BernoulliCache& cache,
                            bool check_paths = false);

// Three-generator power sums through order-3 Bernoulli polynomials
// evaluated at the numerator exponents. The tuple must be minimal and
// already classified.
PowerSumResult g_m3_nonsym(const GeneratorTuple& g, const SemigroupClass& cls,
                           const RelationMatrix& rel, unsigned n, BernoulliCache& cache,
                           bool check_paths = false);
PowerSumResult g_m3_sym(const GeneratorTuple& g, const SemigroupClass& cls,
                        const RelationMatrix& rel, unsigned n, BernoulliCache& cache,
                        bool check_paths = false);

// Polynomial specializations for n in {0,1,2}, pure integer arithmetic;
// independent of the Bernoulli machinery.
PowerSumResult g_m3_low_order(const GeneratorTuple& g, const SemigroupClass& cls,
                              const RelationMatrix& rel, unsigned n);
PowerSumResult g_m2_low_order(const GeneratorTuple& g, unsigned n);

enum class PipelineClass { symmetric, nonsymmetric, reduced_m2 };

const char* pipeline_class_name(PipelineClass c);

// Full dispatcher output; carries everything the reports need.
struct PowerSumReport {
  std::vector<std::uint64_t> input;
  GeneratorTuple effective;  // after reduction; empty gens when the
                             // input contains 1 (full semigroup, no gaps)
  bool minimal = false;      // of the input as given
  PipelineClass cls = PipelineClass::reduced_m2;
  std::vector<PowerSumResult> results;

  std::optional<RelationMatrix> relations;        // m=3 pipelines
  std::optional<SemigroupClass> classification;   // m=3 pipelines
};

// Validates, reduces non-minimal triples (drops generators representable
// by the others), dispatches to the m=2 or m=3 closed forms, and in
// verify mode recomputes every value with the enumeration oracle plus
// every applicable cross-path. Disagreement is a hard failure.
PowerSumReport power_sums_auto(const std::vector<std::uint64_t>& raw, unsigned n_max,
                               Mode mode);

}  // namespace semigaps

#endif  // SEMIGAPS_POWER_SUMS_HPP
