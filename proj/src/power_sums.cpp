#include "semigaps/power_sums.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "semigaps/bernoulli_higher.hpp"

namespace semigaps {

namespace {

Int to_int(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

// (n+1)(n+2)...(n+count); the closed forms never need full factorials.
Int rising_factor(unsigned n, unsigned count) {
  Int f = 1;
  for (unsigned i = 1; i <= count; ++i) f *= static_cast<unsigned long>(n) + i;
  return f;
}

// -B_{n+1}/(n+1), the boundary term shared by every closed form.
Rat boundary_term(unsigned n, BernoulliCache& cache) {
  Rat t = bernoulli_number(n + 1, cache);
  t /= static_cast<unsigned long>(n) + 1;
  return -t;
}

std::vector<Int> weight_vector(const GeneratorTuple& g) {
  std::vector<Int> w;
  w.reserve(g.count());
  for (std::size_t i = 0; i < g.count(); ++i) w.push_back(to_int(g.d(i)));
  return w;
}

// Signed sum of order-3 polynomials over the numerator exponents,
// divided by (n+1)(n+2)(n+3) d_1 d_2 d_3, plus the boundary term.
Rat m3_combination(const GeneratorTuple& g, unsigned n, BernoulliCache& cache,
                   bool check_paths, const std::vector<std::pair<Int, int>>& points) {
  const std::vector<Int> w = weight_vector(g);
  Rat acc = 0;
  for (const auto& [x, sign] : points) {
    HigherOrderQuery q{n + 3, 3, x, w};
    const Rat value = eval_checked(q, cache, check_paths);
    if (sign > 0) {
      acc += value;
    } else {
      acc -= value;
    }
  }
  Int den = w[0] * w[1];
  den *= w[2];
  den *= rising_factor(n, 3);
  acc /= den;
  acc += boundary_term(n, cache);
  return acc;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::m2_double_sum:
      return "closed_form_m2_double_sum";
    case Method::m2_compact:
      return "closed_form_m2_compact";
    case Method::m3_nonsym:
      return "closed_form_m3_nonsym";
    case Method::m3_sym:
      return "closed_form_m3_sym";
    case Method::low_order:
      return "specialized_low_order";
    case Method::oracle:
      return "oracle";
  }
  return "unknown";
}

const char* pipeline_class_name(PipelineClass c) {
  switch (c) {
    case PipelineClass::symmetric:
      return "symmetric";
    case PipelineClass::nonsymmetric:
      return "nonsymmetric";
    case PipelineClass::reduced_m2:
      return "reduced-m2";
  }
  return "unknown";
}

PowerSumResult g_m2_double_sum(const GeneratorTuple& g, unsigned n, BernoulliCache& cache) {
  if (g.count() != 2) throw invalid_input("g_m2_double_sum expects two generators");
  const unsigned top = n + 1;
  const std::vector<Rat> bern = cache.prefix(top);
  const Int d1 = to_int(g.d(0));
  const Int d2 = to_int(g.d(1));

  std::vector<Int> p1(top + 1), p2(top + 1);
  p1[0] = 1;
  p2[0] = 1;
  for (unsigned i = 1; i <= top; ++i) {
    p1[i] = p1[i - 1] * d1;
    p2[i] = p2[i - 1] * d2;
  }

  Rat sum = 0;
  for (unsigned k = 0; k <= top; ++k) {
    if (bern[k] == 0) continue;
    const Int ck = binomial(n + 2, static_cast<long>(k));
    for (unsigned l = 0; l + k <= top; ++l) {
      if (bern[l] == 0) continue;
      Int coeff = ck * binomial(n + 2 - k, static_cast<long>(l));
      coeff *= p1[top - k];
      coeff *= p2[top - l];
      Rat term = bern[k] * bern[l];
      term *= coeff;
      sum += term;
    }
  }
  sum /= rising_factor(n, 2);
  sum += boundary_term(n, cache);
  return {n, require_integer(sum, "closed_form_m2_double_sum"), Method::m2_double_sum,
          std::nullopt};
}

PowerSumResult g_m2_compact(const GeneratorTuple& g, unsigned n, BernoulliCache& cache,
                            bool check_paths) {
  if (g.count() != 2) throw invalid_input("g_m2_compact expects two generators");
  const std::vector<Int> w = weight_vector(g);
  const Int prod = w[0] * w[1];

  const HigherOrderQuery at_zero{n + 2, 2, Int(0), w};
  const HigherOrderQuery at_prod{n + 2, 2, prod, w};
  Rat diff = eval_checked(at_zero, cache, check_paths);
  diff -= eval_checked(at_prod, cache, check_paths);
  Int den = prod * rising_factor(n, 2);
  diff /= den;

  Rat total = boundary_term(n, cache);
  total -= diff;
  return {n, require_integer(total, "closed_form_m2_compact"), Method::m2_compact,
          std::nullopt};
}

PowerSumResult g_m3_nonsym(const GeneratorTuple& g, const SemigroupClass& cls,
                           const RelationMatrix& rel, unsigned n, BernoulliCache& cache,
                           bool check_paths) {
  if (g.count() != 3 || !g.minimal) throw invalid_input("g_m3_nonsym expects a minimal triple");
  if (cls.symmetric()) throw invalid_input("g_m3_nonsym expects a non-symmetric class");

  std::vector<std::pair<Int, int>> points;
  points.emplace_back(Int(0), +1);
  for (std::size_t i = 0; i < 3; ++i) points.emplace_back(to_int(rel.weighted_diag[i]), -1);
  points.emplace_back(to_int(cls.hole_low), +1);
  points.emplace_back(to_int(cls.hole_high), +1);

  const Rat total = m3_combination(g, n, cache, check_paths, points);
  return {n, require_integer(total, "closed_form_m3_nonsym"), Method::m3_nonsym, std::nullopt};
}

PowerSumResult g_m3_sym(const GeneratorTuple& g, const SemigroupClass& cls,
                        const RelationMatrix& rel, unsigned n, BernoulliCache& cache,
                        bool check_paths) {
  if (g.count() != 3 || !g.minimal) throw invalid_input("g_m3_sym expects a minimal triple");
  if (!cls.symmetric()) throw invalid_input("g_m3_sym expects a symmetric class");
  (void)rel;

  std::vector<std::pair<Int, int>> points;
  points.emplace_back(Int(0), +1);
  points.emplace_back(to_int(cls.pair_exponent), -1);
  points.emplace_back(to_int(cls.tail_exponent), -1);
  points.emplace_back(to_int(cls.pair_exponent) + to_int(cls.tail_exponent), +1);

  const Rat total = m3_combination(g, n, cache, check_paths, points);
  return {n, require_integer(total, "closed_form_m3_sym"), Method::m3_sym, std::nullopt};
}

PowerSumResult g_m3_low_order(const GeneratorTuple& g, const SemigroupClass& cls,
                              const RelationMatrix& rel, unsigned n) {
  if (g.count() != 3 || !g.minimal) throw invalid_input("g_m3_low_order expects a minimal triple");
  if (n > 2) throw invalid_input("g_m3_low_order handles n in {0,1,2}");

  const Int d1 = to_int(g.d(0));
  const Int d2 = to_int(g.d(1));
  const Int d3 = to_int(g.d(2));
  const Int sd = d1 + d2 + d3;
  Int e2 = d1 * d2;
  e2 += d1 * d3;
  e2 += d2 * d3;
  Int pd = d1 * d2;
  pd *= d3;

  Int num;
  unsigned long den = 0;

  if (cls.symmetric()) {
    const Int& tt = cls.reduced_trace;
    switch (n) {
      case 0:
        num = 1 - sd + tt;
        den = 2;
        break;
      case 1:
        num = (sd - tt) * (sd - 2 * tt);
        num += e2;
        num -= pd;
        num -= 1;
        den = 12;
        break;
      default: {
        Int inner = sd * tt;
        inner -= tt * tt;
        inner -= e2;
        inner += pd;
        num = (sd - tt) * inner;
        den = 12;
        break;
      }
    }
  } else {
    const Int& T = cls.trace;
    const Int pa = rel.diag_product();
    switch (n) {
      case 0:
        num = 1 - sd - pa + T;
        den = 2;
        break;
      case 1: {
        // ordered-pair sum over i != j of (a_ii d_i)(a_jj d_j)
        Int cross = to_int(rel.weighted_diag[0]) * to_int(rel.weighted_diag[1]);
        cross += to_int(rel.weighted_diag[0]) * to_int(rel.weighted_diag[2]);
        cross += to_int(rel.weighted_diag[1]) * to_int(rel.weighted_diag[2]);
        cross *= 2;
        num = T * (2 * T - 3 * sd - 2 * pa);
        num += sd * (sd + 3 * pa);
        num -= cross;
        num += e2;
        num += pd;
        num -= 1;
        den = 12;
        break;
      }
      default: {
        // everything doubled so the pi_a/2 and pi_d/2 factors stay integral
        const std::array<Int, 3> d{d1, d2, d3};
        std::array<Int, 3> A;
        for (std::size_t i = 0; i < 3; ++i) A[i] = to_int(rel.diag(i)) - 1;

        Int first = 0;
        for (std::size_t i = 0; i < 3; ++i) {
          const Int di2 = d[i] * d[i];
          const Int di3 = di2 * d[i];
          Int t = 2 * (2 * A[i] + 1) * di3;
          t -= pa * (A[i] + 2) * di2;
          t += 2 * pd * d[i];
          t += pd * (2 * A[i] + 1);
          first += A[i] * t;
        }

        Int second = 0;
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = 0; j < 3; ++j) {
            const Int prodA = A[i] * A[j];
            const Int Bij = prodA - A[i] - A[j];
            const Int Cij = A[i] * (prodA - A[i] - 1);
            const Int Fij = A[i] * (2 * A[j] + 1);
            Int t = 2 * Cij * d[i] * d[i] * d[j];
            t -= pa * Bij * d[i] * d[j];
            t -= pd * Fij;
            second += t;
          }
        }

        num = first + second;
        den = 24;
        break;
      }
    }
  }

  Rat value(num);
  value /= den;
  return {n, require_integer(value, "specialized_low_order"), Method::low_order, std::nullopt};
}

PowerSumResult g_m2_low_order(const GeneratorTuple& g, unsigned n) {
  if (g.count() != 2) throw invalid_input("g_m2_low_order expects two generators");
  if (n > 2) throw invalid_input("g_m2_low_order handles n in {0,1,2}");

  const Int d1 = to_int(g.d(0));
  const Int d2 = to_int(g.d(1));
  const Int base = (d1 - 1) * (d2 - 1);
  const Int prod = d1 * d2;

  Int num;
  unsigned long den = 0;
  switch (n) {
    case 0:
      num = base;
      den = 2;
      break;
    case 1:
      num = base * (2 * prod - d1 - d2 - 1);
      den = 12;
      break;
    default:
      num = base * prod * (prod - d1 - d2);
      den = 12;
      break;
  }

  Rat value(num);
  value /= den;
  return {n, require_integer(value, "specialized_low_order"), Method::low_order, std::nullopt};
}

namespace {

// Drops generators representable by the other two until the tuple is
// minimal. One drop always suffices for a valid triple (the survivors
// keep gcd 1, and a coprime pair is minimal outright), but the loop is
// written defensively.
GeneratorTuple reduce_to_minimal(GeneratorTuple g) {
  while (!g.minimal && g.count() == 3) {
    bool dropped = false;
    for (std::size_t i = g.count(); i-- > 0;) {  // largest candidate first
      if (!pair_member(g.d(i), g.d((i + 1) % 3), g.d((i + 2) % 3))) continue;
      std::vector<std::uint64_t> rest;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i) rest.push_back(g.d(j));
      }
      g = validate(rest);
      dropped = true;
      break;
    }
    if (!dropped) {
      throw computation_error("reduce_to_minimal: no generator is representable by the others");
    }
  }
  return g;
}

void expect_equal(const Int& primary, const Int& other, const char* primary_path,
                  const char* other_path, unsigned n, bool against_oracle) {
  if (primary == other) return;
  std::ostringstream os;
  os << primary_path << " = " << primary.get_str() << " but " << other_path << " = "
     << other.get_str() << " at n = " << n;
  if (against_oracle) throw verification_error(os.str());
  throw computation_error(os.str());
}

}  // namespace

PowerSumReport power_sums_auto(const std::vector<std::uint64_t>& raw, unsigned n_max,
                               Mode mode) {
  PowerSumReport report;

  if (raw.size() < 2 || raw.size() > 3) {
    throw invalid_input("expected two or three generators");
  }
  for (std::uint64_t v : raw) {
    if (v == 0) throw invalid_input("generators must be positive");
  }

  // 1 generates every positive integer: no gaps, every sum is zero.
  // Outside the closed forms' domain, so handled before validation.
  if (std::find(raw.begin(), raw.end(), std::uint64_t{1}) != raw.end()) {
    std::vector<std::uint64_t> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    report.input = sorted;
    report.minimal = false;
    report.cls = PipelineClass::reduced_m2;
    for (unsigned n = 0; n <= n_max; ++n) {
      report.results.push_back({n, Int(0), Method::oracle, std::nullopt});
    }
    return report;
  }

  const GeneratorTuple g = validate(raw);
  report.input = g.gens;
  report.minimal = g.minimal;

  const GeneratorTuple eff = g.minimal ? g : reduce_to_minimal(g);
  report.effective = eff;

  const bool verify = mode == Mode::verify;
  BernoulliCache cache;

  std::optional<AperyProfile> profile;
  if (verify) profile.emplace(apery_profile(eff));

  if (eff.count() == 2) {
    report.cls = PipelineClass::reduced_m2;
    for (unsigned n = 0; n <= n_max; ++n) {
      PowerSumResult r = (!verify && n <= 2) ? g_m2_low_order(eff, n)
                                             : g_m2_double_sum(eff, n, cache);
      if (verify) {
        const PowerSumResult compact = g_m2_compact(eff, n, cache, /*check_paths=*/true);
        expect_equal(r.value, compact.value, method_name(r.method), method_name(compact.method),
                     n, false);
        if (n <= 2) {
          const PowerSumResult low = g_m2_low_order(eff, n);
          expect_equal(r.value, low.value, method_name(r.method), method_name(low.method), n,
                       false);
        }
        const Int enumerated = oracle_power_sum(*profile, n);
        expect_equal(r.value, enumerated, method_name(r.method), "oracle", n, true);
        r.agreement = true;
      }
      report.results.push_back(std::move(r));
    }
    return report;
  }

  const RelationMatrix rel = minimal_relations(eff);
  const SemigroupClass cls = classify(eff, rel);
  report.relations = rel;
  report.classification = cls;
  report.cls = cls.symmetric() ? PipelineClass::symmetric : PipelineClass::nonsymmetric;

  for (unsigned n = 0; n <= n_max; ++n) {
    PowerSumResult r;
    if (!verify && n <= 2) {
      r = g_m3_low_order(eff, cls, rel, n);
    } else if (cls.symmetric()) {
      r = g_m3_sym(eff, cls, rel, n, cache, /*check_paths=*/verify);
    } else {
      r = g_m3_nonsym(eff, cls, rel, n, cache, /*check_paths=*/verify);
    }
    if (verify) {
      if (n <= 2) {
        const PowerSumResult low = g_m3_low_order(eff, cls, rel, n);
        expect_equal(r.value, low.value, method_name(r.method), method_name(low.method), n,
                     false);
      }
      const Int enumerated = oracle_power_sum(*profile, n);
      expect_equal(r.value, enumerated, method_name(r.method), "oracle", n, true);
      r.agreement = true;
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace semigaps
